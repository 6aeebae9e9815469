#include "core/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace surfcalc {

Factorization::Factorization(std::vector<Perm> factors)
    : factors_(std::move(factors)), product_(1) {
  if (factors_.empty()) fail(Errc::out_of_range, "factorization needs at least one factor");
  const int deg = factors_.front().degree();
  Perm prod(deg);
  for (const auto& t : factors_) {
    if (t.degree() != deg)
      fail(Errc::degree_mismatch, "all factors must share a degree");
    prod = compose(prod, t);
  }
  product_ = std::move(prod);
}

auto operator<=>(const Factorization& a, const Factorization& b) {
  return a.factors_ <=> b.factors_;
}

std::size_t FactorizationHash::operator()(const Factorization& f) const noexcept {
  std::size_t h = f.size();
  PermHash ph;
  for (const auto& t : f.factors()) h = h * 0x100000001b3ull + ph(t);
  return h;
}

Factorization hurwitz_move(const Factorization& f, int index, bool forward) {
  const int m = static_cast<int>(f.size());
  if (index < 1 || index > m - 1)
    fail(Errc::index_out_of_range, "move index must be in 1..m-1");
  std::vector<Perm> factors = f.factors();
  const Perm a = factors[index - 1];
  const Perm b = factors[index];
  if (forward) {
    factors[index - 1] = conjugate(a, b);
    factors[index] = a;
  } else {
    factors[index - 1] = b;
    factors[index] = conjugate(b.inverse(), a);
  }
  return Factorization(std::move(factors));
}

Factorization simultaneous_conjugate(const Factorization& f, const Perm& b) {
  if (b.degree() != f.degree())
    fail(Errc::degree_mismatch, "conjugator degree must match the factorization");
  std::vector<Perm> factors;
  factors.reserve(f.size());
  for (const auto& t : f.factors()) factors.push_back(conjugate(b, t));
  return Factorization(std::move(factors));
}

Factorization replay(Factorization f, std::span<const Move> path) {
  for (const Move& mv : path) f = hurwitz_move(f, mv.index, mv.forward);
  return f;
}

namespace {

std::vector<std::vector<int>> factor_cycle_types(const Factorization& f) {
  std::vector<std::vector<int>> types;
  types.reserve(f.size());
  for (const auto& t : f.factors()) types.push_back(t.cycle_type());
  std::sort(types.begin(), types.end());
  return types;
}

ElementSet generated_subgroup(const Factorization& f, std::size_t cap) {
  return closure(ElementSet::from_vector(f.factors()), cap);
}

Factorization canonical_conjugate(const Factorization& f, const ElementSet& group) {
  Factorization best = f;
  for (const auto& g : group) {
    Factorization cand = simultaneous_conjugate(f, g);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

std::vector<Factorization> children_of(const Factorization& f) {
  std::vector<Factorization> out;
  const int m = static_cast<int>(f.size());
  out.reserve(2 * (m - 1));
  for (int i = 1; i <= m - 1; ++i) {
    out.push_back(hurwitz_move(f, i, true));
    out.push_back(hurwitz_move(f, i, false));
  }
  return out;
}

// Expand one BFS level.  Workers fill disjoint chunks of a pre-sized
// output table, so the merged child order is independent of the thread
// count and the traversal stays bit-deterministic.
std::vector<std::vector<Factorization>> expand_level(
    const std::vector<Factorization>& level, int threads) {
  std::vector<std::vector<Factorization>> children(level.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) children[k] = children_of(level[k]);
  };
  const int t = std::max(1, threads);
  if (t == 1 || level.size() < 2) {
    work(0, level.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (level.size() + t - 1) / t;
    for (std::size_t begin = 0; begin < level.size(); begin += chunk)
      pool.emplace_back(work, begin, std::min(begin + chunk, level.size()));
    for (auto& th : pool) th.join();
  }
  return children;
}

} // namespace

OrbitReport orbit(const Factorization& start, const OrbitOptions& options) {
  OrbitReport report;
  report.product = start.product();
  report.cycle_types = factor_cycle_types(start);

  ElementSet group;
  try {
    group = generated_subgroup(start, options.cap);
    report.subgroup_order = group.size();
  } catch (const CapExceededError&) {
    // Conjugation-canonical orbits genuinely need the subgroup.
    if (options.mod_conjugation) throw;
    report.subgroup_order = 0; // unknown, closure exceeded the cap
  }

  auto canon = [&](const Factorization& f) {
    return options.mod_conjugation ? canonical_conjugate(f, group) : f;
  };

  std::unordered_set<Factorization, FactorizationHash> visited;
  std::vector<Factorization> level{canon(start)};
  visited.insert(level.front());
  bool capped = false;

  while (!level.empty() && !capped) {
    auto children = expand_level(level, options.threads);
    std::vector<Factorization> next;
    for (std::size_t k = 0; k < children.size() && !capped; ++k) {
      for (auto& child : children[k]) {
        Factorization c = canon(std::move(child));
        if (visited.insert(c).second) {
          if (visited.size() > options.cap) {
            capped = true;
            break;
          }
          next.push_back(std::move(c));
        }
      }
    }
    level = std::move(next);
  }

  report.size = visited.size();
  report.exhausted = !capped;

  std::vector<Factorization> members(visited.begin(), visited.end());
  std::sort(members.begin(), members.end());
  if (members.size() > options.representative_limit) {
    members.erase(members.begin() + static_cast<std::ptrdiff_t>(options.representative_limit),
                  members.end());
    report.representatives_truncated = true;
  }
  report.representatives = std::move(members);
  return report;
}

EquivalenceResult equivalent(const Factorization& f1, const Factorization& f2,
                             std::size_t cap) {
  EquivalenceResult result;
  if (f1.size() != f2.size())
    fail(Errc::length_mismatch, "factorizations must have equal length");
  if (f1.degree() != f2.degree())
    fail(Errc::degree_mismatch, "factorizations must share a degree");

  if (f1.product() != f2.product() ||
      factor_cycle_types(f1) != factor_cycle_types(f2)) {
    result.verdict = Equivalence::no;
    return result;
  }
  if (f1 == f2) {
    result.verdict = Equivalence::yes;
    return result;
  }

  std::unordered_map<Factorization, std::pair<Factorization, Move>, FactorizationHash>
      parent;
  std::vector<Factorization> level{f1};
  std::unordered_set<Factorization, FactorizationHash> visited{f1};
  const int m = static_cast<int>(f1.size());

  while (!level.empty()) {
    std::vector<Factorization> next;
    for (const auto& cur : level) {
      for (int i = 1; i <= m - 1; ++i) {
        for (bool fwd : {true, false}) {
          Factorization child = hurwitz_move(cur, i, fwd);
          if (!visited.insert(child).second) continue;
          parent.emplace(child, std::make_pair(cur, Move{i, fwd}));
          if (child == f2) {
            std::vector<Move> path;
            Factorization walk = child;
            while (!(walk == f1)) {
              auto it = parent.find(walk);
              path.push_back(it->second.second);
              walk = it->second.first;
            }
            std::reverse(path.begin(), path.end());
            result.verdict = Equivalence::yes;
            result.path = std::move(path);
            return result;
          }
          if (visited.size() > cap) {
            result.verdict = Equivalence::unknown;
            return result;
          }
          next.push_back(std::move(child));
        }
      }
    }
    level = std::move(next);
  }
  result.verdict = Equivalence::no; // orbit exhausted without reaching f2
  return result;
}

std::vector<Move> auroux_path(const Factorization& f, int h) {
  const int m = static_cast<int>(f.size());
  if (h < 1 || h > m) fail(Errc::index_out_of_range, "factor index must be in 1..m");

  // Central product: it must commute with every factor.
  for (const auto& t : f.factors())
    if (compose(f.product(), t) != compose(t, f.product()))
      fail(Errc::not_central, "product is not central in the generated subgroup");

  // Three backward sweeps: bring t_h to the front, walk it to the back
  // (the conjugation residue cancels by centrality), then walk it home,
  // de-conjugating the tail factors on the way.
  std::vector<Move> path;
  for (int i = h - 1; i >= 1; --i) path.push_back({i, false});
  for (int i = 1; i <= m - 1; ++i) path.push_back({i, false});
  for (int i = m - 1; i >= h; --i) path.push_back({i, false});

  const Factorization start = simultaneous_conjugate(f, f.factor(h));
  if (!(replay(start, path) == f))
    fail(Errc::replay_failed, "constructed move sequence does not replay to the input");
  return path;
}

} // namespace surfcalc
