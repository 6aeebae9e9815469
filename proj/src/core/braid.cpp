#include "core/braid.hpp"

#include <algorithm>
#include <cstdlib>

namespace surfcalc {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

} // namespace

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 1) fail(Errc::out_of_range, "rank must be positive");
}

FreeWord FreeWord::from_letters(int rank, std::vector<int> letters) {
  FreeWord w(rank);
  for (int l : letters) {
    if (l == 0 || std::abs(l) > rank)
      fail(Errc::out_of_range, "letter index out of 1..rank");
    push_reduced(w.letters_, l);
  }
  return w;
}

FreeWord FreeWord::generator(int rank, int index, int sign) {
  if (index < 1 || index > rank) fail(Errc::out_of_range, "generator index out of 1..rank");
  return from_letters(rank, {sign >= 0 ? index : -index});
}

FreeWord FreeWord::inverse() const {
  std::vector<int> rev(letters_.rbegin(), letters_.rend());
  for (int& l : rev) l = -l;
  FreeWord w(rank_);
  w.letters_ = std::move(rev); // inverse of a reduced word is reduced
  return w;
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank())
    fail(Errc::rank_mismatch, "cannot multiply words of different rank");
  FreeWord w(u.rank());
  std::vector<int> out = u.letters();
  for (int l : v.letters()) push_reduced(out, l);
  return FreeWord::from_letters(u.rank(), std::move(out));
}

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 2) fail(Errc::out_of_range, "braid group needs at least 2 strands");
}

BraidWord BraidWord::from_letters(int strands, std::vector<int> letters) {
  BraidWord b(strands);
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      fail(Errc::out_of_range, "generator index out of 1..strands-1");
  b.letters_ = std::move(letters);
  return b;
}

BraidWord BraidWord::generator(int strands, int index, int sign) {
  return from_letters(strands, {sign >= 0 ? index : -index});
}

BraidWord BraidWord::inverse() const {
  std::vector<int> rev(letters_.rbegin(), letters_.rend());
  for (int& l : rev) l = -l;
  return from_letters(strands_, std::move(rev));
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    fail(Errc::strand_mismatch, "cannot concatenate words on different strand counts");
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord::from_letters(u.strands(), std::move(letters));
}

namespace {

// Image of basis generator j under one braid letter.
void append_generator_image(std::vector<int>& out, int braid_letter, int j, int sign) {
  const int i = std::abs(braid_letter);
  std::vector<int> image;
  if (braid_letter > 0) {
    if (j == i)
      image = {i + 1};
    else if (j == i + 1)
      image = {-(i + 1), i, i + 1};
    else
      image = {j};
  } else {
    if (j == i)
      image = {i, i + 1, -i};
    else if (j == i + 1)
      image = {i};
    else
      image = {j};
  }
  if (sign < 0) {
    std::reverse(image.begin(), image.end());
    for (int& l : image) l = -l;
  }
  for (int l : image) push_reduced(out, l);
}

} // namespace

FreeWord artin_apply(const BraidWord& b, const FreeWord& w) {
  if (w.rank() != b.strands())
    fail(Errc::rank_mismatch, "word rank must equal the strand count");
  std::vector<int> cur = w.letters();
  for (int braid_letter : b.letters()) {
    std::vector<int> next;
    next.reserve(cur.size() * 3);
    for (int l : cur)
      append_generator_image(next, braid_letter, std::abs(l), l > 0 ? +1 : -1);
    cur = std::move(next);
  }
  return FreeWord::from_letters(w.rank(), std::move(cur));
}

bool braid_equal(const BraidWord& b1, const BraidWord& b2) {
  if (b1.strands() != b2.strands())
    fail(Errc::strand_mismatch, "cannot compare words on different strand counts");
  const int n = b1.strands();
  for (int j = 1; j <= n; ++j) {
    const FreeWord g = FreeWord::generator(n, j);
    if (artin_apply(b1, g) != artin_apply(b2, g)) return false;
  }
  return true;
}

BraidWord full_twist(int d) {
  if (d < 2) fail(Errc::out_of_range, "full twist needs d >= 2");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(d) * (d - 1));
  for (int rep = 0; rep < d; ++rep)
    for (int i = d - 1; i >= 1; --i) letters.push_back(i);
  return BraidWord::from_letters(d, std::move(letters));
}

BraidWord coxeter_chain(int n) {
  if (n < 1) fail(Errc::out_of_range, "chain length must be >= 1");
  std::vector<int> letters;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i >= 1; --i) letters.push_back(i);
  return BraidWord::from_letters(n + 1, std::move(letters));
}

Perm braid_to_perm(const BraidWord& b) {
  Perm acc(b.strands());
  for (int l : b.letters()) {
    const int i = std::abs(l);
    acc = compose(Perm::from_cycles({{i, i + 1}}, b.strands()), acc);
  }
  return acc;
}

} // namespace surfcalc
