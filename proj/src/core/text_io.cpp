#include "core/text_io.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace surfcalc {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail(Errc::parse_error, "expected an integer at position " + std::to_string(start) +
                                  " in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
  }
};

} // namespace

Perm parse_perm(const std::string& text, int degree) {
  Cursor cur{text};
  cur.skip_ws();
  if (text.compare(cur.pos, 2, "id") == 0) {
    cur.pos += 2;
    if (!cur.done()) fail(Errc::parse_error, "trailing input after 'id'");
    return Perm(degree);
  }
  std::vector<std::vector<int>> cycles;
  while (!cur.done()) {
    if (!cur.eat('(')) fail(Errc::parse_error, "expected '(' in cycle notation");
    std::vector<int> cyc;
    if (!cur.eat(')')) {
      while (true) {
        const long long first = cur.integer();
        cur.skip_ws();
        if (cur.pos + 1 < text.size() && text[cur.pos] == '.' && text[cur.pos + 1] == '.') {
          cur.pos += 2;
          const long long last = cur.integer();
          if (last < first) fail(Errc::parse_error, "descending range in cycle");
          for (long long v = first; v <= last; ++v) cyc.push_back(static_cast<int>(v));
        } else {
          cyc.push_back(static_cast<int>(first));
        }
        if (cur.eat(')')) break;
        if (!cur.eat(',')) fail(Errc::parse_error, "expected ',' or ')' in cycle");
      }
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  return Perm::from_cycles(cycles, degree);
}

std::string format_perm(const Perm& p) {
  const auto cycles = p.cycles();
  if (cycles.empty()) return "id";
  std::ostringstream out;
  for (const auto& cyc : cycles) {
    out << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out << ',';
      out << cyc[i];
    }
    out << ')';
  }
  return out.str();
}

namespace {

std::vector<int> parse_letters(const std::string& text, char symbol, int max_index,
                               const char* what) {
  std::vector<int> letters;
  Cursor cur{text};
  while (!cur.done()) {
    cur.skip_ws();
    if (cur.s[cur.pos] != symbol)
      fail(Errc::parse_error, std::string("expected '") + symbol + "' in " + what +
                                  " word: '" + text + "'");
    ++cur.pos;
    const long long index = cur.integer();
    if (index < 1 || index > max_index)
      fail(Errc::out_of_range, std::string(what) + " generator index out of range");
    long long exponent = 1;
    cur.skip_ws();
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == '^') {
      ++cur.pos;
      exponent = cur.integer();
    }
    const int letter = exponent < 0 ? -static_cast<int>(index) : static_cast<int>(index);
    for (long long k = 0; k < std::llabs(exponent); ++k) letters.push_back(letter);
  }
  return letters;
}

std::string format_letters(const std::vector<int>& letters, char symbol) {
  if (letters.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out << ' ';
    out << symbol << std::abs(letters[i]);
    if (letters[i] < 0) out << "^-1";
  }
  return out.str();
}

} // namespace

BraidWord parse_braid(const std::string& text, int strands) {
  return BraidWord::from_letters(strands, parse_letters(text, 's', strands - 1, "braid"));
}

FreeWord parse_freeword(const std::string& text, int rank) {
  return FreeWord::from_letters(rank, parse_letters(text, 'g', rank, "free"));
}

std::string format_braid(const BraidWord& b) { return format_letters(b.letters(), 's'); }

std::string format_freeword(const FreeWord& w) { return format_letters(w.letters(), 'g'); }

OrbifoldSignature parse_signature(const std::string& text) {
  Cursor cur{text};
  if (!cur.eat('(')) fail(Errc::parse_error, "signature must start with '('");
  const long long genus = cur.integer();
  std::vector<long long> orders;
  if (!cur.eat(')')) {
    if (!cur.eat(';')) fail(Errc::parse_error, "expected ';' after the genus");
    if (!cur.eat(')')) {
      while (true) {
        orders.push_back(cur.integer());
        if (cur.eat(')')) break;
        if (!cur.eat(',')) fail(Errc::parse_error, "expected ',' or ')' in signature");
      }
    }
  }
  if (!cur.done()) fail(Errc::parse_error, "trailing input after signature");
  return OrbifoldSignature(genus, std::move(orders));
}

std::string format_signature(const OrbifoldSignature& sig) {
  std::ostringstream out;
  out << '(' << sig.genus << ';';
  for (std::size_t i = 0; i < sig.branch_orders.size(); ++i) {
    out << (i ? "," : " ") << sig.branch_orders[i];
  }
  out << ')';
  return out.str();
}

std::string format_rational(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

} // namespace surfcalc
