#include "wittkit/parse.hpp"

#include <cctype>
#include <map>

namespace wittkit {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

constexpr std::size_t kMaxExponent = 1 << 20;

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// Recursive-descent reader over a whitespace-free string.
class Cursor {
 public:
  explicit Cursor(std::string s) : s_(std::move(s)) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, std::string_view what) {
    if (!accept(c)) fail(std::string("expected '") + c + "' in " + std::string(what));
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (!done() && is_digit(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  /// Reads until one of the stop characters at bracket depth zero.
  std::string until(std::string_view stops) {
    const std::size_t start = pos_;
    while (!done() && stops.find(s_[pos_]) == std::string_view::npos) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string token = done() ? "<end of input>" : s_.substr(pos_, 12);
    throw ParseError(what + " at '" + token + "'", token);
  }

  std::size_t pos() const { return pos_; }
  const std::string& str() const { return s_; }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

UnitPolynomial parse_polynomial(std::string_view text, const RingSpec& ring) {
  Cursor cur(strip_spaces(text));
  if (cur.done()) throw ParseError("empty polynomial", std::string(text));

  std::map<std::size_t, RingElement> terms;
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-' between terms");
    }
    first = false;

    std::string coeff = cur.digits();
    if (!coeff.empty() && cur.accept('/')) {
      const std::string den = cur.digits();
      if (den.empty()) cur.fail("expected denominator");
      coeff += "/" + den;
    }
    std::size_t exponent = 0;
    const bool star = cur.accept('*');
    if (cur.accept('t')) {
      exponent = 1;
      if (cur.accept('^')) {
        const std::string e = cur.digits();
        if (e.empty()) cur.fail("expected exponent after '^'");
        try {
          exponent = std::stoul(e);
        } catch (const std::exception&) {
          throw ParseError("exponent out of range", e);
        }
        if (exponent > kMaxExponent) throw ParseError("exponent " + e + " is too large", e);
      }
    } else if (star || coeff.empty()) {
      cur.fail("expected a coefficient or 't'");
    }
    RingElement c = coeff.empty() ? ring.one() : parse_element(coeff, ring);
    if (negative) c = -c;
    auto [it, inserted] = terms.try_emplace(exponent, c);
    if (!inserted) it->second += c;
  }

  const auto constant = terms.find(0);
  if (constant == terms.end() || !constant->second.is_one())
    throw ParseError("constant term must be 1 in '" + std::string(text) + "'",
                     constant == terms.end() ? std::string(text) : constant->second.to_string());
  const std::size_t degree = terms.rbegin()->first;
  std::vector<RingElement> coeffs(degree, ring.zero());
  for (const auto& [k, c] : terms)
    if (k > 0) coeffs[k - 1] = c;
  return UnitPolynomial(ring, std::move(coeffs));
}

UnitSeries parse_series(std::string_view text, const RingSpec& ring, std::size_t precision) {
  return parse_polynomial(text, ring).to_series(precision);
}

RationalWitt parse_rational_witt(std::string_view text, const RingSpec& ring) {
  const std::string s = strip_spaces(text);
  if (s.empty() || s.front() != '(') return RationalWitt(parse_polynomial(s, ring));

  Cursor cur(s);
  auto parenthesized = [&](std::string_view what) {
    cur.expect('(', what);
    std::string inner = cur.until(")");
    cur.expect(')', what);
    return parse_polynomial(inner, ring);
  };
  UnitPolynomial num = parenthesized("numerator");
  if (cur.done()) return RationalWitt(std::move(num));
  cur.expect('/', "fraction");
  UnitPolynomial den = parenthesized("denominator");
  if (!cur.done()) cur.fail("trailing input after fraction");
  return RationalWitt(std::move(num), std::move(den));
}

MatrixEndo parse_matrix(std::string_view text, const RingSpec& ring) {
  Cursor cur(strip_spaces(text));
  cur.expect('[', "matrix");
  std::vector<std::vector<RingElement>> rows;
  if (!cur.accept(']')) {
    do {
      cur.expect('[', "matrix row");
      std::vector<RingElement> row;
      do {
        const std::string entry = cur.until(",]");
        if (entry.empty()) cur.fail("expected matrix entry");
        row.push_back(parse_element(entry, ring));
      } while (cur.accept(','));
      cur.expect(']', "matrix row");
      rows.push_back(std::move(row));
    } while (cur.accept(','));
    cur.expect(']', "matrix");
  }
  if (!cur.done()) cur.fail("trailing input after matrix");

  const std::size_t n = rows.size();
  std::vector<RingElement> entries;
  entries.reserve(n * n);
  for (auto& row : rows) {
    if (row.size() != n)
      throw ParseError("matrix must be square: row of length " + std::to_string(row.size()) + " in a " +
                           std::to_string(n) + "-row matrix",
                       std::string(text));
    for (auto& e : row) entries.push_back(std::move(e));
  }
  return MatrixEndo(ring, n, std::move(entries));
}

std::vector<RingElement> parse_element_list(std::string_view text, const RingSpec& ring) {
  Cursor cur(strip_spaces(text));
  cur.expect('[', "list");
  std::vector<RingElement> out;
  if (cur.accept(']')) {
    if (!cur.done()) cur.fail("trailing input after list");
    return out;
  }
  do {
    const std::string entry = cur.until(",]");
    if (entry.empty()) cur.fail("expected list entry");
    out.push_back(parse_element(entry, ring));
  } while (cur.accept(','));
  cur.expect(']', "list");
  if (!cur.done()) cur.fail("trailing input after list");
  return out;
}

std::string format_element_list(const std::vector<RingElement>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].to_string();
  }
  return out + "]";
}

}  // namespace wittkit
