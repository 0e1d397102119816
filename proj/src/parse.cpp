#include <cctype>

#include "koszul/polynomial.hpp"

namespace koszul {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse_sum() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term(sign));
      skip_ws();
      if (!at_end() && peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    const Field& F = ring_->field();
    skip_ws();
    mpq_class coeff = sign;
    Monomial mono;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
        have_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        std::string ident = parse_identifier();
        for (std::size_t v : split_identifier(ident, start)) {
          int e = 1;
          skip_ws();
          if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            e = parse_exponent();
          }
          Monomial x;
          x.set(v, e);
          mono = mono * x;
        }
        have_factor = true;
      } else if (c == '*' && have_factor) {
        ++pos_;
        skip_ws();
        if (at_end() || !(std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
          fail("expected factor after '*'");
        continue;
      } else {
        break;
      }
    }
    if (!have_factor) fail("expected a term");
    return Term{mono, F.from_rational(coeff)};
  }

  // A run like `x1x3` is split into known variable names, longest first.
  std::vector<std::size_t> split_identifier(const std::string& ident, std::size_t start) {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    while (k < ident.size()) {
      std::size_t best_len = 0, best_var = 0;
      for (std::size_t v = 0; v < ring_->nvars(); ++v) {
        const auto& name = ring_->names()[v];
        if (name.size() > best_len && ident.compare(k, name.size(), name) == 0) {
          best_len = name.size();
          best_var = v;
        }
      }
      if (best_len == 0) {
        pos_ = start + k;
        fail("unknown variable '" + ident.substr(k) + "'");
      }
      out.push_back(best_var);
      k += best_len;
    }
    return out;
  }

  mpq_class parse_number() {
    mpz_class num(parse_digits());
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      mpz_class den(parse_digits());
      if (den == 0) fail("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  int parse_exponent() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::string d = parse_digits();
    if (d.size() > 5 || std::stol(d) > 0xFFFF) fail("exponent too large");
    return static_cast<int>(std::stol(d));
  }

  std::string parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string parse_identifier() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_ + 1);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse_sum(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_polynomial(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.column());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace koszul
