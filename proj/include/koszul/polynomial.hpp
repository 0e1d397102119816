#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

/// Standard graded polynomial ring K[x_1..x_n] with a fixed term order that
/// governs how polynomials over it are sorted.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names, std::optional<TermOrder> order = std::nullopt);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const TermOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::string format(const Monomial& m) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Field field, std::vector<std::string> names, std::optional<TermOrder> order = std::nullopt);
/// Same field and variables, different term order.
RingPtr with_order(const RingPtr& ring, const TermOrder& order);
/// Variables x1..xn (or the given prefix).
std::vector<std::string> indexed_names(std::size_t n, std::string_view prefix = "x");

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial with terms sorted strictly descending in the ring's
/// term order, no zero coefficients and no repeated monomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Terms in any order; duplicates are combined and zeros dropped.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Coeff& c);
  static Polynomial variable(RingPtr ring, std::size_t v);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& lead() const { return terms_.front(); }
  /// Degree of the leading term; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const;
  /// Coefficient of the constant term (zero if absent).
  Coeff constant_term() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scale(const Coeff& c) const;
  Polynomial mul_term(const Monomial& m, const Coeff& c) const;
  /// Scaled so that the leading coefficient is one.
  Polynomial monic() const;

  /// Re-sorts into another ring with the same variables and field.
  Polynomial to_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_same_ring(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;

  friend Polynomial linear_combination(const Polynomial&, const Coeff&, const Polynomial&, const Coeff&);
};

/// a*f + b*g.
Polynomial linear_combination(const Polynomial& f, const Coeff& a, const Polynomial& g, const Coeff& b);

enum class PolyOpKind { Add, Mul, Scale };
/// Dispatcher over the three ring operations; `g` is ignored for Scale.
Polynomial poly_op(PolyOpKind op, const Polynomial& f, const Polynomial& g, const Coeff& scalar = Coeff{});

/// Homogeneous ideal given by generators of degree at least one.
class Ideal {
 public:
  Ideal() = default;
  /// Throws std::invalid_argument for zero, constant, or inhomogeneous generators.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  bool is_monomial() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column) : std::runtime_error(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses text like `3*x^2*y - z^3` or `1/2 x1x3 + y`; `*` is optional.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
/// Comma separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

}  // namespace koszul
