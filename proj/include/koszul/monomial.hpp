#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace koszul {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of a monomial in at most kMaxVars variables. Unused
/// slots are zero, so comparisons never need the ring's arity.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() { exps_.fill(0); }
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t v);

  Exponent operator[](std::size_t v) const { return exps_[v]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t v, int e);

  bool divides(const Monomial& other) const;
  /// Throws ArithmeticError on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(): quotient other / *this is computed as other.div(*this).
  Monomial div(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  std::vector<int> exponents(std::size_t n) const;
  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::array<Exponent, kMaxVars> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { Lex, GradedLex, GradedRevLex, Weighted };

/// A monomial order from a fixed family: lex, graded lex, graded reverse
/// lex, or a positive weight vector with graded reverse lex tiebreak.
/// `permutation[k]` is the variable placed in position k (position 0 is
/// the most significant), applied before comparison.
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(OrderKind kind, std::size_t nvars);
  TermOrder(OrderKind kind, std::vector<std::size_t> permutation, std::vector<int> weights = {});

  static TermOrder grevlex(std::size_t n) { return TermOrder(OrderKind::GradedRevLex, n); }
  static TermOrder lex(std::size_t n) { return TermOrder(OrderKind::Lex, n); }

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return perm_.size(); }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  const std::vector<int>& weights() const { return weights_; }

  /// Negative, zero, positive as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.kind_ == b.kind_ && a.perm_ == b.perm_ && a.weights_ == b.weights_;
  }

 private:
  int compare_revlex_tail(const Monomial& a, const Monomial& b) const;

  OrderKind kind_ = OrderKind::GradedRevLex;
  std::vector<std::size_t> perm_;
  std::vector<int> weights_;
};

/// All monomials of total degree d in n variables, in decreasing lex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

}  // namespace koszul
