#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace koszul {

class Field;

/// A field element. In characteristic 0 this is a reduced rational number
/// kept in two machine words while it fits, promoted to GMP otherwise. In
/// characteristic p only the numerator is used and it lies in [0, p).
///
/// Arithmetic goes through a Field so that the same value type serves both
/// coefficient domains.
class Coeff {
 public:
  Coeff() = default;
  Coeff(const Coeff& other);
  Coeff(Coeff&&) noexcept = default;
  Coeff& operator=(const Coeff& other);
  Coeff& operator=(Coeff&&) noexcept = default;
  ~Coeff() = default;

  bool is_big() const { return big_ != nullptr; }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  /// Rational value as a GMP number (char 0 view).
  mpq_class to_mpq() const;

  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

 private:
  friend class Field;
  static Coeff small(std::int64_t num, std::int64_t den = 1) {
    Coeff c;
    c.num_ = num;
    c.den_ = den;
    return c;
  }
  static Coeff from_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals (characteristic 0) or Z/p.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws std::invalid_argument when p is neither 0 nor a prime below 2^31.
  explicit Field(std::uint32_t characteristic = 0);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Coeff zero() const { return Coeff{}; }
  Coeff one() const { return Coeff::small(1); }
  Coeff from_int(std::int64_t v) const;
  Coeff from_rational(const mpq_class& q) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;

  /// a <- a - b*c, the inner operation of every elimination loop.
  void sub_mul(Coeff& a, const Coeff& b, const Coeff& c) const;

  std::string to_string(const Coeff& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  static Coeff reduce_fraction(__int128 num, __int128 den);

  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace koszul
