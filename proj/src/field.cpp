#include "koszul/field.hpp"

#include <numeric>

namespace koszul {

namespace {

using i128 = __int128;

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_small(i128 v) { return v > -kSmallLimit && v < kSmallLimit; }

mpz_class to_mpz(i128 v) {
  bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return negative ? mpz_class(-r) : r;
}

std::uint64_t mod_reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Coeff::Coeff(const Coeff& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Coeff& Coeff::operator=(const Coeff& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_)
    big_ = std::make_unique<mpq_class>(*other.big_);
  else
    big_.reset();
  return *this;
}

bool Coeff::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int Coeff::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Coeff::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  q.canonicalize();
  return q;
}

Coeff Coeff::from_mpq(mpq_class q) {
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    long n = q.get_num().get_si();
    long d = q.get_den().get_si();
    if (n > -kSmallLimit && n < kSmallLimit && d < kSmallLimit) return small(n, d);
  }
  Coeff c;
  c.big_ = std::make_unique<mpq_class>(std::move(q));
  return c;
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (!is_prime(p_) || p_ >= (1u << 31)))
    throw std::invalid_argument("characteristic must be 0 or a prime below 2^31, got " + std::to_string(p_));
}

Coeff Field::from_int(std::int64_t v) const {
  if (p_) return Coeff::small(static_cast<std::int64_t>(mod_reduce(v, p_)));
  if (v > -kSmallLimit && v < kSmallLimit) return Coeff::small(v);
  return Coeff::from_mpq(mpq_class(mpz_class(static_cast<long>(v))));
}

Coeff Field::from_rational(const mpq_class& q) const {
  if (!p_) return Coeff::from_mpq(q);
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class n = q.get_num() % pz;
  mpz_class d = q.get_den() % pz;
  if (d == 0) throw ArithmeticError("denominator vanishes modulo the characteristic");
  if (n < 0) n += pz;
  return div(Coeff::small(n.get_si()), Coeff::small(d.get_si()));
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (p_) {
    std::uint64_t r = static_cast<std::uint64_t>(a.num_) + static_cast<std::uint64_t>(b.num_);
    if (r >= p_) r -= p_;
    return Coeff::small(static_cast<std::int64_t>(r));
  }
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits_small(s)) return Coeff::small(static_cast<std::int64_t>(s));
    }
    i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    return reduce_fraction(num, den);
  }
  return Coeff::from_mpq(a.to_mpq() + b.to_mpq());
}

Coeff Field::neg(const Coeff& a) const {
  if (p_) return Coeff::small(a.num_ == 0 ? 0 : static_cast<std::int64_t>(p_) - a.num_);
  if (a.big_) return Coeff::from_mpq(-*a.big_);
  return Coeff::small(-a.num_, a.den_);
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const { return add(a, neg(b)); }

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (p_) {
    return Coeff::small(static_cast<std::int64_t>(static_cast<std::uint64_t>(a.num_) *
                                                  static_cast<std::uint64_t>(b.num_) % p_));
  }
  if (a.is_zero() || b.is_zero()) return Coeff{};
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 m = static_cast<i128>(a.num_) * b.num_;
      if (fits_small(m)) return Coeff::small(static_cast<std::int64_t>(m));
    }
    return reduce_fraction(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  return Coeff::from_mpq(a.to_mpq() * b.to_mpq());
}

Coeff Field::inv(const Coeff& a) const {
  if (a.is_zero()) throw ArithmeticError("division by zero");
  if (p_) return Coeff::small(static_cast<std::int64_t>(mod_pow(static_cast<std::uint64_t>(a.num_), p_ - 2, p_)));
  if (a.big_) return Coeff::from_mpq(1 / *a.big_);
  if (a.num_ < 0) return Coeff::small(-a.den_, -a.num_);
  return Coeff::small(a.den_, a.num_);
}

Coeff Field::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

void Field::sub_mul(Coeff& a, const Coeff& b, const Coeff& c) const {
  if (p_) {
    std::uint64_t prod = static_cast<std::uint64_t>(b.num_) * static_cast<std::uint64_t>(c.num_) % p_;
    std::uint64_t av = static_cast<std::uint64_t>(a.num_);
    a.num_ = static_cast<std::int64_t>(av >= prod ? av - prod : av + p_ - prod);
    return;
  }
  a = sub(a, mul(b, c));
}

std::string Field::to_string(const Coeff& a) const {
  if (a.big_) return a.big_->get_str();
  if (a.den_ == 1) return std::to_string(a.num_);
  return std::to_string(a.num_) + "/" + std::to_string(a.den_);
}

Coeff Field::reduce_fraction(__int128 num, __int128 den) {
  if (num == 0) return Coeff{};
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (fits_small(num) && fits_small(den))
    return Coeff::small(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  return Coeff::from_mpq(mpq_class(to_mpz(num), to_mpz(den)));
}

}  // namespace koszul
