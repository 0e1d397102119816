#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "koszul/betti.hpp"
#include "koszul/groebner.hpp"

namespace koszul {

/// H(s) = numerator(s) / (1 - s)^nvars.
struct HilbertSeries {
  std::vector<mpz_class> numerator;
  int nvars = 0;

  /// dim_K of the degree-j piece for j = 0..up_to.
  std::vector<mpz_class> expand(int up_to) const;
  /// Numerator after cancelling every (1 - s) factor, and the remaining
  /// denominator exponent.
  std::pair<std::vector<mpz_class>, int> reduced() const;
  std::string to_string() const;
};

/// Numerator of S/(m_1..m_r) over (1 - s)^n, by pivoting on variables.
std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> generators);

HilbertSeries hilbert_series(const QuotientRing& R);
int krull_dimension(const HilbertSeries& h);
/// n - pd_S(R) via Auslander-Buchsbaum.
int depth_via_ab(const QuotientRing& R);

/// Truncated element of Z[s, 1/s][[t]]: rows t^0..t^hmax, each a Laurent
/// polynomial in s.
class BiSeries {
 public:
  explicit BiSeries(int hmax = 0);

  int hmax() const { return hmax_; }
  mpz_class coeff(int i, int j) const;
  void add(int i, int j, const mpz_class& c);
  const std::map<int, mpz_class>& row(int i) const { return rows_.at(i); }
  bool is_zero() const;

  BiSeries operator+(const BiSeries& g) const;
  BiSeries operator-(const BiSeries& g) const;
  BiSeries operator*(const BiSeries& g) const;
  BiSeries truncated(int hmax) const;

  /// Row i as a polynomial in s, e.g. "120s^3 + s^4".
  std::string row_string(int i) const;
  std::string to_string() const;

  friend bool operator==(const BiSeries& a, const BiSeries& b);

 private:
  int hmax_;
  std::vector<std::map<int, mpz_class>> rows_;
};

BiSeries poincare_from_betti(const BettiTable& table);

/// sup j/i over nonzero c_{i,j}, i >= 1, within the truncation window.
struct SeriesRate {
  std::optional<mpq_class> value;
  int hmax = 0;
  std::string to_string() const;
};
SeriesRate series_rate(const BiSeries& f);

/// 1/f through f.hmax(); requires the t^0 row to be exactly 1.
BiSeries biseries_inverse(const BiSeries& f);
/// 1 / (H_{R(a)}(-st) - (st)^{a+1}(s + st)) through t^hmax.
BiSeries roos_poincare(int a, int hmax);

}  // namespace koszul
