#include "koszul/series.hpp"

#include <algorithm>
#include <sstream>

#include "koszul/resolution.hpp"

namespace koszul {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

IntPoly shift(const IntPoly& a, int by) {
  IntPoly r(by, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); })) out.push_back(g);
  return out;
}

std::string s_power(int j) {
  if (j == 0) return "";
  if (j == 1) return "s";
  return "s^" + std::to_string(j);
}

std::string format_poly(const std::map<int, mpz_class>& terms, const std::string& var_suffix = "") {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, c] : terms) {
    if (c == 0) continue;
    mpz_class a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    std::string mono = s_power(j) + var_suffix;
    if (a != 1 || mono.empty()) os << a.get_str();
    os << mono;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::vector<mpz_class> HilbertSeries::expand(int up_to) const {
  std::vector<mpz_class> c(up_to + 1, 0);
  for (std::size_t k = 0; k < numerator.size() && static_cast<int>(k) <= up_to; ++k) c[k] = numerator[k];
  for (int r = 0; r < nvars; ++r)
    for (int k = 1; k <= up_to; ++k) c[k] += c[k - 1];
  return c;
}

std::pair<std::vector<mpz_class>, int> HilbertSeries::reduced() const {
  IntPoly p = numerator;
  int d = nvars;
  while (d > 0 && !p.empty()) {
    mpz_class at_one = 0;
    for (const auto& c : p) at_one += c;
    if (at_one != 0) break;
    // Synthetic division by (1 - s): q_k = sum_{m <= k} p_m.
    IntPoly q(p.size() - 1);
    mpz_class acc = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      acc += p[k];
      q[k] = acc;
    }
    trim(q);
    p = std::move(q);
    --d;
  }
  return {p, d};
}

std::string HilbertSeries::to_string() const {
  auto [num, d] = reduced();
  std::map<int, mpz_class> terms;
  for (std::size_t k = 0; k < num.size(); ++k) terms[static_cast<int>(k)] = num[k];
  std::string s = format_poly(terms);
  if (d == 0) return s;
  if (terms.size() > 1) s = "(" + s + ")";
  return s + "/(1-s)" + (d > 1 ? "^" + std::to_string(d) : "");
}

std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> generators) {
  std::vector<Monomial> gens = minimalize(std::move(generators));
  if (gens.empty()) return {1};
  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
      if (!gens[a].coprime(gens[b])) coprime = false;
  if (coprime) {
    IntPoly p = {1};
    for (const auto& g : gens) {
      IntPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      p = mul(p, f);
    }
    return p;
  }
  // Pivot on the variable dividing the most generators:
  // N(I) = N(I + (x)) + s N(I : x).
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    int count = 0;
    for (const auto& g : gens) count += g[v] > 0;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  Monomial x = Monomial::variable(best);
  std::vector<Monomial> plus = {x};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (g[best] == 0) plus.push_back(g);
    colon.push_back(x.divides(g) ? g.div(x) : g);
  }
  return add(hilbert_numerator(std::move(plus)), shift(hilbert_numerator(std::move(colon)), 1));
}

HilbertSeries hilbert_series(const QuotientRing& R) {
  HilbertSeries h;
  h.nvars = static_cast<int>(R.nvars());
  h.numerator = hilbert_numerator(R.gb().lead_monomials());
  return h;
}

int krull_dimension(const HilbertSeries& h) { return h.reduced().second; }

int depth_via_ab(const QuotientRing& R) {
  Resolution res = resolve_over_ambient(R);
  return static_cast<int>(R.nvars()) - res.length();
}

BiSeries::BiSeries(int hmax) : hmax_(hmax), rows_(hmax + 1) {
  if (hmax < 0) throw std::invalid_argument("negative truncation");
}

mpz_class BiSeries::coeff(int i, int j) const {
  if (i < 0 || i > hmax_) return 0;
  auto it = rows_[i].find(j);
  return it == rows_[i].end() ? mpz_class(0) : it->second;
}

void BiSeries::add(int i, int j, const mpz_class& c) {
  if (i < 0 || i > hmax_ || c == 0) return;
  auto& row = rows_[i];
  auto it = row.find(j);
  if (it == row.end()) {
    row.emplace(j, c);
  } else {
    it->second += c;
    if (it->second == 0) row.erase(it);
  }
}

bool BiSeries::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

BiSeries BiSeries::operator+(const BiSeries& g) const {
  BiSeries r(std::min(hmax_, g.hmax_));
  for (int i = 0; i <= r.hmax_; ++i) {
    for (const auto& [j, c] : rows_[i]) r.add(i, j, c);
    for (const auto& [j, c] : g.rows_[i]) r.add(i, j, c);
  }
  return r;
}

BiSeries BiSeries::operator-(const BiSeries& g) const {
  BiSeries r(std::min(hmax_, g.hmax_));
  for (int i = 0; i <= r.hmax_; ++i) {
    for (const auto& [j, c] : rows_[i]) r.add(i, j, c);
    for (const auto& [j, c] : g.rows_[i]) r.add(i, j, -c);
  }
  return r;
}

BiSeries BiSeries::operator*(const BiSeries& g) const {
  BiSeries r(std::min(hmax_, g.hmax_));
  for (int a = 0; a <= r.hmax_; ++a)
    for (int b = 0; a + b <= r.hmax_; ++b)
      for (const auto& [j, c] : rows_[a])
        for (const auto& [k, d] : g.rows_[b]) r.add(a + b, j + k, c * d);
  return r;
}

BiSeries BiSeries::truncated(int hmax) const {
  BiSeries r(std::min(hmax, hmax_));
  for (int i = 0; i <= r.hmax_; ++i) r.rows_[i] = rows_[i];
  return r;
}

std::string BiSeries::row_string(int i) const { return format_poly(rows_.at(i)); }

std::string BiSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= hmax_; ++i) {
    if (rows_[i].empty()) continue;
    std::string t = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    os << (first ? "" : " + ");
    if (t.empty())
      os << row_string(i);
    else
      os << "(" << row_string(i) << ")" << t;
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << hmax_ + 1 << ")";
  return os.str();
}

bool operator==(const BiSeries& a, const BiSeries& b) { return a.hmax_ == b.hmax_ && a.rows_ == b.rows_; }

BiSeries poincare_from_betti(const BettiTable& table) {
  BiSeries f(table.hmax);
  for (const auto& [key, v] : table.entries) f.add(key.first, key.second, v);
  return f;
}

std::string SeriesRate::to_string() const {
  std::string v = value ? value->get_str() : "undefined";
  return v + " (through t^" + std::to_string(hmax) + ")";
}

SeriesRate series_rate(const BiSeries& f) {
  SeriesRate r;
  r.hmax = f.hmax();
  for (int i = 1; i <= f.hmax(); ++i)
    for (const auto& [j, c] : f.row(i)) {
      mpq_class q(j, i);
      q.canonicalize();
      if (!r.value || q > *r.value) r.value = q;
    }
  return r;
}

BiSeries biseries_inverse(const BiSeries& f) {
  const auto& f0 = f.row(0);
  if (f0.size() != 1 || f0.begin()->first != 0 || f0.begin()->second != 1)
    throw std::invalid_argument("series is not invertible: constant row must be 1");
  BiSeries g(f.hmax());
  g.add(0, 0, 1);
  for (int i = 1; i <= f.hmax(); ++i)
    for (int k = 1; k <= i; ++k)
      for (const auto& [a, c] : f.row(k))
        for (const auto& [b, d] : g.row(i - k)) g.add(i, a + b, -c * d);
  return g;
}

BiSeries roos_poincare(int a, int hmax) {
  if (a < 2) throw std::invalid_argument("Roos family needs a >= 2");
  BiSeries den(hmax);
  den.add(0, 0, 1);
  den.add(1, 1, -6);
  den.add(2, 2, 8);
  den.add(a + 1, a + 2, -1);
  den.add(a + 2, a + 2, -1);
  return biseries_inverse(den);
}

}  // namespace koszul
