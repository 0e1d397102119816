#include "koszul/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "koszul/field.hpp"

namespace koszul {

Monomial::Monomial(std::span<const int> exponents) {
  exps_.fill(0);
  if (exponents.size() > kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t v = 0; v < exponents.size(); ++v) set(v, exponents[v]);
}

Monomial Monomial::variable(std::size_t v) {
  Monomial m;
  m.set(v, 1);
  return m;
}

void Monomial::set(std::size_t v, int e) {
  if (v >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > 0xFFFF) throw ArithmeticError("exponent out of range");
  degree_ += e - exps_[v];
  exps_[v] = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    unsigned e = unsigned{exps_[v]} + other.exps_[v];
    if (e > 0xFFFF) throw ArithmeticError("exponent overflow");
    r.exps_[v] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::div(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t v = 0; v < kMaxVars; ++v) r.exps_[v] = static_cast<Exponent>(exps_[v] - divisor.exps_[v]);
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  int d = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    r.exps_[v] = std::max(exps_[v], other.exps_[v]);
    d += r.exps_[v];
  }
  r.degree_ = d;
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  int d = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    r.exps_[v] = std::min(exps_[v], other.exps_[v]);
    d += r.exps_[v];
  }
  r.degree_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (exps_[v] && other.exps_[v]) return false;
  return true;
}

std::vector<int> Monomial::exponents(std::size_t n) const {
  std::vector<int> e(n);
  for (std::size_t v = 0; v < n; ++v) e[v] = exps_[v];
  return e;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

TermOrder::TermOrder(OrderKind kind, std::size_t nvars) : kind_(kind), perm_(nvars) {
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  if (kind_ == OrderKind::Weighted) weights_.assign(nvars, 1);
}

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> permutation, std::vector<int> weights)
    : kind_(kind), perm_(std::move(permutation)), weights_(std::move(weights)) {
  std::vector<std::size_t> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != k) throw std::invalid_argument("term order permutation is not a permutation");
  if (kind_ == OrderKind::Weighted) {
    if (weights_.size() != perm_.size()) throw std::invalid_argument("weight vector has wrong length");
    for (int w : weights_)
      if (w <= 0) throw std::invalid_argument("weights must be positive integers");
  } else if (!weights_.empty()) {
    throw std::invalid_argument("weights given for an unweighted order");
  }
}

int TermOrder::compare_revlex_tail(const Monomial& a, const Monomial& b) const {
  for (std::size_t k = perm_.size(); k-- > 0;) {
    std::size_t v = perm_[k];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t v : perm_)
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      return 0;
    case OrderKind::GradedLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t v : perm_)
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      return 0;
    case OrderKind::GradedRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return compare_revlex_tail(a, b);
    case OrderKind::Weighted: {
      long wa = 0, wb = 0;
      for (std::size_t v = 0; v < weights_.size(); ++v) {
        wa += long{weights_[v]} * a[v];
        wb += long{weights_[v]} * b[v];
      }
      if (wa != wb) return wa > wb ? 1 : -1;
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return compare_revlex_tail(a, b);
    }
  }
  return 0;
}

std::string TermOrder::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case OrderKind::Lex: os << "lex"; break;
    case OrderKind::GradedLex: os << "grlex"; break;
    case OrderKind::GradedRevLex: os << "grevlex"; break;
    case OrderKind::Weighted: os << "weighted"; break;
  }
  os << "[";
  for (std::size_t k = 0; k < perm_.size(); ++k) os << (k ? "," : "") << perm_[k];
  os << "]";
  if (kind_ == OrderKind::Weighted) {
    os << "w(";
    for (std::size_t k = 0; k < weights_.size(); ++k) os << (k ? "," : "") << weights_[k];
    os << ")";
  }
  return os.str();
}

namespace {

void enumerate(std::size_t n, std::size_t v, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (v + 1 == n) {
    cur.set(v, remaining);
    out.push_back(cur);
    cur.set(v, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(v, e);
    enumerate(n, v + 1, remaining - e, cur, out);
  }
  cur.set(v, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0 || n == 0) return out;
  Monomial cur;
  enumerate(n, 0, d, cur, out);
  return out;
}

}  // namespace koszul
