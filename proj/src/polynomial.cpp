#include "koszul/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace koszul {

PolyRing::PolyRing(Field field, std::vector<std::string> names, std::optional<TermOrder> order)
    : field_(field), names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("a polynomial ring needs at least one variable");
  if (names_.size() > kMaxVars) throw std::invalid_argument("at most 16 variables are supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  order_ = order ? *order : TermOrder::grevlex(names_.size());
  if (order_.nvars() != names_.size()) throw std::invalid_argument("term order arity does not match ring");
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

std::string PolyRing::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += names_[v];
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s;
}

RingPtr make_ring(Field field, std::vector<std::string> names, std::optional<TermOrder> order) {
  return std::make_shared<const PolyRing>(field, std::move(names), std::move(order));
}

RingPtr with_order(const RingPtr& ring, const TermOrder& order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->field(), ring->names(), order);
}

std::vector<std::string> indexed_names(std::size_t n, std::string_view prefix) {
  std::vector<std::string> out;
  for (std::size_t v = 1; v <= n; ++v) out.push_back(std::string(prefix) + std::to_string(v));
  return out;
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& ord = ring_->order();
  const auto& F = ring_->field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = F.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) { return monomial(std::move(ring), Monomial{}, c); }

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Coeff& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t v) {
  if (v >= ring->nvars()) throw std::out_of_range("variable index out of range");
  auto one = ring->field().one();
  return monomial(std::move(ring), Monomial::variable(v), one);
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Coeff Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Coeff{};
}

void Polynomial::check_same_ring(const Polynomial& g) const {
  if (ring_ == g.ring_) return;
  if (!ring_ || !g.ring_ || !(*ring_ == *g.ring_)) throw RingMismatch("polynomials live in different rings");
}

Polynomial linear_combination(const Polynomial& f, const Coeff& a, const Polynomial& g, const Coeff& b) {
  f.check_same_ring(g);
  const auto& ord = f.ring_->order();
  const auto& F = f.ring_->field();
  Polynomial r(f.ring_);
  r.terms_.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < f.terms_.size() || j < g.terms_.size()) {
    int c;
    if (i == f.terms_.size())
      c = -1;
    else if (j == g.terms_.size())
      c = 1;
    else
      c = ord.compare(f.terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      Coeff v = F.mul(a, f.terms_[i].coeff);
      if (!v.is_zero()) r.terms_.push_back({f.terms_[i].mono, std::move(v)});
      ++i;
    } else if (c < 0) {
      Coeff v = F.mul(b, g.terms_[j].coeff);
      if (!v.is_zero()) r.terms_.push_back({g.terms_[j].mono, std::move(v)});
      ++j;
    } else {
      Coeff v = F.add(F.mul(a, f.terms_[i].coeff), F.mul(b, g.terms_[j].coeff));
      if (!v.is_zero()) r.terms_.push_back({f.terms_[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  auto one = ring_->field().one();
  return linear_combination(*this, one, g, one);
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  const auto& F = ring_->field();
  return linear_combination(*this, F.one(), g, F.neg(F.one()));
}

Polynomial Polynomial::operator-() const { return scale(ring_->field().neg(ring_->field().one())); }

Polynomial Polynomial::scale(const Coeff& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  const auto& F = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff v = F.mul(c, t.coeff);
    if (!v.is_zero()) r.terms_.push_back({t.mono, std::move(v)});
  }
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  const auto& F = ring_->field();
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, F.mul(c, t.coeff)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_same_ring(g);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  const auto& F = ring_->field();
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) prod.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return scale(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::to_ring(const RingPtr& target) const {
  if (target == ring_) return *this;
  if (target->names() != ring_->names() || !(target->field() == ring_->field()))
    throw RingMismatch("cannot move polynomial between rings with different variables or field");
  return Polynomial(target, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& F = ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = F.to_string(t.coeff);
    bool negative = !F.is_rational() ? false : t.coeff.sign() < 0;
    if (negative) c = c.substr(1);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (t.mono.is_one())
      os << c;
    else if (c == "1")
      os << ring_->format(t.mono);
    else
      os << c << "*" << ring_->format(t.mono);
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].mono != b.terms_[k].mono || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  return true;
}

Polynomial poly_op(PolyOpKind op, const Polynomial& f, const Polynomial& g, const Coeff& scalar) {
  switch (op) {
    case PolyOpKind::Add: return f + g;
    case PolyOpKind::Mul: return f * g;
    case PolyOpKind::Scale: return f.scale(scalar);
  }
  return f;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.is_zero()) throw std::invalid_argument("ideal generator is zero");
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generator is not homogeneous: " + g.to_string());
    if (g.degree() < 1) throw std::invalid_argument("ideal generator has degree 0: " + g.to_string());
    if (!(*g.ring() == *ring_)) throw RingMismatch("ideal generator from a different ring");
  }
  for (auto& g : gens_) g = g.to_ring(ring_);
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.size() == 1; });
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) s += (k ? ", " : "") + gens_[k].to_string();
  return s + ")";
}

}  // namespace koszul
