#include "koszul/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace koszul {

namespace {

int compare_terms(const TermOrder& ord, const ModuleTerm& a, const ModuleTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return ord.compare(a.mono, b.mono);
}

ModuleVector to_module_vector(const Polynomial& f) {
  ModuleVector v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.mono, 0u, t.coeff});
  return v;
}

Polynomial from_module_vector(const RingPtr& ring, const ModuleVector& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.mono, t.coeff});
  return Polynomial(ring, std::move(terms));
}

// f[from..] - c * m * g, merged in module order.
ModuleVector sub_scaled(const TermOrder& ord, const Field& F, const ModuleVector& f, std::size_t from, const Coeff& c,
                        const Monomial& m, const ModuleVector& g) {
  ModuleVector out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    ModuleTerm gt{g[j].mono * m, g[j].comp, Coeff{}};
    int cmp = i == f.size() ? -1 : compare_terms(ord, f[i], gt);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      gt.coeff = F.neg(F.mul(c, g[j].coeff));
      out.push_back(std::move(gt));
      ++j;
    } else {
      Coeff v = f[i].coeff;
      F.sub_mul(v, c, g[j].coeff);
      if (!v.is_zero()) out.push_back({f[i].mono, f[i].comp, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Reducer {
  const TermOrder& ord;
  const Field& F;
  const std::vector<ModuleVector>& basis;
  const std::vector<bool>* active = nullptr;

  std::optional<std::size_t> divisor(const ModuleTerm& t, std::size_t skip = SIZE_MAX) const {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || (active && !(*active)[k])) continue;
      const auto& lead = basis[k].front();
      if (lead.comp == t.comp && lead.mono.divides(t.mono)) return k;
    }
    return std::nullopt;
  }

  ModuleVector reduce(ModuleVector f, bool full, std::size_t skip = SIZE_MAX) const {
    ModuleVector done;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const ModuleTerm& t = f[pos];
      auto k = divisor(t, skip);
      if (!k) {
        if (!full) break;
        done.push_back(f[pos]);
        ++pos;
        continue;
      }
      const ModuleVector& g = basis[*k];
      Coeff c = F.div(t.coeff, g.front().coeff);
      Monomial m = t.mono.div(g.front().mono);
      f = sub_scaled(ord, F, f, pos, c, m, g);
      pos = 0;
    }
    if (!full) return f;
    // f[pos..] is empty here.
    return done;
  }
};

void make_monic(const Field& F, ModuleVector& v) {
  if (v.empty() || v.front().coeff.is_one()) return;
  Coeff inv = F.inv(v.front().coeff);
  for (auto& t : v) t.coeff = F.mul(inv, t.coeff);
}

int term_degree(const ModuleTerm& t, const std::vector<int>& twists) { return t.mono.degree() + twists[t.comp]; }

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
};

// Gröbner basis core shared by ideals (rank one) and modules.
std::vector<ModuleVector> groebner_core(const RingPtr& ring, const std::vector<int>& twists,
                                        std::vector<ModuleVector> gens) {
  const TermOrder& ord = ring->order();
  const Field& F = ring->field();
  const bool ideal_case = twists.size() == 1;

  for (auto& g : gens)
    std::sort(g.begin(), g.end(), [&](const ModuleTerm& a, const ModuleTerm& b) { return compare_terms(ord, a, b) > 0; });
  std::erase_if(gens, [](const ModuleVector& g) { return g.empty(); });
  // Generators wait in a queue ordered by degree, alongside S-pairs.
  std::stable_sort(gens.begin(), gens.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return term_degree(a.front(), twists) < term_degree(b.front(), twists);
  });

  std::vector<ModuleVector> G;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t next_gen = 0;
  Reducer red{ord, F, G};

  auto add_element = [&](ModuleVector h) {
    make_monic(F, h);
    std::size_t idx = G.size();
    G.push_back(std::move(h));
    const ModuleTerm& lt = G[idx].front();
    for (std::size_t k = 0; k < idx; ++k) {
      const ModuleTerm& lk = G[k].front();
      if (lk.comp != lt.comp) continue;
      Monomial l = lk.mono.lcm(lt.mono);
      pairs.push_back({k, idx, l, l.degree() + twists[lt.comp]});
      pending.insert({k, idx});
    }
  };

  auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };

  while (next_gen < gens.size() || !pairs.empty()) {
    int gen_deg = next_gen < gens.size() ? term_degree(gens[next_gen].front(), twists) : INT32_MAX;
    auto best = pairs.end();
    for (auto it = pairs.begin(); it != pairs.end(); ++it)
      if (best == pairs.end() || it->degree < best->degree ||
          (it->degree == best->degree && ord.compare(it->lcm, best->lcm) < 0))
        best = it;
    if (best == pairs.end() || gen_deg <= best->degree) {
      ModuleVector h = red.reduce(std::move(gens[next_gen++]), true);
      if (!h.empty()) add_element(std::move(h));
      continue;
    }
    Pair p = *best;
    pairs.erase(best);
    pending.erase({p.i, p.j});

    const ModuleTerm& li = G[p.i].front();
    const ModuleTerm& lj = G[p.j].front();
    if (ideal_case && li.mono.coprime(lj.mono)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      const ModuleTerm& lk = G[k].front();
      if (lk.comp != li.comp || !lk.mono.divides(p.lcm)) continue;
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
    }
    if (chain) continue;

    ModuleVector s = sub_scaled(ord, F, ModuleVector{}, 0, F.neg(F.one()), p.lcm.div(li.mono), G[p.i]);
    s = sub_scaled(ord, F, s, 0, F.div(s.front().coeff, lj.coeff), p.lcm.div(lj.mono), G[p.j]);
    ModuleVector h = red.reduce(std::move(s), true);
    if (!h.empty()) add_element(std::move(h));
  }

  // Minimalize, then tail-reduce into the reduced basis.
  std::vector<bool> keep(G.size(), true);
  for (std::size_t a = 0; a < G.size(); ++a)
    for (std::size_t b = 0; b < G.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      const auto& la = G[a].front();
      const auto& lb = G[b].front();
      if (la.comp == lb.comp && lb.mono.divides(la.mono) && (lb.mono != la.mono || b < a)) keep[a] = false;
    }
  std::vector<ModuleVector> minimal;
  for (std::size_t a = 0; a < G.size(); ++a)
    if (keep[a]) minimal.push_back(G[a]);
  std::vector<ModuleVector> reduced(minimal.size());
  Reducer final_red{ord, F, minimal};
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    ModuleVector tail(minimal[a].begin() + 1, minimal[a].end());
    ModuleVector r = final_red.reduce(std::move(tail), true, a);
    r.insert(r.begin(), minimal[a].front());
    make_monic(F, r);
    reduced[a] = std::move(r);
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const ModuleVector& a, const ModuleVector& b) { return compare_terms(ord, a.front(), b.front()) > 0; });
  return reduced;
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
  for (auto& e : elements_) {
    e = e.to_ring(ring_);
    leads_.push_back(e.lead().mono);
  }
}

int GroebnerBasis::max_degree() const {
  int d = 0;
  for (const auto& e : elements_) d = std::max(d, e.degree());
  return d;
}

std::optional<std::size_t> GroebnerBasis::find_divisor(const Monomial& m) const {
  for (std::size_t k = 0; k < leads_.size(); ++k)
    if (leads_[k].divides(m)) return k;
  return std::nullopt;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  Polynomial g = f.to_ring(ring_);
  if (elements_.empty() || g.is_zero()) return g;
  const Field& F = ring_->field();
  const TermOrder& ord = ring_->order();
  // Polynomial-level division; leading terms are removed one at a time.
  std::vector<Term> done;
  std::vector<Term> rest = g.terms();
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto k = find_divisor(rest[pos].mono);
    if (!k) {
      done.push_back(rest[pos++]);
      continue;
    }
    const auto& e = elements_[*k].terms();
    Coeff c = rest[pos].coeff;  // elements are monic
    Monomial m = rest[pos].mono.div(e.front().mono);
    std::vector<Term> merged;
    merged.reserve(rest.size() - pos + e.size());
    std::size_t i = pos + 1, j = 1;
    while (i < rest.size() || j < e.size()) {
      if (j == e.size()) {
        merged.push_back(rest[i++]);
        continue;
      }
      Monomial em = e[j].mono * m;
      int cmp = i == rest.size() ? -1 : ord.compare(rest[i].mono, em);
      if (cmp > 0) {
        merged.push_back(rest[i++]);
      } else if (cmp < 0) {
        merged.push_back({em, F.neg(F.mul(c, e[j].coeff))});
        ++j;
      } else {
        Coeff v = rest[i].coeff;
        F.sub_mul(v, c, e[j].coeff);
        if (!v.is_zero()) merged.push_back({rest[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    rest = std::move(merged);
    pos = 0;
  }
  return Polynomial(ring_, std::move(done));
}

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order) {
  RingPtr ring = with_order(ideal.ring(), order);
  std::vector<ModuleVector> gens;
  for (const auto& g : ideal.generators()) gens.push_back(to_module_vector(g.to_ring(ring)));
  auto basis = groebner_core(ring, {0}, std::move(gens));
  std::vector<Polynomial> elements;
  for (const auto& b : basis) elements.push_back(from_module_vector(ring, b));
  return GroebnerBasis(ring, std::move(elements));
}

GroebnerBasis buchberger(const Ideal& ideal) { return buchberger(ideal, ideal.ring()->order()); }

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

Ideal initial_ideal(const Ideal& ideal, const TermOrder& order) {
  GroebnerBasis gb = buchberger(ideal, order);
  std::vector<Polynomial> leads;
  for (const auto& e : gb.elements()) leads.push_back(Polynomial::monomial(gb.ring(), e.lead().mono, gb.ring()->field().one()));
  return Ideal(gb.ring(), std::move(leads));
}

QuotientRing::QuotientRing(RingPtr ambient)
    : ambient_(ambient), ideal_(ambient, {}), gb_(ambient, {}) {}

QuotientRing::QuotientRing(const Ideal& ideal) : ambient_(ideal.ring()), ideal_(ideal), gb_(buchberger(ideal)) {}

Polynomial QuotientRing::normal_form(const Polynomial& f) const { return gb_.normal_form(f); }

Polynomial QuotientRing::variable(std::size_t v) const { return normal_form(Polynomial::variable(ambient_, v)); }

std::vector<Monomial> QuotientRing::standard_monomials(int d) const {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(nvars(), d))
    if (is_standard(m)) out.push_back(m);
  const TermOrder& ord = ambient_->order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

std::optional<int> QuotientRing::top_degree() const {
  int bound = 0;
  for (std::size_t v = 0; v < nvars(); ++v) {
    int pure = -1;
    for (const auto& m : gb_.lead_monomials())
      if (m.degree() == m[v] && (pure < 0 || m[v] < pure)) pure = m[v];
    if (pure < 0) return std::nullopt;
    bound += pure - 1;
  }
  for (int d = bound; d >= 0; --d)
    if (!standard_monomials(d).empty()) return d;
  return 0;
}

std::string QuotientRing::describe() const {
  std::ostringstream os;
  os << "K[";
  for (std::size_t v = 0; v < nvars(); ++v) os << (v ? "," : "") << ambient_->names()[v];
  os << "]";
  if (!ideal_.empty()) os << "/" << ideal_.to_string();
  os << " (char " << field().characteristic() << ")";
  return os.str();
}

Polynomial quotient_normal_form(const Polynomial& f, const QuotientRing& R) { return R.normal_form(f); }

ModuleGroebnerBasis module_buchberger(const RingPtr& ring, const std::vector<int>& twists,
                                      std::vector<ModuleVector> generators) {
  ModuleGroebnerBasis out;
  out.ring = ring;
  out.twists = twists;
  int bound = INT32_MIN;
  for (const auto& g : generators)
    for (const auto& t : g) bound = std::max(bound, term_degree(t, twists));
  out.elements = groebner_core(ring, twists, std::move(generators));
  for (std::size_t a = 0; a < out.elements.size(); ++a)
    for (std::size_t b = a + 1; b < out.elements.size(); ++b) {
      const auto& la = out.elements[a].front();
      const auto& lb = out.elements[b].front();
      if (la.comp != lb.comp) continue;
      bound = std::max(bound, la.mono.lcm(lb.mono).degree() + twists[la.comp]);
    }
  out.syzygy_degree_bound = bound;
  return out;
}

int syzygy_degree_bound(const GradedMatrix& m, const QuotientRing& R) {
  const RingPtr& ring = R.ambient();
  std::vector<ModuleVector> gens;
  for (std::size_t v = 0; v < m.cols(); ++v) {
    ModuleVector col;
    for (const auto& [u, p] : m.column(v)) {
      Polynomial q = p.to_ring(ring);
      for (const auto& t : q.terms()) col.push_back({t.mono, u, t.coeff});
    }
    gens.push_back(std::move(col));
  }
  for (std::size_t u = 0; u < m.rows(); ++u)
    for (const auto& g : R.gb().elements()) {
      ModuleVector col;
      for (const auto& t : g.terms()) col.push_back({t.mono, static_cast<std::uint32_t>(u), t.coeff});
      gens.push_back(std::move(col));
    }
  ModuleGroebnerBasis gb = module_buchberger(ring, m.target().twists, std::move(gens));
  return std::max(gb.syzygy_degree_bound, m.source().max_twist());
}

}  // namespace koszul
