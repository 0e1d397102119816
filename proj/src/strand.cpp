#include "koszul/strand.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include <omp.h>

namespace koszul {

namespace {

// Sorts (index, value) pairs and merges repeated indices.
SparseVec collapse(const Field& F, std::vector<std::pair<std::uint32_t, Coeff>>& acc) {
  std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [k, c] : acc) {
    if (!out.empty() && out.back().first == k) {
      out.back().second = F.add(out.back().second, c);
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!c.is_zero()) {
      out.emplace_back(k, std::move(c));
    }
  }
  return out;
}

// Generator index owning strand coordinate k.
std::uint32_t owner(const StrandSpace& space, std::uint32_t k) {
  auto it = std::upper_bound(space.offset.begin(), space.offset.end(), k);
  return static_cast<std::uint32_t>(it - space.offset.begin()) - 1;
}

int needed_degree(const GradedMatrix& m, int top) {
  int low = INT32_MAX;
  for (int t : m.source().twists) low = std::min(low, t);
  for (int t : m.target().twists) low = std::min(low, t);
  return low == INT32_MAX ? 0 : std::max(top - low, 0);
}

// v in (F)_{j-1} multiplied by x_var, landing in (F)_j.
SparseVec multiply_by_variable(const StrandRing& ring, const GradedFreeModule& F, const StrandSpace& from,
                               const StrandSpace& to, std::size_t var, const SparseVec& v) {
  const Field& K = ring.field();
  std::vector<std::pair<std::uint32_t, Coeff>> acc;
  Monomial x = Monomial::variable(var);
  for (const auto& [k, c] : v) {
    std::uint32_t u = owner(from, k);
    const Monomial& sigma = ring.standard(from.degree - F.twists[u])[k - from.offset[u]];
    for (const auto& [i, a] : ring.monomial_nf(sigma * x)) acc.emplace_back(to.offset[u] + i, K.mul(c, a));
  }
  return collapse(K, acc);
}

std::vector<SparseVec> times_maximal_ideal(const StrandRing& ring, const GradedFreeModule& F, const StrandSpace& from,
                                           const StrandSpace& to, const std::vector<SparseVec>& basis) {
  std::vector<SparseVec> out;
  out.reserve(basis.size() * ring.ring().nvars());
  for (const auto& v : basis)
    for (std::size_t var = 0; var < ring.ring().nvars(); ++var) {
      SparseVec w = multiply_by_variable(ring, F, from, to, var, v);
      if (!w.empty()) out.push_back(std::move(w));
    }
  return out;
}

// Kernel vectors of K_j not in R_1·K_{j-1}, reduced against that span.
std::vector<SparseVec> new_generators(const StrandRing& ring, const GradedFreeModule& F, const StrandSpace& prev,
                                      const StrandSpace& cur, const std::vector<SparseVec>& ker_prev,
                                      const std::vector<SparseVec>& ker_cur) {
  std::vector<SparseVec> gens;
  if (ker_cur.empty()) return gens;
  Echelon ech(ring.field(), cur.dim);
  for (const auto& w : times_maximal_ideal(ring, F, prev, cur, ker_prev)) ech.insert(w);
  if (ech.rank() == ker_cur.size()) return gens;
  for (const auto& v : ker_cur) {
    SparseVec r = ech.reduce(v);
    if (r.empty()) continue;
    gens.push_back(r);
    ech.insert_reduced(std::move(r));
  }
  return gens;
}

GradedMatrix assemble(const GradedMatrix& m, const StrandRing& ring, int jmin,
                      const std::vector<StrandSpace>& spaces, const std::vector<std::vector<SparseVec>>& gens) {
  GradedFreeModule source{m.source().ring, {}};
  std::vector<SparseColumn> cols;
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (const auto& g : gens[s]) {
      source.twists.push_back(jmin + static_cast<int>(s));
      cols.push_back(strand_to_column(ring, m.source(), spaces[s], g));
    }
  return GradedMatrix(std::move(source), m.source(), std::move(cols));
}

void check_budget(std::size_t count, std::size_t budget) {
  if (budget && count > budget)
    throw BudgetExceeded("syzygy module needs more than " + std::to_string(budget) + " generators");
}

}  // namespace

StrandRing::StrandRing(const QuotientRing& R) : R_(R) {}

void StrandRing::prepare(int d) {
  std::optional<int> top = R_.top_degree();
  for (int e = static_cast<int>(std_.size()); e <= d; ++e) {
    std::vector<Monomial> mons;
    if (!top || e <= *top) mons = R_.standard_monomials(e);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> idx;
    for (std::uint32_t k = 0; k < mons.size(); ++k) idx.emplace(mons[k], k);
    std_.push_back(std::move(mons));
    index_.push_back(std::move(idx));
    cache_.push_back(std::make_unique<DegreeCache>());
  }
}

const std::vector<Monomial>& StrandRing::standard(int d) const {
  if (d < 0 || d > prepared_degree()) throw std::logic_error("strand degree " + std::to_string(d) + " not prepared");
  return std_[d];
}

std::uint32_t StrandRing::index(const Monomial& m) const {
  const auto& idx = index_.at(m.degree());
  auto it = idx.find(m);
  if (it == idx.end()) throw std::logic_error("monomial is not standard");
  return it->second;
}

const SparseVec& StrandRing::monomial_nf(const Monomial& m) const {
  int d = m.degree();
  if (d > prepared_degree()) throw std::logic_error("strand degree " + std::to_string(d) + " not prepared");
  DegreeCache& cache = *cache_[d];
  {
    std::lock_guard<std::mutex> guard(cache.lock);
    auto it = cache.nf.find(m);
    if (it != cache.nf.end()) return it->second;
  }
  SparseVec v;
  auto it = index_[d].find(m);
  if (it != index_[d].end()) {
    v.emplace_back(it->second, field().one());
  } else if (!std_[d].empty()) {
    Polynomial nf = R_.normal_form(Polynomial::monomial(R_.ambient(), m, field().one()));
    for (const auto& t : nf.terms()) v.emplace_back(index_[d].at(t.mono), t.coeff);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  std::lock_guard<std::mutex> guard(cache.lock);
  return cache.nf.emplace(m, std::move(v)).first->second;
}

StrandSpace strand_space(const StrandRing& ring, const GradedFreeModule& F, int j) {
  StrandSpace s;
  s.degree = j;
  s.offset.reserve(F.rank());
  for (int t : F.twists) {
    s.offset.push_back(static_cast<std::uint32_t>(s.dim));
    s.dim += ring.dim(j - t);
  }
  return s;
}

SparseVec strand_image(const StrandRing& ring, const GradedFreeModule& target, const StrandSpace& space,
                       const Monomial& sigma, const SparseColumn& col) {
  const Field& K = ring.field();
  std::vector<std::pair<std::uint32_t, Coeff>> acc;
  for (const auto& [u, p] : col) {
    if (space.degree - target.twists[u] < 0) continue;
    for (const auto& t : p.terms())
      for (const auto& [i, a] : ring.monomial_nf(sigma * t.mono)) acc.emplace_back(space.offset[u] + i, K.mul(t.coeff, a));
  }
  return collapse(K, acc);
}

std::vector<SparseVec> strand_matrix(const StrandRing& ring, const GradedMatrix& m, int j) {
  StrandSpace target = strand_space(ring, m.target(), j);
  std::vector<SparseVec> cols;
  for (std::size_t v = 0; v < m.cols(); ++v) {
    int d = j - m.source().twists[v];
    if (d < 0) continue;
    for (const auto& sigma : ring.standard(d)) cols.push_back(strand_image(ring, m.target(), target, sigma, m.column(v)));
  }
  return cols;
}

SparseColumn strand_to_column(const StrandRing& ring, const GradedFreeModule& F, const StrandSpace& space,
                              const SparseVec& v) {
  std::map<std::uint32_t, std::vector<Term>> by_gen;
  for (const auto& [k, c] : v) {
    std::uint32_t u = owner(space, k);
    by_gen[u].push_back({ring.standard(space.degree - F.twists[u])[k - space.offset[u]], c});
  }
  SparseColumn col;
  for (auto& [u, terms] : by_gen) col.emplace_back(u, Polynomial(F.ring, std::move(terms)));
  return col;
}

SparseVec column_to_strand(const StrandRing& ring, const GradedFreeModule& F, const StrandSpace& space,
                           const SparseColumn& col) {
  return strand_image(ring, F, space, Monomial(), col);
}

GradedMatrix strand_syzygies(const GradedMatrix& m, StrandRing& ring, int degree_bound, Execution exec,
                             std::size_t budget) {
  if (m.cols() == 0 || degree_bound < m.source().min_twist())
    return GradedMatrix(GradedFreeModule{m.source().ring, {}}, m.source());
  const int jmin = m.source().min_twist();
  const int count = degree_bound - jmin + 1;
  ring.prepare(needed_degree(m, degree_bound));

  std::vector<StrandSpace> spaces(count);
  std::vector<std::vector<SparseVec>> kernels(count);
  std::vector<std::vector<SparseVec>> gens(count);
  std::exception_ptr failure;
  const bool parallel = exec == Execution::Parallel;

#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (int s = 0; s < count; ++s) {
    try {
      spaces[s] = strand_space(ring, m.source(), jmin + s);
      std::size_t rows = strand_space(ring, m.target(), jmin + s).dim;
      kernels[s] = kernel_basis(ring.field(), rows, strand_matrix(ring, m, jmin + s));
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (int s = 0; s < count; ++s) {
    try {
      static const std::vector<SparseVec> none;
      gens[s] = new_generators(ring, m.source(), s ? spaces[s - 1] : spaces[s], spaces[s], s ? kernels[s - 1] : none,
                               kernels[s]);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t total = 0;
  for (const auto& g : gens) total += g.size();
  check_budget(total, budget);
  return assemble(m, ring, jmin, spaces, gens);
}

GradedMatrix strand_syzygies_serial(const GradedMatrix& m, StrandRing& ring, int degree_bound, std::size_t budget) {
  if (m.cols() == 0 || degree_bound < m.source().min_twist())
    return GradedMatrix(GradedFreeModule{m.source().ring, {}}, m.source());
  const int jmin = m.source().min_twist();
  ring.prepare(needed_degree(m, degree_bound));

  std::vector<StrandSpace> spaces;
  std::vector<std::vector<SparseVec>> gens;
  std::vector<SparseVec> ker_prev;
  std::size_t total = 0;
  for (int j = jmin; j <= degree_bound; ++j) {
    StrandSpace cur = strand_space(ring, m.source(), j);
    std::size_t rows = strand_space(ring, m.target(), j).dim;
    std::vector<SparseVec> ker = kernel_basis(ring.field(), rows, strand_matrix(ring, m, j));
    gens.push_back(new_generators(ring, m.source(), spaces.empty() ? cur : spaces.back(), cur, ker_prev, ker));
    total += gens.back().size();
    check_budget(total, budget);
    spaces.push_back(std::move(cur));
    ker_prev = std::move(ker);
  }
  return assemble(m, ring, jmin, spaces, gens);
}

GradedMatrix minimal_image_generators(const GradedMatrix& m, StrandRing& ring, Execution exec) {
  std::vector<int> degrees = m.source().twists;
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  ring.prepare(needed_degree(m, degrees.empty() ? 0 : degrees.back()));

  std::vector<char> keep(m.cols(), 0);
  std::exception_ptr failure;
  const bool parallel = exec == Execution::Parallel;
  const int count = static_cast<int>(degrees.size());

#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (int s = 0; s < count; ++s) {
    try {
      const int j = degrees[s];
      StrandSpace space = strand_space(ring, m.target(), j);
      Echelon ech(ring.field(), space.dim);
      for (std::size_t v = 0; v < m.cols(); ++v) {
        int d = j - m.source().twists[v];
        if (d <= 0) continue;
        for (const auto& sigma : ring.standard(d)) ech.insert(strand_image(ring, m.target(), space, sigma, m.column(v)));
      }
      for (std::size_t v = 0; v < m.cols(); ++v)
        if (m.source().twists[v] == j && ech.insert(column_to_strand(ring, m.target(), space, m.column(v)))) keep[v] = 1;
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  GradedFreeModule source{m.source().ring, {}};
  std::vector<SparseColumn> cols;
  for (std::size_t v = 0; v < m.cols(); ++v)
    if (keep[v]) {
      source.twists.push_back(m.source().twists[v]);
      cols.push_back(m.column(v));
    }
  return GradedMatrix(std::move(source), m.target(), std::move(cols));
}

}  // namespace koszul
