#include "koszul/resolution.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace koszul {

namespace {

struct DegreeHint {
  // t_i <= i + reg for every i, when known.
  std::optional<int> regularity;
};

int syzygy_bound(const GradedMatrix& d, int i, const QuotientRing& R, const DegreeHint& hint) {
  if (auto top = R.top_degree()) return d.source().max_twist() + *top;
  if (hint.regularity) return i + 1 + *hint.regularity;
  return syzygy_degree_bound(d, R);
}

Resolution resolve(const GradedMatrix& presentation, const QuotientRing& R, ModuleKind kind, int hmax,
                   const DegreeHint& hint, const ResolutionOptions& opts) {
  Resolution res;
  res.ring = std::make_shared<QuotientRing>(R);
  res.module = kind;
  res.hmax = hmax;
  GradedMatrix p = prune_units(presentation, R);
  res.f0 = p.target();
  if (p.rows() == 0 || hmax == 0) {
    res.complete = p.rows() == 0;
    return res;
  }
  StrandRing ring(R);
  res.differentials.push_back(minimal_image_generators(p, ring, opts.exec));
  for (int i = 1; i < hmax && res.differentials.back().cols() > 0; ++i) {
    const GradedMatrix& d = res.differentials.back();
    int bound = syzygy_bound(d, i, R, hint);
    if (opts.degree_guard > 0 && bound > opts.degree_guard)
      throw BudgetExceeded("syzygy degree bound " + std::to_string(bound) + " exceeds dmax " +
                           std::to_string(opts.degree_guard));
    res.differentials.push_back(strand_syzygies(d, ring, bound, opts.exec, opts.generator_budget));
  }
  res.complete = res.differentials.back().cols() == 0;
  return res;
}

GradedMatrix variable_row(const QuotientRing& R) {
  GradedFreeModule source{R.ambient(), std::vector<int>(R.nvars(), 1)};
  std::vector<SparseColumn> cols(R.nvars());
  for (std::size_t v = 0; v < R.nvars(); ++v) {
    Polynomial x = R.variable(v);
    if (!x.is_zero()) cols[v].push_back({0u, x});
  }
  return GradedMatrix(std::move(source), GradedFreeModule{R.ambient(), {0}}, std::move(cols));
}

int exterior_sign(std::uint32_t S, std::uint32_t T) {
  // Number of pairs s in S, t in T with s > t.
  int inversions = 0;
  for (std::uint32_t t = T; t; t &= t - 1) {
    std::uint32_t bit = t & -t;
    inversions += std::popcount(S & ~((bit << 1) - 1));
  }
  return inversions % 2 ? -1 : 1;
}

std::unordered_map<std::uint32_t, std::uint32_t> basis_index(const std::vector<std::uint32_t>& basis) {
  std::unordered_map<std::uint32_t, std::uint32_t> idx;
  for (std::uint32_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], k);
  return idx;
}

}  // namespace

std::string module_kind_name(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::ResidueField: return "k";
    case ModuleKind::Ring: return "R";
    case ModuleKind::Augmentation: return "R+";
    case ModuleKind::Presented: return "presented";
  }
  return "?";
}

GradedFreeModule Resolution::free_module(int i) const {
  if (i == 0) return f0;
  if (i >= 1 && i <= static_cast<int>(differentials.size())) return differentials[i - 1].source();
  return GradedFreeModule{f0.ring, {}};
}

int Resolution::length() const {
  int len = f0.rank() ? 0 : -1;
  for (int i = 1; i <= static_cast<int>(differentials.size()); ++i)
    if (differentials[i - 1].cols()) len = i;
  return len;
}

GradedMatrix prune_units(const GradedMatrix& m, const QuotientRing& R) {
  const Field& F = R.field();
  GradedFreeModule source = m.source();
  GradedFreeModule target = m.target();
  std::vector<SparseColumn> cols = m.columns();
  while (true) {
    std::optional<std::pair<std::uint32_t, std::size_t>> unit;
    for (std::size_t v = 0; v < cols.size() && !unit; ++v)
      for (const auto& [u, p] : cols[v])
        if (source.twists[v] == target.twists[u] && !p.is_zero()) {
          unit = {u, v};
          break;
        }
    if (!unit) break;
    auto [u, v] = *unit;
    SparseColumn pivot = cols[v];
    Coeff c_inv;
    for (const auto& [r, p] : pivot)
      if (r == u) c_inv = F.inv(p.constant_term());
    for (std::size_t w = 0; w < cols.size(); ++w) {
      if (w == v) continue;
      Polynomial factor(target.ring);
      for (const auto& [r, p] : cols[w])
        if (r == u) factor = p.scale(c_inv);
      if (factor.is_zero()) continue;
      std::map<std::uint32_t, Polynomial> acc;
      for (const auto& [r, p] : cols[w]) acc.emplace(r, p);
      for (const auto& [r, p] : pivot) {
        Polynomial sub = R.normal_form(factor * p);
        auto it = acc.find(r);
        if (it == acc.end())
          acc.emplace(r, -sub);
        else
          it->second = it->second - sub;
      }
      SparseColumn col;
      for (auto& [r, p] : acc)
        if (!p.is_zero()) col.emplace_back(r, std::move(p));
      cols[w] = std::move(col);
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(v));
    source.twists.erase(source.twists.begin() + static_cast<std::ptrdiff_t>(v));
    target.twists.erase(target.twists.begin() + u);
    for (auto& col : cols) {
      std::erase_if(col, [u](const auto& e) { return e.first == u; });
      for (auto& e : col)
        if (e.first > u) --e.first;
    }
  }
  return GradedMatrix(std::move(source), std::move(target), std::move(cols));
}

Resolution minimal_resolution(const GradedMatrix& presentation, const RingPtr& over, const ResolutionOptions& opts) {
  QuotientRing S(over);
  return resolve(presentation, S, ModuleKind::Presented, static_cast<int>(over->nvars()) + 1, {}, opts);
}

Resolution resolve_over_ambient(const QuotientRing& R, const ResolutionOptions& opts) {
  const RingPtr& S = R.ambient();
  DegreeHint hint;
  if (auto top = R.top_degree()) hint.regularity = *top;
  GradedMatrix row = GradedMatrix::row(S, R.ideal().generators());
  Resolution res = resolve(row, QuotientRing(S), ModuleKind::Ring, static_cast<int>(S->nvars()) + 1, hint, opts);
  return res;
}

Resolution quotient_resolution(ModuleKind kind, const QuotientRing& R, const ResolutionOptions& opts,
                               const GradedMatrix* presentation) {
  if (opts.hmax < 0) throw std::invalid_argument("hmax must be nonnegative");
  DegreeHint hint;
  switch (kind) {
    case ModuleKind::ResidueField:
      if (R.is_polynomial_ring()) hint.regularity = 0;
      return resolve(variable_row(R), R, kind, opts.hmax, hint, opts);
    case ModuleKind::Augmentation: {
      if (R.is_polynomial_ring()) hint.regularity = 1;
      GradedMatrix relations = module_syzygies(variable_row(R), R);
      GradedMatrix p(relations.source(), relations.target(), relations.columns());
      return resolve(p, R, kind, opts.hmax, hint, opts);
    }
    case ModuleKind::Ring: {
      GradedMatrix p(GradedFreeModule{R.ambient(), {}}, GradedFreeModule{R.ambient(), {0}});
      return resolve(p, R, kind, opts.hmax, hint, opts);
    }
    case ModuleKind::Presented:
      if (!presentation) throw std::invalid_argument("presented module needs a presentation matrix");
      return resolve(*presentation, R, kind, opts.hmax, hint, opts);
  }
  throw std::invalid_argument("unknown module kind");
}

std::vector<std::uint32_t> exterior_basis(std::size_t n, std::size_t i) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t S = 0; S < (1u << n); ++S)
    if (static_cast<std::size_t>(std::popcount(S)) == i) out.push_back(S);
  return out;
}

Complex koszul_complex(const QuotientRing& R) {
  const std::size_t n = R.nvars();
  const RingPtr& S = R.ambient();
  const Field& F = R.field();
  Complex c;
  c.ring = std::make_shared<QuotientRing>(R);
  std::vector<Polynomial> x;
  for (std::size_t v = 0; v < n; ++v) x.push_back(R.variable(v));
  for (std::size_t i = 1; i <= n; ++i) {
    auto src = exterior_basis(n, i);
    auto tgt = exterior_basis(n, i - 1);
    auto tidx = basis_index(tgt);
    std::vector<SparseColumn> cols(src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
      int pos = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(src[k] >> v & 1)) continue;
        Polynomial e = pos % 2 ? x[v].scale(F.neg(F.one())) : x[v];
        ++pos;
        if (!e.is_zero()) cols[k].emplace_back(tidx.at(src[k] & ~(1u << v)), std::move(e));
      }
      std::sort(cols[k].begin(), cols[k].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    c.differentials.emplace_back(GradedFreeModule{S, std::vector<int>(src.size(), static_cast<int>(i))},
                                 GradedFreeModule{S, std::vector<int>(tgt.size(), static_cast<int>(i - 1))},
                                 std::move(cols));
  }
  return c;
}

KoszulStrand::KoszulStrand(const QuotientRing& R, int i, int j)
    : R_(R),
      ring_(std::make_shared<StrandRing>(R)),
      i_(i),
      j_(j),
      E_{R.ambient(), std::vector<int>(exterior_basis(R.nvars(), i).size(), i)},
      boundaries_(R.field(), 0) {
  const int n = static_cast<int>(R.nvars());
  if (i < 0 || i > n) throw std::invalid_argument("Koszul homology degree out of range");
  ring_->prepare(std::max(j - i + 1, 0));
  space_ = strand_space(*ring_, E_, j);
  boundaries_ = Echelon(R.field(), space_.dim);
  Complex K = koszul_complex(R);
  std::vector<SparseVec> boundary_cols;
  if (i < n) boundary_cols = strand_matrix(*ring_, K.differentials[i], j);
  for (const auto& b : boundary_cols) boundaries_.insert(b);

  std::vector<SparseVec> cycles;
  if (i == 0) {
    for (std::uint32_t k = 0; k < space_.dim; ++k) cycles.push_back({{k, R.field().one()}});
  } else {
    StrandSpace below = strand_space(*ring_, K.differentials[i - 1].target(), j);
    cycles = kernel_basis(R.field(), below.dim, strand_matrix(*ring_, K.differentials[i - 1], j));
  }
  Echelon work = boundaries_;
  std::vector<SparseVec> reps;
  for (const auto& z : cycles) {
    SparseVec r = work.reduce(z);
    if (r.empty()) continue;
    work.insert_reduced(r);
    SparseVec canon = boundaries_.reduce(z);
    basis_.push_back({i, j, to_column(canon)});
    reps.push_back(std::move(canon));
  }
  boundary_count_ = static_cast<std::uint32_t>(boundary_cols.size());
  std::vector<SparseVec> solver_cols = boundary_cols;
  solver_cols.insert(solver_cols.end(), reps.begin(), reps.end());
  coords_ = std::make_unique<LinearSolver>(R.field(), space_.dim, solver_cols);
}

SparseVec KoszulStrand::to_strand(const SparseColumn& col) const { return column_to_strand(*ring_, E_, space_, col); }

SparseColumn KoszulStrand::to_column(const SparseVec& v) const { return strand_to_column(*ring_, E_, space_, v); }

bool KoszulStrand::is_cycle(const SparseColumn& col) const {
  if (i_ == 0) return true;
  Complex K = koszul_complex(R_);
  const GradedMatrix& d = K.differentials[i_ - 1];
  GradedMatrix one(GradedFreeModule{R_.ambient(), {j_}}, d.source(), {col});
  return matrix_compose(d, one, &R_).is_zero();
}

std::optional<KoszulHomologyClass> KoszulStrand::reduce(const SparseColumn& cycle) {
  if (!is_cycle(cycle)) throw std::invalid_argument("chain is not a cycle");
  SparseVec r = boundaries_.reduce(to_strand(cycle));
  if (r.empty()) return std::nullopt;
  return KoszulHomologyClass{i_, j_, to_column(r)};
}

SparseVec KoszulStrand::coordinates(const SparseColumn& cycle) {
  if (!is_cycle(cycle)) throw std::invalid_argument("chain is not a cycle");
  auto x = coords_->solve(to_strand(cycle));
  if (!x) throw std::logic_error("cycle outside boundaries plus homology basis");
  SparseVec out;
  for (auto& [k, c] : *x)
    if (k >= boundary_count_) out.emplace_back(k - boundary_count_, std::move(c));
  return out;
}

std::size_t KoszulStrand::span_rank(const std::vector<SparseColumn>& cycles) {
  Echelon work = boundaries_;
  std::size_t before = work.rank();
  for (const auto& c : cycles) work.insert(to_strand(c));
  return work.rank() - before;
}

std::vector<KoszulHomologyClass> koszul_homology(const QuotientRing& R, int i, int up_to_degree) {
  std::vector<KoszulHomologyClass> out;
  int last = up_to_degree;
  if (auto top = R.top_degree()) last = std::min(last, i + *top);
  for (int j = i; j <= last; ++j) {
    KoszulStrand strand(R, i, j);
    out.insert(out.end(), strand.basis().begin(), strand.basis().end());
  }
  return out;
}

SparseColumn exterior_product(const SparseColumn& a, int ia, const SparseColumn& b, int ib, const QuotientRing& R) {
  const std::size_t n = R.nvars();
  SparseColumn out;
  if (ia + ib > static_cast<int>(n)) return out;
  auto A = exterior_basis(n, ia);
  auto B = exterior_basis(n, ib);
  auto C = basis_index(exterior_basis(n, ia + ib));
  std::map<std::uint32_t, Polynomial> acc;
  for (const auto& [s, p] : a)
    for (const auto& [t, q] : b) {
      if (A[s] & B[t]) continue;
      Polynomial prod = R.normal_form(p * q);
      if (exterior_sign(A[s], B[t]) < 0) prod = -prod;
      std::uint32_t k = C.at(A[s] | B[t]);
      auto it = acc.find(k);
      if (it == acc.end())
        acc.emplace(k, std::move(prod));
      else
        it->second = it->second + prod;
    }
  for (auto& [k, p] : acc)
    if (!p.is_zero()) out.emplace_back(k, std::move(p));
  return out;
}

std::optional<KoszulHomologyClass> homology_product(const KoszulHomologyClass& a, const KoszulHomologyClass& b,
                                                    const QuotientRing& R) {
  if (a.i + b.i > static_cast<int>(R.nvars())) return std::nullopt;
  SparseColumn prod = exterior_product(a.representative, a.i, b.representative, b.i, R);
  if (prod.empty()) return std::nullopt;
  KoszulStrand strand(R, a.i + b.i, a.j + b.j);
  return strand.reduce(prod);
}

Resolution taylor_complex(const Ideal& monomial_ideal, std::size_t generator_limit) {
  if (!monomial_ideal.is_monomial()) throw std::invalid_argument("Taylor complex needs a monomial ideal");
  const std::size_t g = monomial_ideal.size();
  if (g > generator_limit)
    throw std::invalid_argument("Taylor complex limited to " + std::to_string(generator_limit) + " generators");
  const RingPtr& S = monomial_ideal.ring();
  const Field& F = S->field();
  std::vector<Monomial> gens;
  for (const auto& p : monomial_ideal.generators()) gens.push_back(p.lead().mono);
  auto lcm_of = [&](std::uint32_t mask) {
    Monomial l;
    for (std::size_t k = 0; k < g; ++k)
      if (mask >> k & 1) l = l.lcm(gens[k]);
    return l;
  };

  Resolution res;
  res.ring = std::make_shared<QuotientRing>(S);
  res.module = ModuleKind::Ring;
  res.f0 = GradedFreeModule{S, {0}};
  res.hmax = static_cast<int>(g);
  res.complete = true;
  std::vector<std::uint32_t> prev = {0};
  for (std::size_t i = 1; i <= g; ++i) {
    auto cur = exterior_basis(g, i);
    auto pidx = basis_index(prev);
    GradedFreeModule source{S, {}};
    GradedFreeModule target{S, {}};
    for (auto T : prev) target.twists.push_back(lcm_of(T).degree());
    std::vector<SparseColumn> cols;
    for (auto T : cur) {
      Monomial l = lcm_of(T);
      source.twists.push_back(l.degree());
      SparseColumn col;
      int pos = 0;
      for (std::size_t k = 0; k < g; ++k) {
        if (!(T >> k & 1)) continue;
        std::uint32_t face = T & ~(1u << k);
        Coeff c = pos % 2 ? F.neg(F.one()) : F.one();
        ++pos;
        col.emplace_back(pidx.at(face), Polynomial::monomial(S, l.div(lcm_of(face)), c));
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      cols.push_back(std::move(col));
    }
    res.differentials.emplace_back(std::move(source), std::move(target), std::move(cols));
    prev = std::move(cur);
  }
  res.minimal = std::all_of(res.differentials.begin(), res.differentials.end(),
                            [](const GradedMatrix& d) { return d.is_minimal(); });
  return res;
}

std::map<std::pair<int, int>, std::size_t> lift_comparison(const Resolution& resQ, const Resolution& resR) {
  const QuotientRing& R = *resR.ring;
  const Field& F = R.field();
  if (resQ.f0.rank() != 1 || resR.f0.rank() != 1) throw std::invalid_argument("comparison maps need resolutions of k");
  StrandRing ring(R);
  const RingPtr& S = R.ambient();
  std::map<std::pair<int, int>, std::size_t> ranks;
  ranks[{0, 0}] = 1;

  GradedMatrix alpha = GradedMatrix::identity(GradedFreeModule{S, {0}});
  const int top = static_cast<int>(std::min(resQ.differentials.size(), resR.differentials.size()));
  for (int i = 1; i <= top; ++i) {
    const GradedMatrix& dQ = resQ.differentials[i - 1];
    const GradedMatrix& dR = resR.differentials[i - 1];
    GradedMatrix target_cols = matrix_compose(alpha, dQ, &R);
    int jmax = dQ.source().max_twist();
    ring.prepare(std::max(jmax - std::min(dR.target().min_twist(), dR.source().min_twist()), 0));
    std::map<int, std::unique_ptr<LinearSolver>> solvers;
    std::vector<SparseColumn> cols(dQ.cols());
    for (std::size_t e = 0; e < dQ.cols(); ++e) {
      int j = dQ.source().twists[e];
      auto& solver = solvers[j];
      if (!solver) solver = std::make_unique<LinearSolver>(F, strand_space(ring, dR.target(), j).dim, strand_matrix(ring, dR, j));
      StrandSpace below = strand_space(ring, dR.target(), j);
      auto x = solver->solve(column_to_strand(ring, dR.target(), below, target_cols.column(e)));
      if (!x) throw LiftingError("comparison map does not lift at homological degree " + std::to_string(i));
      cols[e] = strand_to_column(ring, dR.source(), strand_space(ring, dR.source(), j), *x);
    }
    alpha = GradedMatrix(dQ.source(), dR.source(), std::move(cols));

    std::map<int, std::vector<SparseVec>> constant_parts;
    for (std::size_t e = 0; e < alpha.cols(); ++e) {
      int j = alpha.source().twists[e];
      SparseVec v;
      for (const auto& [u, p] : alpha.column(e))
        if (alpha.target().twists[u] == j) v.emplace_back(u, p.constant_term());
      constant_parts[j].push_back(std::move(v));
    }
    for (auto& [j, vs] : constant_parts) ranks[{i, j}] = span_rank(F, alpha.target().rank(), vs);
  }
  return ranks;
}

}  // namespace koszul
