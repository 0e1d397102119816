#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "koszul/graded_matrix.hpp"
#include "koszul/groebner.hpp"
#include "koszul/strand.hpp"

namespace koszul {

using QuotientPtr = std::shared_ptr<const QuotientRing>;

enum class ModuleKind { ResidueField, Ring, Augmentation, Presented };

std::string module_kind_name(ModuleKind kind);

/// Finite segment F_0 <- F_1 <- ... <- F_hmax of a graded free resolution.
/// differentials[i-1] is d_i : F_i -> F_{i-1}.
struct Resolution {
  QuotientPtr ring;
  ModuleKind module = ModuleKind::Presented;
  std::vector<GradedMatrix> differentials;
  GradedFreeModule f0;
  bool minimal = true;
  int hmax = 0;
  /// A zero syzygy module was reached, so the resolution is finite.
  bool complete = false;

  /// F_i; empty for i beyond the computed range.
  GradedFreeModule free_module(int i) const;
  /// Index of the last nonzero free module.
  int length() const;
};

struct ResolutionOptions {
  int hmax = 5;
  /// Largest allowed number of generators of one syzygy module; 0 disables.
  std::size_t generator_budget = 5000;
  /// Largest internal degree a syzygy strand may reach; 0 disables.
  int degree_guard = 0;
  Execution exec = Execution::Parallel;
};

/// Removes pairs (row, column) joined by a unit entry, keeping the cokernel.
GradedMatrix prune_units(const GradedMatrix& m, const QuotientRing& R);

/// Minimal resolution of coker(presentation) over the polynomial ring `over`,
/// computed until it stops.
Resolution minimal_resolution(const GradedMatrix& presentation, const RingPtr& over,
                              const ResolutionOptions& opts = {});

/// R = S/I as a module over its ambient polynomial ring S.
Resolution resolve_over_ambient(const QuotientRing& R, const ResolutionOptions& opts = {});

/// Minimal resolution over R through homological degree opts.hmax of k, R₊,
/// or coker(presentation). Throws BudgetExceeded when a syzygy module
/// outgrows opts.generator_budget.
Resolution quotient_resolution(ModuleKind kind, const QuotientRing& R, const ResolutionOptions& opts = {},
                               const GradedMatrix* presentation = nullptr);

/// Free modules and maps of a complex, differentials[i-1] : C_i -> C_{i-1}.
struct Complex {
  QuotientPtr ring;
  std::vector<GradedMatrix> differentials;
};

/// Subsets of {0..n-1} of size i as bit masks, in increasing numeric order.
std::vector<std::uint32_t> exterior_basis(std::size_t n, std::size_t i);

/// E ⊗ R for the exterior algebra E on the ambient variables.
Complex koszul_complex(const QuotientRing& R);

/// A homology class of E ⊗ R in bidegree (i, j). The representative is a
/// cycle with rows indexed by exterior_basis(n, i); for classes produced by
/// this module it is reduced against an echelon basis of the boundaries.
struct KoszulHomologyClass {
  int i = 0;
  int j = 0;
  SparseColumn representative;
};

/// Cycles and boundaries of one strand (i, j) of E ⊗ R.
class KoszulStrand {
 public:
  KoszulStrand(const QuotientRing& R, int i, int j);

  int i() const { return i_; }
  int j() const { return j_; }
  /// dim Z - dim B.
  std::size_t rank() const { return basis_.size(); }
  const std::vector<KoszulHomologyClass>& basis() const { return basis_; }

  /// Canonical representative of the class of a cycle, or nothing if it is
  /// a boundary. Throws std::invalid_argument for non-cycles.
  std::optional<KoszulHomologyClass> reduce(const SparseColumn& cycle);
  /// Coordinates in basis().
  SparseVec coordinates(const SparseColumn& cycle);
  /// Rank of the span of the given cycles in homology.
  std::size_t span_rank(const std::vector<SparseColumn>& cycles);

 private:
  SparseVec to_strand(const SparseColumn& col) const;
  SparseColumn to_column(const SparseVec& v) const;
  bool is_cycle(const SparseColumn& col) const;

  QuotientRing R_;
  std::shared_ptr<StrandRing> ring_;
  int i_, j_;
  GradedFreeModule E_;
  StrandSpace space_;
  Echelon boundaries_;
  std::unique_ptr<LinearSolver> coords_;
  std::uint32_t boundary_count_ = 0;
  std::vector<KoszulHomologyClass> basis_;
};

/// Bases of H_i(E ⊗ R)_j for j ≤ up_to_degree, in increasing j.
std::vector<KoszulHomologyClass> koszul_homology(const QuotientRing& R, int i, int up_to_degree);

/// Product of representatives in E ⊗ R, reduced to the canonical
/// representative of its class; nothing when the class is zero.
std::optional<KoszulHomologyClass> homology_product(const KoszulHomologyClass& a, const KoszulHomologyClass& b,
                                                    const QuotientRing& R);
/// Exterior product of two chains of E ⊗ R, normal forms in R.
SparseColumn exterior_product(const SparseColumn& a, int ia, const SparseColumn& b, int ib, const QuotientRing& R);

inline constexpr std::size_t kTaylorGeneratorLimit = 14;

/// Taylor resolution of S/I for a monomial ideal I, on subsets of the given
/// generators with lcm twists.
Resolution taylor_complex(const Ideal& monomial_ideal, std::size_t generator_limit = kTaylorGeneratorLimit);

/// Rank of Tor_i^φ(k,k)_j for φ : Q -> R = Q/J, from a chain map lifted from
/// resQ (a resolution of k over Q) to resR (of k over R). Keys are (i, j).
std::map<std::pair<int, int>, std::size_t> lift_comparison(const Resolution& resQ, const Resolution& resR);

/// Raised when a comparison map cannot be lifted; this signals an engine bug.
class LiftingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace koszul
