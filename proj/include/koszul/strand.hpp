#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "koszul/graded_matrix.hpp"
#include "koszul/groebner.hpp"
#include "koszul/linalg.hpp"

namespace koszul {

/// Parallel kernels run strands of different internal degree on separate
/// OpenMP threads; Serial is the reference path used by tests and benchmarks.
enum class Execution { Serial, Parallel };

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graded pieces of a quotient ring R = S/I in the basis of standard
/// monomials, with cached normal forms of monomials.
///
/// Safe for concurrent use once prepare() has covered every degree touched.
class StrandRing {
 public:
  explicit StrandRing(const QuotientRing& R);

  const QuotientRing& ring() const { return R_; }
  const Field& field() const { return R_.field(); }

  /// Computes standard monomial tables for degrees 0..d. Not thread safe.
  void prepare(int d);
  int prepared_degree() const { return static_cast<int>(std_.size()) - 1; }

  const std::vector<Monomial>& standard(int d) const;
  std::size_t dim(int d) const { return d < 0 ? 0 : standard(d).size(); }
  /// Index of a standard monomial of its degree.
  std::uint32_t index(const Monomial& m) const;

  /// Coordinates of the normal form of m over standard(deg m).
  const SparseVec& monomial_nf(const Monomial& m) const;

 private:
  struct DegreeCache {
    std::mutex lock;
    std::unordered_map<Monomial, SparseVec, MonomialHash> nf;
  };

  QuotientRing R_;
  std::vector<std::vector<Monomial>> std_;
  std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index_;
  std::vector<std::unique_ptr<DegreeCache>> cache_;
};

/// The degree-j piece of a graded free R-module F: basis pairs (u, σ) with σ
/// standard of degree j - twist_u, ordered by u then by σ.
struct StrandSpace {
  int degree = 0;
  std::vector<std::uint32_t> offset;
  std::size_t dim = 0;
};

StrandSpace strand_space(const StrandRing& ring, const GradedFreeModule& F, int j);

/// Coordinates of σ·col in target strand `space` (col a column of a matrix
/// whose target has the given twists).
SparseVec strand_image(const StrandRing& ring, const GradedFreeModule& target, const StrandSpace& space,
                       const Monomial& sigma, const SparseColumn& col);

/// The linear map m_j : (source)_j -> (target)_j as columns.
std::vector<SparseVec> strand_matrix(const StrandRing& ring, const GradedMatrix& m, int j);

/// Element of (F)_j as a column of polynomials.
SparseColumn strand_to_column(const StrandRing& ring, const GradedFreeModule& F, const StrandSpace& space,
                              const SparseVec& v);
/// Column of normal-form polynomials as coordinates in (F)_j.
SparseVec column_to_strand(const StrandRing& ring, const GradedFreeModule& F, const StrandSpace& space,
                           const SparseColumn& col);

/// Minimal generators of ker(m) over R in degrees at most `degree_bound`,
/// returned as the columns of a matrix into m.source(). `budget` bounds the
/// number of generators (0 means unbounded) and raises BudgetExceeded.
GradedMatrix strand_syzygies(const GradedMatrix& m, StrandRing& ring, int degree_bound, Execution exec,
                             std::size_t budget = 0);
/// One strand at a time, in order, with no shared scratch.
GradedMatrix strand_syzygies_serial(const GradedMatrix& m, StrandRing& ring, int degree_bound,
                                    std::size_t budget = 0);

/// A minimal generating set of the image of m: a subset of its columns,
/// chosen in column order within each degree.
GradedMatrix minimal_image_generators(const GradedMatrix& m, StrandRing& ring, Execution exec);

}  // namespace koszul
