#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "koszul/polynomial.hpp"

namespace koszul {

/// The free module ⊕ ring(-d_u). Generator u sits in internal degree d_u.
struct GradedFreeModule {
  RingPtr ring;
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  int max_twist() const;
  int min_twist() const;

  friend bool operator==(const GradedFreeModule& a, const GradedFreeModule& b) {
    return a.twists == b.twists && (a.ring == b.ring || (a.ring && b.ring && *a.ring == *b.ring));
  }
};

/// Sparse column of a matrix: (row, entry) pairs sorted by row, nonzero entries.
using SparseColumn = std::vector<std::pair<std::uint32_t, Polynomial>>;

class ModuleMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A degree-respecting map source -> target, stored by columns. Column v is
/// the image of generator v of the source.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(GradedFreeModule source, GradedFreeModule target);
  /// Validates every entry against the degree condition.
  GradedMatrix(GradedFreeModule source, GradedFreeModule target, std::vector<SparseColumn> columns);

  static GradedMatrix identity(const GradedFreeModule& m);
  /// Row matrix [f_1 ... f_r] : ⊕ ring(-deg f_v) -> ring(-base_twist).
  static GradedMatrix row(const RingPtr& ring, const std::vector<Polynomial>& entries, int base_twist = 0);

  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  const std::vector<SparseColumn>& columns() const { return cols_; }
  const SparseColumn& column(std::size_t v) const { return cols_[v]; }

  Polynomial entry(std::size_t u, std::size_t v) const;
  void set_entry(std::size_t u, std::size_t v, Polynomial p);

  bool is_zero() const;
  /// Every nonzero entry homogeneous of degree source twist - target twist.
  bool is_degree_respecting() const;
  /// No entry has a nonzero constant term.
  bool is_minimal() const;

  std::string to_string() const;

 private:
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<SparseColumn> cols_;
};

class QuotientRing;

/// f ∘ g, requires g.target == f.source. When `over` is given entries are
/// reduced to normal form in that quotient ring.
GradedMatrix matrix_compose(const GradedMatrix& f, const GradedMatrix& g, const QuotientRing* over = nullptr);

}  // namespace koszul
