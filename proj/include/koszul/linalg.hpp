#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

/// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, Coeff>>;

/// Incrementally built row echelon form of a subspace of K^dim. Each stored
/// row has a distinct leading index and leading coefficient one.
///
/// Not thread safe: reduction uses a dense scratch row owned by the object.
class Echelon {
 public:
  Echelon(const Field& field, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }

  /// Remainder of v after eliminating every pivot position.
  SparseVec reduce(const SparseVec& v);
  /// Adds v to the span; returns false if v was already in it.
  bool insert(const SparseVec& v);
  /// Adds an already reduced nonzero vector.
  void insert_reduced(SparseVec v);
  bool contains(const SparseVec& v) { return reduce(v).empty(); }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<SparseVec> rows_;
  std::vector<Coeff> scratch_;
};

/// Solves A x = b for a fixed A given by columns, reusing one elimination
/// across right-hand sides.
class LinearSolver {
 public:
  LinearSolver(const Field& field, std::size_t rows, const std::vector<SparseVec>& columns);

  std::size_t rank() const { return rank_; }
  /// Some x with A x = b, or nothing when b is outside the column span.
  std::optional<SparseVec> solve(const SparseVec& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t rank_ = 0;
  Echelon ech_;
};

/// Kernel of the linear map sending basis vector c to columns[c]
/// (vectors in K^rows). The basis returned is triangular: vector k has its
/// last nonzero at a distinct index.
std::vector<SparseVec> kernel_basis(const Field& field, std::size_t rows, const std::vector<SparseVec>& columns);

/// Rank of the span of the given vectors in K^dim.
std::size_t span_rank(const Field& field, std::size_t dim, const std::vector<SparseVec>& vectors);

/// Sparse a*x + b*y.
SparseVec sparse_combine(const Field& field, const Coeff& a, const SparseVec& x, const Coeff& b, const SparseVec& y);
SparseVec sparse_scale(const Field& field, const Coeff& a, const SparseVec& x);

}  // namespace koszul
