#include "koszul/linalg.hpp"

#include <algorithm>

namespace koszul {

Echelon::Echelon(const Field& field, std::size_t dim)
    : field_(field), dim_(dim), pivot_row_(dim, -1), scratch_(dim) {}

SparseVec Echelon::reduce(const SparseVec& v) {
  if (v.empty()) return {};
  std::uint32_t lo = v.front().first;
  std::uint32_t hi = v.back().first;
  for (const auto& [k, c] : v) scratch_[k] = c;
  for (std::uint32_t k = lo; k <= hi; ++k) {
    if (scratch_[k].is_zero()) continue;
    std::int32_t r = pivot_row_[k];
    if (r < 0) continue;
    Coeff c = scratch_[k];
    for (const auto& [idx, a] : rows_[r]) {
      field_.sub_mul(scratch_[idx], c, a);
      hi = std::max(hi, idx);
    }
  }
  SparseVec out;
  for (std::uint32_t k = lo; k <= hi; ++k)
    if (!scratch_[k].is_zero()) {
      out.emplace_back(k, std::move(scratch_[k]));
      scratch_[k] = Coeff{};
    }
  return out;
}

void Echelon::insert_reduced(SparseVec v) {
  Coeff inv = field_.inv(v.front().second);
  if (!v.front().second.is_one())
    for (auto& [k, c] : v) c = field_.mul(inv, c);
  pivot_row_[v.front().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(v));
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  insert_reduced(std::move(r));
  return true;
}

LinearSolver::LinearSolver(const Field& field, std::size_t rows, const std::vector<SparseVec>& columns)
    : field_(field), rows_(rows), ech_(field, rows + columns.size()) {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    SparseVec v = columns[c];
    v.emplace_back(static_cast<std::uint32_t>(rows + c), field.one());
    SparseVec r = ech_.reduce(v);
    if (r.front().first < rows) ++rank_;
    ech_.insert_reduced(std::move(r));
  }
}

std::optional<SparseVec> LinearSolver::solve(const SparseVec& b) {
  // Reducing [b | 0] leaves [0 | -x] exactly when b = A x.
  SparseVec r = ech_.reduce(b);
  if (!r.empty() && r.front().first < rows_) return std::nullopt;
  for (auto& [k, c] : r) {
    k -= static_cast<std::uint32_t>(rows_);
    c = field_.neg(c);
  }
  return r;
}

std::vector<SparseVec> kernel_basis(const Field& field, std::size_t rows, const std::vector<SparseVec>& columns) {
  // Eliminate on [image | identity]; a vector whose image part vanishes
  // carries a kernel element in its identity part.
  const std::size_t n = columns.size();
  Echelon ech(field, rows + n);
  std::vector<SparseVec> kernel;
  for (std::size_t c = 0; c < n; ++c) {
    SparseVec v = columns[c];
    v.emplace_back(static_cast<std::uint32_t>(rows + c), field.one());
    SparseVec r = ech.reduce(v);
    if (r.front().first >= rows) {
      for (auto& [k, a] : r) k -= static_cast<std::uint32_t>(rows);
      kernel.push_back(std::move(r));
    } else {
      ech.insert_reduced(std::move(r));
    }
  }
  return kernel;
}

std::size_t span_rank(const Field& field, std::size_t dim, const std::vector<SparseVec>& vectors) {
  Echelon ech(field, dim);
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

SparseVec sparse_combine(const Field& field, const Coeff& a, const SparseVec& x, const Coeff& b, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      Coeff c = field.mul(a, x[i].second);
      if (!c.is_zero()) out.emplace_back(x[i].first, std::move(c));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      Coeff c = field.mul(b, y[j].second);
      if (!c.is_zero()) out.emplace_back(y[j].first, std::move(c));
      ++j;
    } else {
      Coeff c = field.add(field.mul(a, x[i].second), field.mul(b, y[j].second));
      if (!c.is_zero()) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const Field& field, const Coeff& a, const SparseVec& x) {
  SparseVec out;
  if (a.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& [k, c] : x) out.emplace_back(k, field.mul(a, c));
  return out;
}

}  // namespace koszul
