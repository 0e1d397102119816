#include "koszul/graded_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "koszul/groebner.hpp"

namespace koszul {

int GradedFreeModule::max_twist() const {
  return twists.empty() ? 0 : *std::max_element(twists.begin(), twists.end());
}

int GradedFreeModule::min_twist() const {
  return twists.empty() ? 0 : *std::min_element(twists.begin(), twists.end());
}

GradedMatrix::GradedMatrix(GradedFreeModule source, GradedFreeModule target)
    : source_(std::move(source)), target_(std::move(target)), cols_(source_.rank()) {}

GradedMatrix::GradedMatrix(GradedFreeModule source, GradedFreeModule target, std::vector<SparseColumn> columns)
    : source_(std::move(source)), target_(std::move(target)), cols_(std::move(columns)) {
  if (cols_.size() != source_.rank()) throw ModuleMismatch("column count does not match source rank");
  for (auto& col : cols_) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::erase_if(col, [](const auto& e) { return e.second.is_zero(); });
    for (std::size_t k = 1; k < col.size(); ++k)
      if (col[k].first == col[k - 1].first) throw ModuleMismatch("repeated row in sparse column");
    for (const auto& [u, p] : col)
      if (u >= target_.rank()) throw ModuleMismatch("row index out of range");
  }
  if (!is_degree_respecting()) throw ModuleMismatch("matrix entries do not respect the grading");
}

GradedMatrix GradedMatrix::identity(const GradedFreeModule& m) {
  GradedMatrix id(m, m);
  for (std::size_t u = 0; u < m.rank(); ++u)
    id.cols_[u].push_back({static_cast<std::uint32_t>(u), Polynomial::constant(m.ring, m.ring->field().one())});
  return id;
}

GradedMatrix GradedMatrix::row(const RingPtr& ring, const std::vector<Polynomial>& entries, int base_twist) {
  GradedFreeModule target{ring, {base_twist}};
  GradedFreeModule source{ring, {}};
  std::vector<SparseColumn> cols;
  for (const auto& f : entries) {
    if (!f.is_zero() && !f.is_homogeneous()) throw ModuleMismatch("row entry is not homogeneous");
    source.twists.push_back(base_twist + std::max(f.degree(), 0));
    SparseColumn col;
    if (!f.is_zero()) col.push_back({0u, f.to_ring(ring)});
    cols.push_back(std::move(col));
  }
  return GradedMatrix(std::move(source), std::move(target), std::move(cols));
}

Polynomial GradedMatrix::entry(std::size_t u, std::size_t v) const {
  for (const auto& [r, p] : cols_.at(v))
    if (r == u) return p;
  return Polynomial(target_.ring);
}

void GradedMatrix::set_entry(std::size_t u, std::size_t v, Polynomial p) {
  auto& col = cols_.at(v);
  auto it = std::lower_bound(col.begin(), col.end(), u, [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != col.end() && it->first == u) {
    if (p.is_zero())
      col.erase(it);
    else
      it->second = std::move(p);
  } else if (!p.is_zero()) {
    col.insert(it, {static_cast<std::uint32_t>(u), std::move(p)});
  }
}

bool GradedMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseColumn& c) { return c.empty(); });
}

bool GradedMatrix::is_degree_respecting() const {
  for (std::size_t v = 0; v < cols_.size(); ++v)
    for (const auto& [u, p] : cols_[v]) {
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) return false;
      if (p.degree() != source_.twists[v] - target_.twists[u]) return false;
    }
  return true;
}

bool GradedMatrix::is_minimal() const {
  for (const auto& col : cols_)
    for (const auto& [u, p] : col)
      if (!p.constant_term().is_zero()) return false;
  return true;
}

std::string GradedMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t u = 0; u < rows(); ++u) {
    os << "[";
    for (std::size_t v = 0; v < cols(); ++v) os << (v ? ", " : " ") << entry(u, v).to_string();
    os << " ]\n";
  }
  return os.str();
}

GradedMatrix matrix_compose(const GradedMatrix& f, const GradedMatrix& g, const QuotientRing* over) {
  if (!(f.source().twists == g.target().twists)) throw ModuleMismatch("compose: source of f differs from target of g");
  std::vector<SparseColumn> cols(g.cols());
  for (std::size_t v = 0; v < g.cols(); ++v) {
    std::map<std::uint32_t, Polynomial> acc;
    for (const auto& [w, gp] : g.column(v))
      for (const auto& [u, fp] : f.column(w)) {
        Polynomial prod = fp * gp;
        auto it = acc.find(u);
        if (it == acc.end())
          acc.emplace(u, std::move(prod));
        else
          it->second = it->second + prod;
      }
    for (auto& [u, p] : acc) {
      Polynomial r = over ? over->normal_form(p) : std::move(p);
      if (!r.is_zero()) cols[v].push_back({u, std::move(r)});
    }
  }
  return GradedMatrix(g.source(), f.target(), std::move(cols));
}

}  // namespace koszul
