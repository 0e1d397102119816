#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "koszul/graded_matrix.hpp"
#include "koszul/polynomial.hpp"

namespace koszul {

/// Reduced Gröbner basis of a homogeneous ideal: monic, auto-reduced,
/// sorted by decreasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements);

  /// Ring carrying the term order the basis was computed for.
  const RingPtr& ring() const { return ring_; }
  const TermOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Monomial>& lead_monomials() const { return leads_; }
  /// Largest degree of an element, 0 for the zero ideal.
  int max_degree() const;

  /// Index of an element whose leading monomial divides m.
  std::optional<std::size_t> find_divisor(const Monomial& m) const;
  bool is_standard(const Monomial& m) const { return !find_divisor(m).has_value(); }

  Polynomial normal_form(const Polynomial& f) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
};

/// Buchberger's algorithm with the normal selection strategy and both of
/// Buchberger's pair criteria. The result does not depend on generator order.
GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order);
GroebnerBasis buchberger(const Ideal& ideal);

/// Full reduction of f (converted to gb's term order) modulo gb.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Monomial ideal of leading terms of the reduced Gröbner basis.
Ideal initial_ideal(const Ideal& ideal, const TermOrder& order);

/// K[x]/I with I given by a reduced Gröbner basis; normal forms are the
/// canonical representatives.
class QuotientRing {
 public:
  /// The polynomial ring itself.
  explicit QuotientRing(RingPtr ambient);
  /// Gröbner basis in the ring's own term order.
  explicit QuotientRing(const Ideal& ideal);

  const RingPtr& ambient() const { return ambient_; }
  const Field& field() const { return ambient_->field(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  const Ideal& ideal() const { return ideal_; }
  const GroebnerBasis& gb() const { return gb_; }
  bool is_polynomial_ring() const { return gb_.empty(); }

  Polynomial normal_form(const Polynomial& f) const;
  Polynomial variable(std::size_t v) const;
  bool is_standard(const Monomial& m) const { return gb_.is_standard(m); }
  /// Standard monomials of degree d sorted by decreasing term order.
  std::vector<Monomial> standard_monomials(int d) const;
  /// Largest degree with a nonzero graded piece when the ring is Artinian.
  std::optional<int> top_degree() const;

  std::string describe() const;

 private:
  RingPtr ambient_;
  Ideal ideal_;
  GroebnerBasis gb_;
};

/// Polynomial in the quotient ring reduced to normal form.
Polynomial quotient_normal_form(const Polynomial& f, const QuotientRing& R);

/// Element of a free module over the ambient polynomial ring: terms
/// (monomial, component, coefficient) sorted by position-over-term.
struct ModuleTerm {
  Monomial mono;
  std::uint32_t comp;
  Coeff coeff;
};
using ModuleVector = std::vector<ModuleTerm>;

/// Gröbner basis of a graded submodule of ⊕ S(-d_u) under the
/// position-over-term order (e_0 > e_1 > ...), monomials compared in the
/// ring's order.
struct ModuleGroebnerBasis {
  RingPtr ring;
  std::vector<int> twists;
  std::vector<ModuleVector> elements;

  /// Largest internal degree of a generator or of the lcm of two leading
  /// terms on the same component. Syzygies of the original generators are
  /// generated in degrees at most this value.
  int syzygy_degree_bound = 0;
};

ModuleGroebnerBasis module_buchberger(const RingPtr& ring, const std::vector<int>& twists,
                                      std::vector<ModuleVector> generators);

/// Degree bound for the generators of ker(m) over R: computed from a module
/// Gröbner basis of im(m) + I·F in the ambient ring.
int syzygy_degree_bound(const GradedMatrix& m, const QuotientRing& R);

/// Minimal generators of the syzygy module of the columns of m over R:
/// returns s with m ∘ s = 0. The second form works over the ambient
/// polynomial ring with the given order.
GradedMatrix module_syzygies(const GradedMatrix& m, const QuotientRing& R);
GradedMatrix module_syzygies(const GradedMatrix& m, const TermOrder& order);

}  // namespace koszul
