#include "koszul/groebner.hpp"
#include "koszul/strand.hpp"

namespace koszul {

GradedMatrix module_syzygies(const GradedMatrix& m, const QuotientRing& R) {
  int bound;
  if (auto top = R.top_degree())
    bound = m.source().max_twist() + *top;
  else
    bound = syzygy_degree_bound(m, R);
  StrandRing ring(R);
  return strand_syzygies(m, ring, bound, Execution::Parallel);
}

GradedMatrix module_syzygies(const GradedMatrix& m, const TermOrder& order) {
  return module_syzygies(m, QuotientRing(with_order(m.target().ring, order)));
}

}  // namespace koszul
