#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "koszul/invariants.hpp"
#include "koszul/verdict.hpp"

namespace koszul {

/// 6 variables x1..x6 over the given characteristic.
RingPtr roos_ring(std::uint32_t characteristic = 0);
/// The 13 quadrics of the Roos family: six squares, five consecutive
/// products, x1x3 + a x3x6 - x4x6 and x1x4 + x3x6 + (a-2) x4x6.
Ideal roos_algebra(const RingPtr& ring, int a);

struct DeltaBudget {
  std::size_t max_permutations = 720;
  std::size_t random_weight_samples = 8;
  std::uint64_t seed = 1;
};

struct DeltaResult {
  /// Smallest max degree of a reduced Gröbner basis over the sampled orders.
  int value = 0;
  TermOrder order;
  std::size_t orders_tried = 0;
  bool g_quadratic() const { return value == 2; }
};

/// Upper bound for Δ over coordinate permutations (grevlex) and seeded
/// random positive weight orders. Stops early once the generator degree
/// lower bound is met.
/// Throws std::invalid_argument for an empty budget.
DeltaResult delta_upper_bound(const Ideal& I, const DeltaBudget& budget = {}, int lower_bound = 2);

/// R = Q/J with Q = S/I_Q.
struct Instance {
  std::string name;
  QuotientRing Q;
  std::vector<Polynomial> J;
  QuotientRing R;
};

Instance make_instance(std::string name, const QuotientRing& Q, std::vector<Polynomial> J);
/// Q is the ambient polynomial ring of `ideal`.
Instance make_instance(std::string name, const Ideal& ideal);

/// Cyclic module M = R/(relations); the residue field when relations are
/// the variables.
struct CyclicModule {
  std::string name;
  std::vector<Polynomial> relations;
};
CyclicModule residue_field(const RingPtr& ring);

/// Betti table of base/(relations) over base: complete when base is a
/// polynomial ring, else through hmax.
BettiTable cyclic_table(const QuotientRing& base, const std::vector<Polynomial>& relations, int hmax,
                        const ResolutionOptions& opts = {});

/// Rate of R with its certificate: exact when the k-resolution stops or
/// the observed value reaches Δ̂ - 1 (Rate + 1 <= Δ).
struct RateCertificate {
  TaggedRational rate;
  std::vector<std::pair<int, mpq_class>> terms;
  BettiTable k_table;
  std::optional<DeltaResult> delta;
  /// Δ̂ - 1 when the search ran.
  std::optional<int> upper() const { return delta ? std::optional<int>(delta->value - 1) : std::nullopt; }
  bool exact() const { return rate.tag == Exactness::Exact; }
};

RateCertificate certified_rate(const QuotientRing& R, int hmax, const DeltaBudget& budget = {},
                               const ResolutionOptions& opts = {});

struct CheckOptions {
  int hmax = 5;
  DeltaBudget delta;
  ResolutionOptions resolution;
};

std::vector<Verdict> check_main_theorem(const Instance& inst, const CheckOptions& opts = {});
Verdict check_slope_descent(const Instance& inst, const CyclicModule& M, const CheckOptions& opts = {});
Verdict check_slope_ascent(const Instance& inst, const CheckOptions& opts = {});
/// R = Q/(f) for one homogeneous f; returns the verdicts for the two parts.
std::vector<Verdict> check_hypersurface(const Instance& inst, const CyclicModule& M, const CheckOptions& opts = {});
Verdict check_extremal(const Instance& inst, const CheckOptions& opts = {});
/// Verdicts for Rate + 1 <= Δ̂, the Taylor-type bounds, and Betti numbers of R
/// dominated by those of the initial ideal, plus the binomial probe as a note.
std::vector<Verdict> check_groebner_bounds(const Instance& inst, const CheckOptions& opts,
                                           std::vector<std::string>* notes = nullptr);
Verdict check_canonical(const Instance& inst, const CheckOptions& opts = {});
/// Poincaré series of k against the closed form, slope_P R(a) = 2, and
/// the Rate window.
std::vector<Verdict> check_roos(int a, const CheckOptions& opts = {});
/// t_i <= t_1 i, strict beyond n - dim, for a monomial ideal via its
/// minimal resolution, and Taylor ranks dominating minimal ranks.
Verdict check_taylor_bounds(const Ideal& monomial_ideal);

/// Seeded random monomial ideals in at most max_vars variables.
std::vector<Ideal> random_monomial_ideals(std::size_t count, std::uint64_t seed, std::size_t max_vars = 4,
                                          std::size_t max_generators = 6, int max_degree = 3);

struct CorpusEntry {
  std::string name;
  std::string provenance;
  Ideal ideal;
};

std::vector<CorpusEntry> builtin_corpus();

struct HarnessReport {
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  std::vector<double> seconds;

  bool any_refuted() const;
  std::string to_text() const;
  nlohmann::json to_json(bool with_timings = false) const;
};

/// Every check family on every applicable corpus entry; entries run
/// concurrently and are merged in corpus order.
HarnessReport run_all_checks(const CheckOptions& opts = {}, bool parallel = true);
/// One family on R = S/I with Q = S: main, descent, ascent, hypersurface,
/// extremal, groebner, canonical, taylor, koszul.
HarnessReport run_family(const std::string& family, const Ideal& ideal, const CheckOptions& opts = {});

/// Families that check --all must cover with a Verified verdict.
const std::vector<std::string>& theorem_families();
/// Family of a check name, e.g. "main" for "main-theorem-2".
std::string family_of(const std::string& check);

nlohmann::json verdict_json(const Verdict& v);
std::string verdict_text(const Verdict& v);

}  // namespace koszul
