#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "koszul/betti.hpp"
#include "koszul/verdict.hpp"
#include "json.hpp"

namespace koszul {

enum class Exactness { Exact, LowerBoundAtCutoff };

std::string exactness_name(Exactness e);

/// An integer invariant; no value stands for -infinity (empty sup).
struct TaggedInt {
  std::optional<int> value;
  Exactness tag = Exactness::Exact;
  std::string to_string() const;
};

/// A rational invariant; no value means the defining sup is empty.
struct TaggedRational {
  std::optional<mpq_class> value;
  Exactness tag = Exactness::Exact;
  int cutoff = 0;
  std::string to_string() const;
};

/// t_i: the largest j with β_{i,j} != 0. Throws std::out_of_range for i
/// beyond the cutoff of an incomplete table.
std::optional<int> top_degree(const BettiTable& t, int i);
TaggedInt regularity(const BettiTable& t);
/// sup_{i>=1} (t_i - t_0)/i. Throws std::invalid_argument for the zero module.
TaggedRational slope(const BettiTable& t);
TaggedInt projective_dimension(const BettiTable& t);

struct RateReport {
  TaggedRational rate;
  /// (i, (t_i(k) - 1)/(i - 1)) for every computed i >= 2 with t_i finite.
  std::vector<std::pair<int, mpq_class>> terms;
  BettiTable k_table;
};

/// Rate R = slope_R R₊ from the resolution of k: max over 2 <= i <= hmax of
/// (t_i(k) - 1)/(i - 1).
RateReport rate_of_algebra(const QuotientRing& R, int hmax, const ResolutionOptions& opts = {});
/// Same quantity read off a resolution of R₊ itself.
TaggedRational rate_via_augmentation(const QuotientRing& R, int hmax, const ResolutionOptions& opts = {});
/// Rate from an already computed table of k over R.
TaggedRational rate_from_k_table(const BettiTable& k_table, std::vector<std::pair<int, mpq_class>>* terms = nullptr);

/// Verified(AtCutoff) when t_i(k) = i for every computed i, else Refuted
/// with the first strand (i, j > i).
Verdict koszul_probe(const QuotientRing& R, int hmax, const ResolutionOptions& opts = {});
Verdict koszul_probe(const BettiTable& k_table);

struct InvariantReport {
  std::string ring;
  std::string module;
  std::vector<TaggedInt> top_degrees;
  TaggedInt reg;
  TaggedRational slope;
  TaggedInt pd;
  std::optional<TaggedRational> rate;
  BettiTable table;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

InvariantReport invariant_report(const BettiTable& t);

nlohmann::json betti_json(const BettiTable& t);
nlohmann::json tagged_json(const TaggedInt& v);
nlohmann::json tagged_json(const TaggedRational& v);

}  // namespace koszul
