#include "koszul/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace koszul {

std::string status_name(Status s) {
  switch (s) {
    case Status::Verified: return "Verified";
    case Status::VerifiedAtCutoff: return "VerifiedAtCutoff";
    case Status::Inconclusive: return "Inconclusive";
    case Status::Refuted: return "Refuted";
  }
  return "?";
}

Status combine(Status a, Status b) {
  auto rank = [](Status s) {
    switch (s) {
      case Status::Refuted: return 0;
      case Status::Inconclusive: return 1;
      case Status::VerifiedAtCutoff: return 2;
      case Status::Verified: return 3;
    }
    return 0;
  };
  return rank(a) <= rank(b) ? a : b;
}

std::string exactness_name(Exactness e) { return e == Exactness::Exact ? "exact" : "lower-bound-at-cutoff"; }

std::string TaggedInt::to_string() const {
  std::string v = value ? std::to_string(*value) : "-inf";
  return v + " [" + exactness_name(tag) + "]";
}

std::string TaggedRational::to_string() const {
  std::string v = value ? value->get_str() : "undefined";
  std::string s = v + " [" + exactness_name(tag);
  if (tag == Exactness::LowerBoundAtCutoff) s += ", hmax=" + std::to_string(cutoff);
  return s + "]";
}

namespace {

int last_index(const BettiTable& t) { return t.complete ? std::max(t.last_column(), 0) : t.hmax; }

Exactness tag_of(const BettiTable& t) { return t.complete ? Exactness::Exact : Exactness::LowerBoundAtCutoff; }

}  // namespace

std::optional<int> top_degree(const BettiTable& t, int i) {
  if (i < 0) throw std::out_of_range("negative homological degree");
  if (!t.complete && i > t.hmax)
    throw std::out_of_range("t_" + std::to_string(i) + " lies beyond the cutoff " + std::to_string(t.hmax));
  std::optional<int> top;
  for (const auto& [key, v] : t.entries)
    if (key.first == i && v) top = top ? std::max(*top, key.second) : key.second;
  return top;
}

TaggedInt regularity(const BettiTable& t) {
  TaggedInt r;
  r.tag = tag_of(t);
  for (int i = 0; i <= last_index(t); ++i)
    if (auto ti = top_degree(t, i)) r.value = r.value ? std::max(*r.value, *ti - i) : *ti - i;
  return r;
}

TaggedRational slope(const BettiTable& t) {
  auto t0 = top_degree(t, 0);
  if (!t0) throw std::invalid_argument("slope of the zero module");
  TaggedRational s;
  s.tag = tag_of(t);
  s.cutoff = t.hmax;
  for (int i = 1; i <= last_index(t); ++i)
    if (auto ti = top_degree(t, i)) {
      mpq_class q(*ti - *t0, i);
      q.canonicalize();
      if (!s.value || q > *s.value) s.value = q;
    }
  return s;
}

TaggedInt projective_dimension(const BettiTable& t) {
  TaggedInt pd;
  if (t.complete) {
    pd.value = t.last_column();
  } else {
    pd.value = t.hmax;
    pd.tag = Exactness::LowerBoundAtCutoff;
  }
  return pd;
}

TaggedRational rate_from_k_table(const BettiTable& k_table, std::vector<std::pair<int, mpq_class>>* terms) {
  TaggedRational r;
  r.tag = tag_of(k_table);
  r.cutoff = k_table.hmax;
  for (int i = 2; i <= last_index(k_table); ++i) {
    auto ti = top_degree(k_table, i);
    if (!ti) continue;
    mpq_class q(*ti - 1, i - 1);
    q.canonicalize();
    if (terms) terms->emplace_back(i, q);
    if (!r.value || q > *r.value) r.value = q;
  }
  return r;
}

RateReport rate_of_algebra(const QuotientRing& R, int hmax, const ResolutionOptions& opts) {
  ResolutionOptions o = opts;
  o.hmax = hmax;
  RateReport rep;
  rep.k_table = BettiTable::from_resolution(quotient_resolution(ModuleKind::ResidueField, R, o));
  rep.rate = rate_from_k_table(rep.k_table, &rep.terms);
  return rep;
}

TaggedRational rate_via_augmentation(const QuotientRing& R, int hmax, const ResolutionOptions& opts) {
  ResolutionOptions o = opts;
  o.hmax = std::max(hmax - 1, 0);
  BettiTable t = BettiTable::from_resolution(quotient_resolution(ModuleKind::Augmentation, R, o));
  if (t.entries.empty()) return TaggedRational{std::nullopt, Exactness::Exact, hmax};
  TaggedRational s = slope(t);
  s.cutoff = hmax;
  return s;
}

Verdict koszul_probe(const BettiTable& k_table) {
  Verdict v;
  v.check = "koszul-probe";
  v.subject = k_table.ring;
  v.cutoffs.emplace_back("hmax", k_table.hmax);
  for (const auto& [key, n] : k_table.entries)
    if (n && key.second != key.first) {
      v.status = Status::Refuted;
      v.witness = Witness{key.first, key.second, "beta=" + std::to_string(n)};
      v.detail = "t_" + std::to_string(key.first) + " >= " + std::to_string(key.second) + " > " +
                 std::to_string(key.first);
      return v;
    }
  v.status = k_table.complete ? Status::Verified : Status::VerifiedAtCutoff;
  v.detail = "t_i(k) = i for all computed i";
  return v;
}

Verdict koszul_probe(const QuotientRing& R, int hmax, const ResolutionOptions& opts) {
  ResolutionOptions o = opts;
  o.hmax = hmax;
  return koszul_probe(BettiTable::from_resolution(quotient_resolution(ModuleKind::ResidueField, R, o)));
}

InvariantReport invariant_report(const BettiTable& t) {
  InvariantReport r;
  r.ring = t.ring;
  r.module = t.module;
  r.table = t;
  for (int i = 0; i <= last_index(t); ++i) r.top_degrees.push_back(TaggedInt{top_degree(t, i), Exactness::Exact});
  r.reg = regularity(t);
  if (top_degree(t, 0)) r.slope = slope(t);
  r.pd = projective_dimension(t);
  return r;
}

std::string InvariantReport::to_text() const {
  std::ostringstream os;
  os << "ring: " << ring << "\nmodule: " << module << "\n" << table.to_text();
  for (std::size_t i = 0; i < top_degrees.size(); ++i) os << "t_" << i << " = " << top_degrees[i].to_string() << "\n";
  os << "reg = " << reg.to_string() << "\n";
  os << "slope = " << slope.to_string() << "\n";
  os << "pd = " << pd.to_string() << "\n";
  if (rate) os << "Rate = " << rate->to_string() << "\n";
  return os.str();
}

nlohmann::json tagged_json(const TaggedInt& v) {
  nlohmann::json j;
  if (v.value)
    j["value"] = *v.value;
  else
    j["value"] = "-inf";
  j["tag"] = exactness_name(v.tag);
  return j;
}

nlohmann::json tagged_json(const TaggedRational& v) {
  nlohmann::json j;
  if (v.value)
    j["value"] = v.value->get_str();
  else
    j["value"] = nullptr;
  j["tag"] = exactness_name(v.tag);
  if (v.tag == Exactness::LowerBoundAtCutoff) j["hmax"] = v.cutoff;
  return j;
}

nlohmann::json betti_json(const BettiTable& t) {
  nlohmann::json j;
  j["ring"] = t.ring;
  j["module"] = t.module;
  j["hmax"] = t.hmax;
  j["complete"] = t.complete;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, v] : t.entries) entries.push_back({key.first, key.second, v});
  j["entries"] = entries;
  return j;
}

nlohmann::json InvariantReport::to_json() const {
  nlohmann::json j;
  j["betti"] = betti_json(table);
  nlohmann::json tops = nlohmann::json::array();
  for (const auto& t : top_degrees) tops.push_back(tagged_json(t));
  j["top_degrees"] = tops;
  j["reg"] = tagged_json(reg);
  j["slope"] = tagged_json(slope);
  j["pd"] = tagged_json(pd);
  if (rate) j["rate"] = tagged_json(*rate);
  return j;
}

}  // namespace koszul
