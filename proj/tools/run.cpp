#include "run.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "koszul/harness.hpp"
#include "koszul/series.hpp"

namespace koszul::cli {

namespace {

using nlohmann::json;

struct Output {
  bool structured = false;
  std::ostringstream text;
  json doc = json::object();

  std::string str() const { return structured ? doc.dump(2) + "\n" : text.str(); }
};

Ideal job_ideal(const JobSpec& s) { return Ideal(s.ring, s.generators); }

ResolutionOptions resolution_options(const JobSpec& s) {
  ResolutionOptions o;
  o.hmax = s.hmax;
  o.generator_budget = s.budget;
  o.degree_guard = s.dmax;
  return o;
}

CheckOptions check_options(const JobSpec& s) {
  CheckOptions o;
  o.hmax = s.hmax;
  o.resolution = resolution_options(s);
  o.delta = DeltaBudget{s.permutations, s.weight_samples, s.seed};
  return o;
}

json poly_list(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json series_json(const BiSeries& f) {
  json rows = json::array();
  for (int i = 0; i <= f.hmax(); ++i) {
    json row = json::array();
    for (const auto& [j, c] : f.row(i)) row.push_back({{"i", i}, {"j", j}, {"coefficient", c.get_str()}});
    rows.push_back(row);
  }
  return rows;
}

void series_text(std::ostream& os, const BiSeries& f) {
  for (int i = 0; i <= f.hmax(); ++i) os << "t^" << i << ": " << (f.row(i).empty() ? "0" : f.row_string(i)) << "\n";
}

BettiTable betti_table(const JobSpec& s, const QuotientRing& R) {
  ResolutionOptions o = resolution_options(s);
  if (s.over == "ambient") {
    if (s.module == "ring") return BettiTable::from_resolution(resolve_over_ambient(R, o), R.describe() + " over ambient", "R");
    if (s.module == "k") {
      std::vector<Polynomial> vars;
      for (std::size_t v = 0; v < R.nvars(); ++v) vars.push_back(Polynomial::variable(R.ambient(), v));
      BettiTable t = cyclic_table(QuotientRing(R.ambient()), vars, s.hmax, o);
      t.module = "k";
      return t;
    }
    throw std::invalid_argument("over ambient the module is ring or k");
  }
  ModuleKind kind = s.module == "k" ? ModuleKind::ResidueField
                    : s.module == "augmentation" ? ModuleKind::Augmentation
                                                 : ModuleKind::Ring;
  return BettiTable::from_resolution(quotient_resolution(kind, R, o));
}

int report_verdicts(Output& out, const HarnessReport& r, bool timings) {
  std::map<Status, int> counts;
  for (const auto& v : r.verdicts) ++counts[v.status];
  if (out.structured) {
    out.doc = r.to_json(timings);
    json c = json::object();
    for (const auto& [s, n] : counts) c[status_name(s)] = n;
    out.doc["summary"] = c;
  } else {
    out.text << r.to_text();
    if (timings)
      for (std::size_t k = 0; k < r.verdicts.size(); ++k)
        out.text << "time " << r.verdicts[k].check << " " << r.verdicts[k].subject << ": " << r.seconds[k] << " s\n";
    out.text << "summary:";
    for (const auto& [s, n] : counts) out.text << " " << status_name(s) << "=" << n;
    out.text << "\n";
  }
  return r.any_refuted() ? kRefuted : kOk;
}

int dispatch(const JobSpec& s, Output& out) {
  const std::string& c = s.command;
  if (c == "roos") {
    RingPtr S = roos_ring(s.has_ring ? s.characteristic : 0);
    QuotientRing R(roos_algebra(S, s.a));
    ResolutionOptions o = resolution_options(s);
    BettiTable k = BettiTable::from_resolution(quotient_resolution(ModuleKind::ResidueField, R, o));
    BiSeries f = poincare_from_betti(k);
    std::optional<bool> match;
    if (s.check_poincare) match = f == roos_poincare(s.a, s.hmax);
    if (out.structured) {
      out.doc["ring"] = R.describe();
      out.doc["a"] = s.a;
      out.doc["hmax"] = s.hmax;
      out.doc["poincare"] = series_json(f);
      out.doc["betti"] = betti_json(k);
      if (match) out.doc["match"] = *match;
    } else {
      out.text << "R(" << s.a << ") = " << R.describe() << "\nPoincare series of k through t^" << s.hmax << ":\n";
      series_text(out.text, f);
      if (match) out.text << "match: " << (*match ? "yes" : "no") << "\n";
    }
    return match && !*match ? kRefuted : kOk;
  }
  if (c == "check") {
    CheckOptions o = check_options(s);
    if (s.check_all) return report_verdicts(out, run_all_checks(o), s.timings);
    if (s.check_name == "roos") {
      HarnessReport r;
      r.verdicts = check_roos(s.a, o);
      r.seconds.assign(r.verdicts.size(), 0.0);
      return report_verdicts(out, r, false);
    }
    return report_verdicts(out, run_family(s.check_name, job_ideal(s), o), s.timings);
  }

  Ideal I = job_ideal(s);
  if (c == "gb") {
    std::vector<Polynomial> basis = buchberger(I).elements();
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& f, const Polynomial& g) {
      return s.ring->order().compare(f.lead().mono, g.lead().mono) < 0;
    });
    if (out.structured) {
      out.doc["order"] = s.ring->order().describe();
      out.doc["basis"] = poly_list(basis);
    } else {
      out.text << "order: " << s.ring->order().describe() << "\n";
      for (const auto& g : basis) out.text << g.to_string() << "\n";
    }
    return kOk;
  }
  if (c == "initial") {
    Ideal in = I.empty() ? I : initial_ideal(I, s.ring->order());
    if (out.structured) {
      out.doc["order"] = s.ring->order().describe();
      out.doc["initial"] = poly_list(in.generators());
    } else {
      out.text << "in(I) = " << in.to_string() << "\n";
    }
    return kOk;
  }

  QuotientRing R = I.empty() ? QuotientRing(s.ring) : QuotientRing(I);
  if (c == "nf") {
    Polynomial r = R.normal_form(*s.poly);
    if (out.structured) {
      out.doc["input"] = s.poly->to_string();
      out.doc["normal_form"] = r.to_string();
    } else {
      out.text << r.to_string() << "\n";
    }
    return kOk;
  }
  if (c == "hilbert") {
    HilbertSeries h = hilbert_series(R);
    auto [num, d] = h.reduced();
    std::vector<mpz_class> terms = h.expand(8);
    if (out.structured) {
      json n = json::array(), e = json::array();
      for (const auto& x : num) n.push_back(x.get_str());
      for (const auto& x : terms) e.push_back(x.get_str());
      out.doc["series"] = h.to_string();
      out.doc["numerator"] = n;
      out.doc["denominator_exponent"] = d;
      out.doc["dimension"] = krull_dimension(h);
      out.doc["expansion"] = e;
    } else {
      out.text << "H(s) = " << h.to_string() << "\ndim = " << krull_dimension(h) << "\nterms:";
      for (const auto& x : terms) out.text << " " << x.get_str();
      out.text << " ...\n";
    }
    return kOk;
  }
  if (c == "betti" || c == "invariants") {
    BettiTable t = betti_table(s, R);
    InvariantReport rep = invariant_report(t);
    if (c == "invariants") rep.rate = rate_of_algebra(R, s.hmax, resolution_options(s)).rate;
    if (out.structured) {
      out.doc = rep.to_json();
      out.doc["ring"] = t.ring;
      out.doc["module"] = t.module;
      out.doc["hmax"] = t.hmax;
      out.doc["complete"] = t.complete;
    } else {
      out.text << rep.to_text();
    }
    return kOk;
  }
  if (c == "poincare") {
    BettiTable k = BettiTable::from_resolution(quotient_resolution(ModuleKind::ResidueField, R, resolution_options(s)));
    BiSeries f = poincare_from_betti(k);
    SeriesRate sr = series_rate(f);
    if (out.structured) {
      out.doc["ring"] = R.describe();
      out.doc["poincare"] = series_json(f);
      out.doc["complete"] = k.complete;
      out.doc["sup_j_over_i"] = sr.value ? sr.value->get_str() : "undefined";
    } else {
      out.text << "P(s,t) of k over " << R.describe() << (k.complete ? " (complete)" : "") << ":\n";
      series_text(out.text, f);
      out.text << "sup j/i = " << sr.to_string() << "\n";
    }
    return kOk;
  }
  if (c == "koszul-probe") {
    Verdict v = koszul_probe(R, s.hmax, resolution_options(s));
    if (out.structured)
      out.doc = verdict_json(v);
    else
      out.text << verdict_text(v) << "\n";
    return v.status == Status::Refuted ? kRefuted : kOk;
  }
  if (c == "delta") {
    if (I.empty()) throw std::invalid_argument("delta needs a nonzero ideal");
    DeltaResult d = delta_upper_bound(I, DeltaBudget{s.permutations, s.weight_samples, s.seed});
    if (out.structured) {
      out.doc["delta_upper_bound"] = d.value;
      out.doc["order"] = d.order.describe();
      out.doc["orders_tried"] = d.orders_tried;
      out.doc["g_quadratic"] = d.g_quadratic();
      out.doc["seed"] = s.seed;
    } else {
      out.text << "delta <= " << d.value << " (upper bound over sampled orders)\nbest order: " << d.order.describe()
               << "\norders tried: " << d.orders_tried << "\nG-quadratic: " << (d.g_quadratic() ? "yes" : "no") << "\n";
    }
    return kOk;
  }
  throw std::invalid_argument("unknown command " + c);
}

}  // namespace

RunResult run_job(const JobSpec& spec) {
  Output out;
  out.structured = spec.format == "structured";
  RunResult r;
  try {
    r.exit_code = dispatch(spec, out);
    r.output = out.str();
  } catch (const BudgetExceeded& e) {
    r.exit_code = kBudgetExhausted;
    r.output = spec.format == "structured" ? json{{"error", e.what()}, {"kind", "budget"}}.dump(2) + "\n"
                                           : std::string("budget exhausted: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    r.exit_code = kConfigError;
    r.output = spec.format == "structured" ? json{{"error", e.what()}, {"kind", "configuration"}}.dump(2) + "\n"
                                           : std::string("error: ") + e.what() + "\n";
  }
  return r;
}

}  // namespace koszul::cli
