#include "koszul/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "koszul/series.hpp"

namespace koszul {

namespace {

// Observed value of an invariant: the true value equals it when exact and
// is at least it otherwise.
struct Bound {
  mpq_class v;
  bool exact = true;
};

std::string show(const Bound& b) { return b.v.get_str() + (b.exact ? "" : " (lower bound)"); }

Bound bound_of(const TaggedRational& t, const char* what) {
  if (!t.value) throw std::invalid_argument(std::string(what) + " is an empty supremum");
  return {*t.value, t.tag == Exactness::Exact};
}

Bound bound_max(const Bound& a, const Bound& b) { return {a.v >= b.v ? a.v : b.v, a.exact && b.exact}; }

struct Outcome {
  Status status;
  std::string limited;
};

Outcome check_le(const Bound& a, const Bound& b) {
  if (a.v <= b.v) return {a.exact ? Status::Verified : Status::VerifiedAtCutoff, a.exact ? "" : "lhs"};
  if (b.exact) return {Status::Refuted, ""};
  return {Status::Inconclusive, "rhs"};
}

Outcome check_lt(const Bound& a, const Bound& b) {
  if (a.v < b.v) return {a.exact ? Status::Verified : Status::VerifiedAtCutoff, a.exact ? "" : "lhs"};
  if (b.exact) return {Status::Refuted, ""};
  return {Status::Inconclusive, "rhs"};
}

Outcome check_eq(const Bound& a, const Bound& b) {
  if (a.v == b.v) {
    if (a.exact && b.exact) return {Status::Verified, ""};
    return {Status::VerifiedAtCutoff, a.exact ? "rhs" : "lhs"};
  }
  const Bound& small = a.v < b.v ? a : b;
  if (small.exact) return {Status::Refuted, ""};
  return {Status::Inconclusive, &small == &a ? "lhs" : "rhs"};
}

void absorb(Verdict& v, const Outcome& o, const std::string& text) {
  v.status = combine(v.status, o.status);
  if (!o.limited.empty() && o.status == Status::Inconclusive)
    v.limited_side += (v.limited_side.empty() ? "" : ",") + o.limited;
  if (!text.empty()) v.detail += (v.detail.empty() ? "" : "; ") + text;
}

void note(Verdict& v, const std::string& text) { v.detail += (v.detail.empty() ? "" : "; ") + text; }

Verdict start(std::string check, std::string subject) {
  Verdict v;
  v.check = std::move(check);
  v.subject = std::move(subject);
  v.status = Status::Verified;
  return v;
}

// Weakens a verdict whose hypothesis is only known through a cutoff.
Status cap(Status s, Status hypothesis) {
  if (hypothesis == Status::Verified) return s;
  if (s == Status::Verified) return Status::VerifiedAtCutoff;
  if (s == Status::Refuted) return Status::Inconclusive;
  return s;
}

std::string mark(Status s) {
  switch (s) {
    case Status::Verified:
      return "ok";
    case Status::VerifiedAtCutoff:
      return "ok at cutoff";
    case Status::Inconclusive:
      return "inconclusive";
    case Status::Refuted:
      return "FAILS";
  }
  return "";
}

std::vector<Polynomial> nonzero_normal_forms(const QuotientRing& base, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial r = base.normal_form(g);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

bool generated_in_degree_two(const Ideal& I) {
  return std::all_of(I.generators().begin(), I.generators().end(), [](const Polynomial& g) { return g.degree() >= 2; });
}

int dimension(const QuotientRing& R) { return krull_dimension(hilbert_series(R)); }

std::string fmt_t(const std::optional<int>& t) { return t ? std::to_string(*t) : "-inf"; }

// Largest homological index with data in the table.
int last_index(const BettiTable& t) { return t.complete ? t.last_column() : t.hmax; }

Status koszul_certificate(const QuotientRing& Q, const CheckOptions& opts) {
  if (Q.is_polynomial_ring()) return Status::Verified;
  RateCertificate rc = certified_rate(Q, opts.hmax, opts.delta, opts.resolution);
  if (rc.rate.value && *rc.rate.value == 1) return rc.exact() ? Status::Verified : Status::VerifiedAtCutoff;
  return Status::Refuted;
}

void require_main_hypotheses(const Instance& inst) {
  if (inst.J.empty() || nonzero_normal_forms(inst.Q, inst.J).empty())
    throw std::invalid_argument("J must be nonzero in Q");
  for (const auto& g : inst.J)
    if (g.degree() < 2) throw std::invalid_argument("J must lie in the square of the maximal ideal of Q");
}

std::mutex rate_cache_mutex;
std::map<std::string, RateCertificate> rate_cache;

std::string rate_key(const QuotientRing& R, int hmax, const DeltaBudget& b, const ResolutionOptions& o) {
  std::ostringstream os;
  os << R.describe() << "|" << hmax << "|" << b.max_permutations << "|" << b.random_weight_samples << "|" << b.seed
     << "|" << o.generator_budget << "|" << o.degree_guard;
  return os.str();
}

}  // namespace

RingPtr roos_ring(std::uint32_t characteristic) { return make_ring(Field(characteristic), indexed_names(6)); }

Ideal roos_algebra(const RingPtr& ring, int a) {
  if (a < 2) throw std::invalid_argument("the Roos family needs a >= 2");
  if (ring->nvars() != 6) throw std::invalid_argument("the Roos family lives in 6 variables");
  if (!ring->field().is_rational())
    std::cerr << "warning: the Roos Poincaré series is stated in characteristic 0\n";
  const Field& F = ring->field();
  auto x = [&](std::size_t i) { return Polynomial::variable(ring, i - 1); };
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i <= 6; ++i) gens.push_back(x(i) * x(i));
  for (std::size_t i = 1; i <= 5; ++i) gens.push_back(x(i) * x(i + 1));
  gens.push_back(x(1) * x(3) + (x(3) * x(6)).scale(F.from_int(a)) - x(4) * x(6));
  Polynomial last = x(1) * x(4) + x(3) * x(6);
  if (a != 2) last = last + (x(4) * x(6)).scale(F.from_int(a - 2));
  gens.push_back(last);
  return Ideal(ring, std::move(gens));
}

DeltaResult delta_upper_bound(const Ideal& I, const DeltaBudget& budget, int lower_bound) {
  if (budget.max_permutations == 0 && budget.random_weight_samples == 0)
    throw std::invalid_argument("the order budget must be positive");
  const std::size_t n = I.ring()->nvars();
  std::vector<TermOrder> orders;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (orders.size() >= budget.max_permutations) break;
    orders.emplace_back(OrderKind::GradedRevLex, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<int> weight(1, static_cast<int>(2 * n + 1));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t s = 0; s < budget.random_weight_samples; ++s) {
    std::vector<int> w(n);
    for (auto& e : w) e = weight(rng);
    orders.emplace_back(OrderKind::Weighted, perm, w);
  }

  DeltaResult best;
  best.value = -1;
  constexpr std::size_t kBlock = 16;
  for (std::size_t start = 0; start < orders.size(); start += kBlock) {
    const std::size_t end = std::min(orders.size(), start + kBlock);
    std::vector<int> values(end - start);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = start; k < end; ++k) values[k - start] = buchberger(I, orders[k]).max_degree();
    for (std::size_t k = start; k < end; ++k)
      if (best.value < 0 || values[k - start] < best.value) {
        best.value = values[k - start];
        best.order = orders[k];
      }
    best.orders_tried = end;
    if (best.value <= lower_bound) break;
  }
  return best;
}

Instance make_instance(std::string name, const QuotientRing& Q, std::vector<Polynomial> J) {
  std::vector<Polynomial> all = Q.ideal().generators();
  all.insert(all.end(), J.begin(), J.end());
  QuotientRing R(Ideal(Q.ambient(), std::move(all)));
  return Instance{std::move(name), Q, std::move(J), std::move(R)};
}

Instance make_instance(std::string name, const Ideal& ideal) {
  return make_instance(std::move(name), QuotientRing(ideal.ring()), ideal.generators());
}

CyclicModule residue_field(const RingPtr& ring) {
  CyclicModule M{"k", {}};
  for (std::size_t v = 0; v < ring->nvars(); ++v) M.relations.push_back(Polynomial::variable(ring, v));
  return M;
}

BettiTable cyclic_table(const QuotientRing& base, const std::vector<Polynomial>& relations, int hmax,
                        const ResolutionOptions& opts) {
  std::vector<Polynomial> rel = nonzero_normal_forms(base, relations);
  if (base.is_polynomial_ring()) {
    if (rel.empty()) {
      BettiTable t;
      t.ring = base.describe();
      t.entries[{0, 0}] = 1;
      t.complete = true;
      return t;
    }
    QuotientRing M(Ideal(base.ambient(), rel));
    return BettiTable::from_resolution(resolve_over_ambient(M, opts), base.describe(), "cyclic module");
  }
  ResolutionOptions o = opts;
  o.hmax = hmax;
  GradedMatrix row = rel.empty() ? GradedMatrix(GradedFreeModule{base.ambient(), {}}, GradedFreeModule{base.ambient(), {0}})
                                 : GradedMatrix::row(base.ambient(), rel);
  return BettiTable::from_resolution(quotient_resolution(ModuleKind::Presented, base, o, &row), base.describe(),
                                     "cyclic module");
}

RateCertificate certified_rate(const QuotientRing& R, int hmax, const DeltaBudget& budget,
                               const ResolutionOptions& opts) {
  const std::string key = rate_key(R, hmax, budget, opts);
  {
    std::lock_guard<std::mutex> lock(rate_cache_mutex);
    if (auto it = rate_cache.find(key); it != rate_cache.end()) return it->second;
  }
  RateReport rr = rate_of_algebra(R, hmax, opts);
  RateCertificate rc{rr.rate, rr.terms, rr.k_table, std::nullopt};
  if (rc.rate.tag != Exactness::Exact && rc.rate.value && !R.is_polynomial_ring() &&
      generated_in_degree_two(R.ideal())) {
    mpq_class lower = *rc.rate.value + 1;
    mpz_class ceil_lower;
    mpz_cdiv_q(ceil_lower.get_mpz_t(), lower.get_num_mpz_t(), lower.get_den_mpz_t());
    rc.delta = delta_upper_bound(R.ideal(), budget, static_cast<int>(ceil_lower.get_si()));
    if (*rc.rate.value == rc.delta->value - 1) rc.rate.tag = Exactness::Exact;
  }
  std::lock_guard<std::mutex> lock(rate_cache_mutex);
  rate_cache.emplace(key, rc);
  return rc;
}

std::vector<Verdict> check_main_theorem(const Instance& inst, const CheckOptions& opts) {
  require_main_hypotheses(inst);
  const Status q_koszul = koszul_certificate(inst.Q, opts);
  if (q_koszul == Status::Refuted) throw std::invalid_argument("Q fails the Koszul probe");
  const bool q_poly = inst.Q.is_polynomial_ring();

  BettiTable table = cyclic_table(inst.Q, inst.J, opts.hmax, opts.resolution);
  RateCertificate rc = certified_rate(inst.R, opts.hmax, opts.delta, opts.resolution);
  Bound c = bound_of(rc.rate, "Rate");
  Bound sl = bound_of(slope(table), "slope_Q R");
  const bool pd_finite = table.complete;
  auto cut = [&](Verdict& v) {
    v.cutoffs.emplace_back("hmax", opts.hmax);
    if (rc.delta) v.cutoffs.emplace_back("delta_orders", static_cast<int>(rc.delta->orders_tried));
    v.status = cap(v.status, q_koszul);
  };
  std::vector<Verdict> out;

  {
    Verdict v = start("main-theorem-1", inst.name);
    Bound lhs{c.v >= 2 ? c.v : mpq_class(2), c.exact || (rc.upper() && *rc.upper() <= 2)};
    Outcome lo = check_le(lhs, sl);
    absorb(v, lo, "max{c,2} = " + show(lhs) + " <= slope_Q R = " + show(sl) + " " + mark(lo.status));
    Bound c1{c.v + 1, c.exact};
    Outcome hi = check_le(sl, c1);
    absorb(v, hi, "slope_Q R <= c+1 = " + show(c1) + " " + mark(hi.status));
    if (pd_finite) {
      Outcome strict = check_lt(c, sl);
      if (strict.status == Status::Refuted) strict = {Status::Inconclusive, "rhs"};
      absorb(v, strict, "strict c < slope margin " + mpq_class(sl.v - c.v).get_str() + " " + mark(strict.status));
    } else {
      note(v, "pd_Q R not known finite; strictness not checked");
    }
    cut(v);
    out.push_back(std::move(v));
  }

  const int last = last_index(table);
  {
    Verdict v = start("main-theorem-2", inst.name);
    std::vector<int> extremal;
    for (int i = 1; i <= last; ++i) {
      auto t = top_degree(table, i);
      if (t && mpq_class(*t) == (c.v + 1) * i) extremal.push_back(i);
    }
    Outcome o{c.exact ? Status::Verified : Status::VerifiedAtCutoff, c.exact ? "" : "lhs"};
    std::string text;
    for (int i : extremal) {
      bool cascade = true;
      for (int h = 1; h <= i; ++h) {
        auto t = top_degree(table, h);
        if (!t || mpq_class(*t) != (c.v + 1) * h) cascade = false;
      }
      std::size_t gens = 0;
      if (c.v.get_den() == 1) gens = table.at(1, static_cast<int>(c.v.get_num().get_si()) + 1);
      const bool count = static_cast<std::size_t>(i) <= gens;
      text += (text.empty() ? "" : ", ") + ("i=" + std::to_string(i) + " cascade " + (cascade ? "yes" : "no") +
                                           " count " + std::to_string(i) + "<=" + std::to_string(gens));
      if (!(cascade && count)) {
        o = c.exact ? Outcome{Status::Refuted, ""} : Outcome{Status::Inconclusive, "rhs"};
        v.witness = Witness{i, 0, "t_i=" + fmt_t(top_degree(table, i))};
        break;
      }
    }
    absorb(v, o, extremal.empty() ? "no extremal i (vacuous)" : "extremal " + text);
    cut(v);
    out.push_back(std::move(v));
  }

  {
    Verdict v = start("main-theorem-3", inst.name);
    const int gap = dimension(inst.Q) - dimension(inst.R);
    bool any = false;
    for (int i = gap + 1; i <= last; ++i) {
      auto t = top_degree(table, i);
      if (!t) continue;
      any = true;
      Outcome o = check_lt(Bound{*t, true}, Bound{(c.v + 1) * i, c.exact});
      absorb(v, o, "");
      if (o.status == Status::Refuted || o.status == Status::Inconclusive) {
        v.witness = Witness{i, *t, "t_i=" + std::to_string(*t) + " (c+1)i=" + mpq_class((c.v + 1) * i).get_str()};
        break;
      }
    }
    note(v, "i > dim Q - dim R = " + std::to_string(gap) + (any ? "" : ": vacuous"));
    if (!pd_finite) v.status = combine(v.status, Status::VerifiedAtCutoff);
    cut(v);
    out.push_back(std::move(v));
  }

  {
    Verdict v = start("main-theorem-4", inst.name);
    if (!pd_finite) {
      v.status = Status::Inconclusive;
      v.limited_side = "lhs";
      note(v, "pd_Q R not reached within hmax");
    } else {
      const int reg = *regularity(table).value;
      const int pd = *projective_dimension(table).value;
      Bound rhs{c.v * pd, c.exact};
      Outcome le = check_le(Bound{reg, true}, rhs);
      absorb(v, le, "reg = " + std::to_string(reg) + " <= c*pd = " + show(rhs) + " " + mark(le.status));
      if (q_poly) {
        const int mu = static_cast<int>(table.total(1));
        const int height = dimension(inst.Q) - dimension(inst.R);
        bool equal_degrees = c.v.get_den() == 1;
        if (equal_degrees) {
          const int d = static_cast<int>(c.v.get_num().get_si()) + 1;
          for (const auto& [key, n] : table.entries)
            if (key.first == 1 && n && key.second != d) equal_degrees = false;
        }
        const bool certificate = mu == height && pd == mu && equal_degrees;
        const bool equal = mpq_class(reg) == c.v * pd;
        Outcome eq;
        if (certificate)
          eq = equal ? Outcome{c.exact ? Status::Verified : Status::VerifiedAtCutoff, c.exact ? "" : "rhs"}
                     : Outcome{Status::Refuted, ""};
        else
          eq = equal ? (c.exact ? Outcome{Status::Refuted, ""} : Outcome{Status::Inconclusive, "rhs"})
                     : Outcome{Status::Verified, ""};
        absorb(v, eq,
               std::string("regular-sequence certificate ") + (certificate ? "fires" : "does not fire") +
                   (equal ? ", equality" : ", strict") + " " + mark(eq.status));
      }
    }
    cut(v);
    out.push_back(std::move(v));
  }
  return out;
}

Verdict check_slope_descent(const Instance& inst, const CyclicModule& M, const CheckOptions& opts) {
  if (inst.J.empty()) throw std::invalid_argument("descent needs J != 0");
  BettiTable qr = cyclic_table(inst.Q, inst.J, opts.hmax, opts.resolution);
  bool nonlinear = false;
  for (const auto& [key, n] : qr.entries)
    if (key.first == 1 && n && key.second >= 2) nonlinear = true;
  if (!nonlinear) throw std::invalid_argument("descent needs J not generated by linear forms");

  std::vector<Polynomial> over_q = inst.J;
  over_q.insert(over_q.end(), M.relations.begin(), M.relations.end());
  BettiTable mr = cyclic_table(inst.R, M.relations, opts.hmax, opts.resolution);
  BettiTable mq = cyclic_table(inst.Q, over_q, opts.hmax, opts.resolution);
  if (mr.at(0, 0) == 0) throw std::invalid_argument("descent needs M != 0");

  Bound lhs = bound_of(slope(mr), "slope_R M");
  Bound sq = bound_of(slope(mq), "slope_Q M");
  Bound sup{0, qr.complete};
  bool have = false;
  for (int i = 1; i <= last_index(qr); ++i)
    if (auto t = top_degree(qr, i)) {
      mpq_class x(*t - 1, i);
      x.canonicalize();
      if (!have || x > sup.v) sup.v = x;
      have = true;
    }
  Bound mid = bound_max(sq, sup);
  Bound rhs = bound_max(sq, bound_of(slope(qr), "slope_Q R"));

  Verdict v = start("slope-descent", inst.name + " M=" + M.name);
  Outcome a = check_le(lhs, mid);
  absorb(v, a, "slope_R M = " + show(lhs) + " <= max{slope_Q M, sup (t_i^Q(R)-1)/i} = " + show(mid) + " " + mark(a.status));
  Outcome b = check_le(mid, rhs);
  absorb(v, b, "<= max{slope_Q M, slope_Q R} = " + show(rhs) + " " + mark(b.status));
  v.cutoffs.emplace_back("hmax", opts.hmax);
  return v;
}

Verdict check_slope_ascent(const Instance& inst, const CheckOptions& opts) {
  require_main_hypotheses(inst);
  const Status q_koszul = koszul_certificate(inst.Q, opts);
  if (q_koszul == Status::Refuted) throw std::invalid_argument("injectivity not certified: Q fails the Koszul probe");
  ResolutionOptions o = opts.resolution;
  o.hmax = opts.hmax;
  Resolution kq = quotient_resolution(ModuleKind::ResidueField, inst.Q, o);
  Resolution kr = quotient_resolution(ModuleKind::ResidueField, inst.R, o);
  auto ranks = lift_comparison(kq, kr);
  BettiTable kq_table = BettiTable::from_resolution(kq);
  for (const auto& [key, n] : kq_table.entries)
    if (key.first <= static_cast<int>(kr.differentials.size()) && ranks[key] != n)
      throw std::invalid_argument("injectivity not certified at (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")");

  Verdict v = start("slope-ascent", inst.name + " M=k");
  BettiTable qr = cyclic_table(inst.Q, inst.J, opts.hmax, opts.resolution);
  Bound lhs = bound_of(slope(qr), "slope_Q R");
  BettiTable kr_table = BettiTable::from_resolution(kr);
  std::vector<std::pair<int, mpq_class>> terms;
  TaggedRational s = rate_from_k_table(kr_table, &terms);
  Bound rhs = bound_of(s, "s");
  rhs.v += 1;
  Outcome r = check_le(lhs, rhs);
  absorb(v, r, "slope_Q R = " + show(lhs) + " <= 1 + s = " + show(rhs) + " " + mark(r.status));
  note(v, "Tor^phi(k,k) injective through hmax by comparison ranks");
  v.status = cap(v.status, q_koszul);
  v.cutoffs.emplace_back("hmax", opts.hmax);
  return v;
}

std::vector<Verdict> check_hypersurface(const Instance& inst, const CyclicModule& M, const CheckOptions& opts) {
  if (inst.J.size() != 1) throw std::invalid_argument("a hypersurface needs exactly one f");
  const Polynomial& f = inst.J.front();
  const int d = f.degree();
  if (inst.Q.normal_form(f).is_zero()) throw std::invalid_argument("f is zero in Q");
  if (!inst.Q.is_polynomial_ring()) {
    HilbertSeries hq = hilbert_series(inst.Q);
    HilbertSeries hr = hilbert_series(inst.R);
    std::vector<mpz_class> expect(hq.numerator.size() + d, 0);
    for (std::size_t k = 0; k < hq.numerator.size(); ++k) {
      expect[k] += hq.numerator[k];
      expect[k + d] -= hq.numerator[k];
    }
    while (!expect.empty() && expect.back() == 0) expect.pop_back();
    std::vector<mpz_class> got = hr.numerator;
    while (!got.empty() && got.back() == 0) got.pop_back();
    if (got != expect) throw std::invalid_argument("f is a zero divisor on Q");
  }

  std::vector<Polynomial> over_q = inst.J;
  over_q.insert(over_q.end(), M.relations.begin(), M.relations.end());
  BettiTable mq = cyclic_table(inst.Q, over_q, opts.hmax, opts.resolution);
  BettiTable mr = cyclic_table(inst.R, M.relations, opts.hmax, opts.resolution);
  Bound sq = bound_of(slope(mq), "slope_Q M");
  Bound sr = bound_of(slope(mr), "slope_R M");
  std::vector<Verdict> out;

  {
    Verdict v = start("hypersurface-1", inst.name + " M=" + M.name);
    Bound rhs = bound_max(sr, Bound{d, true});
    Outcome o = check_le(sq, rhs);
    absorb(v, o, "slope_Q M = " + show(sq) + " <= max{slope_R M, deg f} = " + show(rhs) + " " + mark(o.status));
    if (d == 1) {
      Outcome e = check_eq(sq, rhs);
      absorb(v, e, "equality (f not in Q+^2) " + mark(e.status));
    }
    v.cutoffs.emplace_back("hmax", opts.hmax);
    out.push_back(std::move(v));
  }
  {
    Verdict v = start("hypersurface-2", inst.name + " M=" + M.name);
    mpq_class half(d, 2);
    half.canonicalize();
    Bound rhs = bound_max(sq, Bound{half, true});
    Outcome o = check_le(sr, rhs);
    absorb(v, o, "slope_R M = " + show(sr) + " <= max{slope_Q M, deg f/2} = " + show(rhs) + " " + mark(o.status));
    // f lies in Q+ Ann_Q M iff it lies in Q+ (L + I_Q) in degree deg f.
    std::vector<Polynomial> gens = inst.Q.ideal().generators();
    const RingPtr& S = inst.Q.ambient();
    for (const auto& l : M.relations)
      for (std::size_t x = 0; x < S->nvars(); ++x) gens.push_back(Polynomial::variable(S, x) * l);
    const bool in_product = QuotientRing(Ideal(S, gens)).normal_form(f).is_zero();
    if (in_product) {
      Outcome e = check_eq(sr, rhs);
      absorb(v, e, "equality (f in Q+ Ann M) " + mark(e.status));
    }
    v.cutoffs.emplace_back("hmax", opts.hmax);
    out.push_back(std::move(v));
  }
  return out;
}

Verdict check_extremal(const Instance& inst, const CheckOptions& opts) {
  require_main_hypotheses(inst);
  if (!inst.Q.is_polynomial_ring()) throw std::invalid_argument("the extremal check needs a polynomial Q");
  BettiTable table = cyclic_table(inst.Q, inst.J, opts.hmax, opts.resolution);
  RateCertificate rc = certified_rate(inst.R, opts.hmax, opts.delta, opts.resolution);
  Bound c = bound_of(rc.rate, "Rate");
  const mpq_class step = c.v + 1;

  Verdict v = start("extremal", inst.name);
  v.cutoffs.emplace_back("hmax", opts.hmax);
  std::vector<int> extremal;
  for (int i = 1; i <= table.last_column(); ++i) {
    auto t = top_degree(table, i);
    if (t && mpq_class(*t) == step * i) extremal.push_back(i);
  }
  const Outcome pass{c.exact ? Status::Verified : Status::VerifiedAtCutoff, c.exact ? "" : "rhs"};
  const Outcome fail = c.exact ? Outcome{Status::Refuted, ""} : Outcome{Status::Inconclusive, "rhs"};
  if (extremal.empty() || extremal.back() < 2)
    note(v, "no extremal i >= 2; cascade vacuous");
  if (extremal.empty()) {
    absorb(v, pass, c.exact ? "" : "conditional on c = " + c.v.get_str());
    return v;
  }
  if (step.get_den() != 1) {
    absorb(v, fail, "t_i = (c+1)i with c+1 = " + step.get_str() + " not an integer");
    v.witness = Witness{extremal.front(), 0, "c_obs=" + c.v.get_str()};
    return v;
  }
  const int e = static_cast<int>(step.get_num().get_si());
  const std::size_t gens = table.at(1, e);

  KoszulStrand h1(inst.R, 1, e);
  std::vector<KoszulHomologyClass> powers = h1.basis();
  int reached = 1;
  std::string text;
  for (int i : extremal) {
    bool cascade = static_cast<std::size_t>(i) <= gens;
    for (int h = 1; h <= i; ++h) {
      auto t = top_degree(table, h);
      if (!t || *t != e * h) cascade = false;
    }
    while (reached < i) {
      ++reached;
      KoszulStrand next(inst.R, reached, reached * e);
      Echelon span(inst.R.field(), next.rank());
      std::vector<KoszulHomologyClass> kept;
      for (const auto& p : powers)
        for (const auto& h : h1.basis()) {
          SparseColumn prod = exterior_product(p.representative, p.i, h.representative, 1, inst.R);
          if (prod.empty()) continue;
          if (span.insert(next.coordinates(prod))) kept.push_back({reached, reached * e, prod});
        }
      powers = std::move(kept);
    }
    KoszulStrand full(inst.R, i, i * e);
    const std::size_t product_rank = i == 1 ? h1.rank() : powers.size();
    const bool products = product_rank == full.rank() && product_rank > 0 && full.rank() == table.at(i, i * e);
    text += (text.empty() ? "" : ", ") +
            ("i=" + std::to_string(i) + " cascade " + (cascade ? "yes" : "no") + " (H1)^i rank " +
             std::to_string(product_rank) + "/" + std::to_string(full.rank()));
    if (!(cascade && products)) {
      absorb(v, fail, "extremal " + text);
      v.witness = Witness{i, i * e, "product rank " + std::to_string(product_rank) + " of " + std::to_string(full.rank())};
      return v;
    }
  }
  absorb(v, pass, "extremal " + text + (c.exact ? "" : " (conditional on c = " + c.v.get_str() + ")"));
  return v;
}

Verdict check_taylor_bounds(const Ideal& monomial_ideal) {
  if (!monomial_ideal.is_monomial()) throw std::invalid_argument("the Taylor check needs a monomial ideal");
  GroebnerBasis gb = buchberger(monomial_ideal);
  const RingPtr& S = monomial_ideal.ring();
  QuotientRing R(monomial_ideal);
  BettiTable table = BettiTable::from_resolution(resolve_over_ambient(R));
  const int n = static_cast<int>(S->nvars());
  const int gap = n - dimension(R);
  Verdict v = start("taylor", monomial_ideal.to_string());
  const int t1 = *top_degree(table, 1);
  for (int i = 2; i <= table.last_column(); ++i) {
    auto t = top_degree(table, i);
    if (!t) continue;
    Outcome o = i > gap ? check_lt(Bound{*t, true}, Bound{t1 * i, true}) : check_le(Bound{*t, true}, Bound{t1 * i, true});
    absorb(v, o, "");
    if (o.status == Status::Refuted) {
      v.witness = Witness{i, *t, "t_1*i=" + std::to_string(t1 * i)};
      break;
    }
  }
  note(v, "t_i <= t_1 i, strict for i > " + std::to_string(gap));
  if (gb.size() <= kTaylorGeneratorLimit) {
    std::vector<Polynomial> mins;
    for (const auto& m : gb.lead_monomials()) mins.push_back(Polynomial::monomial(S, m, S->field().one()));
    BettiTable taylor;
    Resolution tr = taylor_complex(Ideal(S, mins));
    for (int i = 0; i <= static_cast<int>(tr.differentials.size()); ++i)
      for (int j : tr.free_module(i).twists) ++taylor.entries[{i, j}];
    for (const auto& [key, b] : table.entries)
      if (taylor.at(key.first, key.second) < b) {
        absorb(v, {Status::Refuted, ""}, "Taylor rank below Betti number");
        v.witness = Witness{key.first, key.second, "taylor=" + std::to_string(taylor.at(key.first, key.second))};
        return v;
      }
    note(v, "Taylor ranks dominate");
  }
  return v;
}

std::vector<Verdict> check_groebner_bounds(const Instance& inst, const CheckOptions& opts, std::vector<std::string>* notes) {
  const QuotientRing& R = inst.R;
  if (!generated_in_degree_two(R.ideal()))
    throw std::invalid_argument("split off linear forms first: generators must have degree >= 2");
  if (R.is_polynomial_ring()) throw std::invalid_argument("the Gröbner bounds need a proper quotient");
  RateCertificate rc = certified_rate(R, opts.hmax, opts.delta, opts.resolution);
  DeltaResult delta = rc.delta ? *rc.delta : delta_upper_bound(R.ideal(), opts.delta);
  Bound c = bound_of(rc.rate, "Rate");
  std::vector<Verdict> out;

  {
    Verdict v = start("groebner-rate", inst.name);
    if (c.v + 1 <= delta.value)
      absorb(v, {Status::Verified, ""}, "");
    else
      absorb(v, {Status::Inconclusive, "lhs"}, "");
    note(v, "Rate + 1 = " + show(Bound{c.v + 1, c.exact}) + " <= delta = " + std::to_string(delta.value) + " (" +
                delta.order.describe() + ", " + std::to_string(delta.orders_tried) + " orders)");
    v.cutoffs.emplace_back("hmax", opts.hmax);
    v.cutoffs.emplace_back("delta_orders", static_cast<int>(delta.orders_tried));
    out.push_back(std::move(v));
  }

  BettiTable table = BettiTable::from_resolution(resolve_over_ambient(R, opts.resolution));
  const int n = static_cast<int>(R.nvars());
  const int dim = dimension(R);
  const int pd = *projective_dimension(table).value;
  const int depth = n - pd;
  {
    Verdict v = start("groebner-taylor", inst.name);
    Bound sl = bound_of(slope(table), "slope");
    Outcome a = check_le(sl, Bound{delta.value, true});
    absorb(v, a, "slope = " + show(sl) + " <= delta " + mark(a.status));
    for (int i = n - dim + 1; i <= table.last_column(); ++i)
      if (auto t = top_degree(table, i)) {
        Outcome o = check_lt(Bound{*t, true}, Bound{delta.value * i, true});
        absorb(v, o, "");
        if (o.status == Status::Refuted) v.witness = Witness{i, *t, "delta*i=" + std::to_string(delta.value * i)};
      }
    note(v, "t_i < delta*i for i > " + std::to_string(n - dim));
    const int reg = *regularity(table).value;
    Outcome r = check_le(Bound{reg, true}, Bound{(delta.value - 1) * (n - depth), true});
    absorb(v, r, "reg = " + std::to_string(reg) + " <= (delta-1)(n-depth) = " + std::to_string((delta.value - 1) * (n - depth)) +
                     " " + mark(r.status));
    out.push_back(std::move(v));
  }

  {
    Verdict v = start("groebner-betti", inst.name);
    std::vector<TermOrder> orders{TermOrder::grevlex(n), delta.order, TermOrder::lex(n)};
    for (std::size_t k = 0; k < orders.size(); ++k) {
      if (std::find(orders.begin(), orders.begin() + k, orders[k]) != orders.begin() + k) continue;
      Ideal in = initial_ideal(R.ideal(), orders[k]);
      BettiTable tin = BettiTable::from_resolution(resolve_over_ambient(QuotientRing(in), opts.resolution));
      for (const auto& [key, b] : table.entries)
        if (tin.at(key.first, key.second) < b) {
          absorb(v, {Status::Refuted, ""}, "");
          v.witness = Witness{key.first, key.second, "initial=" + std::to_string(tin.at(key.first, key.second)) + " " +
                                                         orders[k].describe()};
        }
      Verdict tv = check_taylor_bounds(in);
      absorb(v, {tv.status, ""}, "");
      if (tv.witness && !v.witness) v.witness = tv.witness;
      note(v, orders[k].describe() + " " + mark(v.status));
    }
    out.push_back(std::move(v));
  }

  if (notes) {
    std::ostringstream os;
    os << "binomial probe " << inst.name << ": ";
    const std::size_t b1 = table.total(1);
    bool holds = true;
    for (int i = 2; i <= table.last_column(); ++i) {
      mpz_class bound;
      mpz_bin_uiui(bound.get_mpz_t(), b1, static_cast<unsigned long>(i));
      if (mpz_class(static_cast<unsigned long>(table.total(i))) > bound) {
        os << "fails at i=" << i << " (beta=" << table.total(i) << " > " << bound.get_str() << ")";
        holds = false;
        break;
      }
    }
    if (holds) os << "beta_i <= C(beta_1, i) holds";
    notes->push_back(os.str());
  }
  return out;
}

Verdict check_canonical(const Instance& inst, const CheckOptions& opts) {
  require_main_hypotheses(inst);
  const Status q_koszul = koszul_certificate(inst.Q, opts);
  if (q_koszul == Status::Refuted) throw std::invalid_argument("Q fails the Koszul probe");
  Verdict v = start("canonical", inst.name);
  Bound sq = bound_of(slope(cyclic_table(inst.Q, inst.J, opts.hmax, opts.resolution)), "slope_Q R");
  Bound ss = bound_of(slope(BettiTable::from_resolution(resolve_over_ambient(inst.R, opts.resolution))), "slope_S R");
  Outcome a = check_le(Bound{2, true}, sq);
  absorb(v, a, "2 <= slope_Q R = " + show(sq) + " " + mark(a.status));
  Outcome b = check_le(sq, ss);
  absorb(v, b, "slope_Q R <= slope_S R = " + show(ss) + " " + mark(b.status));
  RateCertificate rc = certified_rate(inst.R, opts.hmax, opts.delta, opts.resolution);
  if (rc.rate.value && *rc.rate.value == 1) {
    Outcome e1 = check_eq(sq, Bound{2, true});
    Outcome e2 = check_eq(ss, Bound{2, true});
    if (!rc.exact()) {
      for (Outcome* e : {&e1, &e2})
        if (e->status == Status::Refuted) *e = {Status::Inconclusive, "rhs"};
    }
    absorb(v, e1, std::string("R Koszul") + (rc.exact() ? "" : " at cutoff") + ": slope_Q R = 2 " + mark(e1.status));
    absorb(v, e2, "slope_S R = 2 " + mark(e2.status));
  } else {
    note(v, "R not Koszul; inequality branch only");
  }
  v.status = cap(v.status, q_koszul);
  v.cutoffs.emplace_back("hmax", opts.hmax);
  return v;
}

std::vector<Verdict> check_roos(int a, const CheckOptions& opts) {
  RingPtr S = roos_ring();
  QuotientRing R(roos_algebra(S, a));
  const std::string name = "roos-" + std::to_string(a);
  std::vector<Verdict> out;

  {
    Verdict v = start("roos-hilbert", name);
    auto [num, den] = hilbert_series(R).reduced();
    const bool ok = den == 0 && num == std::vector<mpz_class>{1, 6, 8};
    absorb(v, {ok ? Status::Verified : Status::Refuted, ""}, "H = " + hilbert_series(R).to_string());
    out.push_back(std::move(v));
  }
  RateCertificate rc = certified_rate(R, opts.hmax, opts.delta, opts.resolution);
  {
    Verdict v = start("roos-poincare", name);
    BiSeries got = poincare_from_betti(rc.k_table);
    BiSeries want = roos_poincare(a, opts.hmax);
    Status s = rc.k_table.complete ? Status::Verified : Status::VerifiedAtCutoff;
    for (int i = 0; i <= opts.hmax && s != Status::Refuted; ++i)
      if (got.row(i) != want.row(i)) {
        s = Status::Refuted;
        v.witness = Witness{i, 0, got.row_string(i) + " vs " + want.row_string(i)};
      }
    absorb(v, {s, ""}, "coefficients of P_k through t^" + std::to_string(opts.hmax) + " " + mark(s));
    v.cutoffs.emplace_back("hmax", opts.hmax);
    out.push_back(std::move(v));
  }
  {
    Verdict v = start("roos-slope", name);
    BettiTable t = BettiTable::from_resolution(resolve_over_ambient(R, opts.resolution));
    Outcome o = check_eq(bound_of(slope(t), "slope"), Bound{2, true});
    absorb(v, o, "slope_P R = " + slope(t).to_string() + " " + mark(o.status));
    out.push_back(std::move(v));
  }
  {
    Verdict v = start("roos-rate", name);
    Bound c = bound_of(rc.rate, "Rate");
    mpq_class lo(a + 1, a), hi(a + 2, a);
    lo.canonicalize();
    hi.canonicalize();
    Outcome l = check_le(Bound{lo, true}, c);
    if (opts.hmax < a + 1 && l.status == Status::Inconclusive) l.limited = "rhs (hmax < a+1)";
    absorb(v, l, lo.get_str() + " <= Rate = " + show(c) + " " + mark(l.status));
    for (const auto& [i, term] : rc.terms) {
      Outcome u = check_le(Bound{term, false}, Bound{hi, true});
      absorb(v, u, "");
      if (u.status == Status::Refuted) v.witness = Witness{i, 0, "term=" + term.get_str()};
    }
    note(v, "every computed term <= " + hi.get_str());
    v.cutoffs.emplace_back("hmax", opts.hmax);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Ideal> random_monomial_ideals(std::size_t count, std::uint64_t seed, std::size_t max_vars,
                                          std::size_t max_generators, int max_degree) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<Ideal> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = static_cast<std::size_t>(pick(2, static_cast<int>(max_vars)));
    RingPtr S = make_ring(Field(0), indexed_names(n));
    const int g = pick(1, static_cast<int>(max_generators));
    std::vector<Polynomial> gens;
    for (int e = 0; e < g; ++e) {
      Monomial m;
      const int d = pick(1, max_degree);
      for (int s = 0; s < d; ++s) {
        std::size_t v = static_cast<std::size_t>(pick(0, static_cast<int>(n) - 1));
        m.set(v, m[v] + 1);
      }
      gens.push_back(Polynomial::monomial(S, m, S->field().one()));
    }
    out.emplace_back(S, std::move(gens));
  }
  return out;
}

std::vector<CorpusEntry> builtin_corpus() {
  auto entry = [](std::string name, std::string provenance, std::vector<std::string> vars, std::string gens) {
    RingPtr S = make_ring(Field(0), std::move(vars));
    return CorpusEntry{std::move(name), std::move(provenance),
                       Ideal(S, gens.empty() ? std::vector<Polynomial>{} : parse_polynomial_list(gens, S))};
  };
  std::vector<CorpusEntry> c;
  c.push_back(entry("poly-2", "polynomial ring", {"x", "y"}, ""));
  c.push_back(entry("poly-4", "polynomial ring", indexed_names(4), ""));
  c.push_back(entry("ci-2", "quadric monomial complete intersection", {"x", "y"}, "x^2, y^2"));
  c.push_back(entry("ci-3", "quadric monomial complete intersection", {"x", "y", "z"}, "x^2, y^2, z^2"));
  c.push_back(entry("mono-x2-xy", "monomial non complete intersection", {"x", "y"}, "x^2, x*y"));
  c.push_back(entry("mono-square", "monomial non complete intersection", {"x", "y"}, "x^2, x*y, y^2"));
  c.push_back(entry("hyper-x2", "quadric hypersurface", {"x"}, "x^2"));
  c.push_back(entry("hyper-cone", "quadric hypersurface", {"x", "y", "z"}, "x*y - z^2"));
  c.push_back(entry("hyper-x3", "cubic hypersurface", {"x"}, "x^3"));
  c.push_back(entry("hyper-cubic", "cubic hypersurface", {"x", "y"}, "x^3 + y^3"));
  for (int a : {2, 3}) {
    RingPtr S = roos_ring();
    c.push_back(CorpusEntry{"roos-" + std::to_string(a), "Roos family", roos_algebra(S, a)});
  }
  return c;
}

const std::vector<std::string>& theorem_families() {
  static const std::vector<std::string> f{"main", "descent", "ascent", "hypersurface", "extremal",
                                          "groebner", "canonical", "roos", "taylor"};
  return f;
}

std::string family_of(const std::string& check) {
  if (check.rfind("main-theorem", 0) == 0) return "main";
  if (check == "slope-descent") return "descent";
  if (check == "slope-ascent") return "ascent";
  if (check.rfind("hypersurface", 0) == 0) return "hypersurface";
  if (check.rfind("groebner", 0) == 0) return "groebner";
  if (check.rfind("roos", 0) == 0) return "roos";
  return check;
}

namespace {

using Task = std::function<std::vector<Verdict>(std::vector<std::string>&)>;

Verdict configuration_error(const std::string& check, const std::string& subject, const std::exception& e) {
  Verdict v;
  v.check = check;
  v.subject = subject;
  v.status = Status::Inconclusive;
  v.detail = std::string("configuration error: ") + e.what();
  return v;
}

Verdict koszul_verdict(const QuotientRing& R, const std::string& name, const CheckOptions& opts) {
  RateCertificate rc = certified_rate(R, opts.hmax, opts.delta, opts.resolution);
  Verdict v = koszul_probe(rc.k_table);
  v.check = "koszul";
  v.subject = name;
  if (v.status != Status::Refuted && rc.exact() && !R.is_polynomial_ring()) {
    v.status = Status::Verified;
    note(v, "quadratic Gröbner basis");
  }
  return v;
}

void add_family_tasks(std::vector<Task>& tasks, const std::string& family, const std::string& name,
                      const Ideal& ideal, const CheckOptions& opts) {
  auto one = [](Verdict v) { return std::vector<Verdict>{std::move(v)}; };
  Instance inst = make_instance(name, ideal);
  if (family == "koszul") {
    tasks.push_back([=](auto&) { return one(koszul_verdict(inst.R, name, opts)); });
    return;
  }
  if (family == "taylor") {
    tasks.push_back([=](auto&) { return one(check_taylor_bounds(ideal)); });
    return;
  }
  if (family == "main")
    tasks.push_back([=](auto&) { return check_main_theorem(inst, opts); });
  else if (family == "descent")
    tasks.push_back([=](auto&) { return one(check_slope_descent(inst, residue_field(ideal.ring()), opts)); });
  else if (family == "ascent")
    tasks.push_back([=](auto&) { return one(check_slope_ascent(inst, opts)); });
  else if (family == "hypersurface")
    tasks.push_back([=](auto&) { return check_hypersurface(inst, residue_field(ideal.ring()), opts); });
  else if (family == "extremal")
    tasks.push_back([=](auto&) { return one(check_extremal(inst, opts)); });
  else if (family == "groebner")
    tasks.push_back([=](auto& notes) { return check_groebner_bounds(inst, opts, &notes); });
  else if (family == "canonical")
    tasks.push_back([=](auto&) { return one(check_canonical(inst, opts)); });
  else
    throw std::invalid_argument("unknown check family: " + family);
}

HarnessReport run_tasks(const std::vector<std::pair<std::string, Task>>& tasks, bool parallel) {
  std::vector<std::vector<Verdict>> results(tasks.size());
  std::vector<std::vector<std::string>> notes(tasks.size());
  std::vector<double> seconds(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      results[k] = tasks[k].second(notes[k]);
    } catch (const BudgetExceeded&) {
      Verdict v;
      v.check = tasks[k].first;
      v.status = Status::Inconclusive;
      v.detail = "generator budget exhausted";
      v.limited_side = "budget";
      results[k] = {v};
    } catch (const std::exception& e) {
      results[k] = {configuration_error(tasks[k].first, "", e)};
    }
    seconds[k] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  HarnessReport r;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    for (auto& v : results[k]) {
      r.verdicts.push_back(std::move(v));
      r.seconds.push_back(seconds[k]);
    }
    for (auto& n : notes[k]) r.notes.push_back(std::move(n));
  }
  return r;
}

}  // namespace

HarnessReport run_family(const std::string& family, const Ideal& ideal, const CheckOptions& opts) {
  std::vector<Task> tasks;
  add_family_tasks(tasks, family, ideal.to_string(), ideal, opts);
  std::vector<std::pair<std::string, Task>> named;
  for (auto& t : tasks) named.emplace_back(family, std::move(t));
  return run_tasks(named, false);
}

HarnessReport run_all_checks(const CheckOptions& opts, bool parallel) {
  std::vector<std::pair<std::string, Task>> named;
  auto add = [&](const std::string& family, const std::string& name, const Ideal& ideal) {
    std::vector<Task> tasks;
    add_family_tasks(tasks, family, name, ideal, opts);
    for (auto& t : tasks) named.emplace_back(family + " " + name, std::move(t));
  };
  for (const auto& e : builtin_corpus()) {
    if (e.ideal.empty()) {
      add("koszul", e.name, e.ideal);
      continue;
    }
    const bool quadratic = std::all_of(e.ideal.generators().begin(), e.ideal.generators().end(),
                                       [](const Polynomial& g) { return g.degree() == 2; });
    if (quadratic && e.provenance != "Roos family") add("koszul", e.name, e.ideal);
    for (const char* f : {"main", "descent", "ascent", "extremal", "groebner", "canonical"}) add(f, e.name, e.ideal);
    if (e.ideal.size() == 1) add("hypersurface", e.name, e.ideal);
    if (e.ideal.is_monomial()) add("taylor", e.name, e.ideal);
    if (e.provenance == "Roos family") {
      int a = e.name.back() - '0';
      named.emplace_back("roos " + e.name, [a, opts](auto&) { return check_roos(a, opts); });
    }
  }

  // Instances outside the plain S/I shape.
  {
    RingPtr S = make_ring(Field(0), {"x", "y"});
    Instance inst = make_instance("K[x,y]/(x^2)", QuotientRing(S), {parse_polynomial("x^2", S)});
    CyclicModule M{"R/(y)", {parse_polynomial("y", S)}};
    named.emplace_back("descent exact", [inst, M, opts](auto&) {
      return std::vector<Verdict>{check_slope_descent(inst, M, opts)};
    });
    Instance lin = make_instance("K[x,y]/(x)", QuotientRing(S), {parse_polynomial("x", S)});
    named.emplace_back("hypersurface linear", [lin, S, opts](auto&) {
      return check_hypersurface(lin, residue_field(S), opts);
    });
  }
  {
    RingPtr S = make_ring(Field(0), {"x", "y", "z"});
    QuotientRing Q(Ideal(S, {parse_polynomial("x^2", S)}));
    Instance inst = make_instance("K[x,y,z]/(x^2) -> /(y^2,z^2)", Q, parse_polynomial_list("y^2, z^2", S));
    named.emplace_back("canonical over quotient", [inst, opts](auto&) {
      return std::vector<Verdict>{check_canonical(inst, opts)};
    });
    named.emplace_back("main over quotient", [inst, opts](auto&) { return check_main_theorem(inst, opts); });
    Instance hyp = make_instance("K[x,y,z]/(x^2) -> /(y^2)", Q, {parse_polynomial("y^2", S)});
    named.emplace_back("hypersurface over quotient", [hyp, S, opts](auto&) {
      return check_hypersurface(hyp, residue_field(S), opts);
    });
  }
  for (const auto& I : random_monomial_ideals(4, opts.delta.seed)) {
    named.emplace_back("taylor random", [I](auto&) { return std::vector<Verdict>{check_taylor_bounds(I)}; });
  }
  return run_tasks(named, parallel);
}

bool HarnessReport::any_refuted() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == Status::Refuted; });
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["check"] = v.check;
  j["subject"] = v.subject;
  j["status"] = status_name(v.status);
  j["detail"] = v.detail;
  if (v.witness) j["witness"] = {{"i", v.witness->i}, {"j", v.witness->j}, {"values", v.witness->values}};
  nlohmann::json cut = nlohmann::json::object();
  for (const auto& [k, n] : v.cutoffs) cut[k] = n;
  j["cutoffs"] = cut;
  if (!v.limited_side.empty()) j["limited_side"] = v.limited_side;
  return j;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "[" << status_name(v.status) << "] " << v.check << " " << v.subject << ": " << v.detail;
  if (v.witness) os << " (witness i=" << v.witness->i << " j=" << v.witness->j << " " << v.witness->values << ")";
  if (!v.limited_side.empty()) os << " [limited: " << v.limited_side << "]";
  return os.str();
}

std::string HarnessReport::to_text() const {
  std::ostringstream os;
  for (const auto& v : verdicts) os << verdict_text(v) << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  return os.str();
}

nlohmann::json HarnessReport::to_json(bool with_timings) const {
  nlohmann::json j;
  j["verdicts"] = nlohmann::json::array();
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    nlohmann::json v = verdict_json(verdicts[k]);
    if (with_timings) v["seconds"] = seconds[k];
    j["verdicts"].push_back(std::move(v));
  }
  j["notes"] = notes;
  return j;
}

}  // namespace koszul
