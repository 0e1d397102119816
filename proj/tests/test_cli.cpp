#include <gtest/gtest.h>

#include "job.hpp"
#include "json.hpp"
#include "run.hpp"

using namespace koszul;
using namespace koszul::cli;

namespace {

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    parse_job(text);
  } catch (const JobError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no error for: " << text;
  return {0, 0};
}

RunResult run(const std::string& text) { return run_job(parse_job(text)); }

}  // namespace

TEST(Job, ParsesTheCanonicalExample) {
  JobSpec s = parse_job("ring p=0 vars=x,y; ideal x^2, y^2; cmd betti --hmax 4");
  EXPECT_EQ(s.characteristic, 0u);
  EXPECT_EQ(s.vars, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(s.generators.size(), 2u);
  EXPECT_EQ(s.generators[1].to_string(), "y^2");
  EXPECT_EQ(s.command, "betti");
  EXPECT_EQ(s.hmax, 4);
  EXPECT_EQ(s.format, "text");
}

TEST(Job, MultiLineWithCommentsAndRanges) {
  JobSpec s = parse_job(
      "# a job\n"
      "ring p=32003 vars=x1..x4 order=lex\n"
      "ideal x1^2,\n"
      "      x2*x3 - x4^2\n"
      "cmd gb --format structured\n");
  EXPECT_EQ(s.characteristic, 32003u);
  EXPECT_EQ(s.vars.size(), 4u);
  EXPECT_EQ(s.vars[3], "x4");
  EXPECT_EQ(s.generators.size(), 2u);
  EXPECT_EQ(s.ring->order().kind(), OrderKind::Lex);
  EXPECT_EQ(s.format, "structured");
}

TEST(Job, WeightsAndCommandArguments) {
  JobSpec s = parse_job("ring p=0 vars=x,y,z weights=1,2,3; ideal x*y; cmd nf x^2*y + z^2 --hmax 2");
  EXPECT_EQ(s.order, "weights");
  EXPECT_EQ(s.weights, (std::vector<int>{1, 2, 3}));
  ASSERT_TRUE(s.poly.has_value());
  EXPECT_EQ(s.poly->to_string().find("z^2") != std::string::npos, true);
  JobSpec c = parse_job("cmd check --all --seed 9 --permutations 4 --weight-samples 0");
  EXPECT_TRUE(c.check_all);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.permutations, 4u);
  JobSpec r = parse_job("cmd roos --a 3 --hmax 3 --check-poincare");
  EXPECT_EQ(r.a, 3);
  EXPECT_TRUE(r.check_poincare);
  JobSpec m = parse_job("ring p=0 vars=x; ideal x^2; cmd betti --over self --module R+");
  EXPECT_EQ(m.module, "augmentation");
}

TEST(Job, ErrorsCarryLineAndColumn) {
  EXPECT_EQ(error_position("ring p=4 vars=x"), std::make_pair(std::size_t{1}, std::size_t{8}));
  EXPECT_EQ(error_position("ring p=0 vars=x,y\nideal x^2 + y\ncmd gb"), std::make_pair(std::size_t{2}, std::size_t{7}));
  EXPECT_EQ(error_position("ring p=0 vars=x,y; ideal x^2 + w; cmd gb"), std::make_pair(std::size_t{1}, std::size_t{32}));
  EXPECT_EQ(error_position("ring p=0 vars=x\ncmd frobnicate"), std::make_pair(std::size_t{2}, std::size_t{5}));
  EXPECT_EQ(error_position("ring p=0 vars=x; cmd gb --hmax"), std::make_pair(std::size_t{1}, std::size_t{25}));
  EXPECT_EQ(error_position("ring p=0 vars=x; ideal x^2"), std::make_pair(std::size_t{1}, std::size_t{27}));
  EXPECT_EQ(error_position("ideal x^2; cmd gb"), std::make_pair(std::size_t{1}, std::size_t{1}));
  EXPECT_EQ(parse_job(render_job(parse_job("cmd check --all --timings"))).timings, true);
  EXPECT_EQ(error_position("ring p=0 vars=x; ideal x; ideal x; cmd gb").second, 27u);
  try {
    parse_job("ring p=0 vars=x; cmd gb --bogus 1");
    FAIL();
  } catch (const JobError& e) {
    EXPECT_EQ(std::string(e.what()), "line 1, column 25: unknown option '--bogus'");
  }
}

TEST(Job, RenderRoundTrips) {
  for (const std::string text : {"ring p=0 vars=x,y; ideal x^2, y^2; cmd betti --hmax 4",
                                 "ring p=101 vars=a,b,c order=grlex; ideal a*b - c^2; cmd hilbert",
                                 "ring p=0 vars=x,y weights=2,1; ideal x*y; cmd nf x^2*y --format structured",
                                 "cmd roos --a 3 --check-poincare", "cmd check --all",
                                 "ring p=0 vars=x,y; ideal x^2; cmd check main --budget 77 --dmax 9"}) {
    JobSpec a = parse_job(text);
    std::string once = render_job(a);
    JobSpec b = parse_job(once);
    EXPECT_EQ(render_job(b), once) << text;
    EXPECT_EQ(run_job(a).output, run_job(b).output) << text;
  }
}

TEST(Run, BettiExample) {
  RunResult r = run("ring p=0 vars=x,y; ideal x^2, y^2; cmd betti --hmax 4");
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_NE(r.output.find("reg"), std::string::npos);
  RunResult j = run("ring p=0 vars=x,y; ideal x^2, y^2; cmd betti --format structured");
  auto doc = nlohmann::json::parse(j.output);
  EXPECT_EQ(doc["reg"]["value"], 2);
  EXPECT_EQ(doc["complete"], true);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run("cmd roos --a 2 --hmax 3 --check-poincare").exit_code, kOk);
  RunResult probe = run("ring p=0 vars=x; ideal x^3; cmd koszul-probe --hmax 3");
  EXPECT_EQ(probe.exit_code, kRefuted);
  EXPECT_NE(probe.output.find("Refuted"), std::string::npos);
  RunResult budget = run("cmd roos --a 3 --hmax 6 --budget 100");
  EXPECT_EQ(budget.exit_code, kBudgetExhausted);
  EXPECT_EQ(run("ring p=0 vars=x,y; ideal x^2, y^2; cmd betti --dmax 1").exit_code, kBudgetExhausted);
  EXPECT_EQ(run("ring p=0 vars=x,y; ideal x; cmd check main").exit_code, kOk);
  EXPECT_EQ(run("ring p=0 vars=x,y; cmd delta").exit_code, kConfigError);
}

TEST(Run, RoosPoincareRows) {
  RunResult r = run("cmd roos --a 2 --hmax 3 --check-poincare");
  EXPECT_NE(r.output.find("t^1: 6s"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("match: yes"), std::string::npos) << r.output;
}

TEST(Run, OtherCommands) {
  EXPECT_EQ(run("ring p=0 vars=x,y; ideal x^2 + y^2, x*y; cmd gb").output, "order: grevlex[0,1]\nx*y\nx^2 + y^2\ny^3\n");
  EXPECT_EQ(run("ring p=0 vars=x,y; ideal x^2, y^2; cmd nf x^2 + x*y").output, "x*y\n");
  EXPECT_NE(run("ring p=0 vars=x,y,z; ideal x*y - z^2; cmd hilbert").output.find("(1 + s)/(1-s)^2"), std::string::npos);
  EXPECT_NE(run("ring p=0 vars=x,y,z; ideal x^2 - y*z, y^2 - x*z, z^2 - x*y; cmd delta").output.find("G-quadratic: yes"),
            std::string::npos);
  EXPECT_NE(run("ring p=0 vars=x,y; ideal x^2, x*y; cmd poincare --hmax 3").output.find("sup j/i"), std::string::npos);
  EXPECT_NE(run("ring p=0 vars=x,y; ideal x^2, x*y; cmd initial").output.find("in(I)"), std::string::npos);
  RunResult inv = run("ring p=0 vars=x,y; ideal x^2, x*y; cmd invariants --hmax 3 --format structured");
  EXPECT_TRUE(nlohmann::json::parse(inv.output).contains("rate"));
}

TEST(Run, StructuredOutputIsStable) {
  const std::string job = "ring p=0 vars=x,y; ideal x^2, x*y; cmd check main --format structured";
  RunResult a = run(job), b = run(job);
  EXPECT_EQ(a.output, b.output);
  auto doc = nlohmann::json::parse(a.output);
  EXPECT_EQ(doc["summary"]["Verified"], 4);
}
