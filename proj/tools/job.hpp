#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "koszul/polynomial.hpp"

namespace koszul::cli {

/// Parse or validation failure anchored at a 1-based line and column.
class JobError : public std::runtime_error {
 public:
  JobError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_, column_;
  std::string message_;
};

struct JobSpec {
  std::uint32_t characteristic = 0;
  std::vector<std::string> vars;
  /// grevlex, grlex, lex or weights.
  std::string order = "grevlex";
  std::vector<int> weights;
  bool has_ring = false;
  bool has_ideal = false;
  std::vector<Polynomial> generators;
  RingPtr ring;

  std::string command;
  /// Polynomial argument of nf.
  std::optional<Polynomial> poly;
  /// Family name of check.
  std::string check_name;
  bool check_all = false;

  int hmax = 5;
  std::string format = "text";
  std::uint64_t seed = 1;
  int a = 2;
  bool check_poincare = false;
  std::string over = "ambient";
  std::string module = "ring";
  std::size_t budget = 5000;
  int dmax = 0;
  std::size_t permutations = 720;
  std::size_t weight_samples = 8;
  bool timings = false;
};

/// Grammar: statements separated by ';' or newlines (a line ending in ','
/// continues), '#' starts a comment.
///   ring p=<char> vars=<a,b,..|x1..xn> [order=grevlex|grlex|lex] [weights=w1,..]
///   ideal <poly>, <poly>, ...
///   cmd <name> [args] [--option value]...
JobSpec parse_job(std::string_view text);

/// Canonical job text; parse_job(render_job(s)) describes the same job.
std::string render_job(const JobSpec& spec);

const std::vector<std::string>& command_names();

}  // namespace koszul::cli
