#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "job.hpp"
#include "run.hpp"

using namespace koszul::cli;

int main(int argc, char** argv) {
  CLI::App app{"Graded resolutions, Betti tables and slope checks over exact fields"};
  std::string expr, file, format;
  int threads = 0;
  app.add_option("job", file, "Job file, or - for standard input");
  app.add_option("-e,--execute", expr, "Job text given inline");
  app.add_option("--format", format, "Override the job's output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--threads", threads, "OpenMP threads (default: KOSZUL_THREADS or the runtime default)");
  CLI11_PARSE(app, argc, argv);

  if (threads <= 0)
    if (const char* env = std::getenv("KOSZUL_THREADS")) threads = std::atoi(env);
  if (threads > 0) omp_set_num_threads(threads);

  std::string text;
  if (!expr.empty()) {
    text = expr;
  } else if (file.empty() || file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << "\n";
      return kConfigError;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  JobSpec spec;
  try {
    spec = parse_job(text);
  } catch (const JobError& e) {
    std::cerr << "job error: " << e.what() << "\n";
    return kConfigError;
  }
  if (!format.empty()) spec.format = format;
  RunResult r = run_job(spec);
  (r.exit_code == kConfigError || r.exit_code == kBudgetExhausted ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}
