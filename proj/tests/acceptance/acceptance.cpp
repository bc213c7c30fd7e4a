#include <CLI11.hpp>
#include <cstdio>
#include <numeric>

#include "fewbody/verify.hpp"

using namespace fewbody;

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::uint64_t seed = 7;
  bool verbose = false;
  app.add_option("--only", only, "run a single criterion (1-9)")->check(CLI::Range(1, kCriterionCount));
  app.add_option("--seed", seed, "seed for the random draws");
  app.add_flag("-v,--verbose", verbose, "print the data behind each verdict");
  CLI11_PARSE(app, argc, argv);

  std::vector<int> ids;
  if (only) {
    ids.push_back(only);
  } else {
    ids.resize(kCriterionCount);
    std::iota(ids.begin(), ids.end(), 1);
  }
  bool all = true;
  for (const auto& r : run_criteria(ids, seed)) {
    std::printf("criterion %d %s: %s (%d checks, %.2f s)\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(), r.checks,
                r.seconds);
    for (const auto& f : r.failures) std::printf("  failed: %s\n", f.c_str());
    if (verbose) std::printf("  data: %s\n", r.data.dump().c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
