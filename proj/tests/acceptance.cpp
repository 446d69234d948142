// Runs every acceptance criterion at full scale and prints one line each.
// Exit status is the number of failed criteria.

#include "domgraph/verify.hpp"

#include <cstdio>
#include <map>

using namespace domgraph;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr std::size_t kSamples = 1000;

// Minimum number of individual checks each criterion must perform at the
// settings above. Sampled criteria perform at least four checks per graph.
struct Coverage {
  std::size_t min_checked;
  bool exact;
};

const std::map<std::string, Coverage> kCoverage{
    {"paths", {60, true}},        // 30 paths, value and time
    {"families", {24, true}},     // 8 sizes x 3 families
    {"ore", {12112, true}},       // connected graphs with 2 <= n <= 8
    {"ckshep", {2 * kSamples, false}},
    {"soundness", {2 * kSamples * 4 * 4, false}},
    {"proposition", {12113, false}},
    {"ramsey", {32768, true}},    // 2^15 labelled graphs
    {"witness", {kSamples * 4, false}},
    {"bounds", {63, true}},
    {"oracle", {995 + kSamples / 5, false}},
    {"roundtrip", {12116, true}}, // corpus lines + A_, D?, D??
};

} // namespace

int main() {
  VerifyOptions opts;
  opts.seed = kSeed;
  opts.samples = kSamples;
  opts.fixture_dir = DOMGRAPH_FIXTURE_DIR;

  int failed = 0;
  for (const auto &r : run_verification({"all"}, opts)) {
    const auto &cov = kCoverage.at(r.id);
    const bool covered = cov.exact ? r.checked == cov.min_checked : r.checked >= cov.min_checked;
    const bool ok = r.passed && covered;
    failed += !ok;
    std::printf("%s %2d %-12s checked=%-6zu %s\n", ok ? "PASS" : "FAIL", r.number, r.id.c_str(), r.checked,
                r.title.c_str());
    if (!covered)
      std::printf("       coverage: expected %s%zu checks\n", cov.exact ? "" : ">= ", cov.min_checked);
    for (const auto &why : r.failures)
      std::printf("       %s\n", why.c_str());
  }
  std::printf("%d criteria failed\n", failed);
  return failed;
}
