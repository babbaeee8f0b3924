// One PASS/FAIL line per acceptance criterion. Exits 0 after reporting
// unless --strict is given, in which case any gating failure exits 1.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qinv/claims.hpp"

using namespace qinv;

namespace {

struct Criterion {
  int id;
  std::vector<std::string> suites;
  double budget_s;
  bool gating;
  const char* summary;
};

const std::vector<Criterion> kCriteria = {
    {1, {"sl-invariance"}, 5 * 60, true, "comb property and SL-invariance"},
    {2, {"four-qubit-identities"}, 10 * 60, true, "four-qubit relations"},
    {3, {"filters"}, 30 * 60, true, "filter ideal"},
    {4, {"five-qubit-low"}, 10 * 60, true, "five-qubit degree 4 and 6"},
    {5, {"degree-8"}, 30 * 60, true, "degree 8"},
    {6, {"degree-10"}, 30 * 60, true, "degree 10"},
    {7, {"degree-12"}, 4 * 3600, true, "degree 12"},
    {8, {"characters"}, 5 * 60, true, "characters and Hilbert coefficients"},
    {9, {"graph-states"}, 5 * 60, true, "graph-state table"},
    {10, {"operator-identities"}, 60, true, "operator identities"},
    {11, {"stretch"}, 24 * 3600, false, "degree 14/16 generators (float)"},
};

}  // namespace

int main(int argc, char** argv) {
  bool strict = false, verbose = false, skip_stretch = false;
  std::uint64_t seed = 1;
  std::vector<int> only;
  std::string report_path;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--strict")) strict = true;
    else if (!std::strcmp(argv[i], "--verbose")) verbose = true;
    else if (!std::strcmp(argv[i], "--skip-stretch")) skip_stretch = true;
    else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::stoull(argv[++i]);
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only.push_back(std::stoi(argv[++i]));
    else if (!std::strcmp(argv[i], "--report") && i + 1 < argc) report_path = argv[++i];
    else {
      std::cerr << "usage: acceptance [--strict] [--verbose] [--skip-stretch] [--seed N] [--only K]... [--report FILE]\n";
      return 2;
    }
  }

  std::ofstream report;
  if (!report_path.empty()) report.open(report_path);
  auto emit = [&](const std::string& text) {
    std::cout << text << std::flush;
    if (report) report << text << std::flush;
  };

  bool gating_ok = true;
  for (const auto& c : kCriteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    if (c.id == 11 && skip_stretch) {
      emit("criterion=11 status=FAIL note=not-run(--skip-stretch) gating=no\n");
      continue;
    }
    SuiteOptions opt;
    opt.seed = seed;
    if (verbose) opt.log = &std::cerr;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ClaimResult> claims;
    std::string error;
    try {
      for (const auto& s : c.suites) {
        auto r = run_suite(s, opt);
        claims.insert(claims.end(), r.begin(), r.end());
      }
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::size_t passed = 0, gating_total = 0;
    std::vector<std::string> failed;
    for (const auto& r : claims) {
      if (!r.gating && c.gating) continue;
      ++gating_total;
      if (r.pass) ++passed;
      else failed.push_back(r.id);
    }
    const bool in_time = secs <= c.budget_s;
    const bool pass = error.empty() && failed.empty() && in_time && gating_total > 0;
    std::ostringstream os;
    os << "criterion=" << c.id << " status=" << (pass ? "PASS" : "FAIL") << " claims=" << passed << "/"
              << gating_total << " time=" << static_cast<long>(secs) << "s budget=" << static_cast<long>(c.budget_s)
              << "s gating=" << (c.gating ? "yes" : "no");
    if (!in_time) os << " over-budget";
    if (!failed.empty()) {
      os << " failed=";
      for (std::size_t k = 0; k < failed.size(); ++k) os << (k ? "," : "") << failed[k];
    }
    if (!error.empty()) os << " error=\"" << error << "\"";
    os << "  # " << c.summary << "\n";
    for (const auto& r : claims)
      if (!r.pass || verbose) os << "  " << r.line() << (r.gating ? "" : " (info)") << "\n";
    emit(os.str());
    if (c.gating && !pass) gating_ok = false;
  }
  return strict && !gating_ok ? 1 : 0;
}
