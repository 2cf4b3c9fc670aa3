#ifndef CAMFAN_VERIFY_HPP
#define CAMFAN_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "camfan/bridges.hpp"

namespace camfan {

struct SuiteResult {
  std::string suite;
  std::string coxeter;
  bool pass = true;
  std::map<std::string, long long> counts;
  double runtime_ms = 0;
  std::string counterexample;
};

/// Suites: span, zeta, liso, nc, conj101, quasicartan, narayana.
std::vector<std::string> suite_names();

/// Runs one suite for one Coxeter word. Suites that only apply to bipartite
/// words (liso, the geometric part of nc) mark themselves skipped when the
/// word is not commutation-equivalent to c+c-. A caller-chosen bipartition
/// overrides the diagram two-coloring when it matches the word.
SuiteResult run_suite(const CoxeterGroup& g, const CoxWord& c, const std::string& suite,
                      const std::optional<Bipartition>& bip = std::nullopt);

/// Cartesian product of words and suites, optionally fanned out over worker
/// threads. Results come back in deterministic (word-major) order.
std::vector<SuiteResult> run_suites(const CoxeterGroup& g, const std::vector<CoxWord>& words,
                                    const std::vector<std::string>& suites, int threads = 1,
                                    const std::optional<Bipartition>& bip = std::nullopt);

std::string report_json(const CoxeterGroup& g, const std::vector<SuiteResult>& results);

}  // namespace camfan

#endif
