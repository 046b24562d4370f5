#ifndef PTB_REPORT_HPP
#define PTB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "ptb/arith.hpp"

namespace ptb {

using ordered_json = nlohmann::ordered_json;

/// Full per-n result record.  Sections that do not apply (or fail) carry a
/// "skipped"/"error" note instead of aborting the whole report.
ordered_json bundle_report(int n, double tol = 1e-9, int k_lo = -3, int k_hi = 3);

/// Point cloud of every computed point for plotting.
/// Columns: tag, x_re, x_im, y_re, y_im, z_re, z_im.
std::string point_cloud_csv(int n);

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> messages;
};

/// Known verification suites: identities, gcd-table, separability, F-entries,
/// phi-derivation, membership, oracle, psl, relation.
const std::vector<std::string>& all_suites();

/// Run the named suites over n in [lo, hi] (each suite clamps the range to
/// its own domain).  Failures are results, not exceptions.
std::vector<SuiteResult> run_verify(int lo, int hi, const std::vector<std::string>& suites);

ordered_json verify_results_json(const std::vector<SuiteResult>& results);

}  // namespace ptb

#endif
