#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pignose/signed_perm.hpp"

namespace pignose {

// Bounds for a verification run. Exhaustive polynomial/bijection suites run
// to max_n_poly, integer-valued suites to max_n_int.
struct VerifyOptions {
    int max_n_poly = 5;
    int max_n_int = 7;
    int limit = kDefaultEnumLimit;
};

struct VerifyReport {
    std::string name;
    std::string range;           // human-readable parameter range
    bool pass = false;
    std::string counterexample;  // empty when pass; serialized object + expected vs actual
    double seconds = 0.0;
};

// All check names, alphabetical. "all" is expanded by callers.
const std::vector<std::string>& verify_check_names();

// Runs one named check. Throws Error for unknown names.
VerifyReport run_check(const std::string& name, const VerifyOptions& opts);

// Runs several checks, optionally on worker threads. on_done fires as each
// check completes (serialized); the returned summary is sorted by name.
std::vector<VerifyReport> run_checks(const std::vector<std::string>& names,
                                     const VerifyOptions& opts, int jobs,
                                     const std::function<void(const VerifyReport&)>& on_done);

}  // namespace pignose
