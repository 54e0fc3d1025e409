#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sawlab/enumeration.hpp"
#include "sawlab/lattice.hpp"

namespace sawlab {

// Multi-valued map bound: with m the minimum outgoing and M the maximum
// incoming arrow count, |B| >= m |A| / M.
struct MvmReport {
    uint64_t m = 0;
    uint64_t M = 0;
    bool bound_ok = false;
};
MvmReport mvm_check(uint64_t domain_size, uint64_t codomain_size,
                    const std::vector<std::pair<uint64_t, uint64_t>>& arrows);

struct SuiteConfig {
    int max_n = 8;
    double rho = 1.0;           // window fraction for the regulation-join checks
    std::optional<double> mu;   // optional override, recorded in the report
    std::vector<std::string> suites; // empty = all
    uint64_t budget = 0;
    std::string report_path;
    int box = 12;               // scan box for the join contract
};

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::passed;
    std::string detail;
    double wall_ms = 0;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_passed = true;
    std::string config_fingerprint; // the inputs the report was produced from

    std::string to_json(bool include_timing = true) const;
};

std::vector<std::string> suite_names();
SuiteReport run_verification_suite(const SuiteConfig& config);

// Naive reference enumerations, kept deliberately simple and separate from the
// production enumerator: recursive descent over std::set visited sets.
namespace oracle {

uint64_t count_walks(int n);
std::vector<std::string> walks(int n);             // "0,0:DIRS", lexicographic
std::vector<std::string> walks_ne0(int n);         // translated, sorted
std::vector<std::string> first_parts(int n);       // NE = start = origin
uint64_t closing_walk_count(int n);

// Polygons of length n obtained by closing every closing walk of length n-1;
// returns the NE-rooted direction strings with multiplicities.
std::map<std::string, uint64_t> polygon_preimage_multiplicities(int n);
std::vector<std::string> polygons(int n); // sorted distinct

// q computed by filtering NE-rooted walks of length m by their first part.
struct QFilterEntry {
    uint64_t total = 0;
    uint64_t closing = 0;
};
std::map<std::string, QFilterEntry> q_by_first_part(int m);

} // namespace oracle

} // namespace sawlab
