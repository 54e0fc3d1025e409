#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sawlab/lattice.hpp"
#include "sawlab/rational.hpp"

namespace sawlab {

enum class ObjectClass { walk_rooted, walk_ne0, polygon, first, first_nm };

std::string class_token(ObjectClass c, int m = 0);
std::pair<ObjectClass, int> parse_class_token(const std::string& s);

struct EnumConfig {
    uint64_t node_budget = 0; // 0 = take SAWLAB_BUDGET from the environment, else unlimited
    int shards = 1;

    uint64_t effective_budget() const;
};

struct EnsembleTable {
    ObjectClass cls = ObjectClass::walk_rooted;
    int n = 0;
    int m = 0; // completion length for first_nm
    uint64_t count = 0;
    bool full = false;
    std::vector<std::string> members; // serialized, deterministic order
    int format_version = 1;
};

// Exact deterministic enumeration. Classes:
//   walk_rooted  walks with gamma_0 = 0
//   walk_ne0     walks with NE(gamma) = 0, members sorted by serialization
//   polygon      polygons with NE = 0, members are direction strings
//   first        walks with NE(gamma) = gamma_0 = 0
//   first_nm     members of first admitting a length (m-n) second part
EnsembleTable enumerate(ObjectClass cls, int n, bool full = false, const EnumConfig& cfg = {},
                        int m = 0);

uint64_t count_class(ObjectClass cls, int n, const EnumConfig& cfg = {}, int m = 0);

// Walks in SAW_n whose endpoint neighbours the origin.
uint64_t closing_count(int n, const EnumConfig& cfg = {});
Rational closing_probability(int n, const EnumConfig& cfg = {});

struct CountsTable {
    int max_n = 0;
    std::vector<uint64_t> c; // c[i] = c_i, index 0..max_n; c_0 = 1 by convention
    std::vector<uint64_t> p; // p[i] = p_i, zero for odd or i < 4
    std::vector<uint64_t> closing; // closing[i] = closing_count(i)
};
CountsTable counts_table(int max_n, const EnumConfig& cfg = {}, bool with_closing = true);

struct MuEstimate {
    double lo = 0;
    double hi = 0;
    double estimate = 0;
};
// Bracket from p_n <= (d-1) mu^n and c_n >= mu^n at d = 2.
MuEstimate estimate_mu(int max_n, const EnumConfig& cfg = {});
MuEstimate estimate_mu(const CountsTable& t);

struct ExponentReport {
    int n = 0;
    double mu = 0;
    std::optional<double> theta_n; // even n only
    double xi_n = 0;
    Rational closing_prob; // at n (zero for even n)
};
ExponentReport exponents(int n, double mu, const CountsTable& t);

struct TypicalitySets {
    std::vector<int> hpn; // even n with p_n >= n^-zeta mu^n
    std::vector<int> hcp; // even n with closing probability at n-1 >= n^-zeta
};
TypicalitySets typicality_sets(double zeta, double mu, int lo, int hi, const CountsTable& t);

// Ensemble persistence. Line 1: "SAWLAB 1 <class> <n> <count>", one member per
// line, then a "CHECKSUM <hex>" trailer over the member lines.
void save_ensemble(const EnsembleTable& t, const std::string& path);
EnsembleTable load_ensemble(const std::string& path);

// CSV with columns n, c_n, p_n, closing_count, closing_probability_num, closing_probability_den.
void write_counts_csv(const CountsTable& t, const std::string& path);

} // namespace sawlab
