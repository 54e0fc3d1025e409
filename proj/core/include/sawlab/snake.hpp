#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sawlab/enumeration.hpp"
#include "sawlab/lattice.hpp"
#include "sawlab/rational.hpp"

namespace sawlab {

// Completion counts for a first part: second parts of the given length that
// extend gamma to a walk with NE at the origin.
struct CompletionCount {
    uint64_t total = 0;
    uint64_t closing = 0;
};
CompletionCount count_completions(const Walk& gamma, int ext_len, const EnumConfig& cfg = {});

bool in_first_class(const Walk& gamma); // NE(gamma) = gamma_0 = 0

// q_{n,m}(gamma): probability that a uniform walk of length m with NE at the
// origin and first part gamma closes. Exact.
Rational conditional_closing_q(int n, int m, const Walk& gamma, const EnumConfig& cfg = {});

// Phi-hat: first parts whose conditional closing probability strictly
// exceeds m^-alpha.
bool phi_hat_contains(const Walk& gamma, int m, double alpha, const EnumConfig& cfg = {});
std::vector<Walk> phi_hat(int n, int m, double alpha, const EnumConfig& cfg = {});

struct SnakeParams {
    double alpha = 0.5; // inverse charm
    double beta = 1.0;  // snake length exponent, in (0,1]
    double eta = 0.25;  // charm deficit, in (0, beta)
    int n = 9;          // odd
    int ell = 9;        // <= n
    int d = 2;

    double delta() const { return beta - eta - alpha; }
    void validate_shape() const;      // beta/eta/n/ell ranges
    void validate_hypothesis() const; // additionally delta > 0
};

struct SnakeConstants {
    double c = 0; // 2^(1/(5(4^d+1)))
    double K = 0; // 20 (4^d+1) log(4d)/log 2
};
SnakeConstants snake_constants(int d);

// Indices k in [0, ell] with ell - k even at which gamma's prefix is
// charming: a shared-length extension closes with probability above n^-alpha.
std::vector<int> charming_indices(const Walk& gamma, const SnakeParams& params,
                                  const EnumConfig& cfg = {});

struct CharmingSnakeReport {
    bool member = false;
    int charming_in_window = 0;
    double required = 0; // n^(beta-eta)/4
};
CharmingSnakeReport charming_snake_test(const Walk& gamma, const SnakeParams& params,
                                        const EnumConfig& cfg = {});

// Fraction of NE-rooted polygons of length n+1 whose traversal prefix of
// length ell lies in the charming snake set.
Rational cs_probability(const SnakeParams& params, const EnumConfig& cfg = {});

struct SnakeHypothesisReport {
    SnakeParams params;
    SnakeConstants constants;
    Rational lhs;          // cs_probability
    double rhs = 0;        // c^(-n^delta / 2)
    bool hypothesis_met = false;
    double n_threshold = 0; // K^(1/delta)
    bool n_at_threshold = false;
};
SnakeHypothesisReport snake_hypothesis_eval(const SnakeParams& params, const EnumConfig& cfg = {});

// X statistic: number of traversal prefixes of a polygon lying in the
// corresponding Phi-hat set for completions of fixed length m'.
int x_statistic(const Polygon& gamma, int ell, int m_prime, double alpha,
                const EnumConfig& cfg = {});

struct TypicalityParams {
    double chi = 0;
    double eps1 = 0.1;
    double eps2 = 0.2; // > eps1
    double a = 0;
    int i = 0; // dyadic scale index (bookkeeping only at desk scale)

    void validate() const;
};

struct ClosecardReport {
    bool hypothesis_met = false; // closing probability at n reaches n^-alpha'
    std::vector<int> bad_indices;
    double bound = 0; // 2 n^(1-delta')
};
ClosecardReport closecard_report(int n, double alpha_prime, double delta_prime,
                                 const EnumConfig& cfg = {});

struct TypicalPairReport {
    bool in_E = false;
    bool cpt_ok = false;
    ClosecardReport closecard;
};
TypicalPairReport typical_pair_checks(int k, int j, const TypicalityParams& params,
                                      const EnumConfig& cfg = {});

} // namespace sawlab
