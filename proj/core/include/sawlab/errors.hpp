#pragma once

#include <stdexcept>
#include <string>

namespace sawlab {

// Every domain error carries a stable code so callers (and tests) can match
// on the condition rather than the message text.
enum class errc {
    non_unit_step,
    repeated_vertex,
    empty_set,
    not_closing,
    length_two_excluded,
    odd_polygon_length,
    invalid_polygon,
    budget_exceeded,
    insufficient_data,
    zero_count,
    invalid_length,
    format_version_mismatch,
    checksum_mismatch,
    count_mismatch,
    not_join_plaquette,
    not_disjoint,
    vertical_edges_not_split,
    vertical_intervals_disjoint,
    not_joinable,
    wrong_class,
    constraint_violation,
    not_regulation,
    not_extendable,
    invalid_params,
    ambiguous_comparison,
    hypothesis_unmet,
    empty_domain,
    io_error,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what, long long index = -1)
        : std::runtime_error(what), code_(code), index_(index) {}

    errc code() const { return code_; }
    // Position payload for NonUnitStep / RepeatedVertex style errors.
    long long index() const { return index_; }

  private:
    errc code_;
    long long index_;
};

[[noreturn]] inline void fail(errc code, const std::string& what, long long index = -1) {
    throw error(code, what, index);
}

} // namespace sawlab
