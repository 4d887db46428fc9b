// Integration report shared by the finite, box-algebra, and grid integrators.
#pragma once

#include "famint/interval.hpp"

#include <optional>
#include <string>

namespace famint {

/// Certified outcome of an integration run. `lower`/`upper` are an outer
/// enclosure of the true lower/upper sums at the witness partition, so
/// lower <= true integral candidates <= upper always holds; `integrable`
/// means the enclosed gap fell below eps within the schedule.
struct IntegralReport {
    Rat lower{0};
    Rat upper{0};
    Rat eps{0};
    bool integrable = false;
    std::size_t witness_cell_count = 0;
    std::optional<Rat> value;        // midpoint, present when the gap <= eps
    std::optional<Rat> error_bound;  // half-gap
    bool oracle_exact = true;
    std::string schedule = "uniform";

    Rat gap() const { return upper - lower; }

    /// Fills value/error_bound from the bounds when the gap is within eps.
    void finalize();
};

std::string report_to_text(const IntegralReport& r);
std::string report_to_json(const IntegralReport& r);

}  // namespace famint
