#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqcheck/emodule.hpp"

namespace sqcheck {

// Margolis homology H(M; Q) = ker Q / im Q, degreewise.
struct MargolisReport {
    Primitive which = Primitive::Q0;
    // Homology dimensions; zero outside the window, where they are not
    // certified.
    PoincareSeries homology;
    // [lowest degree of M, max_degree - shift]
    Window window;
};

// Throws IntegrityError if M fails check_relations.
MargolisReport margolis_homology(const EModule& m, Primitive which);

struct FreenessWitness {
    Primitive which;
    int degree;
    std::int64_t dimension;
};

// "Free on [lo, hi]": both Margolis homologies vanish on the Q1 window.
// Nothing is claimed above hi.
struct FreenessVerdict {
    bool free = false;
    Window window;
    std::optional<FreenessWitness> witness;
};

FreenessVerdict is_free_in_window(const EModule& m);

// Solution g of S = g * (1 + t)(1 + t^3), computed ascending as
// g_d = S_d - g_{d-1} - g_{d-3} - g_{d-4}. `exact` is false if any g_d is
// negative; the raw coefficients are kept either way.
struct SeriesQuotient {
    std::vector<std::int64_t> coeffs;
    bool exact = false;
    // First degree with a negative coefficient, or -1.
    int first_negative = -1;

    // The quotient as a series; throws AccountingError unless exact.
    PoincareSeries series() const { return PoincareSeries(coeffs); }
};

SeriesQuotient series_div_by_E(const PoincareSeries& s);

} // namespace sqcheck
