#pragma once

#include <array>
#include <vector>

#include "sqcheck/gf2poly.hpp"

namespace sqcheck {

// Binomial coefficient C(a, b) mod 2 by the Lucas criterion. C(a, 0) = 1 for
// every a, including a = -1. Throws DomainError for b < 0 or (a < 0, b > 0).
int binom_mod2(long a, long b);

// Sq^k(w_m) by the Wu formula, computed afresh:
//   sum_{t=0..k} C(m-k+t-1, t) w_{k-t} w_{m+t},  w_0 = 1,
// with Sq^0 = id and Sq^k(w_m) = 0 for k > m. Ring relations applied.
PolynomialF2 wu_formula(int k, int m, const RingSpec& spec);

// Generator-level tables of Sq^k and of the Milnor primitives Q0 = Sq^1,
// Q1 = Sq^3 + Sq^2 Sq^1 for one ring. The tables are filled at
// construction and never mutated, so a context is safe to share across
// threads.
class SteenrodContext {
public:
    // Replaces the table entry Q_which(w_generator) with `value`. Used to seed
    // faults; the value is not reduced by ring relations.
    struct QOverride {
        int which;
        int generator;
        PolynomialF2 value;
    };

    explicit SteenrodContext(RingSpec spec) : SteenrodContext(spec, {}) {}
    SteenrodContext(RingSpec spec, std::vector<QOverride> overrides);

    const RingSpec& spec() const noexcept { return spec_; }
    bool has_overrides() const noexcept { return overridden_; }

    // Sq^k(w_m); zero for k > m. Throws DomainError for an invalid index.
    const PolynomialF2& sq_generator(int k, int m) const;
    // Q_i(w_m) for i in {0, 1}.
    const PolynomialF2& q_generator(int i, int m) const;

private:
    void check_generator(int m) const;

    RingSpec spec_;
    std::vector<std::vector<PolynomialF2>> sq_; // [m][k], k <= m
    std::array<std::vector<PolynomialF2>, 2> q_;  // [i][m]
    PolynomialF2 zero_;
    bool overridden_ = false;
};

PolynomialF2 sq_on_generator(int k, int m, const SteenrodContext& ctx);

// Sq^k extended to polynomials by the Cartan formula.
PolynomialF2 sq_on_poly(int k, const PolynomialF2& p, const SteenrodContext& ctx);

// Q_i by the generator table and the derivation rule
// Q_i(xy) = Q_i(x) y + x Q_i(y).
PolynomialF2 q_milnor(int i, const PolynomialF2& p, const SteenrodContext& ctx);
PolynomialF2 q_milnor(int i, const Monomial& m, const SteenrodContext& ctx);

// Q1 as Sq^3 + Sq^2 Sq^1, entirely through sq_on_poly. Independent of the
// derivation route; kept as a cross-check.
PolynomialF2 q1_via_sq(const PolynomialF2& p, const SteenrodContext& ctx);

} // namespace sqcheck
