#pragma once

#include <vector>

#include "sqcheck/emodule.hpp"
#include "sqcheck/steenrod.hpp"

namespace sqcheck {

// Reduced cohomology modules; relation checks run as part of construction
// and a failure throws IntegrityError.
EModule bso_module(int n, int max_degree);
EModule bo_module(int n, int max_degree);
EModule ring_module(const SteenrodContext& ctx);

// Throws ViolationError (element = basis monomial, detail = escaping term)
// if some Q_i(x) with x in H*(BSO(2n-1)) w_{2n}^k has a term whose
// w_{2n}-exponent is not k, or which is not a monomial of the ring. ctx must
// be an even-rank BSO context. Works at the polynomial level so that seeded
// faults with foreign generators are caught.
void check_piece_closure(const SteenrodContext& ctx, int k);

// The span of monomials of reduced H*(BSO(2n)) with w_{2n}-exponent exactly
// k, as a submodule of `ambient` (which must be ring_module(ctx)).
Submodule graded_piece(const SteenrodContext& ctx, const EModule& ambient, int k);
Submodule graded_piece(int n, int k, int max_degree);

// Cohomology of the Thom space MSO_{2n}: basis z.mu in degree deg z + 2n for
// z a monomial of H*(BSO(2n)), with Q0(z mu) = Q0(z) mu and
// Q1(z mu) = (Q1(z) + z w3) mu.
struct ThomModule {
    int n = 0;
    EModule module;
    // Unreduced monomial basis of H*(BSO(2n)) up to max_degree - 2n.
    GradedBasis base;

    // The element z.mu.
    Element element(const PolynomialF2& z) const;
};

ThomModule thom_module(int n, int max_degree);
ThomModule thom_module(const SteenrodContext& ctx);

// z.mu -> z.w_{2n}, degree preserving.
struct ThomEmbedding {
    ThomModule source;
    EModule target;
    GradedMap map;
};

ThomEmbedding thom_embed(int n, int max_degree);

// w_{2n} -> 0 from reduced H*(BSO(2n)) to reduced H*(BSO(2n-1)).
struct Restriction {
    EModule source;
    EModule target;
    GradedMap map;
};

Restriction restriction_map(int n, int max_degree);

// d_J = w2^{2m_1} w4^{2m_2} ... w_{2n}^{2m_n} with sum m_i > 0, for the odd
// rank 2n+1, all of degree <= max_degree, in canonical order.
struct TrivialGenFamily {
    int odd_rank = 3;
    int max_degree = 0;
    std::vector<Monomial> generators;

    PoincareSeries degree_series() const;
};

// Throws DomainError unless odd_rank is odd and >= 3; throws ViolationError if
// some d_J is not annihilated by Q0 and Q1.
TrivialGenFamily trivial_generators(int odd_rank, int max_degree);

} // namespace sqcheck
