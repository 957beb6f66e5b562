#pragma once

#include <map>
#include <optional>
#include <string>

#include "sqcheck/emodule.hpp"
#include "sqcheck/series.hpp"
#include "sqcheck/steenrod.hpp"

namespace sqcheck {

// Where and on what a check failed.
struct Witness {
    std::string stage;
    int degree = -1;
    std::string element;
    std::string detail;
};

struct Verdict {
    std::string name;
    bool pass = true;
    Window window;
    // First failure; always present when pass is false.
    std::optional<Witness> witness;
    std::map<std::string, bool> checks;

    // Marks a check; a check that failed once stays failed.
    void record(const std::string& check, bool ok);
    void fail(const std::string& check, Witness w);
};

// Closure of every piece H*(BSO(2n-1)) w_{2n}^k, 2nk <= D, inside reduced
// H*(BSO(2n)), and equality of the k = 0 piece with H*(BSO(2n-1)).
// Throws DomainError unless n >= 2 and D >= 2n.
Verdict verify_lemma1(int n, int max_degree);
// Same check against a supplied BSO(2n) context (used for seeded faults).
Verdict verify_lemma1(const SteenrodContext& ctx);

// The Thom embedding z.mu -> z.w_{2n} is an injective E-map onto the ideal
// (w_{2n}), complementary to the k = 0 piece, with the series identity
// P(H~ BSO(2n)) = P(H~ BSO(2n-1)) + t^{2n} P(H BSO(2n)).
Verdict verify_lemma2(int n, int max_degree);

struct Theorem3Result {
    Verdict verdict;
    // Free generator counts of the complement of the d_J span.
    PoincareSeries alpha;
    // Degree counts of the trivial generators d_J.
    PoincareSeries beta;
};

// Reduced H*(BSO(odd_rank)) = D + M with D spanned by the d_J (trivial) and
// M free; checked by Margolis homology of the quotient by D on [lo, D-3].
Theorem3Result verify_theorem3(int odd_rank, int max_degree);

struct SplittingReport {
    int n = 0;
    int max_degree = 0;
    PoincareSeries alpha;
    PoincareSeries beta;
    PoincareSeries thom_series;
    Verdict verdict;
    Window window;
};

// Runs lemma 1, lemma 2 and the odd-rank decomposition for BSO(2n-1), then
// checks P(H~ BSO(2n)) = beta + alpha (1+t)(1+t^3) + t^{2n} P(H BSO(2n))
// on the window. Throws DomainError for n < 2.
SplittingReport splitting_report(int n, int max_degree);

// Cyclic-type census of the piece H*(BSO(2n-1)) w_{2n}^k.
struct Remark1Stats {
    int n = 0;
    int k = 0;
    int max_degree = 0;
    // Types of a minimal generating set (coset representatives), degree <= D - 4.
    std::map<CyclicType, int> generator_types;
    // Types of the seeds d_J w_{2n}^k, degree <= D - 4.
    std::map<CyclicType, int> seed_types;
    int seeds = 0;
    // Q0 Q1 x = 0 for every seed.
    bool seeds_q0q1_zero = true;
    Verdict verdict;
};

// Empty statistics if 2nk > D; throws WindowError if the piece starts above
// D - 4, DomainError for n < 2 or k < 1.
Remark1Stats remark1_scan(int n, int k, int max_degree);

} // namespace sqcheck
