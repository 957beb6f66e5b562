#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// under test except for the shared value types (Monomial, PolynomialF2).

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sqcheck/gf2poly.hpp"

namespace oracle {

// All exponent vectors in the box e_i <= d / i, filtered by degree.
inline std::vector<sqcheck::Monomial> brute_force_monomials(const sqcheck::RingSpec& spec, int d)
{
    const auto gens = spec.generators();
    std::vector<sqcheck::Monomial> out;
    std::vector<int> e(gens.size(), 0);
    for (;;) {
        int deg = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            deg += gens[i] * e[i];
        }
        if (deg == d) {
            sqcheck::Monomial m;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                m.set_exponent(gens[i], static_cast<unsigned>(e[i]));
            }
            out.push_back(m);
        }
        std::size_t i = 0;
        while (i < gens.size()) {
            if ((e[i] + 1) * gens[i] <= d) {
                ++e[i];
                break;
            }
            e[i] = 0;
            ++i;
        }
        if (i == gens.size()) {
            break;
        }
    }
    return out;
}

// Naive GF(2) rank on a dense 0/1 table.
inline std::size_t naive_rank(std::vector<std::vector<int>> rows)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][c] == 1) {
                for (std::size_t k = 0; k < cols; ++k) {
                    rows[r][k] ^= rows[rank][k];
                }
            }
        }
        ++rank;
    }
    return rank;
}

// Splitting-principle oracle for Sq^k(w_m) in H*(BO(N)).
//
// w_m = e_m(x_1..x_N) with Sq(x) = x + x^2, so
//   Sq^k(e_m) = sum_{|S| = m} sum_{T subset S, |T| = k} x^{1_S + 1_T}.
// The symmetric result is rewritten in elementary symmetric polynomials by
// repeatedly cancelling the lex-leading monomial.
class SymmetricOracle {
public:
    using XMon = std::vector<int>;
    using XPoly = std::set<XMon>;

    explicit SymmetricOracle(int rank) : n_(rank) {}

    sqcheck::PolynomialF2 sq(int k, int m) const
    {
        XPoly p;
        for_each_subset(m, [&](const std::vector<int>& s) {
            for_each_subset_of(s, k, [&](const std::vector<int>& t) {
                XMon e(static_cast<std::size_t>(n_), 0);
                for (int i : s) {
                    e[static_cast<std::size_t>(i)] += 1;
                }
                for (int i : t) {
                    e[static_cast<std::size_t>(i)] += 1;
                }
                toggle(p, e);
            });
        });
        return to_elementary(std::move(p));
    }

private:
    static void toggle(XPoly& p, const XMon& m)
    {
        auto [it, inserted] = p.insert(m);
        if (!inserted) {
            p.erase(it);
        }
    }

    template <typename F>
    void for_each_subset(int size, F&& f) const
    {
        std::vector<int> all(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            all[static_cast<std::size_t>(i)] = i;
        }
        for_each_subset_of(all, size, f);
    }

    template <typename F>
    static void for_each_subset_of(const std::vector<int>& from, int size, F&& f)
    {
        if (size < 0 || size > static_cast<int>(from.size())) {
            return;
        }
        std::vector<bool> pick(from.size(), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            std::vector<int> s;
            for (std::size_t i = 0; i < from.size(); ++i) {
                if (pick[i]) {
                    s.push_back(from[i]);
                }
            }
            f(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }

    XPoly elementary(int j) const
    {
        XPoly p;
        for_each_subset(j, [&](const std::vector<int>& s) {
            XMon e(static_cast<std::size_t>(n_), 0);
            for (int i : s) {
                e[static_cast<std::size_t>(i)] = 1;
            }
            p.insert(e);
        });
        return p;
    }

    static XPoly times(const XPoly& a, const XPoly& b)
    {
        XPoly out;
        for (const auto& x : a) {
            for (const auto& y : b) {
                XMon z = x;
                for (std::size_t i = 0; i < z.size(); ++i) {
                    z[i] += y[i];
                }
                toggle(out, z);
            }
        }
        return out;
    }

    sqcheck::PolynomialF2 to_elementary(XPoly p) const
    {
        std::vector<sqcheck::Monomial> terms;
        while (!p.empty()) {
            const XMon lead = *p.rbegin(); // lex largest
            XPoly prod{XMon(static_cast<std::size_t>(n_), 0)};
            sqcheck::Monomial w;
            for (int j = 1; j <= n_; ++j) {
                const int next = j < n_ ? lead[static_cast<std::size_t>(j)] : 0;
                const int power = lead[static_cast<std::size_t>(j - 1)] - next;
                if (power > 0) {
                    w.set_exponent(j, static_cast<unsigned>(power));
                    for (int r = 0; r < power; ++r) {
                        prod = times(prod, elementary(j));
                    }
                }
            }
            terms.push_back(w);
            for (const auto& x : prod) {
                toggle(p, x);
            }
        }
        return sqcheck::PolynomialF2::from_terms(std::move(terms));
    }

    int n_;
};

// Random homogeneous polynomial of the given degree in the ring.
inline sqcheck::PolynomialF2 random_homogeneous(std::mt19937& rng, const sqcheck::RingSpec& spec, int d)
{
    auto mons = brute_force_monomials(spec, d);
    std::vector<sqcheck::Monomial> picked;
    std::bernoulli_distribution coin(0.5);
    for (auto& m : mons) {
        if (coin(rng)) {
            picked.push_back(m);
        }
    }
    return sqcheck::PolynomialF2::from_terms(std::move(picked));
}

} // namespace oracle
