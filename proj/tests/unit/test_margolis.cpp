#include <doctest.h>

#include "module_helpers.hpp"
#include "oracles.hpp"
#include "sqcheck/errors.hpp"
#include "sqcheck/margolis.hpp"
#include "sqcheck/spaces.hpp"

using namespace sqcheck;

namespace {

// dim ker Q_d - rank Q_{d-s}, from q_milnor on monomials and naive elimination.
std::int64_t homology_oracle(int n, int D, int which, int d)
{
    const auto spec = RingSpec::bso(n, D);
    const SteenrodContext ctx(spec);
    const int s = which == 0 ? 1 : 3;
    auto matrix = [&](int src) {
        std::vector<std::vector<int>> rows;
        if (src < 1 || src + s > D) {
            return rows;
        }
        const auto tgt = oracle::brute_force_monomials(spec, src + s);
        for (const auto& m : oracle::brute_force_monomials(spec, src)) {
            const auto img = q_milnor(which, m, ctx);
            std::vector<int> row(tgt.size(), 0);
            for (std::size_t j = 0; j < tgt.size(); ++j) {
                row[j] = img.contains(tgt[j]) ? 1 : 0;
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    const auto dim = static_cast<std::int64_t>(oracle::brute_force_monomials(spec, d).size());
    const auto out = matrix(d);
    const auto in = matrix(d - s);
    const auto ker = dim - static_cast<std::int64_t>(out.empty() ? 0 : oracle::naive_rank(out));
    return ker - static_cast<std::int64_t>(in.empty() ? 0 : oracle::naive_rank(in));
}

} // namespace

TEST_CASE("free and trivial modules")
{
    const auto e = exterior_algebra(12);
    for (auto q : {Primitive::Q0, Primitive::Q1}) {
        CHECK(margolis_homology(e, q).homology.is_zero());
    }
    const auto t = trivial_module({5}, 12);
    for (auto q : {Primitive::Q0, Primitive::Q1}) {
        const auto h = margolis_homology(t, q).homology;
        CHECK(h[5] == 1);
        CHECK(h.total() == 1);
    }
}

TEST_CASE("H~*(BSO(3)) Q0 homology lives in degrees 4m")
{
    const int D = 30;
    const auto r = margolis_homology(bso_module(3, D), Primitive::Q0);
    CHECK(r.window == Window{2, D - 1});
    for (int d = r.window.lo; d <= r.window.hi; ++d) {
        CAPTURE(d);
        CHECK(r.homology[d] == (d % 4 == 0 ? 1 : 0));
    }
}

TEST_CASE("Margolis homology agrees with the naive rank oracle")
{
    for (int n : {3, 4, 5, 6}) {
        const int D = 22;
        const auto m = bso_module(n, D);
        for (int which : {0, 1}) {
            const auto r = margolis_homology(m, which == 0 ? Primitive::Q0 : Primitive::Q1);
            for (int d = r.window.lo; d <= r.window.hi; ++d) {
                CAPTURE(n);
                CAPTURE(which);
                CAPTURE(d);
                CHECK(r.homology[d] == homology_oracle(n, D, which, d));
            }
        }
    }
}

TEST_CASE("freeness verdicts")
{
    const int D = 24;
    const auto ee = direct_sum(exterior_algebra(D, 2), exterior_algebra(D, 6));
    auto v = is_free_in_window(ee);
    CHECK(v.free);
    CHECK(v.window == Window{2, D - 3});
    CHECK_FALSE(v.witness.has_value());

    const auto planted = direct_sum(ee, trivial_module({9}, D));
    v = is_free_in_window(planted);
    CHECK_FALSE(v.free);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->degree == 9);
    CHECK(v.witness->dimension == 1);

    CHECK_FALSE(is_free_in_window(bso_module(2, 12)).free);
}

TEST_CASE("quotient of H~*(BSO(5)) by the d_J span is free on [2, 37]")
{
    const int D = 40;
    const auto m = bso_module(5, D);
    std::vector<Element> seeds;
    for (const auto& g : trivial_generators(5, D).generators) {
        seeds.push_back(m.element_of(g));
    }
    const auto s = span_closure(m, seeds);
    CHECK(s.module.poincare() == trivial_generators(5, D).degree_series());
    const auto v = is_free_in_window(quotient(m, s));
    CHECK(v.free);
    CHECK(v.window == Window{2, 37});
}

TEST_CASE("integrity error on a broken module")
{
    const auto bad = helpers::hand_module({1, 0, 0, 1, 0, 0, 1}, {}, {{0, 0, 0}, {3, 0, 0}});
    CHECK_THROWS_AS(margolis_homology(bad, Primitive::Q0), IntegrityError);
}

TEST_CASE("series division by E")
{
    auto q = series_div_by_E(PoincareSeries{1, 1, 0, 1, 1, 0, 0, 0});
    CHECK(q.exact);
    CHECK(q.series() == PoincareSeries{1, 0, 0, 0, 0, 0, 0, 0});

    const int D = 20;
    const auto ee = direct_sum(exterior_algebra(D, 2), exterior_algebra(D, 6));
    q = series_div_by_E(ee.poincare());
    CHECK(q.exact);
    for (int d = 0; d <= D; ++d) {
        CHECK(q.coeffs[d] == (d == 2 || d == 6 ? 1 : 0));
    }

    const auto rest = bso_module(3, D).poincare() - trivial_generators(3, D).degree_series();
    q = series_div_by_E(rest);
    CHECK(q.exact);
    CHECK(q.coeffs[2] == 1);

    q = series_div_by_E(PoincareSeries{0, 1, 0, 0, 0});
    CHECK_FALSE(q.exact);
    CHECK(q.first_negative == 2);
    CHECK_THROWS_AS(q.series(), AccountingError);
}

TEST_CASE("series arithmetic")
{
    const PoincareSeries a{1, 2, 3};
    CHECK(a.shifted(1) == PoincareSeries{0, 1, 2});
    CHECK(a.times({1, 1}) == PoincareSeries{1, 3, 5});
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(PoincareSeries({0, 1}) - PoincareSeries({1, 0}), AccountingError);
    CHECK_THROWS_AS(PoincareSeries({-1}), AccountingError);
    CHECK(a.first_difference(PoincareSeries{1, 2, 4}, 0, 2) == 2);
    CHECK(a.to_string() == "1,2,3");
    // (1 + t)(1 + t^3) applied then divided out
    const PoincareSeries g{0, 0, 1, 0, 2, 0, 1, 0, 0, 0};
    CHECK(series_div_by_E(g.times(kExteriorSeries)).series() == g);
}
