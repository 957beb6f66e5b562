#include "sqcheck/margolis.hpp"

#include "sqcheck/errors.hpp"
#include "sqcheck/parallel.hpp"

namespace sqcheck {

MargolisReport margolis_homology(const EModule& m, Primitive which)
{
    if (auto rel = check_relations(m); !rel.ok) {
        throw IntegrityError("module " + m.label() + " fails " + rel.relation + " at degree " +
                             std::to_string(rel.degree) + "; Margolis homology is undefined");
    }
    const int top = m.max_degree();
    const int s = degree_shift(which);

    // rank of Q out of each degree
    std::vector<std::int64_t> rank(static_cast<std::size_t>(top + 1), 0);
    parallel_for(static_cast<std::size_t>(std::max(top - s + 1, 0)), [&](std::size_t slot) {
        rank[slot] = static_cast<std::int64_t>(m.matrix(which, static_cast<int>(slot)).rank());
    });

    MargolisReport report;
    report.which = which;
    report.window = Window{m.lowest_degree(), top - s};
    report.homology = PoincareSeries(top);
    for (int d = report.window.lo; d <= report.window.hi; ++d) {
        const auto kernel = static_cast<std::int64_t>(m.dim(d)) - rank[static_cast<std::size_t>(d)];
        const auto image = d - s >= 0 ? rank[static_cast<std::size_t>(d - s)] : 0;
        report.homology.set(d, kernel - image);
    }
    return report;
}

FreenessVerdict is_free_in_window(const EModule& m)
{
    const auto h0 = margolis_homology(m, Primitive::Q0);
    const auto h1 = margolis_homology(m, Primitive::Q1);
    FreenessVerdict v;
    v.window = h1.window;
    v.free = true;
    for (int d = v.window.lo; d <= v.window.hi; ++d) {
        for (const auto* h : {&h0, &h1}) {
            if (h->homology[d] != 0) {
                v.free = false;
                v.witness = FreenessWitness{h->which, d, h->homology[d]};
                return v;
            }
        }
    }
    return v;
}

SeriesQuotient series_div_by_E(const PoincareSeries& s)
{
    SeriesQuotient q;
    const int top = s.max_degree();
    q.coeffs.assign(static_cast<std::size_t>(top + 1), 0);
    auto g = [&](int d) -> std::int64_t { return d >= 0 ? q.coeffs[static_cast<std::size_t>(d)] : 0; };
    for (int d = 0; d <= top; ++d) {
        q.coeffs[static_cast<std::size_t>(d)] = s[d] - g(d - 1) - g(d - 3) - g(d - 4);
        if (q.coeffs[static_cast<std::size_t>(d)] < 0 && q.first_negative < 0) {
            q.first_negative = d;
        }
    }
    q.exact = q.first_negative < 0;
    return q;
}

} // namespace sqcheck
