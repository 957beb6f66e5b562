#include "sqcheck/spaces.hpp"

#include <algorithm>

#include "sqcheck/errors.hpp"

namespace sqcheck {

namespace {

void require_relations(const EModule& m)
{
    if (auto rel = check_relations(m); !rel.ok) {
        throw IntegrityError(m.label() + " fails " + rel.relation + " at degree " + std::to_string(rel.degree) +
                             " on " + rel.element);
    }
}

void require_half_rank(int n)
{
    if (n < 1) {
        throw DomainError("BSO(2n) needs n >= 1, got " + std::to_string(n));
    }
}

} // namespace

EModule ring_module(const SteenrodContext& ctx)
{
    auto m = build_emodule(ctx, true);
    require_relations(m);
    return m;
}

EModule bso_module(int n, int max_degree) { return ring_module(SteenrodContext(RingSpec::bso(n, max_degree))); }

EModule bo_module(int n, int max_degree) { return ring_module(SteenrodContext(RingSpec::bo(n, max_degree))); }

void check_piece_closure(const SteenrodContext& ctx, int k)
{
    const auto& spec = ctx.spec();
    if (spec.family != Family::BSO || spec.rank % 2 != 0) {
        throw DomainError("graded pieces live in BSO(2n)");
    }
    const int top_index = spec.rank;
    if (k < 0 || top_index * k > spec.max_degree) {
        throw RangeError("piece k=" + std::to_string(k) + " is empty below degree " + std::to_string(spec.max_degree));
    }
    for (int d = std::max(1, top_index * k); d <= spec.max_degree; ++d) {
        for (const auto& x : enumerate_basis(spec, d)) {
            if (static_cast<int>(x.exponent(top_index)) != k) {
                continue;
            }
            for (int which = 0; which < 2; ++which) {
                const auto image = q_milnor(which, x, ctx);
                for (const auto& t : image.terms()) {
                    if (static_cast<int>(t.exponent(top_index)) != k || !is_valid(t, spec)) {
                        throw ViolationError("Q" + std::to_string(which) + "(" + to_string(x) +
                                                 ") leaves the piece k=" + std::to_string(k),
                                             d, to_string(x), "Q" + std::to_string(which) + " -> " + to_string(image));
                    }
                }
            }
        }
    }
}

Submodule graded_piece(const SteenrodContext& ctx, const EModule& ambient, int k)
{
    check_piece_closure(ctx, k);
    const auto* basis = ambient.basis();
    if (basis == nullptr || ambient.max_degree() != ctx.spec().max_degree) {
        throw DomainError("ambient module must be the ring module of the context");
    }
    const int top_index = ctx.spec().rank;
    std::vector<std::vector<BitVector>> spanning(static_cast<std::size_t>(ambient.max_degree() + 1));
    for (int d = 0; d <= ambient.max_degree(); ++d) {
        const auto& mons = basis->at(d);
        for (std::size_t i = 0; i < mons.size(); ++i) {
            if (static_cast<int>(mons[i].exponent(top_index)) == k) {
                spanning[static_cast<std::size_t>(d)].push_back(BitVector::unit(mons.size(), i));
            }
        }
    }
    return submodule_from_subspaces(ambient, spanning,
                                    "H*(BSO(" + std::to_string(top_index - 1) + ")).w" + std::to_string(top_index) +
                                        "^" + std::to_string(k));
}

Submodule graded_piece(int n, int k, int max_degree)
{
    require_half_rank(n);
    SteenrodContext ctx(RingSpec::bso(2 * n, max_degree));
    const auto ambient = ring_module(ctx);
    return graded_piece(ctx, ambient, k);
}

// ---------------------------------------------------------------------------
// Thom module

Element ThomModule::element(const PolynomialF2& z) const
{
    if (z.is_zero() || !z.is_homogeneous()) {
        throw DomainError("Thom element needs a nonzero homogeneous z");
    }
    const int d = *z.degree() + 2 * n;
    if (d > module.max_degree()) {
        throw DomainError("z.mu lies above the truncation");
    }
    Element e{d, BitVector(module.dim(d))};
    for (const auto& m : z.terms()) {
        auto pos = base.find(m);
        if (!pos) {
            throw DomainError("monomial " + to_string(m) + " is not in H*(BSO(" + std::to_string(2 * n) + "))");
        }
        e.coords.set(*pos);
    }
    return e;
}

ThomModule thom_module(const SteenrodContext& ctx)
{
    const auto& spec = ctx.spec();
    if (spec.family != Family::BSO || spec.rank % 2 != 0) {
        throw DomainError("Thom module is defined for BSO(2n)");
    }
    const int shift = spec.rank;
    if (shift > spec.max_degree) {
        throw DomainError("Thom class degree " + std::to_string(shift) + " exceeds the truncation");
    }
    const int top = spec.max_degree;
    const RingSpec base_spec{Family::BSO, spec.rank, top - shift};
    GradedBasis base = GradedBasis::of_ring(base_spec, false);
    const std::string mu = "mu" + std::to_string(shift);

    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top + 1));
    for (int d = shift; d <= top; ++d) {
        for (const auto& z : base.at(d - shift)) {
            labels[static_cast<std::size_t>(d)].push_back(z.is_one() ? mu : to_string(z) + "*" + mu);
        }
    }

    const PolynomialF2 w3 = Monomial::generator(3);
    std::array<std::vector<BitMatrix>, 2> mats;
    for (int which = 0; which < 2; ++which) {
        const int s = which == 0 ? 1 : 3;
        for (int d = 0; d + s <= top; ++d) {
            BitMatrix mat(labels[static_cast<std::size_t>(d)].size(), labels[static_cast<std::size_t>(d + s)].size());
            if (d >= shift) {
                const auto& zs = base.at(d - shift);
                for (std::size_t r = 0; r < zs.size(); ++r) {
                    PolynomialF2 image = q_milnor(which, zs[r], ctx);
                    if (which == 1) {
                        image += apply_relations(zs[r] * w3, spec);
                    }
                    for (const auto& t : image.terms()) {
                        auto pos = base.find(t);
                        if (!pos) {
                            throw DomainError("Thom action term " + to_string(t) + " outside the base ring");
                        }
                        mat.set(r, *pos);
                    }
                }
            }
            mats[static_cast<std::size_t>(which)].push_back(std::move(mat));
        }
    }
    ThomModule t;
    t.n = spec.rank / 2;
    t.module = EModule("H*(MSO" + std::to_string(shift) + ")", std::move(labels), GradedMap(1, std::move(mats[0])),
                       GradedMap(3, std::move(mats[1])));
    t.base = std::move(base);
    require_relations(t.module);
    return t;
}

ThomModule thom_module(int n, int max_degree)
{
    require_half_rank(n);
    return thom_module(SteenrodContext(RingSpec::bso(2 * n, max_degree)));
}

ThomEmbedding thom_embed(int n, int max_degree)
{
    require_half_rank(n);
    SteenrodContext ctx(RingSpec::bso(2 * n, max_degree));
    ThomEmbedding e{thom_module(ctx), ring_module(ctx), {}};
    const auto top_gen = Monomial::generator(2 * n);
    const auto* target_basis = e.target.basis();
    std::vector<BitMatrix> mats;
    for (int d = 0; d <= max_degree; ++d) {
        BitMatrix mat(e.source.module.dim(d), e.target.dim(d));
        if (d >= 2 * n) {
            const auto& zs = e.source.base.at(d - 2 * n);
            for (std::size_t r = 0; r < zs.size(); ++r) {
                mat.set(r, *target_basis->find(zs[r] * top_gen));
            }
        }
        mats.push_back(std::move(mat));
    }
    e.map = GradedMap(0, std::move(mats));
    return e;
}

Restriction restriction_map(int n, int max_degree)
{
    if (n < 2) {
        throw DomainError("restriction BSO(2n) -> BSO(2n-1) needs n >= 2");
    }
    Restriction r{bso_module(2 * n, max_degree), bso_module(2 * n - 1, max_degree), {}};
    std::vector<BitMatrix> mats;
    for (int d = 0; d <= max_degree; ++d) {
        BitMatrix mat(r.source.dim(d), r.target.dim(d));
        const auto& mons = r.source.basis()->at(d);
        for (std::size_t i = 0; i < mons.size(); ++i) {
            if (mons[i].exponent(2 * n) == 0) {
                mat.set(i, *r.target.basis()->find(mons[i]));
            }
        }
        mats.push_back(std::move(mat));
    }
    r.map = GradedMap(0, std::move(mats));
    return r;
}

// ---------------------------------------------------------------------------
// Trivial generators

PoincareSeries TrivialGenFamily::degree_series() const
{
    PoincareSeries s(max_degree);
    for (const auto& g : generators) {
        s.add_at(g.degree(), 1);
    }
    return s;
}

namespace {

void even_squares(int half, int index, int budget, Monomial& current, std::vector<Monomial>& out)
{
    if (index > half) {
        if (!current.is_one()) {
            out.push_back(current);
        }
        return;
    }
    const int step = 4 * index; // degree of w_{2i}^2
    for (int m = 0; m * step <= budget; ++m) {
        current.set_exponent(2 * index, static_cast<unsigned>(2 * m));
        even_squares(half, index + 1, budget - m * step, current, out);
    }
    current.set_exponent(2 * index, 0);
}

} // namespace

TrivialGenFamily trivial_generators(int odd_rank, int max_degree)
{
    if (odd_rank < 3 || odd_rank % 2 == 0) {
        throw DomainError("trivial generators are defined for odd rank >= 3, got " + std::to_string(odd_rank));
    }
    TrivialGenFamily fam;
    fam.odd_rank = odd_rank;
    fam.max_degree = max_degree;
    Monomial current;
    even_squares((odd_rank - 1) / 2, 1, max_degree, current, fam.generators);
    std::sort(fam.generators.begin(), fam.generators.end());

    SteenrodContext ctx(RingSpec::bso(odd_rank, max_degree));
    for (const auto& g : fam.generators) {
        for (int which = 0; which < 2; ++which) {
            const auto image = q_milnor(which, g, ctx);
            if (!image.is_zero()) {
                throw ViolationError("Q" + std::to_string(which) + " does not annihilate " + to_string(g), g.degree(),
                                     to_string(g), to_string(image));
            }
        }
    }
    return fam;
}

} // namespace sqcheck
