#include "sqcheck/steenrod.hpp"

#include "sqcheck/errors.hpp"

namespace sqcheck {

int binom_mod2(long a, long b)
{
    if (b < 0) {
        throw DomainError("binomial with negative lower index");
    }
    if (b == 0) {
        return 1;
    }
    if (a < 0) {
        throw DomainError("binomial C(" + std::to_string(a) + ", " + std::to_string(b) + ") is outside the Wu range");
    }
    return (b & ~a) == 0 ? 1 : 0;
}

PolynomialF2 wu_formula(int k, int m, const RingSpec& spec)
{
    if (!spec.has_generator(m)) {
        throw DomainError("w" + std::to_string(m) + " is not a generator of " + spec.name());
    }
    if (k < 0) {
        throw DomainError("negative Steenrod square");
    }
    if (k == 0) {
        return Monomial::generator(m);
    }
    if (k > m) {
        return {};
    }
    std::vector<Monomial> terms;
    for (int t = 0; t <= k; ++t) {
        if (binom_mod2(m - k + t - 1, t) == 0) {
            continue;
        }
        Monomial term = Monomial::generator(m + t);
        if (k - t > 0) {
            term = term * Monomial::generator(k - t);
        }
        terms.push_back(std::move(term));
    }
    return apply_relations(PolynomialF2::from_terms(std::move(terms)), spec);
}

namespace {

// Sq^0..Sq^k of a single monomial, using generator tables from ctx.
std::vector<PolynomialF2> total_square(int k, const Monomial& m, const SteenrodContext& ctx)
{
    std::vector<PolynomialF2> acc(static_cast<std::size_t>(k + 1));
    acc[0] = PolynomialF2::one();
    for (auto [g, e] : m.factors()) {
        for (unsigned rep = 0; rep < e; ++rep) {
            std::vector<PolynomialF2> next(acc.size());
            for (int j = 0; j <= k; ++j) {
                for (int i = 0; i <= j && i <= g; ++i) {
                    const auto& left = acc[static_cast<std::size_t>(j - i)];
                    if (left.is_zero()) {
                        continue;
                    }
                    const auto& sq = ctx.sq_generator(i, g);
                    if (sq.is_zero()) {
                        continue;
                    }
                    next[static_cast<std::size_t>(j)] += left * sq;
                }
            }
            acc = std::move(next);
        }
    }
    return acc;
}

void require_valid(const PolynomialF2& p, const RingSpec& spec)
{
    if (!is_valid(p, spec)) {
        throw DomainError("element " + to_string(p) + " has an index outside " + spec.name());
    }
}

} // namespace

SteenrodContext::SteenrodContext(RingSpec spec, std::vector<QOverride> overrides)
    : spec_(RingSpec::validated(spec))
{
    const auto slots = static_cast<std::size_t>(spec_.rank + 1);
    sq_.resize(slots);
    for (int m : spec_.generators()) {
        auto& row = sq_[static_cast<std::size_t>(m)];
        for (int k = 0; k <= m; ++k) {
            row.push_back(wu_formula(k, m, spec_));
        }
    }
    for (auto& table : q_) {
        table.resize(slots);
    }
    for (int m : spec_.generators()) {
        const PolynomialF2 w = Monomial::generator(m);
        const auto& sq1 = sq_generator(1, m);
        q_[0][static_cast<std::size_t>(m)] = sq1;
        q_[1][static_cast<std::size_t>(m)] = sq_on_poly(3, w, *this) + sq_on_poly(2, sq1, *this);
    }
    for (auto& o : overrides) {
        if (o.which != 0 && o.which != 1) {
            throw DomainError("override must target Q0 or Q1");
        }
        check_generator(o.generator);
        q_[static_cast<std::size_t>(o.which)][static_cast<std::size_t>(o.generator)] = std::move(o.value);
        overridden_ = true;
    }
}

void SteenrodContext::check_generator(int m) const
{
    if (!spec_.has_generator(m)) {
        throw DomainError("w" + std::to_string(m) + " is not a generator of " + spec_.name());
    }
}

const PolynomialF2& SteenrodContext::sq_generator(int k, int m) const
{
    check_generator(m);
    if (k < 0) {
        throw DomainError("negative Steenrod square");
    }
    if (k > m) {
        return zero_;
    }
    return sq_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

const PolynomialF2& SteenrodContext::q_generator(int i, int m) const
{
    if (i != 0 && i != 1) {
        throw DomainError("only Q0 and Q1 are supported");
    }
    check_generator(m);
    return q_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
}

PolynomialF2 sq_on_generator(int k, int m, const SteenrodContext& ctx) { return ctx.sq_generator(k, m); }

PolynomialF2 sq_on_poly(int k, const PolynomialF2& p, const SteenrodContext& ctx)
{
    require_valid(p, ctx.spec());
    if (k < 0) {
        throw DomainError("negative Steenrod square");
    }
    if (k == 0) {
        return p;
    }
    PolynomialF2 out;
    for (const auto& m : p.terms()) {
        if (k > m.degree()) {
            continue;
        }
        out += total_square(k, m, ctx)[static_cast<std::size_t>(k)];
    }
    return out;
}

PolynomialF2 q_milnor(int i, const Monomial& m, const SteenrodContext& ctx)
{
    std::vector<Monomial> terms;
    for (auto [g, e] : m.factors()) {
        if (e % 2 == 0) {
            continue;
        }
        const auto& image = ctx.q_generator(i, g);
        if (image.is_zero()) {
            continue;
        }
        Monomial rest = m;
        rest.set_exponent(g, e - 1);
        for (const auto& t : image.terms()) {
            terms.push_back(t * rest);
        }
    }
    return PolynomialF2::from_terms(std::move(terms));
}

PolynomialF2 q_milnor(int i, const PolynomialF2& p, const SteenrodContext& ctx)
{
    if (i != 0 && i != 1) {
        throw DomainError("only Q0 and Q1 are supported");
    }
    require_valid(p, ctx.spec());
    std::vector<Monomial> terms;
    for (const auto& m : p.terms()) {
        const auto image = q_milnor(i, m, ctx);
        terms.insert(terms.end(), image.terms().begin(), image.terms().end());
    }
    return PolynomialF2::from_terms(std::move(terms));
}

PolynomialF2 q1_via_sq(const PolynomialF2& p, const SteenrodContext& ctx)
{
    return sq_on_poly(3, p, ctx) + sq_on_poly(2, sq_on_poly(1, p, ctx), ctx);
}

} // namespace sqcheck
