#include "sqcheck/verify.hpp"

#include "sqcheck/errors.hpp"
#include "sqcheck/margolis.hpp"
#include "sqcheck/spaces.hpp"

namespace sqcheck {

void Verdict::record(const std::string& check, bool ok)
{
    auto [it, fresh] = checks.try_emplace(check, ok);
    if (!fresh) {
        it->second = it->second && ok;
    }
}

void Verdict::fail(const std::string& check, Witness w)
{
    checks[check] = false;
    if (pass) {
        witness = std::move(w);
    }
    pass = false;
}

namespace {

void require_lemma_range(int n, int max_degree)
{
    if (n < 2) {
        throw DomainError("BSO(2n) statements require n >= 2, got n = " + std::to_string(n));
    }
    if (max_degree < 2 * n) {
        throw DomainError("max degree must be at least 2n = " + std::to_string(2 * n));
    }
}

// Compares a submodule's induced structure with a ring module whose basis
// labels should coincide with the submodule's labels.
std::optional<Witness> compare_identified(const EModule& piece, const EModule& model, const std::string& stage)
{
    for (int d = 0; d <= model.max_degree(); ++d) {
        if (piece.labels(d) != model.labels(d)) {
            return Witness{stage, d, model.dim(d) ? model.labels(d).front() : "", "bases differ"};
        }
    }
    for (auto q : {Primitive::Q0, Primitive::Q1}) {
        for (int d = 0; d + degree_shift(q) <= model.max_degree(); ++d) {
            const auto& a = piece.matrix(q, d);
            const auto& b = model.matrix(q, d);
            for (std::size_t r = 0; r < a.rows(); ++r) {
                if (!(a.row(r) == b.row(r))) {
                    return Witness{stage, d, model.labels(d)[r],
                                   std::string(primitive_name(q)) + " differs: " +
                                       piece.describe(Element{d + degree_shift(q), a.row(r)}) + " vs " +
                                       model.describe(Element{d + degree_shift(q), b.row(r)})};
                }
            }
        }
    }
    return std::nullopt;
}

Witness witness_from(const std::string& stage, const ViolationError& e)
{
    return Witness{stage, e.degree(), e.element(), e.detail()};
}

} // namespace

// ---------------------------------------------------------------------------
// Lemma 1

Verdict verify_lemma1(const SteenrodContext& ctx)
{
    const auto& spec = ctx.spec();
    if (spec.family != Family::BSO || spec.rank % 2 != 0) {
        throw DomainError("lemma 1 concerns BSO(2n)");
    }
    const int n = spec.rank / 2;
    const int top = spec.max_degree;
    require_lemma_range(n, top);

    Verdict v;
    v.name = "lemma1";
    v.window = Window{2, top};

    const int max_k = top / (2 * n);
    for (int k = 0; k <= max_k; ++k) {
        try {
            check_piece_closure(ctx, k);
            v.record("piece_closure", true);
        } catch (const ViolationError& e) {
            v.fail("piece_closure", witness_from("piece k=" + std::to_string(k), e));
            return v;
        }
    }

    EModule ambient;
    try {
        ambient = ring_module(ctx);
        v.record("ambient_relations", true);
    } catch (const Error& e) {
        v.fail("ambient_relations", Witness{"ambient", -1, spec.name(), e.what()});
        return v;
    }

    std::optional<Submodule> piece0;
    for (int k = 0; k <= max_k; ++k) {
        try {
            auto piece = graded_piece(ctx, ambient, k);
            v.record("piece_submodule", true);
            if (k == 0) {
                piece0 = std::move(piece);
            }
        } catch (const ClosureError& e) {
            v.fail("piece_submodule", Witness{"piece k=" + std::to_string(k), e.degree(), e.escaping(), e.what()});
            return v;
        }
    }

    const auto model = bso_module(2 * n - 1, top);
    if (auto w = compare_identified(piece0->module, model, "k=0 piece vs " + model.label())) {
        v.fail("piece0_matches_odd", std::move(*w));
    } else {
        v.record("piece0_matches_odd", true);
    }
    return v;
}

Verdict verify_lemma1(int n, int max_degree)
{
    require_lemma_range(n, max_degree);
    return verify_lemma1(SteenrodContext(RingSpec::bso(2 * n, max_degree)));
}

// ---------------------------------------------------------------------------
// Lemma 2

Verdict verify_lemma2(int n, int max_degree)
{
    require_lemma_range(n, max_degree);
    const int top = max_degree;
    Verdict v;
    v.name = "lemma2";
    v.window = Window{2, top};

    const auto emb = thom_embed(n, top);
    const auto& thom = emb.source.module;
    const auto& bso = emb.target;
    const auto top_index = 2 * n;

    if (auto rel = check_relations(thom); !rel.ok) {
        v.fail("thom_relations", Witness{"Thom module", rel.degree, rel.element, rel.relation});
    } else {
        v.record("thom_relations", true);
    }

    if (auto f = check_emap(thom, bso, emb.map)) {
        v.fail("embedding_e_linear", Witness{"Thom embedding", f->degree, f->element, f->what});
    } else {
        v.record("embedding_e_linear", true);
    }

    for (int d = 0; d <= top; ++d) {
        const auto& mat = emb.map.at(d);
        if (mat.rank() != thom.dim(d)) {
            v.fail("embedding_injective", Witness{"Thom embedding", d, "", "rank below source dimension"});
            break;
        }
        v.record("embedding_injective", true);
    }

    for (int d = 0; d <= top; ++d) {
        const auto& mons = bso.basis()->at(d);
        BitVector ideal(mons.size());
        for (std::size_t i = 0; i < mons.size(); ++i) {
            if (mons[i].exponent(top_index) > 0) {
                ideal.set(i);
            }
        }
        BitVector image(mons.size());
        const auto& mat = emb.map.at(d);
        bool units = true;
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            units = units && mat.row(r).count() == 1;
            image ^= mat.row(r);
        }
        if (!units || !(image == ideal)) {
            const auto diff = (image ^ ideal).first();
            v.fail("image_is_ideal", Witness{"Thom embedding image", d,
                                             diff < mons.size() ? to_string(mons[diff]) : "", "image differs from ideal"});
            break;
        }
        v.record("image_is_ideal", true);
    }

    SteenrodContext ctx(RingSpec::bso(top_index, top));
    const auto piece0 = graded_piece(ctx, bso, 0);
    const auto odd = bso_module(top_index - 1, top);
    if (auto w = compare_identified(piece0.module, odd, "k=0 piece vs " + odd.label())) {
        v.fail("piece0_matches_odd", std::move(*w));
    } else {
        v.record("piece0_matches_odd", true);
    }

    for (int d = 0; d <= top; ++d) {
        RowEchelon span(bso.dim(d));
        const auto& inc = piece0.inclusion[static_cast<std::size_t>(d)];
        for (std::size_t r = 0; r < inc.rows(); ++r) {
            span.insert(inc.row(r));
        }
        const auto& mat = emb.map.at(d);
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            span.insert(mat.row(r));
        }
        if (span.rank() != bso.dim(d) || inc.rows() + mat.rows() != bso.dim(d)) {
            v.fail("direct_sum", Witness{"piece0 + image", d, "", "summands do not span degreewise"});
            break;
        }
        v.record("direct_sum", true);
    }

    const auto res = restriction_map(n, top);
    bool exact = !check_emap(res.source, res.target, res.map).has_value();
    for (int d = 0; exact && d <= top; ++d) {
        const auto& r = res.map.at(d);
        exact = r.rank() == res.target.dim(d) && res.source.dim(d) - r.rank() == thom.dim(d) &&
                emb.map.at(d).multiply(r).is_zero();
        if (!exact) {
            v.fail("sequence_exact", Witness{"0 -> H~MSO -> H~BSO(2n) -> H~BSO(2n-1) -> 0", d, "", "not exact"});
        }
    }
    if (exact) {
        v.record("sequence_exact", true);
    }

    const auto lhs = poincare(RingSpec::bso(top_index, top), true);
    const auto rhs =
        poincare(RingSpec::bso(top_index - 1, top), true) + poincare(RingSpec::bso(top_index, top), false).shifted(top_index);
    if (int d = lhs.first_difference(rhs, 0, top); d >= 0) {
        v.fail("series_identity", Witness{"series", d, "", std::to_string(lhs[d]) + " != " + std::to_string(rhs[d])});
    } else {
        v.record("series_identity", true);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Odd rank decomposition

Theorem3Result verify_theorem3(int odd_rank, int max_degree)
{
    if (odd_rank < 3 || odd_rank % 2 == 0) {
        throw DomainError("odd-rank decomposition needs an odd rank >= 3, got " + std::to_string(odd_rank));
    }
    if (max_degree < 1) {
        throw DomainError("max degree must be at least 1");
    }
    const int top = max_degree;
    Theorem3Result out;
    auto& v = out.verdict;
    v.name = "thm3";
    out.alpha = PoincareSeries(top);
    out.beta = PoincareSeries(top);

    TrivialGenFamily fam;
    try {
        fam = trivial_generators(odd_rank, top);
        v.record("trivial_generators_annihilated", true);
    } catch (const ViolationError& e) {
        v.fail("trivial_generators_annihilated", witness_from("trivial generators", e));
        return out;
    }
    out.beta = fam.degree_series();

    const auto m = bso_module(odd_rank, top);
    v.window = Window{m.lowest_degree(), top - 3};

    std::vector<Element> seeds;
    for (const auto& g : fam.generators) {
        seeds.push_back(m.element_of(g));
    }
    const auto trivial = span_closure(m, seeds, "D" + std::to_string(odd_rank));
    const auto span_series = trivial.module.poincare();
    if (int d = span_series.first_difference(out.beta, 0, top); d >= 0) {
        v.fail("trivial_span", Witness{"E-span of d_J", d, "", "span is larger than the d_J family"});
        return out;
    }
    v.record("trivial_span", true);

    const auto q = quotient(m, trivial, "H~BSO(" + std::to_string(odd_rank) + ")/D");
    const auto free = is_free_in_window(q);
    if (!free.free) {
        v.fail("quotient_free", Witness{"Margolis homology of quotient", free.witness->degree,
                                        std::string(primitive_name(free.witness->which)),
                                        "homology dimension " + std::to_string(free.witness->dimension)});
        return out;
    }
    v.record("quotient_free", true);

    const auto div = series_div_by_E(q.poincare());
    if (!div.exact) {
        v.fail("series_division_exact",
               Witness{"P(quotient) / (1+t)(1+t^3)", div.first_negative, "", "negative generator count"});
        return out;
    }
    v.record("series_division_exact", true);
    out.alpha = div.series();

    const auto gens = min_generators(q);
    if (int d = gens.first_difference(out.alpha, v.window.lo, v.window.hi); d >= 0) {
        v.fail("alpha_matches_min_generators", Witness{"generator census", d, "",
                                                       "series division " + std::to_string(out.alpha[d]) +
                                                           " vs minimal generators " + std::to_string(gens[d])});
        return out;
    }
    v.record("alpha_matches_min_generators", true);
    return out;
}

// ---------------------------------------------------------------------------
// Splitting

SplittingReport splitting_report(int n, int max_degree)
{
    if (n < 2) {
        throw DomainError("the splitting of BSO(2n) is stated for n >= 2, got n = " + std::to_string(n));
    }
    require_lemma_range(n, max_degree);
    const int top = max_degree;
    SplittingReport r;
    r.n = n;
    r.max_degree = top;
    r.window = Window{2, top - 3};
    r.verdict.name = "thm1";
    r.verdict.window = r.window;

    auto absorb = [&](const Verdict& sub) {
        r.verdict.record(sub.name, sub.pass);
        if (!sub.pass) {
            auto w = *sub.witness;
            w.stage = sub.name + ": " + w.stage;
            r.verdict.fail(sub.name, std::move(w));
        }
    };
    absorb(verify_lemma1(n, top));
    absorb(verify_lemma2(n, top));
    auto t3 = verify_theorem3(2 * n - 1, top);
    absorb(t3.verdict);

    r.alpha = t3.alpha;
    r.beta = t3.beta;
    r.thom_series = poincare(RingSpec::bso(2 * n, top), false).shifted(2 * n);

    bool beta_ok = true;
    for (int d = 0; d <= top; ++d) {
        if (r.beta[d] > 0 && d % 4 != 0) {
            r.verdict.fail("beta_degrees_0_mod_4", Witness{"beta", d, "", "trivial generator off 0 mod 4"});
            beta_ok = false;
            break;
        }
    }
    if (beta_ok) {
        r.verdict.record("beta_degrees_0_mod_4", true);
    }

    if (t3.verdict.pass) {
        const auto lhs = poincare(RingSpec::bso(2 * n, top), true);
        const auto rhs = r.beta + r.alpha.times(kExteriorSeries) + r.thom_series;
        if (int d = lhs.first_difference(rhs, r.window.lo, r.window.hi); d >= 0) {
            r.verdict.fail("accounting", Witness{"P(H~BSO(2n)) = beta + alpha(1+t)(1+t^3) + thom", d, "",
                                                 std::to_string(lhs[d]) + " != " + std::to_string(rhs[d])});
        } else {
            r.verdict.record("accounting", true);
        }
    } else {
        r.verdict.record("accounting", false);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Cyclic census

Remark1Stats remark1_scan(int n, int k, int max_degree)
{
    if (n < 2 || k < 1) {
        throw DomainError("census needs n >= 2 and k >= 1");
    }
    Remark1Stats s;
    s.n = n;
    s.k = k;
    s.max_degree = max_degree;
    s.verdict.name = "remark1";
    const int top_index = 2 * n;
    if (top_index * k > max_degree) {
        return s;
    }
    if (top_index * k > max_degree - 4) {
        throw WindowError("piece k=" + std::to_string(k) + " starts at degree " + std::to_string(top_index * k) +
                          ", within 4 of the truncation");
    }
    s.verdict.window = Window{top_index * k, max_degree - 4};

    SteenrodContext ctx(RingSpec::bso(top_index, max_degree));
    const auto ambient = ring_module(ctx);
    const auto piece = graded_piece(ctx, ambient, k);

    for (const auto& x : generator_representatives(piece.module)) {
        if (x.degree <= max_degree - 4) {
            ++s.generator_types[cyclic_classify(piece.module, x)];
        }
    }

    const auto fam = trivial_generators(top_index - 1, max_degree);
    const auto power = Monomial::generator(top_index, static_cast<unsigned>(k));
    for (const auto& d : fam.generators) {
        const auto seed = d * power;
        if (seed.degree() > max_degree - 4) {
            continue;
        }
        const auto info = cyclic_info(ambient, ambient.element_of(seed));
        ++s.seed_types[info.type];
        ++s.seeds;
        s.seeds_q0q1_zero = s.seeds_q0q1_zero && info.q0q1_zero;
        if (k % 2 == 0 && info.type == CyclicType::Relational) {
            s.verdict.fail("even_k_no_relational_seeds",
                           Witness{"seed census", seed.degree(), to_string(seed), "relational type for even k"});
        }
    }
    s.verdict.record("even_k_no_relational_seeds", true);
    return s;
}

} // namespace sqcheck
