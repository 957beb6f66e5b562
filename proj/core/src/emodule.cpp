#include "sqcheck/emodule.hpp"

#include <algorithm>
#include <deque>

#include "sqcheck/errors.hpp"
#include "sqcheck/parallel.hpp"

namespace sqcheck {

std::string_view primitive_name(Primitive q) noexcept { return q == Primitive::Q0 ? "Q0" : "Q1"; }

std::string_view cyclic_type_name(CyclicType t) noexcept
{
    switch (t) {
    case CyclicType::Trivial:
        return "trivial";
    case CyclicType::Q0Only:
        return "q0_only";
    case CyclicType::Q1Only:
        return "q1_only";
    case CyclicType::Relational:
        return "relational";
    case CyclicType::Free:
        return "free";
    case CyclicType::Other:
        break;
    }
    return "other";
}

// ---------------------------------------------------------------------------
// GradedMap

GradedMap::GradedMap(int shift, std::vector<BitMatrix> by_degree) : shift_(shift), by_degree_(std::move(by_degree))
{
    if (shift < 0) {
        throw DomainError("graded map shift must be nonnegative");
    }
}

const BitMatrix& GradedMap::at(int d) const
{
    if (!defined_at(d)) {
        throw RangeError("graded map undefined at degree " + std::to_string(d));
    }
    return by_degree_[static_cast<std::size_t>(d)];
}

// ---------------------------------------------------------------------------
// EModule

namespace {

void check_action(const GradedMap& q, int shift, const std::vector<std::vector<std::string>>& labels,
                  std::string_view name)
{
    const int top = static_cast<int>(labels.size()) - 1;
    if (q.shift() != shift) {
        throw DomainError(std::string(name) + " has the wrong degree shift");
    }
    if (q.top_source_degree() != std::max(top - shift, -1)) {
        throw DomainError(std::string(name) + " is not defined on the full truncation");
    }
    for (int d = 0; d + shift <= top; ++d) {
        const auto& mat = q.at(d);
        if (mat.rows() != labels[static_cast<std::size_t>(d)].size() ||
            mat.cols() != labels[static_cast<std::size_t>(d + shift)].size()) {
            throw DomainError(std::string(name) + " matrix at degree " + std::to_string(d) +
                              " does not match the basis dimensions");
        }
    }
}

std::vector<BitMatrix> zero_matrices(const std::vector<std::vector<std::string>>& labels, int shift)
{
    std::vector<BitMatrix> out;
    const int top = static_cast<int>(labels.size()) - 1;
    for (int d = 0; d + shift <= top; ++d) {
        out.emplace_back(labels[static_cast<std::size_t>(d)].size(), labels[static_cast<std::size_t>(d + shift)].size());
    }
    return out;
}

} // namespace

EModule::EModule(std::string label, std::vector<std::vector<std::string>> labels, GradedMap q0, GradedMap q1,
                 std::shared_ptr<const GradedBasis> basis)
    : label_(std::move(label)), labels_(std::move(labels)), q0_(std::move(q0)), q1_(std::move(q1)),
      basis_(std::move(basis))
{
    if (labels_.empty()) {
        throw DomainError("module needs a truncation degree");
    }
    check_action(q0_, 1, labels_, "Q0");
    check_action(q1_, 3, labels_, "Q1");
    if (basis_) {
        for (int d = 0; d <= max_degree(); ++d) {
            if (basis_->dim(d) != dim(d)) {
                throw DomainError("monomial basis does not match labels at degree " + std::to_string(d));
            }
        }
    }
}

EModule EModule::zero(int max_degree, std::string label)
{
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(max_degree + 1));
    return EModule(std::move(label), labels, GradedMap(1, zero_matrices(labels, 1)),
                   GradedMap(3, zero_matrices(labels, 3)));
}

std::size_t EModule::total_dim() const noexcept
{
    std::size_t n = 0;
    for (const auto& l : labels_) {
        n += l.size();
    }
    return n;
}

PoincareSeries EModule::poincare() const
{
    PoincareSeries s(max_degree());
    for (int d = 0; d <= max_degree(); ++d) {
        s.set(d, static_cast<std::int64_t>(dim(d)));
    }
    return s;
}

int EModule::lowest_degree() const noexcept
{
    for (int d = 0; d <= max_degree(); ++d) {
        if (dim(d) != 0) {
            return d;
        }
    }
    return 0;
}

const BitMatrix& EModule::matrix(Primitive q, int d) const { return action(q).at(d); }

std::optional<Element> EModule::apply(Primitive q, const Element& x) const
{
    check_element(x);
    const int target = x.degree + degree_shift(q);
    if (target > max_degree()) {
        return std::nullopt;
    }
    return Element{target, matrix(q, x.degree).apply(x.coords)};
}

Element EModule::zero_element(int d) const
{
    if (d < 0 || d > max_degree()) {
        throw RangeError("degree " + std::to_string(d) + " outside module");
    }
    return Element{d, BitVector(dim(d))};
}

Element EModule::basis_element(int d, std::size_t index) const
{
    auto e = zero_element(d);
    if (index >= dim(d)) {
        throw RangeError("basis index out of range");
    }
    e.coords.set(index);
    return e;
}

void EModule::check_element(const Element& x) const
{
    if (x.degree < 0 || x.degree > max_degree()) {
        throw DomainError("element degree " + std::to_string(x.degree) + " outside module " + label_);
    }
    if (x.coords.size() != dim(x.degree)) {
        throw DomainError("element does not belong to module " + label_ + " at degree " + std::to_string(x.degree));
    }
}

std::string EModule::describe(const Element& x) const
{
    check_element(x);
    if (x.is_zero()) {
        return "0";
    }
    std::string s;
    for (auto i : x.coords.ones()) {
        if (!s.empty()) {
            s += " + ";
        }
        s += labels(x.degree)[i];
    }
    return s;
}

Element EModule::element_of(const PolynomialF2& p) const
{
    if (!basis_) {
        throw DomainError("module " + label_ + " has no monomial basis");
    }
    if (p.is_zero()) {
        throw DomainError("the zero polynomial has no degree; use zero_element");
    }
    if (!p.is_homogeneous()) {
        throw DomainError("element " + to_string(p) + " is not homogeneous");
    }
    const int d = *p.degree();
    if (d > max_degree()) {
        throw DomainError("element " + to_string(p) + " lies above the truncation");
    }
    Element e{d, BitVector(dim(d))};
    for (const auto& m : p.terms()) {
        auto pos = basis_->find(m);
        if (!pos) {
            throw DomainError("monomial " + to_string(m) + " is not in module " + label_);
        }
        e.coords.set(*pos);
    }
    return e;
}

// ---------------------------------------------------------------------------
// Builders

EModule build_emodule(const SteenrodContext& ctx, bool reduced)
{
    const auto& spec = ctx.spec();
    auto basis = std::make_shared<const GradedBasis>(GradedBasis::of_ring(spec, reduced));
    const int top = spec.max_degree;

    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        for (const auto& m : basis->at(d)) {
            labels[static_cast<std::size_t>(d)].push_back(to_string(m));
        }
    }

    std::array<std::vector<BitMatrix>, 2> mats;
    for (int which = 0; which < 2; ++which) {
        const int shift = which == 0 ? 1 : 3;
        auto& out = mats[static_cast<std::size_t>(which)];
        out.resize(static_cast<std::size_t>(std::max(top - shift + 1, 0)));
        parallel_for(out.size(), [&](std::size_t slot) {
            const int d = static_cast<int>(slot);
            const auto& source = basis->at(d);
            BitMatrix mat(source.size(), basis->dim(d + shift));
            for (std::size_t r = 0; r < source.size(); ++r) {
                const auto image = q_milnor(which, source[r], ctx);
                for (const auto& t : image.terms()) {
                    auto pos = t.degree() == d + shift ? basis->find(t) : std::nullopt;
                    if (!pos) {
                        throw DomainError("Q" + std::to_string(which) + "(" + to_string(source[r]) + ") has term " +
                                          to_string(t) + " outside " + spec.name());
                    }
                    mat.set(r, *pos);
                }
            }
            out[slot] = std::move(mat);
        });
    }

    std::string label = (reduced ? "reduced H*(" : "H*(") + spec.name() + ")";
    return EModule(std::move(label), std::move(labels), GradedMap(1, std::move(mats[0])),
                   GradedMap(3, std::move(mats[1])), std::move(basis));
}

EModule exterior_algebra(int max_degree, int generator_degree)
{
    if (max_degree < 0 || generator_degree < 0) {
        throw DomainError("negative degree");
    }
    const int g = generator_degree;
    const std::string suffix = g == 0 ? "" : "@" + std::to_string(g);
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(max_degree + 1));
    auto put = [&](int offset, const char* name) {
        if (g + offset <= max_degree) {
            labels[static_cast<std::size_t>(g + offset)].push_back(name + suffix);
        }
    };
    put(0, "1");
    put(1, "Q0");
    put(3, "Q1");
    put(4, "Q1Q0");

    auto q0 = zero_matrices(labels, 1);
    auto q1 = zero_matrices(labels, 3);
    // Q0: 1 -> Q0, Q1 -> Q1Q0. Q1: 1 -> Q1, Q0 -> Q1Q0.
    if (g + 1 <= max_degree) {
        q0[static_cast<std::size_t>(g)].set(0, 0);
    }
    if (g + 4 <= max_degree) {
        q0[static_cast<std::size_t>(g + 3)].set(0, 0);
        q1[static_cast<std::size_t>(g + 1)].set(0, 0);
    }
    if (g + 3 <= max_degree) {
        q1[static_cast<std::size_t>(g)].set(0, 0);
    }
    return EModule("E" + suffix, std::move(labels), GradedMap(1, std::move(q0)), GradedMap(3, std::move(q1)));
}

EModule free_module(const std::vector<int>& generator_degrees, int max_degree)
{
    EModule out = EModule::zero(max_degree, "free");
    for (int g : generator_degrees) {
        out = direct_sum(out, exterior_algebra(max_degree, g));
    }
    return out;
}

EModule trivial_module(const std::vector<int>& generator_degrees, int max_degree)
{
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(max_degree + 1));
    for (std::size_t i = 0; i < generator_degrees.size(); ++i) {
        const int g = generator_degrees[i];
        if (g < 0 || g > max_degree) {
            throw DomainError("generator degree outside truncation");
        }
        labels[static_cast<std::size_t>(g)].push_back("t" + std::to_string(i) + "@" + std::to_string(g));
    }
    auto q0 = zero_matrices(labels, 1);
    auto q1 = zero_matrices(labels, 3);
    return EModule("trivial", std::move(labels), GradedMap(1, std::move(q0)), GradedMap(3, std::move(q1)));
}

EModule direct_sum(const EModule& a, const EModule& b)
{
    if (a.max_degree() != b.max_degree()) {
        throw DomainError("direct sum of modules truncated at different degrees");
    }
    const int top = a.max_degree();
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        auto& l = labels[static_cast<std::size_t>(d)];
        l = a.labels(d);
        l.insert(l.end(), b.labels(d).begin(), b.labels(d).end());
    }
    std::array<std::vector<BitMatrix>, 2> mats;
    for (auto q : {Primitive::Q0, Primitive::Q1}) {
        const int s = degree_shift(q);
        auto& out = mats[static_cast<std::size_t>(q)];
        for (int d = 0; d + s <= top; ++d) {
            const auto& ma = a.matrix(q, d);
            const auto& mb = b.matrix(q, d);
            BitMatrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
            for (std::size_t r = 0; r < ma.rows(); ++r) {
                for (auto c : ma.row(r).ones()) {
                    m.set(r, c);
                }
            }
            for (std::size_t r = 0; r < mb.rows(); ++r) {
                for (auto c : mb.row(r).ones()) {
                    m.set(ma.rows() + r, ma.cols() + c);
                }
            }
            out.push_back(std::move(m));
        }
    }
    return EModule(a.label() + " + " + b.label(), std::move(labels), GradedMap(1, std::move(mats[0])),
                   GradedMap(3, std::move(mats[1])));
}

// ---------------------------------------------------------------------------
// Relations

RelationReport check_relations(const EModule& m)
{
    const int top = m.max_degree();
    RelationReport report;
    report.window = Window{0, top - 6};

    struct Failure {
        int degree;
        int order;
        std::string relation;
        std::size_t row;
    };
    std::vector<std::optional<Failure>> per_degree(static_cast<std::size_t>(top + 1));

    parallel_for(per_degree.size(), [&](std::size_t slot) {
        const int d = static_cast<int>(slot);
        auto first_nonzero = [](const BitMatrix& x) -> std::optional<std::size_t> {
            for (std::size_t r = 0; r < x.rows(); ++r) {
                if (x.row(r).any()) {
                    return r;
                }
            }
            return std::nullopt;
        };
        if (d + 2 <= top) {
            auto prod = m.matrix(Primitive::Q0, d).multiply(m.matrix(Primitive::Q0, d + 1));
            if (auto r = first_nonzero(prod)) {
                per_degree[slot] = Failure{d, 0, "Q0Q0", *r};
                return;
            }
        }
        if (d + 4 <= top) {
            auto a = m.matrix(Primitive::Q0, d).multiply(m.matrix(Primitive::Q1, d + 1));
            auto b = m.matrix(Primitive::Q1, d).multiply(m.matrix(Primitive::Q0, d + 3));
            for (std::size_t r = 0; r < a.rows(); ++r) {
                if (!(a.row(r) == b.row(r))) {
                    per_degree[slot] = Failure{d, 1, "Q0Q1", r};
                    return;
                }
            }
        }
        if (d + 6 <= top) {
            auto prod = m.matrix(Primitive::Q1, d).multiply(m.matrix(Primitive::Q1, d + 3));
            if (auto r = first_nonzero(prod)) {
                per_degree[slot] = Failure{d, 2, "Q1Q1", *r};
                return;
            }
        }
    });

    for (const auto& f : per_degree) {
        if (f) {
            report.ok = false;
            report.relation = f->relation;
            report.degree = f->degree;
            report.element = m.labels(f->degree)[f->row];
            break;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Submodules and quotients

namespace {

std::vector<RowEchelon> echelons_for(const EModule& m)
{
    std::vector<RowEchelon> e;
    for (int d = 0; d <= m.max_degree(); ++d) {
        e.emplace_back(m.dim(d));
    }
    return e;
}

Submodule assemble_submodule(const EModule& m, const std::vector<RowEchelon>& spans, std::string label)
{
    const int top = m.max_degree();
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top + 1));
    std::vector<BitMatrix> inclusion;
    for (int d = 0; d <= top; ++d) {
        const auto& span = spans[static_cast<std::size_t>(d)];
        BitMatrix inc(0, m.dim(d));
        for (const auto& row : span.basis()) {
            labels[static_cast<std::size_t>(d)].push_back(m.describe(Element{d, row}));
            inc.append_row(row);
        }
        inclusion.push_back(std::move(inc));
    }

    std::array<std::vector<BitMatrix>, 2> mats;
    for (auto q : {Primitive::Q0, Primitive::Q1}) {
        const int s = degree_shift(q);
        for (int d = 0; d + s <= top; ++d) {
            const auto& span = spans[static_cast<std::size_t>(d)];
            const auto& target = spans[static_cast<std::size_t>(d + s)];
            BitMatrix mat(span.rank(), target.rank());
            for (std::size_t r = 0; r < span.rank(); ++r) {
                const auto image = m.matrix(q, d).apply(span.basis()[r]);
                if (!target.contains(image)) {
                    throw ClosureError(std::string(primitive_name(q)) + " maps " +
                                           m.describe(Element{d, span.basis()[r]}) + " outside the submodule",
                                       d + s, m.describe(Element{d + s, image}));
                }
                mat.row(r) = target.coordinates(image);
            }
            mats[static_cast<std::size_t>(q)].push_back(std::move(mat));
        }
    }
    EModule sub(std::move(label), std::move(labels), GradedMap(1, std::move(mats[0])),
                GradedMap(3, std::move(mats[1])));
    return Submodule{std::move(sub), std::move(inclusion)};
}

} // namespace

Submodule span_closure(const EModule& m, const std::vector<Element>& seeds, std::string label)
{
    auto spans = echelons_for(m);
    std::deque<Element> work;
    for (const auto& s : seeds) {
        m.check_element(s);
        work.push_back(s);
    }
    while (!work.empty()) {
        Element x = std::move(work.front());
        work.pop_front();
        if (!spans[static_cast<std::size_t>(x.degree)].insert(x.coords)) {
            continue;
        }
        for (auto q : {Primitive::Q0, Primitive::Q1}) {
            if (auto y = m.apply(q, x); y && !y->is_zero()) {
                work.push_back(std::move(*y));
            }
        }
    }
    return assemble_submodule(m, spans, std::move(label));
}

Submodule submodule_from_subspaces(const EModule& m, const std::vector<std::vector<BitVector>>& spanning,
                                   std::string label)
{
    if (spanning.size() != static_cast<std::size_t>(m.max_degree() + 1)) {
        throw DomainError("submodule needs one spanning list per degree");
    }
    auto spans = echelons_for(m);
    for (int d = 0; d <= m.max_degree(); ++d) {
        for (const auto& v : spanning[static_cast<std::size_t>(d)]) {
            m.check_element(Element{d, v});
            spans[static_cast<std::size_t>(d)].insert(v);
        }
    }
    return assemble_submodule(m, spans, std::move(label));
}

EModule quotient(const EModule& m, const Submodule& s, std::string label)
{
    const int top = m.max_degree();
    if (s.inclusion.size() != static_cast<std::size_t>(top + 1)) {
        throw DomainError("submodule truncation does not match the ambient module");
    }
    auto spans = echelons_for(m);
    for (int d = 0; d <= top; ++d) {
        const auto& inc = s.inclusion[static_cast<std::size_t>(d)];
        if (inc.cols() != m.dim(d)) {
            throw DomainError("submodule inclusion has the wrong width at degree " + std::to_string(d));
        }
        for (std::size_t r = 0; r < inc.rows(); ++r) {
            spans[static_cast<std::size_t>(d)].insert(inc.row(r));
        }
    }
    // Well-definedness: Q_i(S) must lie in S.
    for (auto q : {Primitive::Q0, Primitive::Q1}) {
        const int sh = degree_shift(q);
        for (int d = 0; d + sh <= top; ++d) {
            for (const auto& row : spans[static_cast<std::size_t>(d)].basis()) {
                const auto image = m.matrix(q, d).apply(row);
                if (!spans[static_cast<std::size_t>(d + sh)].contains(image)) {
                    throw ClosureError(std::string(primitive_name(q)) + " maps " + m.describe(Element{d, row}) +
                                           " out of the submodule; quotient is not defined",
                                       d + sh, m.describe(Element{d + sh, image}));
                }
            }
        }
    }

    std::vector<std::vector<std::size_t>> reps(static_cast<std::size_t>(top + 1));
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        reps[static_cast<std::size_t>(d)] = spans[static_cast<std::size_t>(d)].non_pivots();
        for (auto j : reps[static_cast<std::size_t>(d)]) {
            labels[static_cast<std::size_t>(d)].push_back("[" + m.labels(d)[j] + "]");
        }
    }
    std::array<std::vector<BitMatrix>, 2> mats;
    for (auto q : {Primitive::Q0, Primitive::Q1}) {
        const int sh = degree_shift(q);
        auto& out = mats[static_cast<std::size_t>(q)];
        out.resize(static_cast<std::size_t>(std::max(top - sh + 1, 0)));
        parallel_for(out.size(), [&](std::size_t slot) {
            const int d = static_cast<int>(slot);
            const auto& src = reps[slot];
            const auto& dst = reps[static_cast<std::size_t>(d + sh)];
            BitMatrix mat(src.size(), dst.size());
            for (std::size_t r = 0; r < src.size(); ++r) {
                const auto reduced = spans[static_cast<std::size_t>(d + sh)].reduce(m.matrix(q, d).row(src[r]));
                for (std::size_t c = 0; c < dst.size(); ++c) {
                    if (reduced.test(dst[c])) {
                        mat.set(r, c);
                    }
                }
            }
            out[slot] = std::move(mat);
        });
    }
    if (label.empty()) {
        label = m.label() + " / " + s.module.label();
    }
    return EModule(std::move(label), std::move(labels), GradedMap(1, std::move(mats[0])),
                   GradedMap(3, std::move(mats[1])));
}

// ---------------------------------------------------------------------------
// Generators and cyclic types

namespace {

// Span of Q0 M_{d-1} + Q1 M_{d-3} inside M_d.
RowEchelon decomposables(const EModule& m, int d)
{
    RowEchelon span(m.dim(d));
    if (d >= 1) {
        const auto& a = m.matrix(Primitive::Q0, d - 1);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            span.insert(a.row(r));
        }
    }
    if (d >= 3) {
        const auto& b = m.matrix(Primitive::Q1, d - 3);
        for (std::size_t r = 0; r < b.rows(); ++r) {
            span.insert(b.row(r));
        }
    }
    return span;
}

} // namespace

PoincareSeries min_generators(const EModule& m)
{
    const int top = m.max_degree();
    std::vector<std::int64_t> c(static_cast<std::size_t>(top + 1), 0);
    parallel_for(c.size(), [&](std::size_t slot) {
        const int d = static_cast<int>(slot);
        c[slot] = static_cast<std::int64_t>(m.dim(d) - decomposables(m, d).rank());
    });
    return PoincareSeries(std::move(c));
}

std::vector<Element> generator_representatives(const EModule& m)
{
    std::vector<Element> out;
    for (int d = 0; d <= m.max_degree(); ++d) {
        for (auto j : decomposables(m, d).non_pivots()) {
            out.push_back(m.basis_element(d, j));
        }
    }
    return out;
}

CyclicInfo cyclic_info(const EModule& m, const Element& x)
{
    m.check_element(x);
    if (x.degree > m.max_degree() - 4) {
        throw WindowError("element of degree " + std::to_string(x.degree) + " is within 4 of the truncation " +
                          std::to_string(m.max_degree()));
    }
    const auto q0x = *m.apply(Primitive::Q0, x);
    const auto q1x = *m.apply(Primitive::Q1, x);
    const auto q1q0x = *m.apply(Primitive::Q1, q0x);
    const auto q0q1x = *m.apply(Primitive::Q0, q1x);

    CyclicInfo info;
    info.q0_zero = q0x.is_zero();
    info.q1_zero = q1x.is_zero();
    info.q1q0_zero = q1q0x.is_zero();
    info.q0q1_zero = q0q1x.is_zero();
    // The four vectors sit in distinct degrees, so the span dimension is the
    // number of nonzero ones.
    info.span_dim = static_cast<std::size_t>(!x.is_zero()) + !info.q0_zero + !info.q1_zero + !info.q1q0_zero;

    if (x.is_zero() || !(q1q0x == q0q1x)) {
        info.type = CyclicType::Other;
    } else if (info.q0_zero && info.q1_zero) {
        info.type = CyclicType::Trivial;
    } else if (info.q1_zero) {
        info.type = CyclicType::Q0Only;
    } else if (info.q0_zero) {
        info.type = CyclicType::Q1Only;
    } else if (info.q1q0_zero) {
        info.type = CyclicType::Relational;
    } else {
        info.type = CyclicType::Free;
    }
    return info;
}

std::optional<MapFailure> check_emap(const EModule& source, const EModule& target, const GradedMap& f)
{
    const int top = source.max_degree();
    if (target.max_degree() != top) {
        return MapFailure{"source and target truncations differ", -1, {}};
    }
    for (int d = 0; d + f.shift() <= top; ++d) {
        if (!f.defined_at(d)) {
            return MapFailure{"map undefined", d, {}};
        }
        const auto& mat = f.at(d);
        if (mat.rows() != source.dim(d) || mat.cols() != target.dim(d + f.shift())) {
            return MapFailure{"matrix shape does not match bases", d, {}};
        }
    }
    for (auto q : {Primitive::Q0, Primitive::Q1}) {
        const int s = degree_shift(q);
        for (int d = 0; d + s + f.shift() <= top; ++d) {
            const auto lhs = source.matrix(q, d).multiply(f.at(d + s));
            const auto rhs = f.at(d).multiply(target.matrix(q, d + f.shift()));
            for (std::size_t r = 0; r < lhs.rows(); ++r) {
                if (!(lhs.row(r) == rhs.row(r))) {
                    return MapFailure{"does not commute with " + std::string(primitive_name(q)), d,
                                      source.labels(d)[r]};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace sqcheck
