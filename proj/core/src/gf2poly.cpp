#include "sqcheck/gf2poly.hpp"

#include <algorithm>
#include <cctype>

#include "sqcheck/errors.hpp"

namespace sqcheck {

std::string_view family_name(Family f) noexcept { return f == Family::BSO ? "bso" : "bo"; }

RingSpec RingSpec::validated(RingSpec spec)
{
    const int min_rank = spec.family == Family::BSO ? 2 : 1;
    if (spec.rank < min_rank) {
        throw DomainError(std::string(family_name(spec.family)) + " rank must be at least " +
                          std::to_string(min_rank) + ", got " + std::to_string(spec.rank));
    }
    if (spec.max_degree < 1) {
        throw DomainError("max degree must be at least 1, got " + std::to_string(spec.max_degree));
    }
    return spec;
}

std::vector<int> RingSpec::generators() const
{
    std::vector<int> out;
    for (int i = lowest_generator(); i <= rank; ++i) {
        out.push_back(i);
    }
    return out;
}

std::string RingSpec::name() const
{
    return (family == Family::BSO ? "BSO(" : "BO(") + std::to_string(rank) + ")";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<std::pair<int, unsigned>> factors)
{
    for (auto [index, e] : factors) {
        set_exponent(index, exponent(index) + e);
    }
}

Monomial Monomial::generator(int index, unsigned exponent)
{
    Monomial m;
    m.set_exponent(index, exponent);
    return m;
}

void Monomial::set_exponent(int index, unsigned e)
{
    if (index < 1) {
        throw DomainError("generator index must be positive, got " + std::to_string(index));
    }
    const auto pos = static_cast<std::size_t>(index - 1);
    if (pos >= exps_.size()) {
        if (e == 0) {
            return;
        }
        exps_.resize(pos + 1, 0);
    }
    exps_[pos] = e;
    trim();
}

void Monomial::trim()
{
    while (!exps_.empty() && exps_.back() == 0) {
        exps_.pop_back();
    }
}

int Monomial::degree() const noexcept
{
    int d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        d += static_cast<int>(i + 1) * static_cast<int>(exps_[i]);
    }
    return d;
}

std::vector<std::pair<int, unsigned>> Monomial::factors() const
{
    std::vector<std::pair<int, unsigned>> out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] != 0) {
            out.emplace_back(static_cast<int>(i + 1), exps_[i]);
        }
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial out;
    const auto& longer = a.exps_.size() >= b.exps_.size() ? a : b;
    const auto& shorter = a.exps_.size() >= b.exps_.size() ? b : a;
    out.exps_ = longer.exps_;
    for (std::size_t i = 0; i < shorter.exps_.size(); ++i) {
        out.exps_[i] += shorter.exps_[i];
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0) {
        return c;
    }
    const auto n = std::max(a.exps_.size(), b.exps_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto ea = i < a.exps_.size() ? a.exps_[i] : 0u;
        const auto eb = i < b.exps_.size() ? b.exps_[i] : 0u;
        if (ea != eb) {
            return eb <=> ea;
        }
    }
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto e : exps_) {
        h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------------------
// PolynomialF2

PolynomialF2 PolynomialF2::from_terms(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end());
    PolynomialF2 p;
    p.terms_.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) {
            ++j;
        }
        if ((j - i) % 2 == 1) {
            p.terms_.push_back(std::move(terms[i]));
        }
        i = j;
    }
    return p;
}

bool PolynomialF2::contains(const Monomial& m) const
{
    return std::binary_search(terms_.begin(), terms_.end(), m);
}

bool PolynomialF2::is_homogeneous() const noexcept
{
    if (terms_.empty()) {
        return true;
    }
    return terms_.front().degree() == terms_.back().degree();
}

std::optional<int> PolynomialF2::degree() const noexcept
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.front().degree();
}

int PolynomialF2::max_index() const noexcept
{
    int m = 0;
    for (const auto& t : terms_) {
        m = std::max(m, t.max_index());
    }
    return m;
}

PolynomialF2& PolynomialF2::operator+=(const PolynomialF2& other)
{
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

PolynomialF2 operator*(const PolynomialF2& a, const PolynomialF2& b)
{
    std::vector<Monomial> products;
    products.reserve(a.size() * b.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            products.push_back(x * y);
        }
    }
    return PolynomialF2::from_terms(std::move(products));
}

PolynomialF2 operator*(const PolynomialF2& a, const Monomial& m)
{
    // Multiplication by a monomial preserves the canonical order.
    PolynomialF2 out;
    out.terms_.reserve(a.size());
    for (const auto& x : a.terms_) {
        out.terms_.push_back(x * m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ring structure

bool is_valid(const Monomial& m, const RingSpec& spec) noexcept
{
    if (m.max_index() > spec.rank) {
        return false;
    }
    return spec.family == Family::BO || m.exponent(1) == 0;
}

bool is_valid(const PolynomialF2& p, const RingSpec& spec) noexcept
{
    return std::all_of(p.terms().begin(), p.terms().end(), [&](const Monomial& m) { return is_valid(m, spec); });
}

PolynomialF2 apply_relations(const PolynomialF2& p, const RingSpec& spec)
{
    std::vector<Monomial> kept;
    for (const auto& m : p.terms()) {
        if (is_valid(m, spec)) {
            kept.push_back(m);
        }
    }
    return PolynomialF2::from_terms(std::move(kept));
}

PolynomialF2 multiply(const PolynomialF2& p, const PolynomialF2& q, const RingSpec& spec)
{
    if (!is_valid(p, spec) || !is_valid(q, spec)) {
        throw DomainError("operand has a generator index outside " + spec.name());
    }
    return apply_relations(p * q, spec);
}

namespace {

void enumerate_rec(const std::vector<int>& gens, std::size_t pos, int remaining, Monomial& current,
                   std::vector<Monomial>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (pos == gens.size()) {
        return;
    }
    const int g = gens[pos];
    for (unsigned e = 0; static_cast<int>(e) * g <= remaining; ++e) {
        current.set_exponent(g, e);
        enumerate_rec(gens, pos + 1, remaining - static_cast<int>(e) * g, current, out);
    }
    current.set_exponent(g, 0);
}

} // namespace

std::vector<Monomial> enumerate_basis(const RingSpec& spec, int degree)
{
    if (degree < 0 || degree > spec.max_degree) {
        throw RangeError("degree " + std::to_string(degree) + " outside [0, " + std::to_string(spec.max_degree) +
                         "]");
    }
    std::vector<Monomial> out;
    Monomial current;
    enumerate_rec(spec.generators(), 0, degree, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

PoincareSeries poincare(const RingSpec& spec, bool reduced)
{
    // Coin-change count of partitions into the generator degrees.
    std::vector<std::int64_t> c(static_cast<std::size_t>(spec.max_degree + 1), 0);
    c[0] = 1;
    for (int g : spec.generators()) {
        for (int d = g; d <= spec.max_degree; ++d) {
            c[static_cast<std::size_t>(d)] += c[static_cast<std::size_t>(d - g)];
        }
    }
    if (reduced) {
        c[0] = 0;
    }
    return PoincareSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// GradedBasis

GradedBasis::GradedBasis(std::vector<std::vector<Monomial>> by_degree) : by_degree_(std::move(by_degree))
{
    for (std::size_t d = 0; d < by_degree_.size(); ++d) {
        for (std::size_t i = 0; i < by_degree_[d].size(); ++i) {
            const auto& m = by_degree_[d][i];
            if (m.degree() != static_cast<int>(d)) {
                throw DomainError("monomial " + to_string(m) + " listed at degree " + std::to_string(d));
            }
            if (!index_.emplace(m, i).second) {
                throw DomainError("monomial " + to_string(m) + " listed twice");
            }
        }
    }
}

GradedBasis GradedBasis::of_ring(const RingSpec& spec, bool reduced)
{
    std::vector<std::vector<Monomial>> by_degree(static_cast<std::size_t>(spec.max_degree + 1));
    for (int d = reduced ? 1 : 0; d <= spec.max_degree; ++d) {
        by_degree[static_cast<std::size_t>(d)] = enumerate_basis(spec, d);
    }
    return GradedBasis(std::move(by_degree));
}

std::optional<std::size_t> GradedBasis::find(const Monomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Monomial& m)
{
    if (m.is_one()) {
        return "1";
    }
    std::string s;
    for (auto [index, e] : m.factors()) {
        if (!s.empty()) {
            s += '*';
        }
        s += 'w';
        s += std::to_string(index);
        if (e != 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

std::string to_string(const PolynomialF2& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto& m : p.terms()) {
        if (!s.empty()) {
            s += " + ";
        }
        s += to_string(m);
    }
    return s;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const RingSpec& spec) : text_(text), spec_(spec) {}

    PolynomialF2 parse()
    {
        skip_space();
        if (at_end()) {
            throw ParseError("empty element", pos_);
        }
        if (peek() == '0') {
            ++pos_;
            skip_space();
            if (!at_end()) {
                throw ParseError("unexpected input after '0'", pos_);
            }
            return {};
        }
        std::vector<Monomial> terms;
        terms.push_back(term());
        skip_space();
        while (!at_end()) {
            expect('+');
            skip_space();
            terms.push_back(term());
            skip_space();
        }
        return PolynomialF2::from_terms(std::move(terms));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    void expect(char c)
    {
        if (at_end() || peek() != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    Monomial term()
    {
        if (!at_end() && peek() == '1') {
            ++pos_;
            return {};
        }
        Monomial m = factor();
        for (;;) {
            const auto save = pos_;
            skip_space();
            if (at_end() || peek() != '*') {
                pos_ = save;
                return m;
            }
            ++pos_;
            skip_space();
            m = m * factor();
        }
    }

    Monomial factor()
    {
        expect('w');
        const auto index_pos = pos_;
        const auto index = integer();
        if (!spec_.has_generator(static_cast<int>(index))) {
            throw ParseError("w" + std::to_string(index) + " is not a generator of " + spec_.name(), index_pos);
        }
        unsigned exponent = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            const auto exp_pos = pos_;
            const auto e = integer();
            if (e == 0) {
                throw ParseError("exponent must be at least 1", exp_pos);
            }
            exponent = static_cast<unsigned>(e);
        }
        return Monomial::generator(static_cast<int>(index), exponent);
    }

    unsigned long integer()
    {
        const auto start = pos_;
        unsigned long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (pos_ - start >= 6) {
                throw ParseError("integer too large", start);
            }
            value = value * 10 + static_cast<unsigned long>(peek() - '0');
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError("expected integer", pos_);
        }
        return value;
    }

    std::string_view text_;
    const RingSpec& spec_;
    std::size_t pos_ = 0;
};

} // namespace

PolynomialF2 parse_poly(std::string_view text, const RingSpec& spec)
{
    return PolyParser(text, spec).parse();
}

} // namespace sqcheck
