#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqcheck/series.hpp"

namespace sqcheck {

enum class Family { BSO, BO };

std::string_view family_name(Family f) noexcept;

// Which cohomology ring: H*(BSO(n)) = Z/2[w2..wn] or H*(BO(n)) = Z/2[w1..wn],
// truncated at max_degree.
struct RingSpec {
    Family family = Family::BSO;
    int rank = 2;
    int max_degree = 1;

    static RingSpec bso(int n, int max_degree) { return validated({Family::BSO, n, max_degree}); }
    static RingSpec bo(int n, int max_degree) { return validated({Family::BO, n, max_degree}); }
    // Throws DomainError when rank or max_degree is out of bounds.
    static RingSpec validated(RingSpec spec);

    int lowest_generator() const noexcept { return family == Family::BSO ? 2 : 1; }
    bool has_generator(int index) const noexcept { return index >= lowest_generator() && index <= rank; }
    std::vector<int> generators() const;
    std::string name() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Monomial in Stiefel-Whitney classes, stored as exponents indexed by
// generator (position i holds the exponent of w_{i+1}) with trailing zeros
// trimmed so equal monomials have equal storage.
class Monomial {
public:
    Monomial() = default;
    // From (index, exponent) pairs; zero exponents are ignored, repeated
    // indices accumulate.
    Monomial(std::initializer_list<std::pair<int, unsigned>> factors);

    static Monomial generator(int index, unsigned exponent = 1);

    unsigned exponent(int index) const noexcept
    {
        return index >= 1 && static_cast<std::size_t>(index) <= exps_.size() ? exps_[index - 1] : 0;
    }
    void set_exponent(int index, unsigned e);

    bool is_one() const noexcept { return exps_.empty(); }
    // Largest index with nonzero exponent, 0 for the unit.
    int max_index() const noexcept { return static_cast<int>(exps_.size()); }
    int degree() const noexcept;

    // (index, exponent) pairs with nonzero exponent, ascending index.
    std::vector<std::pair<int, unsigned>> factors() const;

    // Exponent addition; no ring relations.
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Canonical order: degree ascending, then within a degree the monomial
    // with the larger exponent at the first differing generator index comes
    // first (so w2^3 precedes w3^2, and w2*w3 precedes w5).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::size_t hash() const noexcept;

private:
    void trim();
    std::vector<std::uint32_t> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// GF(2) polynomial: a set of monomials held in canonical order.
class PolynomialF2 {
public:
    PolynomialF2() = default;
    PolynomialF2(Monomial m) { terms_.push_back(std::move(m)); } // NOLINT(implicit)

    static PolynomialF2 one() { return PolynomialF2(Monomial{}); }
    // Sums the given monomials; pairs of equal monomials cancel.
    static PolynomialF2 from_terms(std::vector<Monomial> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    bool contains(const Monomial& m) const;

    bool is_homogeneous() const noexcept;
    // Degree of the first term; the zero polynomial has no degree.
    std::optional<int> degree() const noexcept;
    int max_index() const noexcept;

    PolynomialF2& operator+=(const PolynomialF2& other);
    friend PolynomialF2 operator+(PolynomialF2 a, const PolynomialF2& b) { return a += b; }
    // Product without ring relations.
    friend PolynomialF2 operator*(const PolynomialF2& a, const PolynomialF2& b);
    friend PolynomialF2 operator*(const PolynomialF2& a, const Monomial& m);

    friend bool operator==(const PolynomialF2&, const PolynomialF2&) = default;

private:
    std::vector<Monomial> terms_;
};

// Drops every monomial that vanishes in the ring: indices above the rank,
// and w1 in the oriented family.
PolynomialF2 apply_relations(const PolynomialF2& p, const RingSpec& spec);
bool is_valid(const Monomial& m, const RingSpec& spec) noexcept;
bool is_valid(const PolynomialF2& p, const RingSpec& spec) noexcept;

// Product in the ring: GF(2) product with relations applied.
// Throws DomainError if an input index is not a generator of the ring.
PolynomialF2 multiply(const PolynomialF2& p, const PolynomialF2& q, const RingSpec& spec);

// All degree-d monomials in canonical order. Throws RangeError unless
// 0 <= d <= spec.max_degree.
std::vector<Monomial> enumerate_basis(const RingSpec& spec, int degree);

// Per-degree monomial counts on [0, max_degree].
PoincareSeries poincare(const RingSpec& spec, bool reduced);

// Per-degree ordered lists of monomials with a reverse index.
class GradedBasis {
public:
    GradedBasis() = default;
    // Takes ownership of the per-degree lists (index = degree). Every
    // monomial in list d must have degree d.
    explicit GradedBasis(std::vector<std::vector<Monomial>> by_degree);

    static GradedBasis of_ring(const RingSpec& spec, bool reduced);

    int max_degree() const noexcept { return static_cast<int>(by_degree_.size()) - 1; }
    std::size_t dim(int d) const noexcept
    {
        return d >= 0 && d <= max_degree() ? by_degree_[static_cast<std::size_t>(d)].size() : 0;
    }
    const std::vector<Monomial>& at(int d) const { return by_degree_.at(static_cast<std::size_t>(d)); }
    // Position of m inside its degree, if present.
    std::optional<std::size_t> find(const Monomial& m) const;

private:
    std::vector<std::vector<Monomial>> by_degree_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// Canonical text form: "w2^2*w3 + w5", "1" for the unit, "0" for zero.
std::string to_string(const Monomial& m);
std::string to_string(const PolynomialF2& p);

// Parses the element grammar
//   poly   := term ('+' term)* | '0'
//   term   := factor ('*' factor)* | '1'
//   factor := 'w' INT ('^' INT)?
// Throws ParseError (with byte offset) on syntax errors, on generator
// indices outside the ring and on zero exponents.
PolynomialF2 parse_poly(std::string_view text, const RingSpec& spec);

} // namespace sqcheck
