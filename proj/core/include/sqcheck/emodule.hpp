#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqcheck/bitmatrix.hpp"
#include "sqcheck/gf2poly.hpp"
#include "sqcheck/series.hpp"
#include "sqcheck/steenrod.hpp"

namespace sqcheck {

// Closed degree interval on which a statement is certified. Empty if lo > hi.
struct Window {
    int lo = 0;
    int hi = -1;

    bool empty() const noexcept { return lo > hi; }
    bool contains(int d) const noexcept { return d >= lo && d <= hi; }
    friend bool operator==(const Window&, const Window&) = default;
};

enum class Primitive { Q0 = 0, Q1 = 1 };

constexpr int degree_shift(Primitive q) noexcept { return q == Primitive::Q0 ? 1 : 3; }
std::string_view primitive_name(Primitive q) noexcept;

// Degree-preserving-up-to-shift linear map between truncated graded spaces.
// Matrix d maps degree d to degree d + shift; rows are images of source
// basis vectors. Defined for 0 <= d <= max_degree - shift.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(int shift, std::vector<BitMatrix> by_degree);

    int shift() const noexcept { return shift_; }
    // Highest source degree with a matrix, -1 if none.
    int top_source_degree() const noexcept { return static_cast<int>(by_degree_.size()) - 1; }
    bool defined_at(int d) const noexcept { return d >= 0 && d <= top_source_degree(); }
    const BitMatrix& at(int d) const;

    friend bool operator==(const GradedMap&, const GradedMap&) = default;

private:
    int shift_ = 0;
    std::vector<BitMatrix> by_degree_;
};

// A homogeneous element given by coordinates against a module's basis.
struct Element {
    int degree = 0;
    BitVector coords;

    bool is_zero() const noexcept { return coords.none(); }
    friend bool operator==(const Element&, const Element&) = default;
};

// Truncated graded GF(2) vector space with the actions of Q0 (degree +1) and
// Q1 (degree +3). Immutable after construction.
class EModule {
public:
    EModule() = default;
    // labels[d] names the degree-d basis; q0/q1 are checked against these
    // dimensions. A module built from a polynomial ring also carries its
    // monomial basis.
    EModule(std::string label, std::vector<std::vector<std::string>> labels, GradedMap q0, GradedMap q1,
            std::shared_ptr<const GradedBasis> basis = nullptr);

    static EModule zero(int max_degree, std::string label = "0");

    const std::string& label() const noexcept { return label_; }
    int max_degree() const noexcept { return static_cast<int>(labels_.size()) - 1; }
    std::size_t dim(int d) const noexcept
    {
        return d >= 0 && d <= max_degree() ? labels_[static_cast<std::size_t>(d)].size() : 0;
    }
    std::size_t total_dim() const noexcept;
    PoincareSeries poincare() const;
    // Lowest degree with nonzero dimension, or 0 for the zero module.
    int lowest_degree() const noexcept;

    const std::vector<std::string>& labels(int d) const { return labels_.at(static_cast<std::size_t>(d)); }
    const GradedMap& action(Primitive q) const noexcept { return q == Primitive::Q0 ? q0_ : q1_; }
    // Matrix of Q from degree d; requires d + shift <= max_degree.
    const BitMatrix& matrix(Primitive q, int d) const;

    // Image of x; nullopt when the image lies beyond the truncation.
    std::optional<Element> apply(Primitive q, const Element& x) const;

    Element zero_element(int d) const;
    Element basis_element(int d, std::size_t index) const;
    // Checks degree range and coordinate length; throws DomainError.
    void check_element(const Element& x) const;
    std::string describe(const Element& x) const;

    // Monomial basis, if the module was built from a polynomial ring.
    const GradedBasis* basis() const noexcept { return basis_.get(); }
    // Coordinates of a homogeneous polynomial; throws DomainError if the
    // module has no monomial basis or a term is not a basis monomial.
    Element element_of(const PolynomialF2& p) const;

    // Structural equality: truncation, labels and action matrices.
    friend bool operator==(const EModule& a, const EModule& b)
    {
        return a.labels_ == b.labels_ && a.q0_ == b.q0_ && a.q1_ == b.q1_;
    }

private:
    std::string label_;
    std::vector<std::vector<std::string>> labels_;
    GradedMap q0_;
    GradedMap q1_;
    std::shared_ptr<const GradedBasis> basis_;
};

// Module structure of the ring given by `ctx` (reduced drops degree 0).
// Action matrices are computed column by column with q_milnor.
EModule build_emodule(const SteenrodContext& ctx, bool reduced);

// E itself: basis {1, Q0, Q1, Q1Q0} in degrees 0, 1, 3, 4, shifted up by
// `generator_degree` and truncated.
EModule exterior_algebra(int max_degree, int generator_degree = 0);
// Free module on generators of the given degrees.
EModule free_module(const std::vector<int>& generator_degrees, int max_degree);
// Trivial module on generators of the given degrees (all actions zero).
EModule trivial_module(const std::vector<int>& generator_degrees, int max_degree);

EModule direct_sum(const EModule& a, const EModule& b);

struct RelationReport {
    bool ok = true;
    // Name of the first failing identity: "Q0Q0", "Q1Q1" or "Q0Q1".
    std::string relation;
    int degree = -1;
    std::string element;
    // Degrees on which every identity was checkable.
    Window window;
};

// Verifies Q0Q0 = 0, Q1Q1 = 0 and Q0Q1 = Q1Q0 at every degree where both
// factors are defined.
RelationReport check_relations(const EModule& m);

// A submodule with its induced structure. inclusion[d] has one row per basis
// vector of the submodule at degree d, in ambient coordinates; the rows are
// in reduced echelon form.
struct Submodule {
    EModule module;
    std::vector<BitMatrix> inclusion;
};

// Smallest E-submodule containing the seeds (within the truncation).
Submodule span_closure(const EModule& m, const std::vector<Element>& seeds, std::string label = "span");

// The submodule spanned degreewise by the given ambient vectors. Throws
// ClosureError naming the first vector whose image escapes the span.
Submodule submodule_from_subspaces(const EModule& m, const std::vector<std::vector<BitVector>>& spanning,
                                   std::string label);

// M/S with the induced action. The quotient basis at degree d consists of
// the ambient basis vectors at non-pivot positions of S_d. Throws
// ClosureError if S is not closed under Q0 and Q1.
EModule quotient(const EModule& m, const Submodule& s, std::string label = {});

// dim M_d / (Q0 M_{d-1} + Q1 M_{d-3}) for every d.
PoincareSeries min_generators(const EModule& m);
// Ambient basis vectors whose classes form a basis of the indecomposables.
std::vector<Element> generator_representatives(const EModule& m);

enum class CyclicType { Trivial, Q0Only, Q1Only, Relational, Free, Other };
std::string_view cyclic_type_name(CyclicType t) noexcept;

struct CyclicInfo {
    CyclicType type = CyclicType::Other;
    std::size_t span_dim = 0;
    bool q0_zero = false;
    bool q1_zero = false;
    bool q1q0_zero = false;
    bool q0q1_zero = false;
};

// Classifies the cyclic submodule E.x. Throws WindowError if
// deg(x) > max_degree - 4.
CyclicInfo cyclic_info(const EModule& m, const Element& x);
inline CyclicType cyclic_classify(const EModule& m, const Element& x) { return cyclic_info(m, x).type; }

struct MapFailure {
    std::string what;
    int degree = -1;
    std::string element;
};

// Checks dimensions of f against source/target and that f commutes with Q0
// and Q1 wherever both sides are defined. Returns the first failure.
std::optional<MapFailure> check_emap(const EModule& source, const EModule& target, const GradedMap& f);

} // namespace sqcheck
