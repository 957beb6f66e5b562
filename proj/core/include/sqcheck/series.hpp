#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sqcheck {

// Exact per-degree dimensions on [0, max_degree]. Arithmetic is truncated
// at max_degree and is checked: a negative coefficient throws AccountingError.
class PoincareSeries {
public:
    PoincareSeries() = default;
    explicit PoincareSeries(int max_degree) : coeffs_(static_cast<std::size_t>(max_degree + 1), 0) {}
    // Throws AccountingError if any coefficient is negative.
    explicit PoincareSeries(std::vector<std::int64_t> coeffs);
    PoincareSeries(std::initializer_list<std::int64_t> coeffs) : PoincareSeries(std::vector<std::int64_t>(coeffs)) {}

    int max_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t operator[](int d) const noexcept
    {
        return d >= 0 && d <= max_degree() ? coeffs_[static_cast<std::size_t>(d)] : 0;
    }
    void set(int d, std::int64_t value);
    void add_at(int d, std::int64_t value);
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    std::int64_t total() const noexcept;
    // Lowest degree with a nonzero coefficient, or -1.
    int lowest_degree() const noexcept;

    PoincareSeries operator+(const PoincareSeries& other) const;
    // Coefficientwise difference; throws AccountingError on a negative result.
    PoincareSeries operator-(const PoincareSeries& other) const;
    // Multiplication by t^k, truncated at max_degree.
    PoincareSeries shifted(int k) const;
    // Multiplication by a polynomial with integer coefficients (index = power
    // of t), truncated; throws AccountingError on a negative result.
    PoincareSeries times(std::span<const std::int64_t> poly) const;
    PoincareSeries times(std::initializer_list<std::int64_t> poly) const
    {
        return times(std::span<const std::int64_t>(poly.begin(), poly.size()));
    }
    PoincareSeries truncated(int max_degree) const;

    // First degree in [lo, hi] where the two series differ, or -1.
    int first_difference(const PoincareSeries& other, int lo, int hi) const;

    std::string to_string() const;

    friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

// Dimensions of E = Lambda(Q0, Q1): 1 + t + t^3 + t^4.
inline constexpr std::int64_t kExteriorSeries[] = {1, 1, 0, 1, 1};

} // namespace sqcheck
