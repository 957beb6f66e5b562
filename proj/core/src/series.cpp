#include "sqcheck/series.hpp"

#include <algorithm>

#include "sqcheck/errors.hpp"

namespace sqcheck {

namespace {

void check_nonnegative(const std::vector<std::int64_t>& c)
{
    for (std::size_t d = 0; d < c.size(); ++d) {
        if (c[d] < 0) {
            throw AccountingError("negative coefficient " + std::to_string(c[d]) + " at degree " + std::to_string(d),
                                  static_cast<int>(d));
        }
    }
}

} // namespace

PoincareSeries::PoincareSeries(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs))
{
    check_nonnegative(coeffs_);
}

void PoincareSeries::set(int d, std::int64_t value)
{
    if (d < 0 || d > max_degree()) {
        throw RangeError("degree " + std::to_string(d) + " outside series");
    }
    if (value < 0) {
        throw AccountingError("negative coefficient at degree " + std::to_string(d), d);
    }
    coeffs_[static_cast<std::size_t>(d)] = value;
}

void PoincareSeries::add_at(int d, std::int64_t value)
{
    if (d < 0 || d > max_degree()) {
        return;
    }
    set(d, coeffs_[static_cast<std::size_t>(d)] + value);
}

bool PoincareSeries::is_zero() const noexcept
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

std::int64_t PoincareSeries::total() const noexcept
{
    std::int64_t t = 0;
    for (auto c : coeffs_) {
        t += c;
    }
    return t;
}

int PoincareSeries::lowest_degree() const noexcept
{
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d] != 0) {
            return static_cast<int>(d);
        }
    }
    return -1;
}

PoincareSeries PoincareSeries::operator+(const PoincareSeries& other) const
{
    const int top = std::min(max_degree(), other.max_degree());
    std::vector<std::int64_t> out(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        out[static_cast<std::size_t>(d)] = (*this)[d] + other[d];
    }
    return PoincareSeries(std::move(out));
}

PoincareSeries PoincareSeries::operator-(const PoincareSeries& other) const
{
    const int top = std::min(max_degree(), other.max_degree());
    std::vector<std::int64_t> out(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        out[static_cast<std::size_t>(d)] = (*this)[d] - other[d];
    }
    return PoincareSeries(std::move(out));
}

PoincareSeries PoincareSeries::shifted(int k) const
{
    if (k < 0) {
        throw DomainError("negative shift");
    }
    PoincareSeries out(max_degree());
    for (int d = 0; d + k <= max_degree(); ++d) {
        out.coeffs_[static_cast<std::size_t>(d + k)] = (*this)[d];
    }
    return out;
}

PoincareSeries PoincareSeries::times(std::span<const std::int64_t> poly) const
{
    std::vector<std::int64_t> out(coeffs_.size(), 0);
    for (int d = 0; d <= max_degree(); ++d) {
        for (std::size_t j = 0; j < poly.size() && static_cast<int>(j) <= d; ++j) {
            out[static_cast<std::size_t>(d)] += poly[j] * (*this)[d - static_cast<int>(j)];
        }
    }
    return PoincareSeries(std::move(out));
}

PoincareSeries PoincareSeries::truncated(int top) const
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(top + 1), 0);
    for (int d = 0; d <= top; ++d) {
        out[static_cast<std::size_t>(d)] = (*this)[d];
    }
    return PoincareSeries(std::move(out));
}

int PoincareSeries::first_difference(const PoincareSeries& other, int lo, int hi) const
{
    for (int d = std::max(lo, 0); d <= hi; ++d) {
        if ((*this)[d] != other[d]) {
            return d;
        }
    }
    return -1;
}

std::string PoincareSeries::to_string() const
{
    std::string s;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (d != 0) {
            s += ',';
        }
        s += std::to_string(coeffs_[d]);
    }
    return s;
}

} // namespace sqcheck
