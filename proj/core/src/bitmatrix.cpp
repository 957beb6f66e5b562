#include "sqcheck/bitmatrix.hpp"

#include <bit>
#include <cassert>

#include "sqcheck/errors.hpp"

namespace sqcheck {

bool BitVector::none() const noexcept
{
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

std::size_t BitVector::count() const noexcept
{
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

std::size_t BitVector::first() const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != 0) {
            return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        }
    }
    return size_;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_) {
        throw DomainError("bit vector size mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::vector<std::size_t> BitVector::ones() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w != 0) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (test(i)) {
            s[i] = '1';
        }
    }
    return s;
}

void BitMatrix::append_row(BitVector row)
{
    if (row.size() != cols_) {
        throw DomainError("row length does not match matrix width");
    }
    rows_.push_back(std::move(row));
}

bool BitMatrix::is_zero() const noexcept
{
    for (const auto& r : rows_) {
        if (r.any()) {
            return false;
        }
    }
    return true;
}

std::size_t BitMatrix::rank() const
{
    RowEchelon echelon(cols_);
    for (const auto& r : rows_) {
        echelon.insert(r);
        if (echelon.rank() == cols_) {
            break;
        }
    }
    return echelon.rank();
}

BitVector BitMatrix::apply(const BitVector& v) const
{
    if (v.size() != rows()) {
        throw DomainError("vector length does not match matrix height");
    }
    BitVector out(cols_);
    for (auto r : v.ones()) {
        out ^= rows_[r];
    }
    return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const
{
    if (cols_ != other.rows()) {
        throw DomainError("matrix shapes are not composable");
    }
    BitMatrix out(rows(), other.cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        out.rows_[r] = other.apply(rows_[r]);
    }
    return out;
}

BitVector RowEchelon::reduce(BitVector v) const
{
    assert(v.size() == ambient_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.test(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return v;
}

bool RowEchelon::insert(BitVector v)
{
    if (v.size() != ambient_) {
        throw DomainError("vector length does not match ambient dimension");
    }
    v = reduce(std::move(v));
    const auto pivot = v.first();
    if (pivot == v.size()) {
        return false;
    }
    for (auto& row : rows_) {
        if (row.test(pivot)) {
            row ^= v;
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

BitVector RowEchelon::coordinates(const BitVector& v) const
{
    if (!contains(v)) {
        throw DomainError("vector is not in the span");
    }
    BitVector c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.test(pivots_[i])) {
            c.set(i);
        }
    }
    return c;
}

std::vector<std::size_t> RowEchelon::non_pivots() const
{
    std::vector<bool> used(ambient_, false);
    for (auto p : pivots_) {
        used[p] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_; ++i) {
        if (!used[i]) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace sqcheck
