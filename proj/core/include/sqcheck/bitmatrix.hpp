#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sqcheck {

// Dense bit vector over GF(2), packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    static BitVector unit(std::size_t size, std::size_t index)
    {
        BitVector v(size);
        v.set(index);
        return v;
    }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool none() const noexcept;
    bool any() const noexcept { return !none(); }
    std::size_t count() const noexcept;
    // Index of the lowest set bit, or size() if none.
    std::size_t first() const noexcept;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    // Indices of set bits in ascending order.
    std::vector<std::size_t> ones() const;
    std::string to_string() const;

    static std::size_t word_count(std::size_t bits) noexcept { return (bits + 63) / 64; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major bit matrix. Rows are images of source basis vectors, so a
// vector v maps to v * M.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows, BitVector(cols)), cols_(cols) {}

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
    BitVector& row(std::size_t r) noexcept { return rows_[r]; }
    bool test(std::size_t r, std::size_t c) const noexcept { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c) noexcept { rows_[r].set(c); }
    void flip(std::size_t r, std::size_t c) noexcept { rows_[r].flip(c); }

    void append_row(BitVector row);

    bool is_zero() const noexcept;
    std::size_t rank() const;

    // v * M for a row vector v of length rows().
    BitVector apply(const BitVector& v) const;
    // this * other: (rows x cols) * (cols x other.cols).
    BitMatrix multiply(const BitMatrix& other) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::vector<BitVector> rows_;
    std::size_t cols_ = 0;
};

// Incrementally maintained reduced row echelon basis of a subspace of
// GF(2)^n. This is the single elimination kernel behind every rank, span
// membership, coordinate and complement computation.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    // Reduces v against the basis; the result is zero iff v is in the span.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).none(); }
    // Adds v to the span. Returns false if v was already in it.
    bool insert(BitVector v);

    // Coordinates of v against basis() (requires contains(v)).
    BitVector coordinates(const BitVector& v) const;

    // Basis rows; each row has a unique pivot which is zero in all other rows.
    const std::vector<BitVector>& basis() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    // Positions not used as pivots; unit vectors at these positions span a
    // complement of the subspace.
    std::vector<std::size_t> non_pivots() const;

private:
    std::size_t ambient_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace sqcheck
