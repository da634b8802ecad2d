#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "btt/errors.hpp"

namespace btt {

// Dense bit vector over GF(2), packed into 64-bit words, LSB-first within a
// word. Padding bits past `size()` are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    // Each bit i.i.d. Bernoulli(1/2) drawn from `rng`.
    static BitVector random(std::size_t len, std::mt19937_64& rng);

    static BitVector from_string(const std::string& bits);  // "0110..."

    std::size_t size() const { return len_; }

    bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t weight() const;
    bool none() const;

    // Parity of the GF(2) inner product <*this, other>.
    bool dot(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVector&) const = default;

    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Bijection on {0,...,size-1}; map()[i] is where index i is sent.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> map);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return map_.size(); }
    std::size_t operator()(std::size_t i) const { return map_[i]; }
    const std::vector<std::size_t>& map() const { return map_; }

    Permutation inverse() const;

    // out[map(i)] = v[i]
    BitVector apply(const BitVector& v) const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::size_t> map_;
};

// Dense row-major bit-packed binary matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix random(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

    // Rejection-samples Bernoulli(1/2) matrices until one is invertible.
    // Throws SamplingError when max_attempts is exhausted.
    static BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng,
                                       int max_attempts = 1000);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (j & 63);
        if (v)
            bits_[i * wpr_ + (j >> 6)] |= mask;
        else
            bits_[i * wpr_ + (j >> 6)] &= ~mask;
    }

    BitVector row(std::size_t i) const;
    void set_row(std::size_t i, const BitVector& v);
    BitVector column(std::size_t j) const;
    std::size_t row_weight(std::size_t i) const;

    BitMatrix operator*(const BitMatrix& other) const;
    BitVector operator*(const BitVector& v) const;

    BitMatrix transposed() const;

    std::size_t rank() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    // Throws SingularMatrixError unless square and full rank.
    BitMatrix inverted() const;

    // Basis of {v : (*this) v^T = 0}, one row per basis vector (may be 0 rows).
    BitMatrix null_space() const;

    BitMatrix permuted_columns(const Permutation& p) const;

    bool operator==(const BitMatrix&) const = default;

    std::string to_string() const;  // rows of '0'/'1', newline-separated

    const std::uint64_t* row_words(std::size_t i) const { return bits_.data() + i * wpr_; }
    std::uint64_t* row_words(std::size_t i) { return bits_.data() + i * wpr_; }
    std::size_t words_per_row() const { return wpr_; }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace btt
