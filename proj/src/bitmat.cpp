#include "btt/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace btt {

namespace {

inline std::uint64_t tail_mask(std::size_t nbits) {
    const std::size_t rem = nbits & 63;
    return rem ? ((std::uint64_t(1) << rem) - 1) : ~std::uint64_t(0);
}

}  // namespace

BitVector BitVector::random(std::size_t len, std::mt19937_64& rng) {
    BitVector v(len);
    for (auto& w : v.words_) w = rng();
    if (!v.words_.empty()) v.words_.back() &= tail_mask(len);
    return v;
}

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] == '1');
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
}

bool BitVector::none() const {
    for (auto word : words_)
        if (word) return false;
    return true;
}

bool BitVector::dot(const BitVector& other) const {
    if (len_ != other.len_) throw ShapeError("dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_) throw ShapeError("xor: length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if ((*this)[i]) s[i] = '1';
    return s;
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (auto v : map_) {
        if (v >= map_.size() || seen[v]) throw std::invalid_argument("permutation: not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    Permutation p;
    p.map_ = std::move(m);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.map_.resize(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv.map_[map_[i]] = i;
    return inv;
}

BitVector Permutation::apply(const BitVector& v) const {
    if (v.size() != map_.size()) throw ShapeError("permutation: length mismatch");
    BitVector out(v.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        if (v[i]) out.set(map_[i], true);
    return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    const std::uint64_t mask = tail_mask(cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::uint64_t* w = m.row_words(i);
        for (std::size_t k = 0; k < m.wpr_; ++k) w[k] = rng();
        w[m.wpr_ - 1] &= mask;
    }
    return m;
}

BitMatrix BitMatrix::random_invertible(std::size_t n, std::mt19937_64& rng, int max_attempts) {
    if (max_attempts < 1) throw std::invalid_argument("random_invertible: max_attempts < 1");
    for (int a = 0; a < max_attempts; ++a) {
        BitMatrix m = random(n, n, rng);
        if (m.is_invertible()) return m;
    }
    throw SamplingError("random_invertible: no invertible matrix in " +
                        std::to_string(max_attempts) + " attempts");
}

BitVector BitMatrix::row(std::size_t i) const {
    BitVector v(cols_);
    std::copy(row_words(i), row_words(i) + wpr_, v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t i, const BitVector& v) {
    if (v.size() != cols_) throw ShapeError("set_row: length mismatch");
    std::copy(v.words().begin(), v.words().end(), row_words(i));
}

BitVector BitMatrix::column(std::size_t j) const {
    BitVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (get(i, j)) v.set(i, true);
    return v;
}

std::size_t BitMatrix::row_weight(std::size_t i) const {
    std::size_t w = 0;
    const std::uint64_t* p = row_words(i);
    for (std::size_t k = 0; k < wpr_; ++k) w += std::popcount(p[k]);
    return w;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (cols_ != other.rows_) throw ShapeError("mat_mul: inner dimensions differ");
    BitMatrix c(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t* out = c.row_words(i);
        const std::uint64_t* a = row_words(i);
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t w = a[k];
            while (w) {
                const std::size_t s = k * 64 + std::countr_zero(w);
                w &= w - 1;
                const std::uint64_t* b = other.row_words(s);
                for (std::size_t t = 0; t < other.wpr_; ++t) out[t] ^= b[t];
            }
        }
    }
    return c;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
    if (cols_ != v.size()) throw ShapeError("mat_vec: dimension mismatch");
    BitVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const std::uint64_t* a = row_words(i);
        for (std::size_t k = 0; k < wpr_; ++k) acc ^= a[k] & v.words()[k];
        if (std::popcount(acc) & 1) out.set(i, true);
    }
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const std::uint64_t* a = row_words(i);
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t w = a[k];
            while (w) {
                const std::size_t j = k * 64 + std::countr_zero(w);
                w &= w - 1;
                t.set(j, i, true);
            }
        }
    }
    return t;
}

std::size_t BitMatrix::rank() const {
    BitMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && !m.get(pivot, col)) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            std::swap_ranges(m.row_words(r), m.row_words(r) + wpr_, m.row_words(pivot));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != r && m.get(i, col)) {
                std::uint64_t* dst = m.row_words(i);
                const std::uint64_t* src = m.row_words(r);
                for (std::size_t k = 0; k < wpr_; ++k) dst[k] ^= src[k];
            }
        }
        ++r;
    }
    return r;
}

BitMatrix BitMatrix::inverted() const {
    if (rows_ != cols_) throw SingularMatrixError("invert: matrix not square");
    const std::size_t n = rows_;
    BitMatrix m = *this;
    BitMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !m.get(pivot, col)) ++pivot;
        if (pivot == n) throw SingularMatrixError("invert: matrix is singular");
        if (pivot != col) {
            std::swap_ranges(m.row_words(col), m.row_words(col) + m.wpr_, m.row_words(pivot));
            std::swap_ranges(inv.row_words(col), inv.row_words(col) + inv.wpr_,
                             inv.row_words(pivot));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i != col && m.get(i, col)) {
                for (std::size_t k = 0; k < m.wpr_; ++k) m.row_words(i)[k] ^= m.row_words(col)[k];
                for (std::size_t k = 0; k < inv.wpr_; ++k)
                    inv.row_words(i)[k] ^= inv.row_words(col)[k];
            }
        }
    }
    return inv;
}

BitMatrix BitMatrix::null_space() const {
    // Reduce to RREF, record pivot columns, then one basis row per free column.
    BitMatrix m = *this;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && !m.get(pivot, col)) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            std::swap_ranges(m.row_words(r), m.row_words(r) + wpr_, m.row_words(pivot));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != r && m.get(i, col)) {
                std::uint64_t* dst = m.row_words(i);
                const std::uint64_t* src = m.row_words(r);
                for (std::size_t k = 0; k < wpr_; ++k) dst[k] ^= src[k];
            }
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    BitMatrix basis(cols_ - r, cols_);
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        basis.set(out, f, true);
        for (std::size_t i = 0; i < r; ++i)
            if (m.get(i, f)) basis.set(out, pivot_col[i], true);
        ++out;
    }
    return basis;
}

BitMatrix BitMatrix::permuted_columns(const Permutation& p) const {
    if (p.size() != cols_) throw ShapeError("permuted_columns: size mismatch");
    BitMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const std::uint64_t* a = row_words(i);
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t w = a[k];
            while (w) {
                const std::size_t j = k * 64 + std::countr_zero(w);
                w &= w - 1;
                out.set(i, p(j), true);
            }
        }
    }
    return out;
}

std::string BitMatrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

}  // namespace btt
