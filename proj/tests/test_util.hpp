#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "btt/bitmat.hpp"
#include "btt/code.hpp"

// Naive reference implementations on int matrices, kept independent of the
// bit-packed code paths they check.
namespace ref {

using Mat = std::vector<std::vector<int>>;

inline Mat to_mat(const btt::BitMatrix& b) {
    Mat m(b.rows(), std::vector<int>(b.cols(), 0));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m[i][j] = b.get(i, j);
    return m;
}

inline btt::BitMatrix to_bits(const Mat& m) {
    btt::BitMatrix b(m.size(), m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j)
            if (m[i][j]) b.set(i, j, true);
    return b;
}

inline Mat mul(const Mat& a, const Mat& b) {
    Mat c(a.size(), std::vector<int>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j) {
            int acc = 0;
            for (std::size_t s = 0; s < b.size(); ++s) acc ^= a[i][s] & b[s][j];
            c[i][j] = acc;
        }
    return c;
}

inline std::size_t rank(Mat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && !m[piv][col]) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][col])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

// Paper worked example: 3x4 parity check matrix whose tree form has column
// values 7,4,3,2.
inline btt::BitMatrix paper_h34() {
    return to_bits({{1, 0, 0, 1}, {0, 1, 1, 1}, {0, 1, 0, 1}});
}

// Tree-structure illustration: 3x8, every depth-3 leaf set is a singleton.
inline btt::BitMatrix fig1_h38() {
    return to_bits({{1, 1, 1, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 1, 0, 0}, {1, 0, 1, 0, 1, 0, 1, 0}});
}

// Random (n,k) code via a full-rank generator matrix.
inline btt::LinearCode random_code(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    for (;;) {
        btt::BitMatrix g = btt::BitMatrix::random(k, n, rng);
        if (g.rank() == k) return btt::LinearCode::from_generator(g);
    }
}

}  // namespace ref
