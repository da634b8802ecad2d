#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "btt/bitmat.hpp"

namespace btt {

// Binary polynomial, coefficient of x^i at coeffs[i]. Trailing zeros trimmed,
// so degree() == coeffs.size() - 1 (the zero polynomial is empty).
struct GeneratorPolynomial {
    std::vector<std::uint8_t> coeffs;

    GeneratorPolynomial() = default;
    explicit GeneratorPolynomial(std::vector<std::uint8_t> c);

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool operator==(const GeneratorPolynomial&) const = default;
    std::string to_string() const;  // e.g. "x^3+x+1"
};

// (n,k) binary linear code with consistent generator and parity check
// matrices: G is k x n, H is (n-k) x n, G H^T = 0, both full rank.
class LinearCode {
public:
    LinearCode(BitMatrix g, BitMatrix h);

    // Derives the missing matrix as a null-space basis of the given one.
    static LinearCode from_parity(const BitMatrix& h);
    static LinearCode from_generator(const BitMatrix& g);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t m() const { return n_ - k_; }
    const BitMatrix& generator() const { return g_; }
    const BitMatrix& parity() const { return h_; }

    BitVector encode(const BitVector& u) const;    // u (len k) -> u G
    BitVector syndrome(const BitVector& y) const;  // y (len n) -> H y^T

    // Equivalent code with H' = column-permuted a*H and G' = column-permuted G.
    LinearCode equivalent(const BitMatrix& a, const Permutation& perm) const;

private:
    std::size_t n_, k_;
    BitMatrix g_, h_;
};

// alist interchange format (1-based, column-major index lists first).
BitMatrix from_alist(const std::string& text);
std::string to_alist(const BitMatrix& h);

// Default primitive polynomial of degree p over GF(2), 2 <= p <= 10.
GeneratorPolynomial default_primitive_poly(int p);

// Narrow-sense primitive BCH generator: lcm of the minimal polynomials of
// alpha, alpha^3, ..., alpha^(2t-1) in GF(2^p). Throws ConstructionError if
// primitive_poly is not primitive of degree p.
GeneratorPolynomial bch_generator_poly(int p, int t, const GeneratorPolynomial& primitive_poly);
GeneratorPolynomial bch_generator_poly(int p, int t);

// Cyclic code of length n generated by g; requires g | x^n + 1 over GF(2).
LinearCode cyclic_code(std::size_t n, const GeneratorPolynomial& g);

// Resolves BCH parameters (n, k) to a code via the cyclotomic construction.
LinearCode bch_code(std::size_t n, std::size_t k);

}  // namespace btt
