#include "btt/code.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>

namespace btt {

namespace {

std::vector<std::uint8_t> trim(std::vector<std::uint8_t> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

// Plain GF(2)[x] arithmetic on low-order-first coefficient vectors.
std::vector<std::uint8_t> poly_mul(const std::vector<std::uint8_t>& a,
                                   const std::vector<std::uint8_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint8_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] ^= b[j];
    return trim(std::move(c));
}

// Returns {quotient, remainder} of a / b.
std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> poly_divmod(
    std::vector<std::uint8_t> a, const std::vector<std::uint8_t>& b) {
    if (b.empty()) throw ConstructionError("polynomial division by zero");
    std::vector<std::uint8_t> q(a.size(), 0);
    while (a.size() >= b.size()) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        const std::size_t shift = a.size() - b.size();
        q[shift] = 1;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] ^= b[j];
        a = trim(std::move(a));
    }
    return {trim(std::move(q)), std::move(a)};
}

std::vector<std::uint8_t> x_pow_n_plus_1(std::size_t n) {
    std::vector<std::uint8_t> p(n + 1, 0);
    p[0] = 1;
    p[n] = 1;
    return p;
}

}  // namespace

GeneratorPolynomial::GeneratorPolynomial(std::vector<std::uint8_t> c) : coeffs(trim(std::move(c))) {}

std::string GeneratorPolynomial::to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (std::size_t d = coeffs.size(); d-- > 0;) {
        if (!coeffs[d]) continue;
        if (!s.empty()) s += "+";
        if (d == 0)
            s += "1";
        else if (d == 1)
            s += "x";
        else
            s += "x^" + std::to_string(d);
    }
    return s;
}

LinearCode::LinearCode(BitMatrix g, BitMatrix h) : g_(std::move(g)), h_(std::move(h)) {
    n_ = g_.cols();
    k_ = g_.rows();
    if (h_.cols() != n_) throw ConstructionError("linear code: G and H column counts differ");
    if (h_.rows() != n_ - k_) throw ConstructionError("linear code: H must have n-k rows");
    if (g_.rank() != k_) throw ConstructionError("linear code: G is rank deficient");
    if (h_.rank() != n_ - k_) throw ConstructionError("linear code: H is rank deficient");
    for (std::size_t i = 0; i < k_; ++i)
        if (!(h_ * g_.row(i)).none()) throw ConstructionError("linear code: G H^T != 0");
}

LinearCode LinearCode::from_parity(const BitMatrix& h) {
    if (h.rank() != h.rows())
        throw ConstructionError("from_parity: H has dependent rows; k would exceed n - rows");
    return LinearCode(h.null_space(), h);
}

LinearCode LinearCode::from_generator(const BitMatrix& g) {
    if (g.rank() != g.rows()) throw ConstructionError("from_generator: G has dependent rows");
    return LinearCode(g, g.null_space());
}

BitVector LinearCode::encode(const BitVector& u) const {
    if (u.size() != k_) throw ShapeError("encode: message length != k");
    BitVector x(n_);
    for (std::size_t i = 0; i < k_; ++i)
        if (u[i]) x ^= g_.row(i);
    return x;
}

BitVector LinearCode::syndrome(const BitVector& y) const {
    if (y.size() != n_) throw ShapeError("syndrome: word length != n");
    return h_ * y;
}

LinearCode LinearCode::equivalent(const BitMatrix& a, const Permutation& perm) const {
    if (a.rows() != m() || a.cols() != m()) throw ShapeError("equivalent: A must be m x m");
    BitMatrix ainv = a.inverted();  // singular A rejected here
    (void)ainv;
    return LinearCode(g_.permuted_columns(perm), (a * h_).permuted_columns(perm));
}

// ---------------------------------------------------------------------------
// alist
// ---------------------------------------------------------------------------

BitMatrix from_alist(const std::string& text) {
    std::vector<std::vector<long>> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<long> toks;
            long v;
            while (ls >> v) toks.push_back(v);
            lines.push_back(std::move(toks));
        }
    }
    auto need = [&](std::size_t idx, std::size_t count, const char* what) {
        if (idx >= lines.size() || lines[idx].size() < count)
            throw ParseError(std::string("expected ") + what, idx + 1);
    };
    need(0, 2, "\"n m\" header");
    const long n = lines[0][0], m = lines[0][1];
    if (n < 1 || m < 1) throw ParseError("matrix dimensions must be positive", 1);
    need(1, 2, "max column/row weights");
    need(2, static_cast<std::size_t>(n), "per-column weights");
    need(3, static_cast<std::size_t>(m), "per-row weights");
    // weight-0 entries may appear as absent trailing lines
    lines.resize(std::max(lines.size(), 4 + static_cast<std::size_t>(n + m)));
    const auto& cw = lines[2];
    const auto& rw = lines[3];

    BitMatrix h(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    long total_c = 0, total_r = 0;
    for (long j = 0; j < n; ++j) {
        const std::size_t ln = 4 + static_cast<std::size_t>(j);
        const auto& toks = lines[ln];
        if (cw[j] < 0 || cw[j] > m) throw ParseError("column weight out of range", 3);
        long seen = 0;
        for (auto v : toks) {
            if (v == 0) continue;  // zero padding
            if (v < 1 || v > m) throw ParseError("row index out of range", ln + 1);
            if (h.get(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(j)))
                throw ParseError("duplicate index", ln + 1);
            h.set(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(j), true);
            ++seen;
        }
        if (seen != cw[j]) throw ParseError("column index count does not match weight", ln + 1);
        total_c += seen;
    }
    for (long i = 0; i < m; ++i) {
        const std::size_t ln = 4 + static_cast<std::size_t>(n + i);
        const auto& toks = lines[ln];
        long seen = 0;
        for (auto v : toks) {
            if (v == 0) continue;
            if (v < 1 || v > n) throw ParseError("column index out of range", ln + 1);
            if (!h.get(static_cast<std::size_t>(i), static_cast<std::size_t>(v - 1)))
                throw ParseError("row list disagrees with column lists", ln + 1);
            ++seen;
        }
        if (seen != rw[i]) throw ParseError("row index count does not match weight", ln + 1);
        total_r += seen;
    }
    if (total_c != total_r) throw ParseError("row/column totals disagree", lines.size());
    return h;
}

std::string to_alist(const BitMatrix& h) {
    const std::size_t m = h.rows(), n = h.cols();
    std::vector<std::vector<std::size_t>> cols(n), rows(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.get(i, j)) {
                cols[j].push_back(i + 1);
                rows[i].push_back(j + 1);
            }
    std::size_t maxc = 0, maxr = 0;
    for (const auto& c : cols) maxc = std::max(maxc, c.size());
    for (const auto& r : rows) maxr = std::max(maxr, r.size());

    std::ostringstream out;
    out << n << ' ' << m << '\n' << maxc << ' ' << maxr << '\n';
    auto emit_join = [&out](const auto& xs) {
        for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
        out << '\n';
    };
    std::vector<std::size_t> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = cols[j].size();
    emit_join(w);
    w.resize(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = rows[i].size();
    emit_join(w);
    for (const auto& c : cols) emit_join(c);
    for (const auto& r : rows) emit_join(r);
    return out.str();
}

// ---------------------------------------------------------------------------
// BCH / cyclic construction
// ---------------------------------------------------------------------------

GeneratorPolynomial default_primitive_poly(int p) {
    switch (p) {
        case 2: return GeneratorPolynomial({1, 1, 1});                       // x^2+x+1
        case 3: return GeneratorPolynomial({1, 1, 0, 1});                    // x^3+x+1
        case 4: return GeneratorPolynomial({1, 1, 0, 0, 1});                 // x^4+x+1
        case 5: return GeneratorPolynomial({1, 0, 1, 0, 0, 1});              // x^5+x^2+1
        case 6: return GeneratorPolynomial({1, 1, 0, 0, 0, 0, 1});           // x^6+x+1
        case 7: return GeneratorPolynomial({1, 0, 0, 1, 0, 0, 0, 1});        // x^7+x^3+1
        case 8: return GeneratorPolynomial({1, 0, 1, 1, 1, 0, 0, 0, 1});     // x^8+x^4+x^3+x^2+1
        case 9: return GeneratorPolynomial({1, 0, 0, 0, 1, 0, 0, 0, 0, 1});  // x^9+x^4+1
        case 10:
            return GeneratorPolynomial({1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1});   // x^10+x^3+1
        default: throw ConstructionError("no default primitive polynomial for p=" +
                                         std::to_string(p));
    }
}

namespace {

// GF(2^p) log/antilog tables built from a primitive polynomial.
struct Gf2m {
    int p;
    int order;                  // 2^p - 1
    std::vector<int> alpha_to;  // alpha_to[i] = alpha^i as a p-bit integer
    std::vector<int> index_of;  // inverse map, index_of[0] unused

    Gf2m(int p_, const GeneratorPolynomial& prim) : p(p_), order((1 << p_) - 1) {
        if (prim.degree() != static_cast<std::size_t>(p) || prim.coeffs[0] != 1)
            throw ConstructionError("primitive polynomial must have degree p and x^0 term");
        int poly_low = 0;  // prim without the x^p term, as bits
        for (int i = 0; i < p; ++i)
            if (prim.coeffs[i]) poly_low |= 1 << i;
        alpha_to.assign(order + 1, 0);
        index_of.assign(1 << p, -1);
        int v = 1;
        for (int i = 0; i < order; ++i) {
            if (i > 0 && v == 1)
                throw ConstructionError("polynomial is not primitive: alpha has order " +
                                        std::to_string(i));
            alpha_to[i] = v;
            index_of[v] = i;
            v <<= 1;
            if (v & (1 << p)) v = (v ^ (1 << p)) ^ poly_low;
        }
        if (v != 1) throw ConstructionError("polynomial is not primitive");
    }

    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return alpha_to[(index_of[a] + index_of[b]) % order];
    }
};

}  // namespace

GeneratorPolynomial bch_generator_poly(int p, int t, const GeneratorPolynomial& primitive_poly) {
    if (p < 2 || p > 10) throw ConstructionError("bch: p out of supported range [2,10]");
    if (t < 1) throw ConstructionError("bch: t must be >= 1");
    Gf2m gf(p, primitive_poly);
    if (2 * t - 1 > gf.order) throw ConstructionError("bch: designed distance exceeds 2^p-1");

    std::vector<bool> covered(gf.order, false);
    std::vector<std::uint8_t> g = {1};
    for (int s = 1; s <= 2 * t - 1; s += 2) {
        if (covered[s % gf.order]) continue;
        // cyclotomic coset of s mod 2^p-1
        std::vector<int> coset;
        int e = s % gf.order;
        do {
            coset.push_back(e);
            covered[e] = true;
            e = (2 * e) % gf.order;
        } while (e != s % gf.order);
        // minimal polynomial prod_{e in coset} (x + alpha^e), over GF(2^p)
        std::vector<int> mp = {1};
        for (int exp : coset) {
            const int root = gf.alpha_to[exp];
            std::vector<int> next(mp.size() + 1, 0);
            for (std::size_t i = 0; i < mp.size(); ++i) {
                next[i + 1] ^= mp[i];           // x * mp
                next[i] ^= gf.mul(root, mp[i]);  // root * mp
            }
            mp = std::move(next);
        }
        std::vector<std::uint8_t> mp2(mp.size());
        for (std::size_t i = 0; i < mp.size(); ++i) {
            if (mp[i] != 0 && mp[i] != 1)
                throw ConstructionError("bch: minimal polynomial not over GF(2)");
            mp2[i] = static_cast<std::uint8_t>(mp[i]);
        }
        g = poly_mul(g, mp2);
    }
    return GeneratorPolynomial(std::move(g));
}

GeneratorPolynomial bch_generator_poly(int p, int t) {
    return bch_generator_poly(p, t, default_primitive_poly(p));
}

LinearCode cyclic_code(std::size_t n, const GeneratorPolynomial& g) {
    if (g.coeffs.empty() || g.coeffs[0] != 1 || g.coeffs.back() != 1)
        throw ConstructionError("cyclic: generator must have unit x^0 and leading terms");
    const std::size_t r = g.degree();
    if (r >= n) throw ConstructionError("cyclic: deg(g) must be < n");
    auto [h_poly, rem] = poly_divmod(x_pow_n_plus_1(n), g.coeffs);
    if (!rem.empty()) throw ConstructionError("cyclic: g does not divide x^n + 1");
    const std::size_t k = n - r;  // == deg(h_poly)

    BitMatrix gm(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= r; ++j)
            if (g.coeffs[j]) gm.set(i, i + j, true);

    // Rows of H are shifts of the reversed parity polynomial h(x) = (x^n+1)/g(x).
    BitMatrix hm(n - k, n);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j <= k; ++j)
            if (h_poly[k - j]) hm.set(i, i + j, true);

    return LinearCode(std::move(gm), std::move(hm));
}

LinearCode bch_code(std::size_t n, std::size_t k) {
    int p = 0;
    while ((std::size_t(1) << (p + 1)) - 1 <= n) ++p;
    if ((std::size_t(1) << p) - 1 != n)
        throw ConstructionError("bch: n must be 2^p - 1");
    for (int t = 1; 2 * t - 1 <= static_cast<int>(n); ++t) {
        GeneratorPolynomial g = bch_generator_poly(p, t);
        if (n - g.degree() == k) return cyclic_code(n, g);
        if (n - g.degree() < k)
            throw ConstructionError("bch: no narrow-sense primitive BCH(" + std::to_string(n) +
                                    "," + std::to_string(k) + ")");
    }
    throw ConstructionError("bch: parameters out of range");
}

}  // namespace btt
