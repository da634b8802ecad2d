#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "btt/bitmat.hpp"
#include "test_util.hpp"

using namespace btt;

TEST_CASE("mat_mul basics") {
    BitMatrix h = ref::paper_h34();
    CHECK(BitMatrix::identity(3) * h == h);

    BitMatrix u = ref::to_bits({{1, 1}, {0, 1}});
    CHECK(u * u == BitMatrix::identity(2));

    CHECK_THROWS_AS(h * h, ShapeError);
}

TEST_CASE("mat_mul matches the naive reference") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        BitMatrix a = BitMatrix::random(5, 9, rng);
        BitMatrix b = BitMatrix::random(9, 13, rng);
        CHECK(ref::to_mat(a * b) == ref::mul(ref::to_mat(a), ref::to_mat(b)));
    }
}

TEST_CASE("rank") {
    CHECK(BitMatrix::identity(7).rank() == 7);
    CHECK(BitMatrix(4, 6).rank() == 0);
    CHECK(ref::paper_h34().rank() == 3);

    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        BitMatrix a = BitMatrix::random(6, 8, rng);
        CHECK(a.rank() == ref::rank(ref::to_mat(a)));
    }
}

TEST_CASE("invert") {
    CHECK(BitMatrix::identity(5).inverted() == BitMatrix::identity(5));

    BitMatrix u = ref::to_bits({{1, 1}, {0, 1}});
    CHECK(u.inverted() == u);
    CHECK(u * u.inverted() == BitMatrix::identity(2));

    CHECK_THROWS_AS(ref::to_bits({{1, 1}, {1, 1}}).inverted(), SingularMatrixError);
    CHECK_THROWS_AS(BitMatrix(2, 3).inverted(), SingularMatrixError);
}

TEST_CASE("inverse round trip on random invertible matrices") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 25; ++t) {
        BitMatrix a = BitMatrix::random_invertible(12, rng);
        BitMatrix inv = a.inverted();
        CHECK(a * inv == BitMatrix::identity(12));
        CHECK(inv * a == BitMatrix::identity(12));
    }
}

TEST_CASE("random_matrix determinism and entry statistics") {
    std::mt19937_64 a(99), b(99);
    CHECK(BitMatrix::random(16, 16, a) == BitMatrix::random(16, 16, b));

    std::mt19937_64 rng(7);
    const int samples = 10000;
    std::uint64_t ones = 0;
    int invertible = 0;
    for (int s = 0; s < samples; ++s) {
        BitMatrix m = BitMatrix::random(16, 16, rng);
        for (std::size_t i = 0; i < 16; ++i) ones += m.row_weight(i);
        invertible += m.is_invertible();
    }
    const double mean = static_cast<double>(ones) / (samples * 256.0);
    CHECK(mean == doctest::Approx(0.5).epsilon(0.04));  // 0.5 +- 0.02

    double expected_rate = 1.0;
    for (int i = 1; i <= 16; ++i) expected_rate *= 1.0 - std::ldexp(1.0, -i);
    CHECK(std::abs(invertible / double(samples) - expected_rate) < 0.02);
}

TEST_CASE("random_invertible") {
    std::mt19937_64 rng(5);
    CHECK(BitMatrix::random_invertible(1, rng) == BitMatrix::identity(1));

    // Acceptance rate for m=4 is prod_{i=1..4}(1 - 2^-i) = 315/1024.
    int invertible = 0;
    for (int s = 0; s < 10000; ++s) invertible += BitMatrix::random(4, 4, rng).is_invertible();
    CHECK(std::abs(invertible / 10000.0 - 315.0 / 1024.0) < 0.02);

    for (int t = 0; t < 10; ++t) CHECK_NOTHROW(BitMatrix::random_invertible(21, rng, 100));
    CHECK_THROWS_AS(BitMatrix::random_invertible(8, rng, 0), std::invalid_argument);
}

TEST_CASE("random_invertible output always inverts") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        BitMatrix a = BitMatrix::random_invertible(9, rng);
        CHECK(a * a.inverted() == BitMatrix::identity(9));
    }
}

TEST_CASE("mat_vec") {
    BitMatrix h = ref::paper_h34();
    CHECK((h * BitVector(4)).none());

    // Tree form of the paper matrix has columns 7,4,3,2; summing all four
    // columns gives parity (0,1,0).
    BitMatrix hp = ref::to_bits({{1, 1, 0, 0}, {1, 0, 1, 1}, {1, 0, 1, 0}});
    BitVector ones = BitVector::from_string("1111");
    CHECK((hp * ones).to_string() == "010");

    CHECK_THROWS_AS(h * BitVector(3), ShapeError);

    std::mt19937_64 rng(21);
    for (int t = 0; t < 20; ++t) {
        BitMatrix a = BitMatrix::random(6, 11, rng);
        BitVector v = BitVector::random(11, rng);
        BitVector got = a * v;
        for (std::size_t i = 0; i < 6; ++i) CHECK(got[i] == a.row(i).dot(v));
    }
}

TEST_CASE("rank is submultiplicative") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        BitMatrix a = BitMatrix::random(6, 7, rng);
        BitMatrix b = BitMatrix::random(7, 5, rng);
        CHECK((a * b).rank() <= std::min(a.rank(), b.rank()));
    }
}

TEST_CASE("column permutation commutes with left multiplication") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        BitMatrix a = BitMatrix::random_invertible(5, rng);
        BitMatrix h = BitMatrix::random(5, 12, rng);
        std::vector<std::size_t> map(12);
        for (std::size_t i = 0; i < 12; ++i) map[i] = i;
        std::shuffle(map.begin(), map.end(), rng);
        Permutation p(map);
        CHECK((a * h).permuted_columns(p) == a * h.permuted_columns(p));
    }
}

TEST_CASE("permutation inverse composes to identity") {
    std::mt19937_64 rng(31);
    std::vector<std::size_t> map(9);
    for (std::size_t i = 0; i < 9; ++i) map[i] = i;
    std::shuffle(map.begin(), map.end(), rng);
    Permutation p(map), q = p.inverse();
    for (std::size_t i = 0; i < 9; ++i) CHECK(q(p(i)) == i);

    BitVector v = BitVector::random(9, rng);
    CHECK(q.apply(p.apply(v)) == v);

    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("bit vector ops keep padding clean") {
    std::mt19937_64 rng(37);
    BitVector a = BitVector::random(70, rng), b = BitVector::random(70, rng);
    BitVector x = a ^ b;
    std::size_t expect = 0;
    for (std::size_t i = 0; i < 70; ++i) expect += (a[i] != b[i]);
    CHECK(x.weight() == expect);
    CHECK(BitVector::from_string(x.to_string()) == x);
    CHECK(BitVector(70).none());
}

TEST_CASE("null_space spans the kernel") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        BitMatrix h = BitMatrix::random(5, 11, rng);
        BitMatrix ns = h.null_space();
        CHECK(ns.rows() == 11 - h.rank());
        for (std::size_t i = 0; i < ns.rows(); ++i) CHECK((h * ns.row(i)).none());
        CHECK(ns.rank() == ns.rows());
    }
}
