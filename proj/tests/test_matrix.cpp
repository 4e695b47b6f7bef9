#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fphom/matrix.hpp"

using namespace fphom;

namespace {

FpMatrix random_matrix(std::mt19937& rng, std::uint32_t p, std::size_t r, std::size_t c) {
    FpMatrix m(p, r, c);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = dist(rng);
    return m;
}

// independent oracle: 2x2 determinant
std::uint32_t det2(const FpMatrix& m) {
    const std::uint32_t p = m.modulus();
    return sub_mod(mul_mod(m(0, 0), m(1, 1), p), mul_mod(m(0, 1), m(1, 0), p), p);
}

} // namespace

TEST_CASE("primality and scalar arithmetic") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(5));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(65531 * 2ull));
    CHECK_THROWS_AS(FpScalar(1, 4), std::invalid_argument);

    FpScalar a(2, 5), b(4, 5);
    CHECK((a * b).value() == 3);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 3);
    CHECK((a / b).value() == 3); // 4^{-1} = 4, 2*4 = 8 = 3 mod 5
    CHECK(a.inverse().value() == 3);
    CHECK_THROWS_AS(FpScalar(0, 5).inverse(), std::domain_error);
}

TEST_CASE("polynomial helpers") {
    // (1+x)(1+x) = 1 + x^2 over F_2
    CHECK(poly_mul({1, 1}, {1, 1}, 2) == FpVec{1, 0, 1});
    // x^2 mod (x^2+x+1) = x+1 over F_2
    CHECK(poly_mod({0, 0, 1}, {1, 1, 1}, 2) == FpVec{1, 1});
    CHECK(poly_is_irreducible({1, 1, 1}, 2));     // x^2+x+1
    CHECK_FALSE(poly_is_irreducible({0, 0, 1}, 2)); // x^2
    CHECK_FALSE(poly_is_irreducible({1, 0, 1}, 2)); // x^2+1 = (x+1)^2
    CHECK(poly_is_irreducible({1, 1, 0, 1, 1, 0, 0, 0, 1}, 2)); // x^8+x^4+x^3+x+1
}

TEST_CASE("rref examples") {
    const auto id3 = FpMatrix::identity(2, 3);
    const auto r = rref(id3);
    CHECK(r.reduced == id3);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.rank == 3);

    const auto dup = FpMatrix::from_rows(2, {{1, 1}, {1, 1}});
    const auto r2 = rref(dup);
    CHECK(r2.rank == 1);
    CHECK(r2.reduced == FpMatrix::from_rows(2, {{1, 1}, {0, 0}}));

    // over F_3, det([[2,1],[1,2]]) = 4-1 = 3 = 0, so rank 1
    const auto m = FpMatrix::from_rows(3, {{2, 1}, {1, 2}});
    CHECK(det2(m) == 0);
    CHECK(rank(m) == 1);
    // and a unimodular mate for contrast
    const auto m2 = FpMatrix::from_rows(3, {{2, 1}, {1, 1}});
    CHECK(det2(m2) != 0);
    CHECK(rank(m2) == 2);
}

TEST_CASE("kernel_basis examples") {
    const auto k1 = kernel_basis(FpMatrix::from_rows(2, {{1, 1}}));
    CHECK(k1 == FpMatrix::from_rows(2, {{1, 1}}));

    CHECK(kernel_basis(FpMatrix::identity(3, 4)).rows() == 0);

    // [[1,2]] over F_3: oracle enumerates all 9 pairs
    const auto m = FpMatrix::from_rows(3, {{1, 2}});
    std::vector<FpVec> null_pairs;
    for (std::uint32_t x = 0; x < 3; ++x)
        for (std::uint32_t y = 0; y < 3; ++y)
            if ((x + 2 * y) % 3 == 0)
                null_pairs.push_back({x, y});
    CHECK(null_pairs.size() == 3); // 0 and two scalings of (1,1)
    const auto kb = kernel_basis(m);
    REQUIRE(kb.rows() == 1);
    CHECK(kb.row(0) == FpVec{1, 1});
}

TEST_CASE("solve examples") {
    const auto id = FpMatrix::identity(5, 3);
    CHECK(solve(id, {4, 2, 1}) == FpVec{4, 2, 1});

    // free variables pinned to zero
    const auto a = FpMatrix::from_rows(2, {{1, 1}});
    CHECK(solve(a, {1}) == FpVec{1, 0});

    const auto z = FpMatrix(2, 2, 2);
    CHECK_FALSE(solve(z, {1, 0}).has_value());
    CHECK_THROWS_AS(solve(z, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("kron examples and direct-definition oracle") {
    const auto i2 = FpMatrix::identity(2, 2);
    CHECK(kron(i2, i2) == FpMatrix::identity(2, 4));

    const auto b = FpMatrix::from_rows(2, {{1, 0}, {1, 1}});
    CHECK(kron(FpMatrix::from_rows(2, {{1}}), b) == b);

    const auto a = FpMatrix::from_rows(2, {{1, 1}, {0, 1}});
    const auto k = kron(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t s = 0; s < 2; ++s)
                    CHECK(k(i * 2 + r, j * 2 + s) == mul_mod(a(i, j), b(r, s), 2));
}

TEST_CASE("randomized properties over p in {2,3,5}") {
    std::mt19937 rng(20240901);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            const auto m = random_matrix(rng, p, r, c);

            const auto rr = rref(m);
            CHECK(rr.rank + kernel_basis(m).rows() == c);        // rank-nullity
            CHECK(rref(rr.reduced).reduced == rr.reduced);        // idempotent
            CHECK(row_space_basis(m) == row_space_basis(rr.reduced)); // row space preserved

            // kernel rows really annihilate
            const auto kb = kernel_basis(m);
            for (std::size_t i = 0; i < kb.rows(); ++i)
                CHECK(is_zero_vec((m * kb.row(i))));

            // solve: solution exact, or rank certificate of inconsistency
            const auto b = random_matrix(rng, p, r, 1).col(0);
            const auto x = solve(m, b);
            const auto aug = hstack(m, FpMatrix::col_vector(p, b));
            if (x)
                CHECK((m * *x) == b);
            else
                CHECK(rank(aug) > rr.rank);

            // inverse round-trip on square slices
            if (r == c) {
                if (auto inv = inverse(m))
                    CHECK((*inv * m) == FpMatrix::identity(p, r));
                else
                    CHECK(rr.rank < r);
            }
        }
    }
}

TEST_CASE("kron dimensions and mixed-product identity") {
    std::mt19937 rng(7);
    for (std::uint32_t p : {2u, 3u}) {
        const auto a = random_matrix(rng, p, 2, 3);
        const auto b = random_matrix(rng, p, 3, 2);
        const auto c = random_matrix(rng, p, 3, 2);
        const auto d = random_matrix(rng, p, 2, 3);
        CHECK(kron(a, c).rows() == 6);
        CHECK(kron(a, c).cols() == 6);
        CHECK(kron(a * b, c * d) == kron(a, c) * kron(b, d));
    }
    CHECK_THROWS_AS(kron(FpMatrix::identity(2, 1), FpMatrix::identity(3, 1)), std::invalid_argument);
}
