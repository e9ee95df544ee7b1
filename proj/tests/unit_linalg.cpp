#include <doctest.h>

#include <random>

#include "strathom/linalg.hpp"

using namespace strathom;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const Index m = static_cast<Index>(rows.size());
    const Index n = m > 0 ? static_cast<Index>(rows.begin()->size()) : 0;
    IntMatrix out(m, n);
    Index r = 0;
    for (const auto& row : rows) {
        Index c = 0;
        for (int v : row) out(r, c++) = v;
        ++r;
    }
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, Index m, Index n, int magnitude) {
    std::uniform_int_distribution<int> dist(-magnitude, magnitude);
    IntMatrix out(m, n);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) out(i, j) = dist(rng);
    return out;
}

void check_decomposition(const IntMatrix& m) {
    auto snf = smith_normal_form(m);
    IntMatrix diag = IntMatrix::Zero(m.rows(), m.cols());
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) diag(static_cast<Index>(i), static_cast<Index>(i)) = snf.diagonal[i];
    CHECK(IntMatrix(snf.left * m * snf.right) == diag);
    const Integer det_left = determinant_exact(snf.left);
    const Integer det_right = determinant_exact(snf.right);
    CHECK((det_left == 1 || det_left == -1));
    CHECK((det_right == 1 || det_right == -1));
    for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
        CHECK(snf.diagonal[i] >= 0);
        if (snf.diagonal[i] != 0) CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
        if (snf.diagonal[i] == 0) CHECK(snf.diagonal[i + 1] == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
    auto snf = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    REQUIRE(snf.diagonal.size() == 2);
    CHECK(snf.diagonal[0] == 1);
    CHECK(snf.diagonal[1] == 6);
    check_decomposition(from_rows({{2, 0}, {0, 3}}));
}

TEST_CASE("smith normal form of the zero and identity matrices") {
    auto zero = smith_normal_form(IntMatrix(IntMatrix::Zero(3, 2)));
    for (const Integer& d : zero.diagonal) CHECK(d == 0);
    auto id = smith_normal_form(IntMatrix(IntMatrix::Identity(4, 4)));
    for (const Integer& d : id.diagonal) CHECK(d == 1);
}

TEST_CASE("smith normal form on random matrices reproduces the input") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Index m = 1 + static_cast<Index>(rng() % 6);
        const Index n = 1 + static_cast<Index>(rng() % 6);
        check_decomposition(random_matrix(rng, m, n, 9));
    }
}

TEST_CASE("rank over fields counts invariant factors prime to the characteristic") {
    // diag(1, 2, 6): rank 3 over Q, 1 over F_2, 2 over F_3
    IntMatrix m = from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 6}});
    auto snf = smith_normal_form(m);
    CHECK(snf.rank_over(0) == 3);
    CHECK(snf.rank_over(2) == 1);
    CHECK(snf.rank_over(3) == 2);
    CHECK(snf.rank_over(5) == 3);
}

TEST_CASE("kernel basis is a saturated lattice annihilated by the matrix") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Index m = 1 + static_cast<Index>(rng() % 5);
        const Index n = 1 + static_cast<Index>(rng() % 5);
        IntMatrix a = random_matrix(rng, m, n, 6);
        IntMatrix k = kernel_basis(a);
        CHECK(k.cols() == n - rank(a));
        if (k.cols() > 0) {
            CHECK(IntMatrix(a * k).isZero());
            // saturated: all invariant factors are 1
            auto snf = smith_normal_form(k);
            for (const Integer& d : snf.diagonal) CHECK((d == 0 || d == 1));
        }
    }
}

TEST_CASE("hermite normal form is a canonical lattice representative") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Index m = 1 + static_cast<Index>(rng() % 5);
        const Index n = 1 + static_cast<Index>(rng() % 5);
        IntMatrix a = random_matrix(rng, m, n, 5);
        IntMatrix h = hermite_normal_form(a);
        // same lattice both ways
        CHECK(lattice_contains<Integer>(h, a));
        if (h.cols() > 0) CHECK(lattice_contains<Integer>(a, h));
        // shuffling generator columns does not change the canonical form
        IntMatrix shuffled(m, n);
        std::vector<Index> perm(static_cast<std::size_t>(n));
        for (Index j = 0; j < n; ++j) perm[static_cast<std::size_t>(j)] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (Index j = 0; j < n; ++j) shuffled.col(j) = a.col(perm[static_cast<std::size_t>(j)]);
        CHECK(hermite_normal_form(shuffled) == h);
    }
}

TEST_CASE("integer solve finds exact solutions and detects unsolvable systems") {
    IntMatrix a = from_rows({{2, 0}, {0, 3}});
    IntMatrix b = from_rows({{4}, {9}});
    auto x = solve_integer<Integer>(a, b);
    REQUIRE(x.has_value());
    CHECK(IntMatrix(a * *x) == b);
    IntMatrix odd = from_rows({{3}, {9}});
    CHECK(!solve_integer<Integer>(a, odd).has_value());

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m = random_matrix(rng, 4, 3, 5);
        IntMatrix sol = random_matrix(rng, 3, 2, 5);
        IntMatrix rhs = m * sol;
        auto found = solve_integer<Integer>(m, rhs);
        REQUIRE(found.has_value());
        CHECK(IntMatrix(m * *found) == rhs);
    }
}

TEST_CASE("lattice calculus: sums, membership, preimages") {
    IntMatrix even = from_rows({{2, 0}, {0, 2}});
    IntMatrix shifted = from_rows({{1}, {1}});
    IntMatrix sum = lattice_sum<Integer>(even, shifted);
    CHECK(lattice_contains<Integer>(sum, shifted));
    CHECK(lattice_contains<Integer>(sum, even));
    IntMatrix odd_point = from_rows({{1}, {0}});
    CHECK(!lattice_contains<Integer>(sum, odd_point));

    // preimage of the even lattice under doubling is everything
    IntMatrix doubling = from_rows({{2, 0}, {0, 2}});
    IntMatrix pre = preimage_lattice<Integer>(doubling, even);
    CHECK(lattice_equal<Integer>(pre, IntMatrix(IntMatrix::Identity(2, 2))));
}

TEST_CASE("bareiss determinant matches cofactor expansion on small matrices") {
    CHECK(determinant_exact(from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant_exact(from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}})) == 2 * (1 * 1 - 0 * 3) - 0 + 1 * (1 * 3 - 0));
    CHECK(determinant_exact(IntMatrix(IntMatrix::Identity(5, 5))) == 1);
    CHECK(determinant_exact(IntMatrix(IntMatrix::Zero(3, 3))) == 0);
}
