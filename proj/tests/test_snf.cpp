#include "doctest.h"

#include "gordian/snf.hpp"

#include <numeric>
#include <random>
#include <vector>

using namespace gordian;

namespace {

// Determinantal-divisor oracle: the product d_1...d_k of SNF diagonal entries
// equals the gcd of all k x k minors.
Int minor_gcd(const IntMat& a, int k) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a[0].size());
    std::vector<int> ri(k), ci(k);
    Int g = 0;
    std::function<void(int, int)> pick_cols = [&](int depth, int start) {
        if (depth == k) {
            IntMat sub(k, std::vector<Int>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = a[ri[i]][ci[j]];
            g = gcd(g, determinant(sub));
            return;
        }
        for (int c = start; c < n; ++c) {
            ci[depth] = c;
            pick_cols(depth + 1, c + 1);
        }
    };
    std::function<void(int, int)> pick_rows = [&](int depth, int start) {
        if (depth == k) {
            pick_cols(0, 0);
            return;
        }
        for (int r = start; r < m; ++r) {
            ri[depth] = r;
            pick_rows(depth + 1, r + 1);
        }
    };
    pick_rows(0, 0);
    return abs(g);
}

IntMat random_matrix(std::mt19937& rng, int m, int n, int lo, int hi) {
    std::uniform_int_distribution<int> entry(lo, hi);
    IntMat a(m, std::vector<Int>(n));
    for (auto& row : a)
        for (auto& x : row) x = entry(rng);
    return a;
}

} // namespace

TEST_CASE("smith normal form basics") {
    SmithForm id3 = smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(id3.diagonal == std::vector<Int>{1, 1, 1});
    CHECK(id3.rank == 3);

    SmithForm f = smith_normal_form({{2, 4}, {6, 8}});
    CHECK(f.diagonal == std::vector<Int>{2, 4});
    CHECK(f.rank == 2);

    SmithForm z = smith_normal_form({{0, 0}, {0, 0}, {0, 0}});
    CHECK(z.rank == 0);
    CHECK(z.diagonal == std::vector<Int>{0, 0});
}

TEST_CASE("smith normal form certificates on random matrices") {
    std::mt19937 rng(20240815);
    std::uniform_int_distribution<int> dim(1, 12);
    for (int trial = 0; trial < 500; ++trial) {
        int m = dim(rng), n = dim(rng);
        IntMat a = random_matrix(rng, m, n, -9, 9);
        SmithForm f = smith_normal_form(a);
        CHECK(mat_mul(mat_mul(f.u, a), f.v) == f.d);
        CHECK(abs(determinant(f.u)) == 1);
        CHECK(abs(determinant(f.v)) == 1);
        CHECK(f.rank == rational_rank(a));
        for (std::size_t i = 0; i + 1 < f.diagonal.size(); ++i) {
            if (f.diagonal[i] == 0) CHECK(f.diagonal[i + 1] == 0);
            else CHECK(f.diagonal[i + 1] % f.diagonal[i] == 0);
        }
    }
}

TEST_CASE("smith diagonal matches determinantal divisors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 120; ++trial) {
        int m = dim(rng), n = dim(rng);
        IntMat a = random_matrix(rng, m, n, -6, 6);
        SmithForm f = smith_normal_form(a);
        Int prod = 1;
        for (int k = 1; k <= std::min(m, n); ++k) {
            prod *= f.diagonal[k - 1];
            CHECK(abs(prod) == minor_gcd(a, k));
        }
    }
}

TEST_CASE("cokernel presentations") {
    CHECK(cokernel({}, 3) == AbelianGroup{3, {}});
    CHECK(cokernel({{2}}, 1) == AbelianGroup{0, {2}});
    CHECK(cokernel({{0}}, 1) == AbelianGroup{1, {}});
    CHECK(cokernel({{1}}, 1).is_trivial());
    CHECK(cokernel({{2, 0}, {0, 3}}, 2) == AbelianGroup{0, {6}});
    CHECK(cokernel({{3, 0}, {0, 3}}, 2) == AbelianGroup{0, {3, 3}});
    CHECK(cokernel({{2, 4}, {6, 8}}, 2) == AbelianGroup{0, {2, 4}});
    CHECK(abelian_group_string(cokernel({{3, 0}, {0, 3}}, 2)) == "Z/3 + Z/3");
    CHECK(abelian_group_string(cokernel({}, 0)) == "0");
    CHECK(abelian_group_string(cokernel({{0}}, 1)) == "Z");
}

TEST_CASE("determinant") {
    CHECK(determinant({{2, 4}, {6, 8}}) == -8);
    CHECK(determinant({{1, 2}, {2, 4}}) == 0);
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(determinant({{3}}) == 3);
}

TEST_CASE("rational rank and rowspan membership") {
    CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rational_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(rational_rank({}) == 0);
    CHECK(in_rational_rowspan({{1, 2}}, {2, 4}));
    CHECK(!in_rational_rowspan({{1, 2}}, {1, 3}));
    CHECK(in_rational_rowspan({}, {0, 0}));
    CHECK(!in_rational_rowspan({}, {1, 0}));
}

TEST_CASE("ratio modulo rowspan") {
    IntMat b = {{1, 0, 0}};
    std::vector<Int> u = {0, 1, 0};
    auto r1 = solve_ratio_mod_rowspan(b, u, {0, 3, 0});
    REQUIRE(r1.has_value());
    CHECK(*r1 == Rat(3));
    auto r2 = solve_ratio_mod_rowspan(b, u, {5, 3, 0});
    REQUIRE(r2.has_value());
    CHECK(*r2 == Rat(3));
    CHECK(!solve_ratio_mod_rowspan(b, u, {0, 0, 1}).has_value());
    auto r3 = solve_ratio_mod_rowspan({}, {2, 0}, {1, 0});
    REQUIRE(r3.has_value());
    CHECK(*r3 == Rat(1, 2));
}
