#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedge/symfunc.hpp"

using namespace wedge;
using namespace wedge::oracle;

TEST_CASE("power sums") {
    CHECK(power_sum_poly(2, 1).terms() ==
          DensePolynomial::Terms{{{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(power_sum_poly(3, 2).terms() ==
          DensePolynomial::Terms{{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}});
    CHECK(power_sum_poly(1, 5).terms() == DensePolynomial::Terms{{{5}, 1}});
    CHECK_THROWS_AS(power_sum_poly(2, 0), DomainError);
}

TEST_CASE("complete homogeneous") {
    CHECK(complete_homogeneous(2, 0) == DensePolynomial::constant(2, 1));
    CHECK(complete_homogeneous(2, -1).is_zero());
    // h_2(x1, x2) = x1^2 + x1 x2 + x2^2
    CHECK(complete_homogeneous(2, 2).terms() ==
          DensePolynomial::Terms{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
}

TEST_CASE("schur polynomials") {
    CHECK(schur_poly(2, Partition{2}) == complete_homogeneous(2, 2));
    // s_{1,1} = h1^2 - h2 = x1 x2
    CHECK(schur_poly(2, Partition{1, 1}).terms() == DensePolynomial::Terms{{{1, 1}, 1}});
    CHECK(schur_poly(1, Partition{1, 1}).is_zero());
    CHECK(schur_poly(3, Partition()) == DensePolynomial::constant(3, 1));
}

TEST_CASE("schur polynomials are symmetric with nonnegative coefficients") {
    for (int n = 2; n <= 4; ++n)
        for (const Partition& lambda : partitions_up_to_weight(8)) {
            DensePolynomial s = schur_poly(n, lambda);
            for (const auto& [e, c] : s.terms()) CHECK(c > 0);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) CHECK(s.with_swapped_variables(a, b) == s);
        }
}

TEST_CASE("newton identities") {
    // k h_k = sum_{r=1..k} p_r h_{k-r}
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 8; ++k) {
            DensePolynomial lhs = complete_homogeneous(n, k).scaled(k);
            DensePolynomial rhs(n);
            for (int r = 1; r <= k; ++r)
                rhs += power_sum_poly(n, r) * complete_homogeneous(n, k - r);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("verify_expansion") {
    CHECK(verify_expansion(5, 2, Partition{1},
                           {{Partition{3}, 1}, {Partition{1, 1, 1}, -1}}));
    CHECK_FALSE(verify_expansion(5, 2, Partition{1},
                                 {{Partition{3}, 1}, {Partition{1, 1, 1}, 1}}));
    CHECK(verify_expansion(4, 3, Partition(),
                           {{Partition{3}, 1}, {Partition{2, 1}, -1}, {Partition{1, 1, 1}, 1}}));
    CHECK_THROWS_AS(verify_expansion(2, 2, Partition{1}, {}), InsufficientVariables);
}

TEST_CASE("orbit form agrees with the dense determinant") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lambda : partitions_up_to_weight(6))
            CHECK(expand_orbit_form(schur_orbit_form(lambda), n) == schur_poly(n, lambda));
}

TEST_CASE("orbit power-sum products agree with dense multiplication") {
    for (const Partition& lambda : partitions_up_to_weight(5))
        for (int k = 1; k <= 3; ++k) {
            int n = lambda.weight() + k;
            DensePolynomial dense = power_sum_poly(n, k) * schur_poly(n, lambda);
            OrbitForm orbit =
                orbit_mul_power_sum(schur_orbit_form(lambda), lambda.weight(), k);
            CHECK(expand_orbit_form(orbit, n) == dense);
        }
}
