#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedge/glinf.hpp"

using namespace wedge;

namespace {

LoopElement loop_unit(int n, int power, int i, int j) {
    RationalMatrix m(n, n);
    m.at(i, j) = 1;
    LoopElement x;
    x.n = n;
    x.add(power, m);
    return x;
}

AlgebraLoopElement algebra_monomial(const StructureLieAlgebra& g, int power, int basis_index) {
    AlgebraLoopElement x;
    x.terms[power] = g.basis_vector(basis_index);
    return x;
}

} // namespace

TEST_CASE("entries of embedded loop elements") {
    BandMatrix m = embed_loop(2, loop_unit(2, 1, 0, 1)); // t^1 (x) e_{12}
    CHECK(m.entry(1, 4) == Rational(1));
    CHECK(m.entry(2, 4) == Rational(0));
    CHECK(m.entry(-1, 2) == Rational(1));
    CHECK(BandMatrix::unit(0, 1).entry(0, 1) == Rational(1));
    CHECK(BandMatrix::unit(0, 1).entry(1, 0) == Rational(0));
}

TEST_CASE("shift families") {
    BandMatrix lambda2 = BandMatrix::shift_family(2);
    for (int j = -3; j <= 3; ++j) {
        CHECK(lambda2.entry(j, j + 2) == Rational(1));
        CHECK(lambda2.entry(j, j + 1) == Rational(0));
    }
    // Period-1 embedding of t^k is the same family.
    CHECK(embed_loop(1, loop_unit(1, 2, 0, 0)) == lambda2);
    // t^0 (x) identity embeds as the identity matrix.
    LoopElement id2;
    id2.n = 2;
    id2.add(0, RationalMatrix::identity(2));
    BandMatrix embedded = embed_loop(2, id2);
    for (int p = -4; p <= 4; ++p) CHECK(embedded.entry(p, p) == Rational(1));
    CHECK(embedded.entry(0, 1) == Rational(0));
}

TEST_CASE("cocycle values") {
    CHECK(central_cocycle(BandMatrix::unit(0, 1), BandMatrix::unit(1, 0)) == Rational(1));
    CHECK(central_cocycle(BandMatrix::unit(1, 0), BandMatrix::unit(0, 1)) == Rational(-1));
    CHECK(central_cocycle(BandMatrix::shift_family(2), BandMatrix::shift_family(-2)) ==
          Rational(2));
    CHECK(central_cocycle(BandMatrix::shift_family(2), BandMatrix::shift_family(2)) ==
          Rational(0));
}

TEST_CASE("extended bracket") {
    GlElement a{0, BandMatrix::unit(0, 1)};
    GlElement b{0, BandMatrix::unit(1, 0)};
    GlElement bracket = extended_bracket(a, b);
    CHECK(bracket.central == Rational(1));
    CHECK(bracket.matrix == BandMatrix::unit(0, 0) - BandMatrix::unit(1, 1));

    GlElement l2{0, BandMatrix::shift_family(2)};
    GlElement lminus2{0, BandMatrix::shift_family(-2)};
    GlElement osc = extended_bracket(l2, lminus2);
    CHECK(osc.central == Rational(2));
    CHECK(osc.matrix.is_zero());

    GlElement center{Rational(5), BandMatrix()};
    GlElement anything{Rational(1), BandMatrix::unit(2, -1) + BandMatrix::shift_family(1)};
    GlElement trivial = extended_bracket(center, anything);
    CHECK(trivial.central.is_zero());
    CHECK(trivial.matrix.is_zero());
}

TEST_CASE("oscillator element") {
    CHECK(oscillator_element(0, {{1, 1}}).matrix == BandMatrix::shift_family(1));
    GlElement center = oscillator_element(1, {});
    CHECK(center.central == Rational(1));
    CHECK(center.matrix.is_zero());
    BandMatrix identity = oscillator_element(0, {{0, 1}}).matrix;
    CHECK(identity.entry(5, 5) == Rational(1));
    CHECK(identity.entry(-5, -5) == Rational(1));
}

TEST_CASE("loop embedding is a Lie homomorphism") {
    for (int n = 1; n <= 3; ++n)
        for (int p = -3; p <= 3; ++p)
            for (int q = -3; q <= 3; ++q)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k)
                            for (int l = 0; l < n; ++l) {
                                LoopElement x = loop_unit(n, p, i, j);
                                LoopElement y = loop_unit(n, q, k, l);
                                BandMatrix lhs = embed_loop(n, loop_bracket(x, y));
                                BandMatrix a = embed_loop(n, x), b = embed_loop(n, y);
                                CHECK(lhs == a * b - b * a);
                            }
}

TEST_CASE("same-index diagonal loop elements commute") {
    LoopElement x = loop_unit(2, 1, 0, 0);
    LoopElement y = loop_unit(2, -1, 0, 0);
    CHECK(embed_loop(2, loop_bracket(x, y)).is_zero());
}

TEST_CASE("trace form agrees with the direct sum") {
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j)
            for (int k = -4; k <= 4; ++k)
                for (int l = -4; l <= 4; ++l) {
                    BandMatrix a = BandMatrix::unit(i, j);
                    BandMatrix b = BandMatrix::unit(k, l);
                    CHECK(central_cocycle(a, b) == trace_form_cocycle(a, b));
                }
    CHECK_THROWS_AS(trace_form_cocycle(BandMatrix::shift_family(1), BandMatrix::unit(0, 0)),
                    DomainError);
}

TEST_CASE("sl2 structure") {
    const StructureLieAlgebra& g = sl2();
    CHECK(g.dim() == 3);
    // basis order (e, f, h)
    auto e = g.basis_vector(0), f = g.basis_vector(1), h = g.basis_vector(2);
    CHECK(g.killing(h, h) == Rational(8));
    CHECK(g.killing(e, f) == Rational(4));
    CHECK(g.killing(h, e) == Rational(0));
    CHECK(g.killing(e, e) == Rational(0));
    CHECK(!g.killing_gram_determinant().is_zero());
}

TEST_CASE("sl3 structure") {
    const StructureLieAlgebra& g = sl3();
    CHECK(g.dim() == 8);
    CHECK(!g.killing_gram_determinant().is_zero());
    // Killing form of sl_n is 2n tr(xy): for e13, f31 that is 6.
    CHECK(g.killing(g.basis_vector(1), g.basis_vector(4)) == Rational(6));
}

TEST_CASE("degenerate inputs are rejected") {
    RationalMatrix a(2, 2), b(2, 2);
    a.at(0, 0) = 1;
    b.at(0, 0) = 2;
    CHECK_THROWS_AS(StructureLieAlgebra::from_matrices({"a", "b"}, {a, b}), DomainError);
    // Nilpotent one-dimensional algebra has a zero Killing form.
    RationalMatrix n(2, 2);
    n.at(0, 1) = 1;
    CHECK_THROWS_AS(StructureLieAlgebra::from_matrices({"n"}, {n}), DomainError);
    CHECK_NOTHROW(StructureLieAlgebra::from_matrices({"n"}, {n}, false));
}

TEST_CASE("garland cocycle values") {
    const StructureLieAlgebra& g = sl2();
    AlgebraLoopElement th1 = algebra_monomial(g, 1, 2);  // t h
    AlgebraLoopElement thm1 = algebra_monomial(g, -1, 2); // t^-1 h
    CHECK(loop_cocycle(g, th1, thm1) == Rational(8));
    CHECK(loop_cocycle(g, algebra_monomial(g, 2, 0), algebra_monomial(g, -2, 1)) == Rational(8));
    CHECK(loop_cocycle(g, algebra_monomial(g, 1, 0), algebra_monomial(g, 2, 1)) == Rational(0));
}

TEST_CASE("universal extension pullback") {
    const StructureLieAlgebra& g = sl2();
    auto check = universal_extension_check(g, algebra_monomial(g, 1, 2), algebra_monomial(g, -1, 2));
    CHECK(check.lhs == Rational(8));
    CHECK(check.rhs == Rational(8));
    CHECK(check.equal);

    auto zero = universal_extension_check(g, algebra_monomial(g, 1, 0), algebra_monomial(g, -1, 0));
    CHECK(zero.lhs == Rational(0));
    CHECK(zero.rhs == Rational(0));
    CHECK(zero.equal);

    auto power_zero =
        universal_extension_check(g, algebra_monomial(g, 0, 2), algebra_monomial(g, 0, 2));
    CHECK(power_zero.lhs == Rational(0));
    CHECK(power_zero.rhs == Rational(0));
    CHECK(power_zero.equal);
}

TEST_CASE("bracket jacobi identity on finite matrices") {
    std::vector<GlElement> units;
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) units.push_back({0, BandMatrix::unit(i, j)});
    for (size_t a = 0; a < units.size(); a += 5)
        for (size_t b = 0; b < units.size(); b += 3)
            for (size_t c = 0; c < units.size(); c += 7) {
                GlElement t1 = extended_bracket(extended_bracket(units[a], units[b]), units[c]);
                GlElement t2 = extended_bracket(extended_bracket(units[b], units[c]), units[a]);
                GlElement t3 = extended_bracket(extended_bracket(units[c], units[a]), units[b]);
                GlElement sum{t1.central + t2.central + t3.central,
                              t1.matrix + t2.matrix + t3.matrix};
                CHECK(sum.central.is_zero());
                CHECK(sum.matrix.is_zero());
            }
}

TEST_CASE("mixed period products") {
    // Lambda_1 squared is Lambda_2.
    BandMatrix l1 = BandMatrix::shift_family(1);
    CHECK(l1 * l1 == BandMatrix::shift_family(2));
    // A period-2 family against a period-3 family lands at period 6.
    BandMatrix p2, p3;
    p2.add_periodic(2, 0, 1, 2, 1);
    p3.add_periodic(3, 1, 2, 3, 1);
    BandMatrix prod = p2 * p3;
    for (int r = -8; r <= 8; ++r)
        for (int c = -8; c <= 8; ++c) {
            Rational direct;
            for (int m = -12; m <= 12; ++m) direct += p2.entry(r, m) * p3.entry(m, c);
            CHECK(prod.entry(r, c) == direct);
        }
}
