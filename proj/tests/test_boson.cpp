#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedge/boson.hpp"

using namespace wedge;

namespace {

const Partition kStaircase{4, 4, 3, 3, 2, 2, 1};

BosonState basis(int zexp, Partition shape) {
    return BosonState::basis({zexp, std::move(shape)});
}

} // namespace

TEST_CASE("power sum multiplication") {
    CHECK(power_sum_times(2, basis(0, Partition{1})) ==
          basis(0, Partition{3}) - basis(0, Partition{1, 1, 1}));
    CHECK(power_sum_times(1, basis(0, Partition())) == basis(0, Partition{1}));
    CHECK(power_sum_times(3, basis(0, Partition())) ==
          basis(0, Partition{3}) - basis(0, Partition{2, 1}) + basis(0, Partition{1, 1, 1}));
    // z-exponent rides along untouched.
    CHECK(power_sum_times(1, basis(-2, Partition())) == basis(-2, Partition{1}));
    CHECK_THROWS_AS(power_sum_times(0, basis(0, Partition())), DomainError);
}

TEST_CASE("power sum adjoint") {
    CHECK(power_sum_adjoint(1, basis(0, Partition{1})) == basis(0, Partition()));
    CHECK(power_sum_adjoint(2, basis(0, Partition{2, 1})).is_zero());
    CHECK(power_sum_adjoint(4, basis(0, kStaircase)) ==
          basis(0, Partition{4, 2, 2, 2, 2, 2, 1}) + basis(0, Partition{4, 4, 3, 1, 1, 1, 1}) +
              basis(0, Partition{4, 4, 3, 3, 1}));
}

TEST_CASE("charged raising operator") {
    CHECK(boson_create(-1, basis(-1, Partition{5, 3, 3, 2, 2, 1})) ==
          basis(0, Partition{4, 2, 2, 2, 2, 2, 1}).scaled(-1));
    CHECK(boson_create(3, basis(0, Partition())) == basis(1, Partition{2}));
    CHECK(boson_create(0, basis(0, Partition())).is_zero());
}

TEST_CASE("charged lowering operator") {
    CHECK(boson_annihilate(3, basis(0, kStaircase)) ==
          basis(-1, Partition{5, 3, 3, 2, 2, 1}).scaled(-1));
    CHECK(boson_annihilate(0, basis(0, Partition())) == basis(-1, Partition()));
    CHECK(boson_annihilate(5, basis(0, Partition{2})).is_zero());
}

TEST_CASE("element actions") {
    GlElement swap{0, BandMatrix::unit(-1, 3)};
    CHECK(boson_action(swap, basis(0, kStaircase)) == basis(0, Partition{4, 2, 2, 2, 2, 2, 1}));

    GlElement zgrade = oscillator_element(0, {{0, 1}});
    CHECK(boson_action(zgrade, basis(3, Partition{1})) == basis(3, Partition{1}).scaled(3));
    CHECK(boson_action(zgrade, basis(0, Partition{1})).is_zero());

    GlElement center{Rational(7), BandMatrix()};
    CHECK(boson_action(center, basis(2, Partition{2, 1})) == basis(2, Partition{2, 1}).scaled(7));

    GlElement adjoint_family = oscillator_element(0, {{1, 1}});
    CHECK(boson_action(adjoint_family, basis(0, Partition{1})) == basis(0, Partition()));
    GlElement multiply_family = oscillator_element(0, {{-1, 1}});
    CHECK(boson_action(multiply_family, basis(0, Partition())) == basis(0, Partition{1}));

    GlElement period2{0, embed_loop(2, [] {
                          LoopElement x;
                          x.n = 2;
                          RationalMatrix m(2, 2);
                          m.at(0, 1) = 1;
                          x.add(1, m);
                          return x;
                      }())};
    CHECK_THROWS_AS(boson_action(period2, basis(0, Partition())), UnsupportedElement);
}

TEST_CASE("inner product") {
    CHECK(inner_product(basis(0, Partition{2}), basis(0, Partition{2})) == Rational(1));
    CHECK(inner_product(basis(0, Partition{2}), basis(0, Partition{1, 1})) == Rational(0));
    CHECK(inner_product(power_sum_times(1, basis(0, Partition())), basis(0, Partition{1})) ==
          Rational(1));
    // Distinct z-exponents are orthogonal.
    CHECK(inner_product(basis(1, Partition{2}), basis(0, Partition{2})) == Rational(0));
    BosonState mixed = basis(0, Partition{2}).scaled(Rational(2, 3)) +
                       basis(1, Partition{1}).scaled(Rational(-1, 2));
    CHECK(inner_product(mixed, mixed) == Rational(2, 3) * Rational(2, 3) +
                                             Rational(1, 2) * Rational(1, 2));
}

TEST_CASE("anticommutation relations") {
    for (int zexp = -2; zexp <= 2; ++zexp)
        for (const Partition& p : partitions_up_to_weight(4)) {
            BosonState w = basis(zexp, p);
            for (int i = -5; i <= 5; ++i)
                for (int j = -5; j <= 5; ++j) {
                    BosonState mixed = boson_create(i, boson_annihilate(j, w)) +
                                       boson_annihilate(j, boson_create(i, w));
                    CHECK(mixed == (i == j ? w : BosonState()));
                    CHECK((boson_create(i, boson_create(j, w)) +
                           boson_create(j, boson_create(i, w)))
                              .is_zero());
                    CHECK((boson_annihilate(i, boson_annihilate(j, w)) +
                           boson_annihilate(j, boson_annihilate(i, w)))
                              .is_zero());
                }
        }
}

TEST_CASE("adjointness of the two strip directions") {
    auto shapes = partitions_up_to_weight(8);
    for (int k = 1; k <= 6; ++k) {
        std::vector<BosonState> raised, lowered;
        for (const Partition& p : shapes) {
            raised.push_back(power_sum_times(k, basis(0, p)));
            lowered.push_back(power_sum_adjoint(k, basis(0, p)));
        }
        for (size_t a = 0; a < shapes.size(); ++a)
            for (size_t b = 0; b < shapes.size(); ++b)
                CHECK(raised[a].coefficient({0, shapes[b]}) ==
                      lowered[b].coefficient({0, shapes[a]}));
    }
}

TEST_CASE("oscillator commutators act by the shift pairing") {
    for (int m = -4; m <= 4; ++m)
        for (int n = -4; n <= 4; ++n) {
            if (m == 0 || n == 0) continue;
            GlElement a = oscillator_element(0, {{m, 1}});
            GlElement b = oscillator_element(0, {{n, 1}});
            for (int zexp = -1; zexp <= 1; ++zexp)
                for (const Partition& p : partitions_up_to_weight(6)) {
                    BosonState w = basis(zexp, p);
                    BosonState commutator =
                        boson_action(a, boson_action(b, w)) - boson_action(b, boson_action(a, w));
                    BosonState expected =
                        (m == -n) ? w.scaled(Rational(m)) : BosonState();
                    CHECK(commutator == expected);
                }
        }
}
