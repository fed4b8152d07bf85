#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedge/maya.hpp"

using namespace wedge;

namespace {
const Partition kStaircase{4, 4, 3, 3, 2, 2, 1};
}

TEST_CASE("charge/partition encoding") {
    MayaDiagram s(0, kStaircase);
    CHECK(s.positive_members() == std::vector<int>{4, 3, 1});
    CHECK(s.negative_gaps() == std::vector<int>{-1, -4, -6});
    CHECK(s.member(1) == 4);
    CHECK(s.member(8) == -7);
    CHECK(s.member(9) == -8);
    CHECK(s.contains(0));
    CHECK(!s.contains(-1));
    CHECK(s.contains(-100));
    CHECK(!s.contains(5));

    MayaDiagram vacuum(0, Partition());
    CHECK(vacuum.member(1) == 0);
    CHECK(vacuum.positive_members().empty());
    CHECK(vacuum.negative_gaps().empty());

    MayaDiagram shifted(2, Partition());
    CHECK(shifted.member(1) == 2);
    CHECK(shifted.member(2) == 1);
    CHECK(shifted.positive_members() == std::vector<int>{2, 1});
}

TEST_CASE("charge recovers from exceptional sets") {
    for (int m = -3; m <= 3; ++m)
        for (const Partition& lambda : partitions_up_to_weight(10)) {
            MayaDiagram s(m, lambda);
            int plus = static_cast<int>(s.positive_members().size());
            int minus = static_cast<int>(s.negative_gaps().size());
            CHECK(plus - minus == m);
        }
}

TEST_CASE("count_above") {
    MayaDiagram s(0, kStaircase);
    CHECK(s.count_above(3) == 1);
    CHECK(s.with_removed(3).count_above(-1) == 3);
    CHECK(s.count_above(10) == 0);
    MayaDiagram vacuum(0, Partition());
    CHECK(vacuum.count_above(-3) == 3);
}

TEST_CASE("count bridge between diagram and partition sides") {
    for (int m = -3; m <= 3; ++m)
        for (const Partition& lambda : partitions_up_to_weight(10)) {
            MayaDiagram s(m, lambda);
            for (int i = -10; i <= 10; ++i) {
                CHECK(s.count_above(i) == count_above(m, i, lambda));
                CHECK(s.contains(i) == has_beta(m, i, lambda));
            }
        }
}

TEST_CASE("insert and remove") {
    MayaDiagram vacuum(0, Partition());
    MayaDiagram charged = vacuum.with_inserted(3);
    CHECK(charged.charge() == 1);
    CHECK(charged.shape() == Partition{2});
    CHECK_THROWS_AS(vacuum.with_inserted(0), DomainError);
    CHECK_THROWS_AS(vacuum.with_removed(1), DomainError);

    MayaDiagram s(0, kStaircase);
    MayaDiagram removed = s.with_removed(3);
    CHECK(removed.charge() == -1);
    CHECK(removed.shape() == Partition{5, 3, 3, 2, 2, 1});
    MayaDiagram swapped = removed.with_inserted(-1);
    CHECK(swapped.charge() == 0);
    CHECK(swapped.shape() == Partition{4, 2, 2, 2, 2, 2, 1});

    for (int m = -2; m <= 2; ++m)
        for (const Partition& lambda : partitions_up_to_weight(6)) {
            MayaDiagram diagram(m, lambda);
            for (int n = -8; n <= 8; ++n) {
                if (diagram.contains(n))
                    CHECK(diagram.with_removed(n).with_inserted(n) == diagram);
                else
                    CHECK(diagram.with_inserted(n).with_removed(n) == diagram);
            }
        }
}

TEST_CASE("length matches the exceptional-set formula") {
    for (int m = -3; m <= 3; ++m)
        for (const Partition& lambda : partitions_up_to_weight(10)) {
            MayaDiagram s(m, lambda);
            auto gaps = s.negative_gaps();
            if (gaps.empty()) continue;
            int ell = static_cast<int>(s.positive_members().size());
            int r = static_cast<int>(gaps.size());
            int lowest = gaps.back();
            CHECK(lambda.length() == ell - lowest - r + 1);
        }
}

TEST_CASE("code windows") {
    MayaDiagram s(0, kStaircase);
    CHECK(s.code_window(-6, 4) == "RURUURUURUU");
    CHECK(MayaDiagram(0, Partition()).code_window(-1, 1) == "UUR");
    CHECK(MayaDiagram(1, Partition()).code_window(0, 2) == "UUR");
    CHECK(s.default_code_window() == std::pair<int, int>{-7, 5});
    CHECK_THROWS_AS(s.code_window(2, 1), DomainError);
}

TEST_CASE("charge zero balances the code") {
    for (const Partition& lambda : partitions_up_to_weight(10)) {
        MayaDiagram s(0, lambda);
        auto [lo, hi] = s.default_code_window();
        std::string letters = s.code_window(lo, hi);
        int u_above = 0, r_below = 0;
        for (int n = lo; n <= hi; ++n) {
            char c = letters[static_cast<size_t>(n - lo)];
            if (n >= 1 && c == 'U') ++u_above;
            if (n <= 0 && c == 'R') ++r_below;
        }
        CHECK(u_above == r_below);
    }
}

TEST_CASE("frobenius coordinates") {
    FrobeniusCoordinates f = frobenius_coordinates(kStaircase);
    CHECK(f.arms_doubled == std::vector<int>{7, 5, 1});
    CHECK(f.legs_doubled == std::vector<int>{13, 9, 3});
    CHECK(frobenius_coordinates(Partition()) == FrobeniusCoordinates{});
    CHECK(frobenius_coordinates(Partition{1}) == FrobeniusCoordinates{{1}, {1}});
}

TEST_CASE("frobenius coordinates read off the charge-zero diagram") {
    for (const Partition& lambda : partitions_up_to_weight(10)) {
        FrobeniusCoordinates f = frobenius_coordinates(lambda);
        MayaDiagram s(0, lambda);
        std::vector<int> plus_expected;
        for (int arm : f.arms_doubled) plus_expected.push_back((arm + 1) / 2);
        CHECK(s.positive_members() == plus_expected);
        std::vector<int> gaps_expected;
        for (auto it = f.legs_doubled.rbegin(); it != f.legs_doubled.rend(); ++it)
            gaps_expected.push_back(-(*it - 1) / 2);
        CHECK(s.negative_gaps() == gaps_expected);
    }
}

TEST_CASE("round trip through charge and partition") {
    for (int m = -3; m <= 3; ++m)
        for (const Partition& lambda : partitions_up_to_weight(10)) {
            MayaDiagram s = MayaDiagram::from_charge_partition(m, lambda);
            CHECK(s.charge() == m);
            CHECK(s.shape() == lambda);
            CHECK(s.energy() == lambda.weight());
        }
}

TEST_CASE("prefix strings") {
    MayaDiagram s(0, kStaircase);
    CHECK(s.prefix_string() == "4,3,1,0,-2,-3,-5,-7,...");
    CHECK(MayaDiagram::parse_prefix("4,3,1,0,-2,-3,-5,-7,...") == s);
    CHECK(MayaDiagram(0, Partition()).prefix_string() == "0,...");
    CHECK(MayaDiagram::parse_prefix("3,0,...") == MayaDiagram(1, Partition{2}));
    CHECK(MayaDiagram::parse_prefix("3,0") == MayaDiagram(1, Partition{2}));
    CHECK_THROWS_AS(MayaDiagram::parse_prefix("1,2,..."), ParseError);
    CHECK_THROWS_AS(MayaDiagram::parse_prefix(""), ParseError);

    for (int m = -3; m <= 3; ++m)
        for (const Partition& lambda : partitions_up_to_weight(8)) {
            MayaDiagram diagram(m, lambda);
            CHECK(MayaDiagram::parse_prefix(diagram.prefix_string()) == diagram);
        }
}
