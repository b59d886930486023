#include <catch_amalgamated.hpp>

#include <numeric>

#include "recond/groupdata.hpp"

using namespace recond;

namespace {

std::vector<long> series(const GroupData& gd, const Int& (GroupData::*f)(int) const, int lo, int hi) {
    std::vector<long> out;
    for (int j = lo; j <= hi; ++j) out.push_back(to_long((gd.*f)(j)));
    return out;
}

}  // namespace

TEST_CASE("D(56,15) combinatorial table") {
    auto gd = build_group_data(56, 15);
    CHECK(gd.order == 2460);
    CHECK(gd.N == 3);
    CHECK(gd.e == 9);
    CHECK(gd.nu == 0);
    CHECK(series(gd, &GroupData::r, 2, 9) == std::vector<long>{67, 26, 11, 7, 3, 2, 1, 0});
    CHECK(series(gd, &GroupData::c, 2, 9) == std::vector<long>{1, 0, 1, 3, 5, 12, 19, 26});
    CHECK(series(gd, &GroupData::d, 2, 9) == std::vector<long>{0, 1, 1, 2, 3, 7, 11, 15});
    CHECK(series(gd, &GroupData::Delta, 1, 4) == std::vector<long>{1, 2, 7, 26});
    CHECK(series(gd, &GroupData::Gamma, 1, 4) == std::vector<long>{0, 1, 4, 15});
}

TEST_CASE("D(5,2) base family values") {
    auto gd = build_group_data(5, 2);
    CHECK(gd.order == 24);
    CHECK(gd.r(2) == 4);  // r_2 = 2n-3q = s+2 with s = 2
    CHECK(gd.r(3) == 1);  // r_3 = n-2q = 1
    CHECK(gd.nu == 0);
    CHECK(gd.e == 4);
}

TEST_CASE("r_e = 0 and r_{e-1} = 1 for every valid pair up to 80") {
    for (long n = 3; n <= 80; ++n)
        for (long q = 2; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            auto gd = build_group_data(n, q);
            REQUIRE(gd.r(gd.e) == 0);
            REQUIRE(gd.r(gd.e - 1) == 1);
            REQUIRE(gd.order == 4 * (n - q) * q);
        }
}

TEST_CASE("build_group_data rejects bad input") {
    CHECK_THROWS_AS(build_group_data(6, 4), std::domain_error);
    CHECK_THROWS_AS(build_group_data(5, 1), std::domain_error);
    CHECK_THROWS_AS(build_group_data(5, 5), std::domain_error);
    CHECK_THROWS_AS(build_group_data(5, 7), std::domain_error);
}

TEST_CASE("nu counts leading 2s and stays below N") {
    CHECK(build_group_data(18, 5).nu == 0);
    CHECK(build_group_data(7, 5).nu == 2);    // 7/5 = [2,2,3]
    CHECK(build_group_data(9, 8).nu == 7);    // 9/8 = [2,...,2], nu = N-1
    auto gd = build_group_data(9, 8);
    CHECK(gd.N == 8);
}

TEST_CASE("dual graph of D(18,5)") {
    auto gd = build_group_data(18, 5);
    auto dg = dual_graph(gd);
    REQUIRE(dg.vertex_names == std::vector<std::string>{"-", "+", "1", "2", "3"});
    std::vector<long> labels;
    for (const auto& s : dg.self_intersection) labels.push_back(to_long(s));
    CHECK(labels == std::vector<long>{-2, -2, -4, -3, -2});
    CHECK(dg.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 3}, {3, 4}});
    for (const auto& z : dg.fundamental_cycle) CHECK(z == 1);
}

TEST_CASE("dual graph of D(5,2) and a nu > 0 fundamental cycle") {
    auto dg = dual_graph(build_group_data(5, 2));
    std::vector<long> labels;
    for (const auto& s : dg.self_intersection) labels.push_back(to_long(s));
    CHECK(labels == std::vector<long>{-2, -2, -3, -2});

    auto gd = build_group_data(7, 5);  // nu = 2
    auto dg2 = dual_graph(gd);
    std::vector<long> z;
    for (const auto& c : dg2.fundamental_cycle) z.push_back(to_long(c));
    CHECK(z == std::vector<long>{1, 1, 2, 2, 1});
}

TEST_CASE("characters: W_t tables") {
    auto gd = build_group_data(18, 5);  // n-q = 13, odd
    REQUIRE(gd.nq_odd);
    auto ch = character_of(gd, ModuleId::W(3));
    REQUIRE(ch.rot.size() == 3);
    CHECK(ch.rot[0] == 0);
    CHECK(ch.rot[1] == make_rat(1, 2));      // (-1)^3
    CHECK(ch.rot[2] == make_rat(3, 13));     // eps_{n-q}^3

    auto gd2 = build_group_data(5, 3);  // n-q = 2, even
    REQUIRE(!gd2.nq_odd);
    auto ch2 = character_of(gd2, ModuleId::W(1));
    REQUIRE(ch2.rot.size() == 2);
    CHECK(ch2.rot[0] == 0);

    CHECK_THROWS_AS(character_of(gd, ModuleId::W(14)), std::domain_error);
    CHECK_THROWS_AS(character_of(gd, ModuleId::W(0)), std::domain_error);
}

TEST_CASE("characters: trivial and W_+/W_- relations") {
    auto gd = build_group_data(18, 5);
    auto triv = character_of(gd, ModuleId::trivial());
    for (const auto& r : triv.rot) CHECK(r == 0);

    auto plus = character_of(gd, ModuleId::Wplus());
    auto minus = character_of(gd, ModuleId::Wminus());
    CHECK(plus.rot[0] == minus.rot[0]);  // psi_2q acts by -1 on both
    CHECK(plus.rot[0] == make_rat(1, 2));
    CHECK(mod1(plus.rot[1] - minus.rot[1]) == make_rat(1, 2));  // tau separates them
    CHECK(!(plus == minus));

    CHECK(char_hom(plus, plus) == triv);
    CHECK(char_mul(triv, minus) == minus);
    CHECK(char_mul(plus, char_inv(plus)) == triv);
}

TEST_CASE("character arithmetic rejects cross-group operands") {
    auto a = character_of(build_group_data(18, 5), ModuleId::Wplus());
    auto b = character_of(build_group_data(5, 2), ModuleId::Wplus());
    CHECK_THROWS_AS(char_mul(a, b), std::domain_error);
}
