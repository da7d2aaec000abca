#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

#include "cperm/oracle.hpp"

using namespace cperm;

TEST_CASE("enumeration counts") {
    CHECK(enumerate_count(EnumerationPlan(GroupSpec(1, 1, 3, 2))) == 4); // involutions of S_3
    CHECK(enumerate_count(EnumerationPlan(GroupSpec(2, 1, 1, 2))) == 2);
    CHECK(enumerate_count(EnumerationPlan(GroupSpec(3, 3, 0, 4))) == 1);

    // with the order filter made vacuous, the count is |G_{r,s,n}| = r^n n!/s
    auto unconstrained = [](int r, int s, int n) {
        long long m = 1;
        for (int i = 2; i <= n; ++i) m = std::lcm<long long>(m, i);
        return enumerate_count(EnumerationPlan(GroupSpec(r, s, n, static_cast<int>(m * r))));
    };
    CHECK(unconstrained(2, 1, 3) == 48);
    CHECK(unconstrained(2, 2, 3) == 24);
    CHECK(unconstrained(3, 3, 2) == 6);
    CHECK(unconstrained(4, 2, 3) == 192);
}

TEST_CASE("enumeration order is deterministic and sorted") {
    auto collect = [] {
        std::vector<ColoredPermutation> out;
        enumerate(EnumerationPlan(GroupSpec(2, 1, 3, 6)),
                  [&](const ColoredPermutation& sigma) { out.push_back(sigma); });
        return out;
    };
    auto first = collect();
    auto second = collect();
    CHECK(first == second);
    REQUIRE(!first.empty());
    for (std::size_t i = 1; i < first.size(); ++i) CHECK(first[i - 1] < first[i]);
}

TEST_CASE("element cap refusal") {
    EnumerationPlan plan(GroupSpec(2, 1, 3, 2), 10); // |G_{2,3}| = 48
    CHECK_THROWS_AS(enumerate_count(plan), EnumerationCapError);
    try {
        enumerate_count(plan);
    } catch (const EnumerationCapError& e) {
        CHECK(e.required == 48);
        CHECK(std::string(e.what()).find("48") != std::string::npos);
    }
}

TEST_CASE("brute_h") {
    CHECK(brute_h(GroupSpec(1, 1, 2, 2)) == MPoly::u(2) + MPoly::v());
    CHECK(brute_h(GroupSpec(2, 1, 1, 2)) == MPoly::u() + MPoly::u() * MPoly::w());
    CHECK(brute_h(GroupSpec(4, 2, 0, 3)) == MPoly::constant(1));

    // total mass equals the stream length
    MPoly h = brute_h(GroupSpec(3, 1, 3, 3));
    CHECK(h.eval_ones() == BigRat(enumerate_count(EnumerationPlan(GroupSpec(3, 1, 3, 3)))));

    // every monomial of an s-filtered distribution has w-exponent 0 mod s
    MPoly h42 = brute_h(GroupSpec(4, 2, 3, 2));
    for (const auto& [mono, c] : h42.terms()) CHECK(mono.w_exp % 2 == 0);
}

TEST_CASE("brute_cyclic_exc") {
    CHECK(brute_cyclic_exc(2) == std::map<int, long long>{{1, 1}});
    CHECK(brute_cyclic_exc(3) == std::map<int, long long>{{1, 1}, {2, 1}});
    CHECK(brute_cyclic_exc(4) == std::map<int, long long>{{1, 1}, {2, 4}, {3, 1}});
    CHECK_THROWS_AS(brute_cyclic_exc(9), std::invalid_argument);
    CHECK_THROWS_AS(brute_cyclic_exc(0), std::invalid_argument);
}

TEST_CASE("brute_count") {
    EnumerationPlan d2(GroupSpec(2, 2, 2, 2));
    CHECK(brute_count(d2, [](const StatTriple& st, int) {
              return st.fix == 2 && st.csum == 0;
          }) == 1); // identity only
    CHECK(brute_count(d2, [](const StatTriple&, int clr) { return clr == 2; }) == 3);
    CHECK(brute_count(d2, [](const StatTriple& st, int) { return st.fix == 3; }) == 0);
}
