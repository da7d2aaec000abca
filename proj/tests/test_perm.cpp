#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cperm/perm.hpp"

using namespace cperm;

namespace {

ColoredPermutation random_element(int r, int n, std::mt19937& rng) {
    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    std::shuffle(tau.begin(), tau.end(), rng);
    std::vector<int> colors(n);
    std::uniform_int_distribution<int> color(0, r - 1);
    for (auto& c : colors) c = color(rng);
    return ColoredPermutation(r, colors, tau);
}

// every element of G_{r,n}, in enumeration order
template <typename F>
void for_all(int r, int n, F&& fn) {
    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    do {
        std::vector<int> colors(n, 0);
        while (true) {
            fn(ColoredPermutation(r, colors, tau));
            int i = n - 1;
            while (i >= 0 && colors[i] == r - 1) colors[i--] = 0;
            if (i < 0) break;
            ++colors[i];
        }
    } while (std::next_permutation(tau.begin(), tau.end()));
}

} // namespace

TEST_CASE("construction and validation") {
    CHECK_THROWS_AS(ColoredPermutation(0, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation(2, {0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation(2, {2}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation(2, {-1}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation(2, {0, 0}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation(2, {0, 0}, {0, 2}), std::invalid_argument);

    auto id0 = ColoredPermutation::identity(3, 0);
    CHECK(id0.n() == 0);
    CHECK(id0.is_identity());
    CHECK(csum(id0) == 0);
    CHECK(fix_count(id0) == 0);
    CHECK(exc_a(id0) == 0);
    CHECK(exc_full(id0) == 0);
    CHECK(id0.to_string() == "");
}

TEST_CASE("one-line display follows the digit^[color] convention") {
    // ((1,2,1,2),(3,1,2,4)) in G_{3,4}
    auto sigma = ColoredPermutation(3, {1, 2, 1, 2}, {2, 0, 1, 3});
    CHECK(sigma.to_string() == "3^[1] 1^[2] 2^[1] 4^[2]");
    auto same = ColoredPermutation::from_one_line(3, {{3, 1}, {1, 2}, {2, 1}, {4, 2}});
    CHECK(sigma == same);
}

TEST_CASE("compose matches the wreath product rule") {
    std::mt19937 rng(7);
    auto id = ColoredPermutation::identity(3, 4);
    for (int trial = 0; trial < 20; ++trial) {
        auto sigma = random_element(3, 4, rng);
        CHECK(compose(id, sigma) == sigma);
        CHECK(compose(sigma, id) == sigma);
    }

    // the color-flip of G_{2,1} squares to the identity
    auto flip = ColoredPermutation(2, {1}, {0});
    CHECK(compose(flip, flip) == ColoredPermutation::identity(2, 1));

    // worked product in G_{3,2}
    auto a = ColoredPermutation::from_one_line(3, {{2, 1}, {1, 0}});
    auto b = ColoredPermutation::from_one_line(3, {{2, 0}, {1, 2}});
    auto ab = compose(a, b);
    CHECK(ab == ColoredPermutation::identity(3, 2));
    // re-derive each color from the product rule z_i + z'_{tau^-1(i)} mod r
    for (int i = 0; i < 2; ++i) {
        int a_inv_i = a.tau(0) == i ? 0 : 1;
        CHECK(ab.color(i) == (a.color(i) + b.color(a_inv_i)) % 3);
        CHECK(ab.tau(i) == a.tau(b.tau(i)));
    }

    CHECK_THROWS_AS(compose(ColoredPermutation::identity(2, 1),
                            ColoredPermutation::identity(3, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(compose(ColoredPermutation::identity(2, 1),
                            ColoredPermutation::identity(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("power") {
    std::mt19937 rng(11);
    auto sigma = random_element(3, 4, rng);
    CHECK(power(sigma, 0) == ColoredPermutation::identity(3, 4));
    CHECK(power(sigma, 1) == sigma);
    CHECK(power(ColoredPermutation(2, {1}, {0}), 2) == ColoredPermutation::identity(2, 1));
    CHECK_THROWS_AS(power(sigma, -1), std::invalid_argument);

    // cubing a colored 3-cycle paints every position with the cycle color sum
    for (int t1 = 0; t1 < 3; ++t1)
        for (int t2 = 0; t2 < 3; ++t2)
            for (int t3 = 0; t3 < 3; ++t3) {
                auto cycle = ColoredPermutation(3, {t1, t2, t3}, {1, 2, 0});
                auto cubed = power(cycle, 3);
                for (int i = 0; i < 3; ++i) {
                    CHECK(cubed.tau(i) == i);
                    CHECK(cubed.color(i) == (t1 + t2 + t3) % 3);
                }
            }
}

TEST_CASE("order_divides") {
    auto id = ColoredPermutation::identity(3, 2);
    for (int m = 1; m <= 5; ++m) CHECK(order_divides(id, m));

    auto transposition = ColoredPermutation(1, {0, 0}, {1, 0});
    CHECK(order_divides(transposition, 2));
    CHECK_FALSE(order_divides(transposition, 3));

    auto quarter = ColoredPermutation(4, {1}, {0});
    CHECK_FALSE(order_divides(quarter, 2));
    CHECK(order_divides(quarter, 4));

    CHECK_THROWS_AS(order_divides(id, 0), std::invalid_argument);

    // against literal power-and-compare
    for (int r = 1; r <= 2; ++r)
        for (int n = 0; n <= 3; ++n)
            for_all(r, n, [&](const ColoredPermutation& sigma) {
                for (int m = 1; m <= 6; ++m)
                    CHECK(order_divides(sigma, m) == power(sigma, m).is_identity());
            });
}

TEST_CASE("statistics on the worked elements") {
    auto a = ColoredPermutation::from_one_line(3, {{1, 1}, {3, 2}, {2, 0}, {4, 2}});
    CHECK(csum(a) == 5);
    CHECK(fix_count(a) == 2);
    CHECK(exc_a(a) == 0);
    CHECK(cycle_lengths(a) == std::vector<int>{1, 1, 2});
    CHECK(exc_full(a) == 5);
    CHECK(exc_clr(a) == 5);

    // same letters with the plain digits swapped: the A-excedance set
    // becomes {3}
    auto b = ColoredPermutation::from_one_line(3, {{1, 1}, {3, 2}, {4, 0}, {2, 2}});
    CHECK(csum(b) == 5);
    CHECK(exc_a_set(b) == std::vector<int>{3});
    CHECK(exc_a(b) == 1);
    CHECK(exc_clr(b) == 3 * 1 + 5);

    auto star = ColoredPermutation::from_one_line(3, {{2, 0}, {1, 1}, {3, 2}});
    CHECK(csum(star) == 3);
    CHECK(exc_a(star) == 1);
    CHECK(exc_full(star) == 6);
    CHECK(exc_clr(star) == 6);

    auto id = ColoredPermutation::identity(4, 5);
    CHECK(fix_count(id) == 5);
    CHECK(exc_full(id) == 0);
    CHECK(exc_clr(id) == 0);

    auto five_cycle = ColoredPermutation(2, {0, 0, 0, 0, 0}, {1, 2, 3, 4, 0});
    CHECK(fix_count(five_cycle) == 0);
    CHECK(cycle_lengths(five_cycle) == std::vector<int>{5});
    CHECK(stats(five_cycle) == StatTriple{0, 4, 0});

    CHECK(cycle_lengths(ColoredPermutation::identity(4, 3)) == std::vector<int>{1, 1, 1});
}

TEST_CASE("extended two-row form of the worked G_{3,3} element") {
    // sigma = (2 1^[1] 3^[2]) maps, letter by letter over all 9 of Sigma:
    //   1^[2] 2^[2] 3^[2] 1^[1] 2^[1] 3^[1] 1 2 3
    //   2^[2] 1     3^[1] 2^[1] 1^[2] 3     2 1^[1] 3^[2]
    auto star = ColoredPermutation::from_one_line(3, {{2, 0}, {1, 1}, {3, 2}});
    const std::vector<std::pair<int, int>> top = {{1, 2}, {2, 2}, {3, 2}, {1, 1}, {2, 1},
                                                  {3, 1}, {1, 0}, {2, 0}, {3, 0}};
    const std::vector<std::pair<int, int>> bottom = {{2, 2}, {1, 0}, {3, 1}, {2, 1}, {1, 2},
                                                     {3, 0}, {2, 0}, {1, 1}, {3, 2}};
    for (std::size_t k = 0; k < top.size(); ++k) {
        auto [digit, c] = top[k];
        int image_digit = star.tau(digit - 1) + 1;
        int image_color = (star.color(digit - 1) + c) % 3;
        CHECK(std::pair{image_digit, image_color} == bottom[k]);
    }
}

TEST_CASE("single color reduces exc_full to the classical excedance number") {
    for_all(1, 4, [](const ColoredPermutation& sigma) {
        int classical = 0;
        for (int i = 0; i < 4; ++i)
            if (sigma.tau(i) > i) ++classical;
        CHECK(exc_full(sigma) == classical);
    });
}

TEST_CASE("is_member") {
    auto id = ColoredPermutation::identity(6, 2);
    for (int s : {1, 2, 3, 6}) CHECK(is_member(id, s));
    CHECK_THROWS_AS(is_member(id, 4), std::invalid_argument);
    CHECK_THROWS_AS(is_member(id, 0), std::invalid_argument);

    auto a = ColoredPermutation::from_one_line(3, {{1, 1}, {3, 2}, {2, 0}, {4, 2}});
    CHECK_FALSE(is_member(a, 3)); // csum 5
    CHECK(is_member(ColoredPermutation(3, {1, 2}, {0, 1}), 3));
}

TEST_CASE("group axioms and csum homomorphism on random triples") {
    std::mt19937 rng(2024);
    for (int r = 1; r <= 4; ++r)
        for (int n = 0; n <= 5; ++n)
            for (int trial = 0; trial < 25; ++trial) {
                auto a = random_element(r, n, rng);
                auto b = random_element(r, n, rng);
                auto c = random_element(r, n, rng);
                CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
                auto ab = compose(a, b);
                CHECK((csum(a) + csum(b)) % r == csum(ab) % r);
                int order = 1;
                auto p = a;
                while (!p.is_identity()) { p = compose(p, a); ++order; }
                CHECK(compose(a, power(a, order - 1)).is_identity());
            }
}

TEST_CASE("color-order identity exc = r*exc_a + csum, exhaustive small groups") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 3; ++n)
            for_all(r, n, [&](const ColoredPermutation& sigma) {
                CHECK(exc_full(sigma) == exc_clr(sigma));
                for (int i : exc_a_set(sigma)) CHECK(sigma.tau(i - 1) > i - 1);
            });
}
