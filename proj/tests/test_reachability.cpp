#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "parkpose/reachability.hpp"
#include "parkpose/verify.hpp"

using namespace parkpose;

namespace {

const Permutation kX = parse_permutation("361245");
const Permutation kY = parse_permutation("341256");

}  // namespace

TEST_CASE("lower choice counts") {
    const std::vector<int> expected = {1, 1, 1, 2, 4, 5};
    for (int i = 1; i <= 6; ++i)
        CHECK(lower_choices(kX, i) == expected[static_cast<std::size_t>(i) - 1]);

    for (int i = 1; i <= 5; ++i)
        CHECK(lower_choices(Permutation::identity(5), i) == i);
    for (int i = 1; i <= 4; ++i)
        CHECK(lower_choices(Permutation::reversal(4), i) == 1);

    CHECK_THROWS_AS(lower_choices(kX, 0), std::out_of_range);
    CHECK_THROWS_AS(lower_choices(kX, 7), std::out_of_range);
}

TEST_CASE("upper block spans") {
    // the final car never has room above it
    for (const auto& y : all_permutations(4))
        CHECK(upper_block_span(y, 4) == 1);

    for (int i = 1; i <= 5; ++i)
        CHECK(upper_block_span(Permutation::identity(5), i) == 5 + 1 - i);

    // definition scan as an in-test oracle
    const auto scan = [](const Permutation& y, int i) {
        const auto yinv = y.inverse();
        int j = 0;
        while (y(i) + j <= y.degree() && yinv(y(i) + j) >= i) ++j;
        return j;
    };
    CHECK(upper_block_span(kY, 1) == scan(kY, 1));
    CHECK(upper_block_span(kY, 1) == 4);
    for (const auto& y : all_permutations(4))
        for (int i = 1; i <= 4; ++i) CHECK(upper_block_span(y, i) == scan(y, i));
}

TEST_CASE("upper choice counts") {
    const std::vector<int> expected = {4, 1, 2, 1, 2, 1};
    for (int i = 1; i <= 6; ++i)
        CHECK(upper_choices(kX, kY, i) == expected[static_cast<std::size_t>(i) - 1]);

    const auto perms = all_permutations(4);
    for (const auto& x : perms)
        for (const auto& y : perms) {
            CHECK(upper_choices(x, y, 1) >= 1);
            for (int i = 1; i <= 4; ++i)
                if (y(i) >= x(i)) CHECK(upper_choices(x, y, i) >= 1);
            if (bruhat_leq(y, x)) CHECK(upper_choices(x, y, 4) == 1);
        }

    CHECK_THROWS_AS(upper_choices(kX, Permutation::identity(4), 1), std::invalid_argument);
}

TEST_CASE("fiber sizes") {
    CHECK(fiber_count(kX, kY) == 640);
    const auto profile = fiber_profile(kX, kY);
    CHECK(profile.c == std::vector<int>{1, 1, 1, 2, 4, 5});
    CHECK(profile.d == std::vector<int>{4, 1, 2, 1, 2, 1});
    CHECK(profile.phi == 640);

    for (int n = 1; n <= 5; ++n) {
        const auto e = Permutation::identity(n);
        const auto w0 = Permutation::reversal(n);
        CHECK(fiber_count(e, e) == factorial(n) * factorial(n));
        CHECK(fiber_count(w0, w0) == 1);
    }

    // the lower counts depend only on the first coordinate
    const auto other = parse_permutation("123456");
    CHECK(fiber_profile(kX, kY).c == fiber_profile(kX, other).c);
}

TEST_CASE("fiber sizes match the brute-force scan") {
    for (int n = 2; n <= 3; ++n) {
        const auto brute = oracles::brute_fibers(n);
        std::uint64_t total = 0;
        const auto perms = all_permutations(n);
        for (std::size_t i = 0; i < perms.size(); ++i)
            for (std::size_t j = 0; j < perms.size(); ++j) {
                const auto it = brute.find({i, j});
                const std::uint64_t expected = it == brute.end() ? 0 : it->second;
                CHECK(fiber_count(perms[i], perms[j]) == expected);
                total += expected;
            }
        CHECK(total == interval_parking_function_count(n));
    }
}

TEST_CASE("bioutcome") {
    for (const auto& x : all_permutations(3)) {
        const auto p = bioutcome(IntervalPair(IntVector(x), IntVector(x)));
        CHECK(p.x == x);
        CHECK(p.y == x);
    }

    const auto p = bioutcome(IntervalPair(parse_int_vector("312"), parse_int_vector("313")));
    CHECK(p.x == parse_permutation("312"));
    CHECK(p.y == parse_permutation("213"));

    // simulated truth for the nearby pairs: the witness with first
    // coordinate 321 is (321, 322), while (312, 322) maps diagonally
    const auto q = bioutcome(IntervalPair(parse_int_vector("321"), parse_int_vector("322")));
    CHECK(q.x == parse_permutation("321"));
    CHECK(q.y == parse_permutation("312"));
    const auto r = bioutcome(IntervalPair(parse_int_vector("312"), parse_int_vector("322")));
    CHECK(r.x == parse_permutation("312"));
    CHECK(r.y == parse_permutation("312"));

    CHECK_THROWS_AS(bioutcome(IntervalPair(parse_int_vector("11"), parse_int_vector("21"))),
                    std::invalid_argument);
}

TEST_CASE("reachability criterion") {
    CHECK_FALSE(is_reachable(parse_permutation("321"), parse_permutation("213")));
    CHECK(is_reachable(parse_permutation("312"), parse_permutation("213")));
    CHECK(is_reachable(parse_permutation("321"), parse_permutation("312")));
    for (const auto& x : all_permutations(4)) CHECK(is_reachable(x, x));
    CHECK_THROWS_AS(is_reachable(kX, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("reachability relation equals the brute-force bioutcome image") {
    const auto rel = reachability_relation(3);
    const auto brute = oracles::brute_fibers(3);
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = 0; j < rel.size(); ++j)
            CHECK(rel.related(i, j) == (brute.count({i, j}) > 0));
    CHECK(rel.nonreflexive_pair_count() == 11);

    CHECK(rel.is_reflexive());
    CHECK_FALSE(rel.is_transitive());
    CHECK(reachability_relation(4).is_antisymmetric());
}

TEST_CASE("pseudoreachability") {
    const auto pseudo = pseudoreachability_relation(3);
    CHECK(pseudo.related(parse_permutation("321"), parse_permutation("213")));
    CHECK(pseudo.cover_pairs().size() == 7);

    // closure agrees with the Floyd-Warshall oracle
    const auto closed4 = pseudoreachability_relation(4);
    CHECK(closed4.same_pairs(oracles::warshall_closure(reachability_relation(4))));
    CHECK(closed4.is_reflexive());
    CHECK(closed4.is_antisymmetric());
    CHECK(closed4.is_transitive());
}

TEST_CASE("cover chains") {
    const auto x = parse_permutation("231");
    CHECK(cover_chain(x, x) == std::vector<Permutation>{x});

    // a single weak cover: s_1 * 132 = 231
    const auto y = parse_permutation("132");
    CHECK(cover_chain(x, y) == std::vector<Permutation>{y, x});

    const auto perms = all_permutations(4);
    for (const auto& top : perms)
        for (const auto& bottom : perms) {
            if (!is_reachable(top, bottom)) continue;
            const auto chain = cover_chain(top, bottom);
            REQUIRE(chain.size() ==
                    static_cast<std::size_t>(length(top) - length(bottom)) + 1);
            CHECK(chain.front() == bottom);
            CHECK(chain.back() == top);
            for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
                CHECK(is_reachable(chain[k + 1], chain[k]));
                CHECK(length(chain[k + 1]) == length(chain[k]) + 1);
            }
        }

    CHECK_THROWS_AS(cover_chain(parse_permutation("321"), parse_permutation("213")),
                    std::invalid_argument);
}

TEST_CASE("theorem checks at small degree") {
    CHECK(check_bruhat_property(4).passed);
    CHECK(check_criterion_equivalence(3).passed);
    CHECK(check_fiber_sum(4).passed);
    CHECK(check_weak_implies_reachable(5).passed);
    CHECK(check_gradedness(5).passed);
    CHECK(check_sandwich(5).passed);
}
