#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "parkpose/parking.hpp"
#include "parkpose/permutation.hpp"
#include "parkpose/reachability.hpp"
#include "parkpose/relation.hpp"

using namespace parkpose;

TEST_CASE("compose evaluates right to left") {
    const auto x = parse_permutation("132");
    CHECK(compose(Permutation::identity(3), x) == x);
    CHECK(compose(x, Permutation::identity(3)) == x);

    // transposing the digits 1 and 2 undoes 213
    CHECK(Permutation::transposition(3, 1, 2) * parse_permutation("213") ==
          Permutation::identity(3));

    // entrywise evaluation oracle for s_2 * 132
    const auto s2 = Permutation::adjacent_transposition(3, 2);
    const auto product = s2 * x;
    for (int i = 1; i <= 3; ++i) CHECK(product(i) == s2(x(i)));

    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("length counts inversion pairs") {
    CHECK(length(Permutation::identity(5)) == 0);
    CHECK(length(Permutation::reversal(4)) == 6);

    const auto x = parse_permutation("2431");
    CHECK(length(x) == oracles::inversions_by_bubble_sort(x));
    CHECK(length(x) == 4);

    for (const auto& p : all_permutations(4)) {
        CHECK(length(p) == oracles::inversions_by_bubble_sort(p));
        CHECK(length(p) == length(p.inverse()));
    }
}

TEST_CASE("conjugate is an order-reversing involution") {
    CHECK(conjugate(parse_int_vector("2,2,1")) == parse_int_vector("3,2,2"));
    CHECK(conjugate(parse_int_vector("322")) == parse_int_vector("2,2,1"));

    for (int n = 2; n <= 4; ++n) {
        std::vector<IntVector> all;
        for_each_int_vector(n, [&](const IntVector& v) { all.push_back(v); });
        for (const auto& v : all) CHECK(conjugate(conjugate(v)) == v);
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(componentwise_leq(a, b) ==
                      componentwise_leq(conjugate(b), conjugate(a)));
    }
}

TEST_CASE("prefix counts") {
    const auto e = Permutation::identity(5);
    for (int i = 1; i <= 5; ++i) CHECK(prefix_geq(e, i, 1) == i);

    CHECK(prefix_geq(parse_permutation("361245"), 2, 3) == 2);

    // pigeonhole lower bound
    for (int n = 2; n <= 5; ++n)
        for (const auto& x : all_permutations(n))
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    CHECK(prefix_geq(x, i, j) >= i - j + 1);

    CHECK_THROWS_AS(prefix_geq(e, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(prefix_geq(e, 1, 6), std::out_of_range);
}

TEST_CASE("Bruhat order matches the transposition-closure oracle") {
    CHECK(bruhat_leq(parse_permutation("213"), parse_permutation("321")));

    for (int n = 3; n <= 4; ++n) {
        const auto oracle = oracles::bruhat_by_closure(n);
        const auto& perms = oracle.elements();
        for (std::size_t i = 0; i < perms.size(); ++i)
            for (std::size_t j = 0; j < perms.size(); ++j)
                CHECK(bruhat_leq(perms[j], perms[i]) == oracle.related(i, j));
    }
}

TEST_CASE("left weak order matches the generator-closure oracle") {
    for (const auto& x : all_permutations(4))
        CHECK(left_weak_leq(Permutation::identity(4), x));

    for (int n = 3; n <= 4; ++n) {
        const auto oracle = oracles::left_weak_by_closure(n);
        const auto& perms = oracle.elements();
        for (std::size_t i = 0; i < perms.size(); ++i)
            for (std::size_t j = 0; j < perms.size(); ++j)
                CHECK(left_weak_leq(perms[j], perms[i]) == oracle.related(i, j));
    }

    // 132 and 312 sit on different maximal chains of the weak hexagon
    CHECK(left_weak_leq(parse_permutation("132"), parse_permutation("312")) ==
          oracles::left_weak_by_closure(3).related(parse_permutation("312"),
                                                   parse_permutation("132")));
    CHECK_FALSE(left_weak_leq(parse_permutation("132"), parse_permutation("312")));
}

TEST_CASE("Bruhat and weak order are partial orders with weak below Bruhat") {
    for (int n = 2; n <= 5; ++n) {
        const auto bruhat = bruhat_relation(n);
        const auto weak = left_weak_relation(n);
        for (const auto* rel : {&bruhat, &weak}) {
            CHECK(rel->is_reflexive());
            CHECK(rel->is_antisymmetric());
            CHECK(rel->is_transitive());
        }
        CHECK(weak.subset_of(bruhat));
    }
}

TEST_CASE("cover computation") {
    CHECK(left_weak_relation(2).cover_pairs().size() == 1);  // a two-element chain
    CHECK(bruhat_relation(3).cover_pairs().size() == 8);
    CHECK(left_weak_relation(3).cover_pairs().size() == 6);

    // betweenness-elimination oracle over all pairs of S_4
    const auto bruhat = bruhat_relation(4);
    auto expected = oracles::covers_by_betweenness(bruhat);
    auto actual = bruhat.cover_pairs();
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);

    CHECK_THROWS_AS(reachability_relation(3).cover_pairs(), std::invalid_argument);
}

TEST_CASE("parsing and printing") {
    CHECK(parse_permutation("3,6,1,2,4,5") == parse_permutation("361245"));
    CHECK(parse_permutation("3 6 1 2 4 5") == parse_permutation("361245"));
    CHECK(to_string(parse_permutation("361245")) == "361245");
    CHECK(to_string(parse_permutation("361245"), NotationStyle::Comma) == "3,6,1,2,4,5");
    CHECK(parse_int_vector("2,2,1") == parse_int_vector("221"));

    for (const auto& x : all_permutations(4)) {
        CHECK(parse_permutation(to_string(x)) == x);
        CHECK(parse_permutation(to_string(x, NotationStyle::Comma)) == x);
    }

    CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1,2,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1123"), std::invalid_argument);  // repeated value
    CHECK_THROWS_AS(parse_permutation("124"), std::invalid_argument);   // not onto
    CHECK_THROWS_AS(parse_int_vector("103"), std::invalid_argument);    // zero entry
    CHECK_THROWS_AS(parse_int_vector("1111111111"), std::invalid_argument);
    CHECK(parse_int_vector("1,1,1,1,1,1,1,1,1,1").degree() == 10);
}

TEST_CASE("lexicographic ranking agrees with enumeration order") {
    const auto perms = all_permutations(4);
    CHECK(perms.size() == 24);
    for (std::size_t i = 0; i < perms.size(); ++i) CHECK(lex_rank(perms[i]) == i);
}
