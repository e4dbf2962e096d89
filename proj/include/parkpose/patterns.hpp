#pragma once

#include <cstdint>
#include <vector>

#include "parkpose/permutation.hpp"

namespace parkpose {

// True if some subsequence of host is in the same relative order as
// pattern.  Throws if pattern is longer than host.
bool contains_pattern(const Permutation& host, const Permutation& pattern);
bool avoids(const Permutation& host, const Permutation& pattern);

// Quadratic scan for 213 specifically; agrees with the generic search.
bool avoids_213(const Permutation& x);

enum class ArMode { Position, Bracket, Pattern, Word };

// AR permutations: x^{-1}(i) <= i+1 for every i.  Equivalently every
// prefix count x<j,j> is 1, or x avoids both 231 and 321, or x is a
// product of generators with strictly decreasing indices.  Position is
// the cheapest test and the default.
bool is_ar(const Permutation& x, ArMode mode = ArMode::Position);

std::uint64_t ar_permutation_count(int n);  // 2^(n-1)

// Indices k with x(k) > k, ascending.
std::vector<int> exceedances(const Permutation& x);

struct SufficiencyReport {
    bool bruhat_related;  // y <= x in Bruhat order
    bool y_avoids_213;
    bool x_is_ar;
    bool reachable;
};

SufficiencyReport sufficiency_report(const Permutation& x, const Permutation& y);

}  // namespace parkpose
