#pragma once

#include <cstdint>
#include <vector>

#include "parkpose/parking.hpp"
#include "parkpose/relation.hpp"

namespace parkpose {

struct PermPair {
    Permutation x;
    Permutation y;
    auto operator<=>(const PermPair&) const = default;
};

// Per-car choice counts for the preference pairs mapping to (x, y), and
// their product phi, the fiber size of the bioutcome map at (x, y).
struct FiberProfile {
    std::vector<int> c;  // c[i-1]: admissible lower preferences for car i
    std::vector<int> d;  // d[i-1]: admissible upper preferences for car i
    std::uint64_t phi;
};

// Size of the largest run of spots ending at x(i) that are all taken by
// the first i cars; the number of choices for the lower preference a(i).
int lower_choices(const Permutation& x, int i);

// Size of the largest run of spots starting at y(i) whose occupants all
// arrive no earlier than car i.
int upper_block_span(const Permutation& y, int i);

// Number of upper preferences b(i) compatible with both outcomes:
// #{k in [0, span) : y(i) + k >= x(i)}.
int upper_choices(const Permutation& x, const Permutation& y, int i);

FiberProfile fiber_profile(const Permutation& x, const Permutation& y);
std::uint64_t fiber_count(const Permutation& x, const Permutation& y);

// (outcome(a), outcome(b*)*) where * is the reverse complement.  Throws
// if the pair is not an interval parking function.
PermPair bioutcome(const IntervalPair& c);

// The interval [y(i), x(i)] is contained in {y(i), ..., y(n)} for every
// i; equivalently some interval parking function has bioutcome (x, y).
bool is_reachable(const Permutation& x, const Permutation& y);

// The full reachability relation on S_n: reflexive and antisymmetric but
// not transitive.
PermRelation reachability_relation(int n);

// Transitive closure of reachability; a partial order graded by length.
PermRelation pseudoreachability_relation(int n);

// A chain y = z_0, z_1, ..., z_m = x with every consecutive pair
// reachable and a length step of exactly 1; m = length(x) - length(y).
// Throws if (x, y) is not reachable.
std::vector<Permutation> cover_chain(const Permutation& x, const Permutation& y);

}  // namespace parkpose
