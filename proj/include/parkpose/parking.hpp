#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "parkpose/permutation.hpp"

namespace parkpose {

// Result of a parking run: either every car parked and `outcome` holds
// the spot permutation, or `failed_car` records the first car that could
// not park.
struct ParkingTrace {
    std::optional<Permutation> outcome;
    std::optional<int> failed_car;
    bool ok() const { return outcome.has_value(); }
};

// A pair of preference vectors; car i is willing to park in [a(i), b(i)].
struct IntervalPair {
    IntVector a;
    IntVector b;
    IntervalPair(IntVector lo, IntVector hi);
    auto operator<=>(const IntervalPair&) const = default;
};

// Nondecreasing-rearrangement test: sort a ascending, require a~(i) <= i.
bool is_parking_function(const IntVector& a);

// Car i takes the first free spot in [a(i), n].
ParkingTrace park(const IntVector& a);

// Car i takes the first free spot in [a(i), b(i)].  Pairs with
// a(i) > b(i) are accepted; car i then fails immediately.
ParkingTrace park(const IntervalPair& c);

// Outcome permutation of a parking function; throws if parking fails.
Permutation outcome(const IntVector& a);

// Closed-form test: a is a parking function and outcome(a) <= b
// componentwise.  No simulation.
bool is_interval_parking_function(const IntervalPair& c);

// All b with (a, b) an interval parking function, in lexicographic
// order.  Throws unless a is a parking function; the result always has
// exactly n! entries.
std::vector<IntVector> completions(const IntVector& a);

// Streaming enumeration, lexicographic throughout.  Degree is capped by
// degree_cap().
void for_each_int_vector(int n, const std::function<void(const IntVector&)>& fn);
void for_each_parking_function(int n, const std::function<void(const IntVector&)>& fn);
void for_each_interval_parking_function(
    int n, const std::function<void(const IntervalPair&)>& fn);

std::vector<IntVector> enumerate_parking_functions(int n);
std::vector<IntervalPair> enumerate_interval_parking_functions(int n);

std::uint64_t parking_function_count(int n);           // (n+1)^(n-1)
std::uint64_t interval_parking_function_count(int n);  // n! (n+1)^(n-1)

}  // namespace parkpose
