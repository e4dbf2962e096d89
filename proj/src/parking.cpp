#include "parkpose/parking.hpp"

#include <algorithm>
#include <stdexcept>

#include "parkpose/relation.hpp"

namespace parkpose {

IntervalPair::IntervalPair(IntVector lo, IntVector hi) : a(std::move(lo)), b(std::move(hi)) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("interval pair: degree mismatch");
}

bool is_parking_function(const IntVector& a) {
    const int n = a.degree();
    std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
    for (int v : a.values()) ++counts[static_cast<std::size_t>(v)];
    int at_most = 0;
    for (int i = 1; i <= n; ++i) {
        at_most += counts[static_cast<std::size_t>(i)];
        if (at_most < i) return false;
    }
    return true;
}

namespace {

ParkingTrace simulate(const IntVector& lo, const IntVector* hi) {
    const int n = lo.degree();
    std::vector<char> occupied(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> spots(static_cast<std::size_t>(n), 0);
    for (int car = 1; car <= n; ++car) {
        const int last = hi != nullptr ? (*hi)(car) : n;
        int s = lo(car);
        while (s <= last && occupied[static_cast<std::size_t>(s)]) ++s;
        if (s > last) return ParkingTrace{std::nullopt, car};
        occupied[static_cast<std::size_t>(s)] = 1;
        spots[static_cast<std::size_t>(car) - 1] = s;
    }
    return ParkingTrace{Permutation(std::move(spots)), std::nullopt};
}

}  // namespace

ParkingTrace park(const IntVector& a) { return simulate(a, nullptr); }

ParkingTrace park(const IntervalPair& c) { return simulate(c.a, &c.b); }

Permutation outcome(const IntVector& a) {
    auto trace = park(a);
    if (!trace.ok())
        throw std::invalid_argument("outcome: not a parking function");
    return *trace.outcome;
}

bool is_interval_parking_function(const IntervalPair& c) {
    if (!is_parking_function(c.a)) return false;
    return componentwise_leq(outcome(c.a), c.b);
}

namespace {

void check_enumeration_degree(int n) {
    if (n < 1) throw std::invalid_argument("degree must be positive");
    if (n > degree_cap())
        throw std::invalid_argument(
            "degree exceeds the enumeration cap (set PARKPOSE_MAX_N to override)");
}

// Odometer over vectors with per-position bounds [low(i), n], ascending lex.
void for_each_bounded(const std::vector<int>& low, int n,
                      const std::function<void(const IntVector&)>& fn) {
    std::vector<int> v = low;
    for (;;) {
        fn(IntVector(v));
        int i = static_cast<int>(v.size()) - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == n) {
            v[static_cast<std::size_t>(i)] = low[static_cast<std::size_t>(i)];
            --i;
        }
        if (i < 0) return;
        ++v[static_cast<std::size_t>(i)];
    }
}

}  // namespace

void for_each_int_vector(int n, const std::function<void(const IntVector&)>& fn) {
    check_enumeration_degree(n);
    for_each_bounded(std::vector<int>(static_cast<std::size_t>(n), 1), n, fn);
}

void for_each_parking_function(int n, const std::function<void(const IntVector&)>& fn) {
    for_each_int_vector(n, [&](const IntVector& a) {
        if (is_parking_function(a)) fn(a);
    });
}

void for_each_interval_parking_function(
    int n, const std::function<void(const IntervalPair&)>& fn) {
    for_each_parking_function(n, [&](const IntVector& a) {
        const auto w = outcome(a);
        for_each_bounded(w.one_line(), n, [&](const IntVector& b) {
            fn(IntervalPair(a, b));
        });
    });
}

std::vector<IntVector> completions(const IntVector& a) {
    if (!is_parking_function(a))
        throw std::invalid_argument("completions: not a parking function");
    const auto w = outcome(a);
    std::vector<IntVector> out;
    for_each_bounded(w.one_line(), a.degree(), [&](const IntVector& b) {
        out.push_back(b);
    });
    return out;
}

std::vector<IntVector> enumerate_parking_functions(int n) {
    std::vector<IntVector> out;
    for_each_parking_function(n, [&](const IntVector& a) { out.push_back(a); });
    return out;
}

std::vector<IntervalPair> enumerate_interval_parking_functions(int n) {
    std::vector<IntervalPair> out;
    for_each_interval_parking_function(n, [&](const IntervalPair& c) { out.push_back(c); });
    return out;
}

std::uint64_t parking_function_count(int n) {
    if (n < 1) throw std::invalid_argument("degree must be positive");
    return ipow(static_cast<std::uint64_t>(n) + 1, n - 1);
}

std::uint64_t interval_parking_function_count(int n) {
    return factorial(n) * parking_function_count(n);
}

}  // namespace parkpose
