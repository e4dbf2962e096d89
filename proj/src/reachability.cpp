#include "parkpose/reachability.hpp"

#include <stdexcept>

namespace parkpose {

namespace {

void check_index(const Permutation& x, int i) {
    if (i < 1 || i > x.degree())
        throw std::out_of_range("car index out of range");
}

void check_degrees(const Permutation& x, const Permutation& y) {
    if (x.degree() != y.degree())
        throw std::invalid_argument("degree mismatch");
}

}  // namespace

int lower_choices(const Permutation& x, int i) {
    check_index(x, i);
    const auto xinv = x.inverse();
    const int spot = x(i);
    int run = 0;
    while (spot - run >= 1 && xinv(spot - run) <= i) ++run;
    return run;
}

int upper_block_span(const Permutation& y, int i) {
    check_index(y, i);
    const auto yinv = y.inverse();
    const int n = y.degree();
    const int spot = y(i);
    int run = 0;
    while (spot + run <= n && yinv(spot + run) >= i) ++run;
    return run;
}

int upper_choices(const Permutation& x, const Permutation& y, int i) {
    check_degrees(x, y);
    const int span = upper_block_span(y, i);
    int count = 0;
    for (int k = 0; k < span; ++k)
        if (y(i) + k >= x(i)) ++count;
    return count;
}

FiberProfile fiber_profile(const Permutation& x, const Permutation& y) {
    check_degrees(x, y);
    const int n = x.degree();
    FiberProfile profile;
    profile.phi = 1;
    for (int i = 1; i <= n; ++i) {
        profile.c.push_back(lower_choices(x, i));
        profile.d.push_back(upper_choices(x, y, i));
        profile.phi *= static_cast<std::uint64_t>(profile.c.back()) *
                       static_cast<std::uint64_t>(profile.d.back());
    }
    return profile;
}

std::uint64_t fiber_count(const Permutation& x, const Permutation& y) {
    return fiber_profile(x, y).phi;
}

PermPair bioutcome(const IntervalPair& c) {
    if (!is_interval_parking_function(c))
        throw std::invalid_argument("bioutcome: not an interval parking function");
    return PermPair{outcome(c.a), conjugate(outcome(conjugate(c.b)))};
}

bool is_reachable(const Permutation& x, const Permutation& y) {
    check_degrees(x, y);
    const int n = x.degree();
    const auto yinv = y.inverse();
    for (int i = 1; i <= n; ++i)
        for (int m = y(i); m <= x(i); ++m)
            if (yinv(m) < i) return false;
    return true;
}

PermRelation reachability_relation(int n) {
    return PermRelation::build(n, "reach", [](const Permutation& x, const Permutation& y) {
        return is_reachable(x, y);
    });
}

PermRelation pseudoreachability_relation(int n) {
    return reachability_relation(n).transitive_closure("pseudo");
}

namespace {

// Inverse of drop_last: reinsert value v at the final position.
Permutation reinsert_last(const Permutation& z, int v) {
    const int m = z.degree();
    std::vector<int> vals(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i)
        vals[static_cast<std::size_t>(i) - 1] = z(i) < v ? z(i) : z(i) + 1;
    vals[static_cast<std::size_t>(m)] = v;
    return Permutation(std::move(vals));
}

Permutation project_last(const Permutation& x) {
    const int n = x.degree();
    const int pivot = x(n);
    std::vector<int> vals(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i)
        vals[static_cast<std::size_t>(i) - 1] = x(i) < pivot ? x(i) : x(i) - 1;
    return Permutation(std::move(vals));
}

std::vector<Permutation> chain_impl(const Permutation& x, const Permutation& y) {
    const int steps = length(x) - length(y);
    if (steps == 0) return {x};
    if (steps == 1) return {y, x};
    const int n = x.degree();
    if (x(n) == y(n)) {
        auto sub = chain_impl(project_last(x), project_last(y));
        std::vector<Permutation> lifted;
        lifted.reserve(sub.size());
        for (const auto& z : sub) lifted.push_back(reinsert_last(z, x(n)));
        return lifted;
    }
    // x(n) < y(n) here; climb one weak cover above y, then recurse.
    const int p = y(n) - 1;
    const auto z = Permutation::adjacent_transposition(n, p) * y;
    auto rest = chain_impl(x, z);
    rest.insert(rest.begin(), y);
    return rest;
}

}  // namespace

std::vector<Permutation> cover_chain(const Permutation& x, const Permutation& y) {
    if (!is_reachable(x, y))
        throw std::invalid_argument("cover_chain: pair is not reachable");
    return chain_impl(x, y);
}

}  // namespace parkpose
