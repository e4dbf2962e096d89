#include "parkpose/patterns.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "parkpose/reachability.hpp"

namespace parkpose {

bool contains_pattern(const Permutation& host, const Permutation& pattern) {
    const int n = host.degree();
    const int m = pattern.degree();
    if (m > n) throw std::invalid_argument("pattern longer than host");
    std::vector<int> picked;  // host positions chosen so far
    std::function<bool(int)> extend = [&](int start) -> bool {
        const int t = static_cast<int>(picked.size());
        if (t == m) return true;
        for (int p = start; p <= n - (m - t) + 1; ++p) {
            bool consistent = true;
            for (int s = 0; s < t; ++s) {
                const bool pat_lt = pattern(s + 1) < pattern(t + 1);
                const bool host_lt = host(picked[static_cast<std::size_t>(s)]) < host(p);
                if (pat_lt != host_lt) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            picked.push_back(p);
            if (extend(p + 1)) return true;
            picked.pop_back();
        }
        return false;
    };
    return extend(1);
}

bool avoids(const Permutation& host, const Permutation& pattern) {
    return !contains_pattern(host, pattern);
}

bool avoids_213(const Permutation& x) {
    const int n = x.degree();
    std::vector<int> suffix_max(static_cast<std::size_t>(n) + 2, 0);
    for (int p = n; p >= 1; --p)
        suffix_max[static_cast<std::size_t>(p)] =
            std::max(suffix_max[static_cast<std::size_t>(p) + 1], x(p));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (x(j) < x(i) && suffix_max[static_cast<std::size_t>(j) + 1] > x(i))
                return false;
    return true;
}

bool is_ar(const Permutation& x, ArMode mode) {
    const int n = x.degree();
    switch (mode) {
        case ArMode::Position: {
            const auto xinv = x.inverse();
            for (int i = 1; i <= n; ++i)
                if (xinv(i) > i + 1) return false;
            return true;
        }
        case ArMode::Bracket: {
            for (int j = 1; j <= n; ++j)
                if (prefix_geq(x, j, j) != 1) return false;
            return true;
        }
        case ArMode::Pattern: {
            if (n < 3) return true;
            return avoids(x, parse_permutation("231")) &&
                   avoids(x, parse_permutation("321"));
        }
        case ArMode::Word: {
            // Peel strictly decreasing generator indices from the top.
            Permutation w = x;
            for (int m = n; m >= 2; --m) {
                const int v = w(m);
                if (v == m) continue;
                if (v == m - 1) {
                    w = Permutation::adjacent_transposition(n, m - 1) * w;
                    continue;
                }
                return false;
            }
            return w == Permutation::identity(n);
        }
    }
    throw std::logic_error("unknown AR mode");
}

std::uint64_t ar_permutation_count(int n) {
    if (n < 1) throw std::invalid_argument("degree must be positive");
    return std::uint64_t{1} << (n - 1);
}

std::vector<int> exceedances(const Permutation& x) {
    std::vector<int> out;
    for (int k = 1; k <= x.degree(); ++k)
        if (x(k) > k) out.push_back(k);
    return out;
}

SufficiencyReport sufficiency_report(const Permutation& x, const Permutation& y) {
    if (x.degree() != y.degree())
        throw std::invalid_argument("sufficiency_report: degree mismatch");
    return SufficiencyReport{bruhat_leq(y, x), avoids_213(y), is_ar(x), is_reachable(x, y)};
}

}  // namespace parkpose
