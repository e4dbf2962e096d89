#include "oracles.hpp"

#include "parkpose/parking.hpp"
#include "parkpose/reachability.hpp"

namespace oracles {

using parkpose::IntervalPair;
using parkpose::IntVector;
using parkpose::Permutation;
using parkpose::PermRelation;

int inversions_by_bubble_sort(const Permutation& x) {
    auto v = x.one_line();
    int swaps = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                ++swaps;
                moved = true;
            }
    }
    return swaps;
}

namespace {

std::vector<std::vector<bool>> warshall(std::vector<std::vector<bool>> m) {
    const std::size_t size = m.size();
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t i = 0; i < size; ++i)
            if (m[i][k])
                for (std::size_t j = 0; j < size; ++j)
                    if (m[k][j]) m[i][j] = true;
    return m;
}

PermRelation from_matrix(int n, std::string name, const std::vector<std::vector<bool>>& m) {
    PermRelation rel(n, std::move(name));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j]) rel.set(i, j);
    return rel;
}

}  // namespace

PermRelation bruhat_by_closure(int n) {
    const auto perms = parkpose::all_permutations(n);
    std::vector<std::vector<bool>> m(perms.size(), std::vector<bool>(perms.size(), false));
    for (std::size_t i = 0; i < perms.size(); ++i) {
        m[i][i] = true;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                const auto below = Permutation::transposition(n, a, b) * perms[i];
                if (parkpose::length(below) < parkpose::length(perms[i]))
                    m[i][parkpose::lex_rank(below)] = true;
            }
    }
    return from_matrix(n, "bruhat_oracle", warshall(std::move(m)));
}

PermRelation left_weak_by_closure(int n) {
    const auto perms = parkpose::all_permutations(n);
    std::vector<std::vector<bool>> m(perms.size(), std::vector<bool>(perms.size(), false));
    for (std::size_t i = 0; i < perms.size(); ++i) {
        m[i][i] = true;
        for (int s = 1; s <= n - 1; ++s) {
            const auto below = Permutation::adjacent_transposition(n, s) * perms[i];
            if (parkpose::length(below) < parkpose::length(perms[i]))
                m[i][parkpose::lex_rank(below)] = true;
        }
    }
    return from_matrix(n, "weak_oracle", warshall(std::move(m)));
}

PermRelation warshall_closure(const PermRelation& rel) {
    std::vector<std::vector<bool>> m(rel.size(), std::vector<bool>(rel.size(), false));
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = 0; j < rel.size(); ++j)
            if (rel.related(i, j)) m[i][j] = true;
    return from_matrix(rel.degree(), rel.name() + "_oracle", warshall(std::move(m)));
}

std::vector<std::pair<std::size_t, std::size_t>> covers_by_betweenness(
    const PermRelation& rel) {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = 0; j < rel.size(); ++j) {
            if (i == j || !rel.related(i, j)) continue;
            bool has_between = false;
            for (std::size_t k = 0; k < rel.size() && !has_between; ++k)
                if (k != i && k != j && rel.related(i, k) && rel.related(k, j))
                    has_between = true;
            if (!has_between) covers.emplace_back(i, j);
        }
    return covers;
}

std::uint64_t catalan(int n) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int i = 0; i < m; ++i)
            c[static_cast<std::size_t>(m)] +=
                c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    return c[static_cast<std::size_t>(n)];
}

std::vector<int> lex_first_reduced_word(const Permutation& u) {
    const int n = u.degree();
    std::vector<int> word;
    Permutation cur = u;
    while (parkpose::length(cur) > 0) {
        for (int i = 1; i <= n - 1; ++i) {
            const auto shorter = Permutation::adjacent_transposition(n, i) * cur;
            if (parkpose::length(shorter) < parkpose::length(cur)) {
                word.push_back(i);
                cur = shorter;
                break;
            }
        }
    }
    return word;
}

std::vector<int> lambda_word(const parkpose::LambdaVector& lv) {
    std::vector<int> word;
    for (int k = lv.degree() - 1; k >= 1; --k)
        for (int t = k - lv.entry(k) + 1; t <= k; ++t) word.push_back(t);
    return word;
}

std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> brute_fibers(int n) {
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> fibers;
    parkpose::for_each_int_vector(n, [&](const IntVector& a) {
        parkpose::for_each_int_vector(n, [&](const IntVector& b) {
            const auto trace = parkpose::park(IntervalPair(a, b));
            if (!trace.ok()) return;
            const auto x = *trace.outcome;
            const auto y = parkpose::conjugate(parkpose::outcome(parkpose::conjugate(b)));
            ++fibers[{parkpose::lex_rank(x), parkpose::lex_rank(y)}];
        });
    });
    return fibers;
}

}  // namespace oracles
