#include "parkpose/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "parkpose/parking.hpp"
#include "parkpose/patterns.hpp"
#include "parkpose/reachability.hpp"
#include "parkpose/relation.hpp"
#include "parkpose/sorting.hpp"

namespace parkpose {

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

namespace {

CheckResult pass(std::string name, int n, std::string detail = "") {
    return CheckResult{std::move(name), n, true, std::move(detail)};
}

CheckResult fail(std::string name, int n, std::string detail) {
    return CheckResult{std::move(name), n, false, std::move(detail)};
}

std::string pair_label(const Permutation& x, const Permutation& y) {
    return "(" + to_string(x) + "," + to_string(y) + ")";
}

std::string pair_label(const IntervalPair& c) {
    return "(" + to_string(c.a) + "|" + to_string(c.b) + ")";
}

}  // namespace

CheckResult check_ar_count(int n) {
    const char* name = "ar_count";
    for (int m = 1; m <= n; ++m) {
        std::uint64_t counted = 0;
        for (const auto& x : all_permutations(m))
            if (is_ar(x)) ++counted;
        if (counted != ar_permutation_count(m))
            return fail(name, n,
                        "n=" + std::to_string(m) + " counted " + std::to_string(counted) +
                            " expected " + std::to_string(ar_permutation_count(m)));
    }
    return pass(name, n, "count=" + std::to_string(ar_permutation_count(n)));
}

CheckResult check_ar_downset(int n) {
    const char* name = "ar_downset";
    const auto perms = all_permutations(n);
    for (const auto& x : perms) {
        if (!is_ar(x)) continue;
        for (const auto& y : perms)
            if (bruhat_leq(y, x) && !is_ar(y))
                return fail(name, n, "counterexample " + pair_label(x, y));
    }
    return pass(name, n);
}

CheckResult check_ar_equivalence(int n) {
    const char* name = "ar_equivalence";
    for (const auto& x : all_permutations(n)) {
        const bool position = is_ar(x, ArMode::Position);
        const bool bracket = is_ar(x, ArMode::Bracket);
        const bool pattern = is_ar(x, ArMode::Pattern);
        const bool word = is_ar(x, ArMode::Word);
        if (position != bracket || position != pattern || position != word)
            return fail(name, n, "modes disagree at " + to_string(x));
    }
    return pass(name, n);
}

CheckResult check_bruhat_property(int n) {
    const char* name = "bruhat_property";
    std::uint64_t checked = 0;
    for (int m = 1; m <= n; ++m) {
        std::string bad;
        for_each_interval_parking_function(m, [&](const IntervalPair& c) {
            ++checked;
            if (!bad.empty()) return;
            const auto p = bioutcome(c);
            if (!bruhat_leq(p.y, p.x)) bad = pair_label(c);
        });
        if (!bad.empty()) return fail(name, n, "counterexample " + bad);
    }
    return pass(name, n, "ipfs=" + std::to_string(checked));
}

CheckResult check_completion_count(int n) {
    const char* name = "completion_count";
    std::string bad;
    for_each_parking_function(n, [&](const IntVector& a) {
        if (!bad.empty()) return;
        if (completions(a).size() != factorial(n)) bad = to_string(a);
    });
    if (!bad.empty()) return fail(name, n, "wrong completion count at " + bad);
    return pass(name, n, "per_pf=" + std::to_string(factorial(n)));
}

CheckResult check_criterion_equivalence(int n) {
    return check_criterion_equivalence(
        n, [](const Permutation& x, const Permutation& y) { return is_reachable(x, y); });
}

CheckResult check_criterion_equivalence(int n, const ReachablePredicate& reachable) {
    const char* name = "criterion_equivalence";
    const auto perms = all_permutations(n);

    // brute-force fibers: run the interval algorithm over every (a, b)
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> brute;
    for_each_int_vector(n, [&](const IntVector& a) {
        for_each_int_vector(n, [&](const IntVector& b) {
            const auto trace = park(IntervalPair(a, b));
            if (!trace.ok()) return;
            const auto x = *trace.outcome;
            const auto y = conjugate(outcome(conjugate(b)));
            ++brute[{lex_rank(x), lex_rank(y)}];
        });
    });

    for (std::size_t i = 0; i < perms.size(); ++i) {
        for (std::size_t j = 0; j < perms.size(); ++j) {
            const auto& x = perms[i];
            const auto& y = perms[j];
            const bool by_criterion = reachable(x, y);
            bool by_counts = true;
            for (int k = 1; k <= n; ++k)
                if (upper_choices(x, y, k) == 0) {
                    by_counts = false;
                    break;
                }
            const std::uint64_t phi = fiber_count(x, y);
            const auto it = brute.find({i, j});
            const std::uint64_t brute_phi = it == brute.end() ? 0 : it->second;
            if (by_criterion != by_counts || by_counts != (phi > 0) ||
                (phi > 0) != (brute_phi > 0))
                return fail(name, n,
                            "criteria disagree at " + pair_label(x, y) + " rc=" +
                                std::to_string(by_criterion) + " counts=" +
                                std::to_string(by_counts) + " phi=" + std::to_string(phi) +
                                " brute=" + std::to_string(brute_phi));
            if (phi != brute_phi)
                return fail(name, n,
                            "fiber size mismatch at " + pair_label(x, y) + " phi=" +
                                std::to_string(phi) + " brute=" + std::to_string(brute_phi));
        }
    }
    return pass(name, n, "pairs=" + std::to_string(perms.size() * perms.size()));
}

CheckResult check_fiber_sum(int n) {
    const char* name = "fiber_sum";
    const auto perms = all_permutations(n);
    std::uint64_t total = 0;
    for (const auto& x : perms)
        for (const auto& y : perms) total += fiber_count(x, y);
    const std::uint64_t expected = interval_parking_function_count(n);
    if (total != expected)
        return fail(name, n,
                    "total=" + std::to_string(total) + " expected " + std::to_string(expected));
    const auto e = Permutation::identity(n);
    const auto w0 = Permutation::reversal(n);
    if (fiber_count(e, e) != factorial(n) * factorial(n))
        return fail(name, n, "identity fiber is not (n!)^2");
    if (fiber_count(w0, w0) != 1)
        return fail(name, n, "reversal fiber is not 1");
    return pass(name, n, "total=" + std::to_string(total));
}

CheckResult check_gradedness(int n) {
    const char* name = "gradedness";
    const auto pseudo = pseudoreachability_relation(n);
    const auto& elems = pseudo.elements();
    for (const auto& [i, j] : pseudo.cover_pairs())
        if (length(elems[i]) - length(elems[j]) != 1)
            return fail(name, n, "cover with bad length step " + pair_label(elems[i], elems[j]));

    // chain construction, exhaustively at small degree
    const int chain_n = std::min(n, 4);
    const auto perms = all_permutations(chain_n);
    for (const auto& x : perms) {
        for (const auto& y : perms) {
            if (!is_reachable(x, y)) continue;
            const auto chain = cover_chain(x, y);
            const int steps = length(x) - length(y);
            bool ok = static_cast<int>(chain.size()) == steps + 1 &&
                      chain.front() == y && chain.back() == x;
            for (std::size_t k = 0; ok && k + 1 < chain.size(); ++k)
                ok = is_reachable(chain[k + 1], chain[k]) &&
                     length(chain[k + 1]) - length(chain[k]) == 1;
            if (!ok) return fail(name, n, "bad chain for " + pair_label(x, y));
        }
    }
    return pass(name, n, "chains_n=" + std::to_string(chain_n));
}

CheckResult check_ipf_count(int n) {
    const char* name = "ipf_count";
    std::uint64_t counted = 0;
    for_each_interval_parking_function(n, [&](const IntervalPair&) { ++counted; });
    const std::uint64_t expected = interval_parking_function_count(n);
    if (counted != expected)
        return fail(name, n,
                    "counted " + std::to_string(counted) + " expected " +
                        std::to_string(expected));
    return pass(name, n, "count=" + std::to_string(counted));
}

CheckResult check_lambda_roundtrip(int n) {
    const char* name = "lambda_roundtrip";
    for (const auto& x : all_permutations(n))
        if (from_lambda(lambda_vector(x)) != x)
            return fail(name, n, "round trip broken at " + to_string(x));
    // the whole box maps back to itself
    std::vector<int> entries(static_cast<std::size_t>(n) - 1, 0);
    std::uint64_t visited = 0;
    for (;;) {
        const LambdaVector lv(n, entries);
        ++visited;
        if (lambda_vector(from_lambda(lv)) != lv)
            return fail(name, n, "box round trip broken at " + to_string(lv));
        int k = static_cast<int>(entries.size()) - 1;
        while (k >= 0 && entries[static_cast<std::size_t>(k)] == n - 1 - k) {
            entries[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        ++entries[static_cast<std::size_t>(k)];
    }
    if (visited != factorial(n))
        return fail(name, n, "box size is not n!");
    return pass(name, n, "box=" + std::to_string(visited));
}

CheckResult check_prop33_facts(int n) {
    const char* name = "prop33_facts";
    std::string bad;
    for_each_interval_parking_function(n, [&](const IntervalPair& c) {
        if (!bad.empty()) return;
        const auto bstar = conjugate(c.b);
        if (!is_parking_function(bstar)) {
            bad = "b* not a parking function at " + pair_label(c);
            return;
        }
        const auto w = outcome(c.a);
        if (!componentwise_leq(c.a, w) || !componentwise_leq(w, c.b)) {
            bad = "outcome not between a and b at " + pair_label(c);
            return;
        }
        if (!componentwise_leq(conjugate(outcome(bstar)), c.b))
            bad = "conjugated dual outcome exceeds b at " + pair_label(c);
    });
    if (!bad.empty()) return fail(name, n, bad);
    return pass(name, n);
}

CheckResult check_sandwich(int n) {
    const char* name = "sandwich";
    const auto weak = left_weak_relation(n);
    const auto pseudo = pseudoreachability_relation(n);
    const auto bruhat = bruhat_relation(n);
    if (!weak.subset_of(pseudo))
        return fail(name, n, "weak order not contained in pseudoreachability");
    if (!pseudo.subset_of(bruhat))
        return fail(name, n, "pseudoreachability not contained in Bruhat order");
    return pass(name, n);
}

CheckResult check_sorting_coincidence(int n) {
    const char* name = "sorting_coincidence";
    const auto pseudo = pseudoreachability_relation(n);
    const auto sorting = sorting_relation(n);
    if (!sorting.same_pairs(pseudo)) {
        for (std::size_t i = 0; i < pseudo.size(); ++i)
            for (std::size_t j = 0; j < pseudo.size(); ++j)
                if (pseudo.related(i, j) != sorting.related(i, j))
                    return fail(name, n,
                                "orders differ at " +
                                    pair_label(pseudo.elements()[i], pseudo.elements()[j]));
    }
    return pass(name, n, "pairs=" + std::to_string(pseudo.pair_count()));
}

CheckResult check_thm_213(int n) {
    const char* name = "thm_213";
    const auto perms = all_permutations(n);
    for (const auto& x : perms)
        for (const auto& y : perms)
            if (bruhat_leq(y, x) && avoids_213(y) && !is_reachable(x, y))
                return fail(name, n, "counterexample " + pair_label(x, y));
    return pass(name, n);
}

CheckResult check_thm_ar(int n) {
    const char* name = "thm_ar";
    const auto perms = all_permutations(n);
    for (const auto& x : perms) {
        if (!is_ar(x)) continue;
        for (const auto& y : perms)
            if (bruhat_leq(y, x) && !is_reachable(x, y))
                return fail(name, n, "counterexample " + pair_label(x, y));
    }
    return pass(name, n);
}

CheckResult check_weak_implies_reachable(int n) {
    const char* name = "weak_implies_reachable";
    for (const auto& y : all_permutations(n)) {
        for (int i = 1; i <= n - 1; ++i) {
            const auto x = Permutation::adjacent_transposition(n, i) * y;
            if (length(x) != length(y) + 1) continue;
            if (!is_reachable(x, y))
                return fail(name, n, "weak cover not reachable " + pair_label(x, y));
        }
    }
    return pass(name, n);
}

namespace {

struct NamedCheck {
    const char* name;
    int fast_cap;
    int slow_cap;
    CheckResult (*run)(int);
};

constexpr NamedCheck kChecks[] = {
    {"ar_count", 5, 6, check_ar_count},
    {"ar_downset", 5, 6, check_ar_downset},
    {"ar_equivalence", 5, 6, check_ar_equivalence},
    {"bruhat_property", 4, 4, check_bruhat_property},
    {"completion_count", 4, 5, check_completion_count},
    {"criterion_equivalence", 4, 5, check_criterion_equivalence},
    {"fiber_sum", 4, 5, check_fiber_sum},
    {"gradedness", 5, 6, check_gradedness},
    {"ipf_count", 4, 5, check_ipf_count},
    {"lambda_roundtrip", 5, 6, check_lambda_roundtrip},
    {"prop33_facts", 4, 4, check_prop33_facts},
    {"sandwich", 5, 6, check_sandwich},
    {"sorting_coincidence", 5, 6, check_sorting_coincidence},
    {"thm_213", 5, 6, check_thm_213},
    {"thm_ar", 5, 6, check_thm_ar},
    {"weak_implies_reachable", 5, 6, check_weak_implies_reachable},
};

}  // namespace

VerificationReport run_verification(int n, Tier tier) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.requested_n = n;
    report.tier = tier;
    report.n = std::min(n, tier == Tier::Fast ? 5 : 6);
    for (const auto& check : kChecks) {
        const int cap = tier == Tier::Fast ? check.fast_cap : check.slow_cap;
        const int check_n = std::min(report.n, cap);
        try {
            report.checks.push_back(check.run(check_n));
        } catch (const std::exception& e) {
            report.checks.push_back(fail(check.name, check_n, std::string("error: ") + e.what()));
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace parkpose
