#include "parkpose/sorting.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "parkpose/reachability.hpp"

namespace parkpose {

LambdaVector::LambdaVector(int degree, std::vector<int> entries)
    : n_(degree), entries_(std::move(entries)) {
    if (n_ < 1) throw std::invalid_argument("lambda vector degree must be positive");
    if (entries_.size() != static_cast<std::size_t>(n_) - 1)
        throw std::invalid_argument("lambda vector needs n-1 entries");
    for (int k = n_ - 1; k >= 1; --k) {
        const int value = entries_[static_cast<std::size_t>(n_ - 1 - k)];
        if (value < 0 || value > k)
            throw std::invalid_argument("lambda entry out of [0, k]");
    }
}

int LambdaVector::entry(int k) const {
    if (k < 1 || k > n_ - 1) throw std::out_of_range("lambda index out of range");
    return entries_[static_cast<std::size_t>(n_ - 1 - k)];
}

int LambdaVector::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

Permutation drop_last(const Permutation& x) {
    const int n = x.degree();
    if (n < 2) throw std::invalid_argument("drop_last: degree must be at least 2");
    const int pivot = x(n);
    std::vector<int> vals(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i)
        vals[static_cast<std::size_t>(i) - 1] = x(i) < pivot ? x(i) : x(i) - 1;
    return Permutation(std::move(vals));
}

LambdaVector lambda_vector(const Permutation& x) {
    const int n = x.degree();
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n) - 1);
    Permutation cur = x;
    for (int m = n; m >= 2; --m) {
        entries.push_back(m - cur(m));
        cur = drop_last(cur);
    }
    return LambdaVector(n, std::move(entries));
}

Permutation from_lambda(const LambdaVector& lv) {
    const int n = lv.degree();
    Permutation acc = Permutation::identity(n);
    for (int k = n - 1; k >= 1; --k) {
        const int block = lv.entry(k);
        for (int t = k - block + 1; t <= k; ++t)
            acc = acc * Permutation::adjacent_transposition(n, t);
    }
    return acc;
}

bool componentwise_leq(const LambdaVector& a, const LambdaVector& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("lambda comparison: degree mismatch");
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (a.entries()[i] > b.entries()[i]) return false;
    return true;
}

bool sorting_leq(const Permutation& y, const Permutation& x) {
    if (x.degree() != y.degree())
        throw std::invalid_argument("sorting_leq: degree mismatch");
    return componentwise_leq(lambda_vector(y), lambda_vector(x));
}

PermRelation sorting_relation(int n) {
    PermRelation rel(n, "sorting");
    const auto& elems = rel.elements();
    std::vector<std::vector<int>> lambdas;
    lambdas.reserve(elems.size());
    for (const auto& x : elems) lambdas.push_back(lambda_vector(x).entries());
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            bool above = true;
            for (std::size_t k = 0; k < lambdas[i].size(); ++k)
                if (lambdas[j][k] > lambdas[i][k]) {
                    above = false;
                    break;
                }
            if (above) rel.set(i, j);
        }
    return rel;
}

namespace {

LambdaVector zip_lambda(const LambdaVector& a, const LambdaVector& b, bool take_min) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("lambda lattice op: degree mismatch");
    std::vector<int> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = take_min ? std::min(a.entries()[i], b.entries()[i])
                          : std::max(a.entries()[i], b.entries()[i]);
    return LambdaVector(a.degree(), std::move(out));
}

}  // namespace

LambdaVector lambda_meet(const LambdaVector& a, const LambdaVector& b) {
    return zip_lambda(a, b, true);
}

LambdaVector lambda_join(const LambdaVector& a, const LambdaVector& b) {
    return zip_lambda(a, b, false);
}

LambdaVector lambda_complement(const LambdaVector& a) {
    const int n = a.degree();
    std::vector<int> out(a.entries().size());
    for (int k = n - 1; k >= 1; --k)
        out[static_cast<std::size_t>(n - 1 - k)] = k - a.entry(k);
    return LambdaVector(n, std::move(out));
}

bool suffix_action_preserves_reachability(const Permutation& x, const Permutation& y, int j) {
    const int n = x.degree();
    if (y.degree() != n) throw std::invalid_argument("degree mismatch");
    if (x(n) != n || y(n) != n)
        throw std::invalid_argument("both permutations must fix the top value at the end");
    if (j < 1 || j > n) throw std::out_of_range("suffix start out of range");  // j == n: empty suffix
    Permutation v = Permutation::identity(n);
    for (int t = j; t <= n - 1; ++t)
        v = v * Permutation::adjacent_transposition(n, t);
    return is_reachable(x, y) == is_reachable(v * x, v * y);
}

LambdaVector parse_lambda(std::string_view text) {
    std::string s(text);
    // strip optional parentheses
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty lambda vector");
    s = s.substr(first, last - first + 1);
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<int> entries;
    std::string token;
    std::istringstream in(s);
    while (std::getline(in, token, ',')) {
        std::istringstream fields(token);
        std::string f;
        while (fields >> f) {
            int value = 0;
            auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
            if (ec != std::errc{} || p != f.data() + f.size())
                throw std::invalid_argument("malformed lambda entry '" + f + "'");
            entries.push_back(value);
        }
    }
    const int degree = static_cast<int>(entries.size()) + 1;
    return LambdaVector(degree, std::move(entries));
}

std::string to_string(const LambdaVector& lv) {
    std::string out = "(";
    for (std::size_t i = 0; i < lv.entries().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(lv.entries()[i]);
    }
    out += ')';
    return out;
}

}  // namespace parkpose
