#include "parkpose/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace parkpose {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : vals_(std::move(one_line)) {
    const int n = degree();
    require(n >= 1, "permutation degree must be positive");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : vals_) {
        require(v >= 1 && v <= n, "permutation entry out of range");
        require(!seen[static_cast<std::size_t>(v)], "permutation entry repeated");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    require(n >= 1, "degree must be positive");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::reversal(int n) {
    require(n >= 1, "degree must be positive");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::adjacent_transposition(int n, int i) {
    require(i >= 1 && i <= n - 1, "generator index out of range");
    return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int a, int b) {
    require(n >= 1, "degree must be positive");
    require(a >= 1 && a <= n && b >= 1 && b <= n && a != b,
            "transposition values out of range");
    auto x = identity(n);
    std::swap(x.vals_[static_cast<std::size_t>(a) - 1],
              x.vals_[static_cast<std::size_t>(b) - 1]);
    return x;
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > degree()) throw std::out_of_range("permutation index out of range");
    return vals_[static_cast<std::size_t>(i) - 1];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(vals_.size());
    for (int i = 0; i < degree(); ++i)
        inv[static_cast<std::size_t>(vals_[static_cast<std::size_t>(i)]) - 1] = i + 1;
    return Permutation(std::move(inv));
}

IntVector::IntVector(std::vector<int> values) : vals_(std::move(values)) {
    const int n = degree();
    require(n >= 1, "vector length must be positive");
    for (int v : vals_)
        require(v >= 1 && v <= n, "vector entry out of [1, n]");
}

IntVector IntVector::constant(int n, int value) {
    require(n >= 1, "vector length must be positive");
    return IntVector(std::vector<int>(static_cast<std::size_t>(n), value));
}

int IntVector::operator()(int i) const {
    if (i < 1 || i > degree()) throw std::out_of_range("vector index out of range");
    return vals_[static_cast<std::size_t>(i) - 1];
}

Permutation compose(const Permutation& x, const Permutation& y) {
    require(x.degree() == y.degree(), "compose: degree mismatch");
    const auto& xs = x.one_line();
    const auto& ys = y.one_line();
    std::vector<int> out(xs.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = xs[static_cast<std::size_t>(ys[i]) - 1];
    return Permutation(std::move(out));
}

int length(const Permutation& x) {
    const auto& v = x.one_line();
    int count = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++count;
    return count;
}

int prefix_geq(const Permutation& x, int i, int j) {
    const int n = x.degree();
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("prefix_geq: index out of range");
    const auto& v = x.one_line();
    int count = 0;
    for (int k = 0; k < i; ++k)
        if (v[static_cast<std::size_t>(k)] >= j) ++count;
    return count;
}

bool bruhat_leq(const Permutation& y, const Permutation& x) {
    require(x.degree() == y.degree(), "bruhat_leq: degree mismatch");
    const int n = x.degree();
    const auto& xv = x.one_line();
    const auto& yv = y.one_line();
    for (int j = 1; j <= n; ++j) {
        int cx = 0, cy = 0;
        for (int i = 0; i < n; ++i) {
            if (xv[static_cast<std::size_t>(i)] >= j) ++cx;
            if (yv[static_cast<std::size_t>(i)] >= j) ++cy;
            if (cy > cx) return false;
        }
    }
    return true;
}

bool left_weak_leq(const Permutation& y, const Permutation& x) {
    require(x.degree() == y.degree(), "left_weak_leq: degree mismatch");
    const int n = x.degree();
    const auto& xv = x.one_line();
    const auto& yv = y.one_line();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (yv[static_cast<std::size_t>(i)] > yv[static_cast<std::size_t>(j)] &&
                xv[static_cast<std::size_t>(i)] < xv[static_cast<std::size_t>(j)])
                return false;
    return true;
}

IntVector conjugate(const IntVector& v) {
    const int n = v.degree();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        out[static_cast<std::size_t>(i) - 1] = n + 1 - v(n + 1 - i);
    return IntVector(std::move(out));
}

Permutation conjugate(const Permutation& x) {
    return as_permutation(conjugate(IntVector(x)));
}

bool componentwise_leq(const IntVector& a, const IntVector& b) {
    require(a.degree() == b.degree(), "componentwise_leq: degree mismatch");
    for (int i = 0; i < a.degree(); ++i)
        if (a.values()[static_cast<std::size_t>(i)] > b.values()[static_cast<std::size_t>(i)])
            return false;
    return true;
}

bool componentwise_leq(const Permutation& a, const IntVector& b) {
    return componentwise_leq(IntVector(a), b);
}

bool componentwise_leq(const IntVector& a, const Permutation& b) {
    return componentwise_leq(a, IntVector(b));
}

bool componentwise_leq(const Permutation& a, const Permutation& b) {
    return componentwise_leq(IntVector(a), IntVector(b));
}

Permutation as_permutation(const IntVector& v) {
    return Permutation(v.values());
}

namespace {

std::vector<int> parse_entries(std::string_view text) {
    std::string s(text);
    // separated form
    if (s.find_first_of(", \t") != std::string::npos) {
        std::vector<int> out;
        std::string token;
        std::istringstream in(s);
        while (std::getline(in, token, ',')) {
            std::istringstream fields(token);
            std::string f;
            bool any = false;
            while (fields >> f) {
                any = true;
                int value = 0;
                auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
                if (ec != std::errc{} || p != f.data() + f.size())
                    throw std::invalid_argument("malformed entry '" + f + "'");
                out.push_back(value);
            }
            if (!any) throw std::invalid_argument("empty entry in vector");
        }
        if (out.empty()) throw std::invalid_argument("empty vector");
        return out;
    }
    // compact digit form
    if (s.empty()) throw std::invalid_argument("empty vector");
    if (s.size() > 9)
        throw std::invalid_argument("compact digit form supports n <= 9; use commas");
    std::vector<int> out;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed vector '" + s + "'");
        out.push_back(c - '0');
    }
    return out;
}

std::string format_entries(const std::vector<int>& v, NotationStyle style) {
    const bool compact =
        style == NotationStyle::Compact ||
        (style == NotationStyle::Auto && v.size() <= 9);
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

IntVector parse_int_vector(std::string_view text) {
    return IntVector(parse_entries(text));
}

Permutation parse_permutation(std::string_view text) {
    return Permutation(parse_entries(text));
}

std::string to_string(const IntVector& v, NotationStyle style) {
    return format_entries(v.values(), style);
}

std::string to_string(const Permutation& x, NotationStyle style) {
    return format_entries(x.one_line(), style);
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial(n)));
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::size_t lex_rank(const Permutation& x) {
    const int n = x.degree();
    const auto& v = x.one_line();
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j < n; ++j)
            if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(i)])
                ++smaller_after;
        rank += static_cast<std::size_t>(smaller_after) *
                static_cast<std::size_t>(factorial(n - 1 - i));
    }
    return rank;
}

std::uint64_t factorial(int n) {
    require(n >= 0 && n <= 20, "factorial argument out of range");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    require(exp >= 0, "ipow exponent must be non-negative");
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace parkpose
