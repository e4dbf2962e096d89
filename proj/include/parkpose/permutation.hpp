#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace parkpose {

// A permutation of [n] in one-line notation, stored as the value sequence
// (x(1), ..., x(n)).  All public indices and values are 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation reversal(int n);                       // (n, n-1, ..., 1)
    static Permutation adjacent_transposition(int n, int i);  // swaps values i, i+1
    static Permutation transposition(int n, int a, int b);    // swaps values a, b

    int degree() const { return static_cast<int>(vals_.size()); }
    int operator()(int i) const;
    const std::vector<int>& one_line() const { return vals_; }

    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> vals_;
};

// An element of [n]^n; repeats allowed.  1-based access like Permutation.
class IntVector {
public:
    explicit IntVector(std::vector<int> values);
    explicit IntVector(const Permutation& x) : vals_(x.one_line()) {}

    static IntVector constant(int n, int value);

    int degree() const { return static_cast<int>(vals_.size()); }
    int operator()(int i) const;
    const std::vector<int>& values() const { return vals_; }

    auto operator<=>(const IntVector&) const = default;

private:
    std::vector<int> vals_;
};

// result(i) = x(y(i)); multiplication is right to left.
Permutation compose(const Permutation& x, const Permutation& y);
inline Permutation operator*(const Permutation& x, const Permutation& y) {
    return compose(x, y);
}

// Number of inversion pairs (i, j) with i < j and x(i) > x(j).
int length(const Permutation& x);

// #{k in [1, i] : x(k) >= j}; the prefix counts behind the Bruhat test.
int prefix_geq(const Permutation& x, int i, int j);

// y <= x in Bruhat order: every prefix count of y is dominated by x's.
bool bruhat_leq(const Permutation& y, const Permutation& x);

// y <= x in left weak order: the inversion set of y is contained in the
// inversion set of x (equivalently, value inversions of the inverses).
bool left_weak_leq(const Permutation& y, const Permutation& x);

// Reverse complement: result(i) = n+1 - v(n+1-i).  An involution that
// reverses componentwise order.
IntVector conjugate(const IntVector& v);
Permutation conjugate(const Permutation& x);

bool componentwise_leq(const IntVector& a, const IntVector& b);
bool componentwise_leq(const Permutation& a, const IntVector& b);
bool componentwise_leq(const IntVector& a, const Permutation& b);
bool componentwise_leq(const Permutation& a, const Permutation& b);

Permutation as_permutation(const IntVector& v);  // throws unless a bijection

// Text forms: comma/space separated entries ("3,6,1,2,4,5") or compact
// digits ("361245", n <= 9 only).
IntVector parse_int_vector(std::string_view text);
Permutation parse_permutation(std::string_view text);

enum class NotationStyle { Auto, Compact, Comma };
std::string to_string(const IntVector& v, NotationStyle style = NotationStyle::Auto);
std::string to_string(const Permutation& x, NotationStyle style = NotationStyle::Auto);

std::vector<Permutation> all_permutations(int n);  // lexicographic order
std::size_t lex_rank(const Permutation& x);

std::uint64_t factorial(int n);
std::uint64_t ipow(std::uint64_t base, int exp);

}  // namespace parkpose
