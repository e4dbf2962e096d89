#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parkpose/permutation.hpp"
#include "parkpose/relation.hpp"

namespace parkpose {

// Block lengths of the factorization of a permutation into suffixes of
// s_1 s_2 ... s_k, stored most-significant first: entries() holds
// (lambda_{n-1}, ..., lambda_1) with 0 <= lambda_k <= k, and the entries
// sum to the permutation's length.
class LambdaVector {
public:
    LambdaVector(int degree, std::vector<int> entries);

    int degree() const { return n_; }
    const std::vector<int>& entries() const { return entries_; }
    int entry(int k) const;  // lambda_k, 1 <= k <= n-1
    int sum() const;

    auto operator<=>(const LambdaVector&) const = default;

private:
    int n_;
    std::vector<int> entries_;
};

// Remove the final position and renumber the remaining values down past
// the removed one; degree drops by 1.  Throws for degree 1.
Permutation drop_last(const Permutation& x);

// Peel blocks from the top: lambda_{m-1} = m - x(m), then drop_last.
LambdaVector lambda_vector(const Permutation& x);

// Multiply the suffix blocks back out; inverse of lambda_vector.
Permutation from_lambda(const LambdaVector& lv);

bool componentwise_leq(const LambdaVector& a, const LambdaVector& b);

// Bubble-sorting order: componentwise comparison of lambda vectors.
bool sorting_leq(const Permutation& y, const Permutation& x);

PermRelation sorting_relation(int n);

// Lattice operations in the product-of-chains encoding.
LambdaVector lambda_meet(const LambdaVector& a, const LambdaVector& b);
LambdaVector lambda_join(const LambdaVector& a, const LambdaVector& b);
LambdaVector lambda_complement(const LambdaVector& a);

// For x(n) = y(n) = n and v = s_j s_{j+1} ... s_{n-1}: reports whether
// is_reachable(x, y) == is_reachable(vx, vy).  Expected always true.
// j == n gives the empty suffix v = e.
bool suffix_action_preserves_reachability(const Permutation& x, const Permutation& y, int j);

LambdaVector parse_lambda(std::string_view text);  // "(3,1,0,1)"
std::string to_string(const LambdaVector& lv);

}  // namespace parkpose
