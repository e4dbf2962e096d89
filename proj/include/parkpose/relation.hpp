#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "parkpose/permutation.hpp"

namespace parkpose {

// Caps for operations that materialize [n]^n or S_n in memory.  The
// environment variable PARKPOSE_MAX_N overrides both when set.
int degree_cap();    // enumerations; default 10
int relation_cap();  // n! x n! relation matrices; default 6

// A named binary relation on S_n stored as a bit matrix.  related(x, y)
// is oriented "x above y" (x >= y for orders).  Elements are indexed in
// lexicographic order of their one-line notation.
class PermRelation {
public:
    PermRelation(int degree, std::string name);

    static PermRelation build(
        int degree, std::string name,
        const std::function<bool(const Permutation&, const Permutation&)>& above);

    int degree() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    const std::string& name() const { return name_; }
    const std::vector<Permutation>& elements() const { return elems_; }
    std::size_t index_of(const Permutation& x) const;

    bool related(std::size_t i, std::size_t j) const;
    bool related(const Permutation& x, const Permutation& y) const;
    void set(std::size_t i, std::size_t j, bool value = true);

    std::size_t pair_count() const;
    std::size_t nonreflexive_pair_count() const;

    bool is_reflexive() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;
    bool subset_of(const PermRelation& other) const;
    bool same_pairs(const PermRelation& other) const;

    // Reflexive-transitive closure by repeated boolean-matrix squaring.
    PermRelation transitive_closure(std::string name = "") const;

    // Cover pairs (i, j): element i covers element j.  Requires a partial
    // order; throws std::invalid_argument if the relation is not
    // reflexive, antisymmetric, and transitive.
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

private:
    std::vector<std::uint64_t> product_bits(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b) const;

    int n_;
    std::string name_;
    std::vector<Permutation> elems_;
    std::size_t words_;  // 64-bit words per row
    std::vector<std::uint64_t> bits_;
};

PermRelation bruhat_relation(int n);
PermRelation left_weak_relation(int n);

}  // namespace parkpose
