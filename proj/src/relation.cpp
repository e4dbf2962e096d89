#include "parkpose/relation.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace parkpose {

namespace {

int cap_from_env(int fallback) {
    const char* raw = std::getenv("PARKPOSE_MAX_N");
    if (raw == nullptr || *raw == '\0') return fallback;
    int value = 0;
    const char* end = raw;
    while (*end != '\0') ++end;
    auto [p, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || p != end || value < 1) return fallback;
    return value;
}

}  // namespace

int degree_cap() { return cap_from_env(10); }
int relation_cap() { return cap_from_env(6); }

PermRelation::PermRelation(int degree, std::string name)
    : n_(degree), name_(std::move(name)) {
    if (degree < 1)
        throw std::invalid_argument("relation degree must be positive");
    if (degree > relation_cap())
        throw std::invalid_argument(
            "degree exceeds the relation cap (set PARKPOSE_MAX_N to override)");
    elems_ = all_permutations(degree);
    words_ = (elems_.size() + 63) / 64;
    bits_.assign(elems_.size() * words_, 0);
}

PermRelation PermRelation::build(
    int degree, std::string name,
    const std::function<bool(const Permutation&, const Permutation&)>& above) {
    PermRelation rel(degree, std::move(name));
    const std::size_t count = rel.size();
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if (above(rel.elems_[i], rel.elems_[j])) rel.set(i, j);
    return rel;
}

std::size_t PermRelation::index_of(const Permutation& x) const {
    if (x.degree() != n_)
        throw std::invalid_argument("index_of: degree mismatch");
    return lex_rank(x);
}

bool PermRelation::related(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
}

bool PermRelation::related(const Permutation& x, const Permutation& y) const {
    return related(index_of(x), index_of(y));
}

void PermRelation::set(std::size_t i, std::size_t j, bool value) {
    auto& word = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    if (value)
        word |= mask;
    else
        word &= ~mask;
}

std::size_t PermRelation::pair_count() const {
    std::size_t total = 0;
    for (std::uint64_t w : bits_) total += static_cast<std::size_t>(__builtin_popcountll(w));
    return total;
}

std::size_t PermRelation::nonreflexive_pair_count() const {
    std::size_t reflexive = 0;
    for (std::size_t i = 0; i < size(); ++i)
        if (related(i, i)) ++reflexive;
    return pair_count() - reflexive;
}

bool PermRelation::is_reflexive() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (!related(i, i)) return false;
    return true;
}

bool PermRelation::is_antisymmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (related(i, j) && related(j, i)) return false;
    return true;
}

std::vector<std::uint64_t> PermRelation::product_bits(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    std::vector<std::uint64_t> out(size() * words_, 0);
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t row = a[i * words_ + w];
            while (row != 0) {
                const std::size_t k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row));
                row &= row - 1;
                for (std::size_t t = 0; t < words_; ++t)
                    out[i * words_ + t] |= b[k * words_ + t];
            }
        }
    }
    return out;
}

bool PermRelation::is_transitive() const {
    const auto prod = product_bits(bits_, bits_);
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if ((prod[w] & ~bits_[w]) != 0) return false;
    return true;
}

bool PermRelation::subset_of(const PermRelation& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("subset_of: degree mismatch");
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if ((bits_[w] & ~other.bits_[w]) != 0) return false;
    return true;
}

bool PermRelation::same_pairs(const PermRelation& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

PermRelation PermRelation::transitive_closure(std::string name) const {
    PermRelation out = *this;
    out.name_ = name.empty() ? name_ + "_closure" : std::move(name);
    for (;;) {
        const auto prod = out.product_bits(out.bits_, out.bits_);
        bool changed = false;
        for (std::size_t w = 0; w < out.bits_.size(); ++w) {
            const std::uint64_t merged = out.bits_[w] | prod[w];
            if (merged != out.bits_[w]) {
                out.bits_[w] = merged;
                changed = true;
            }
        }
        if (!changed) return out;
    }
}

std::vector<std::pair<std::size_t, std::size_t>> PermRelation::cover_pairs() const {
    if (!is_transitive())
        throw std::invalid_argument(
            "cover_pairs: relation is not transitive (close it first)");
    if (!is_reflexive() || !is_antisymmetric())
        throw std::invalid_argument("cover_pairs: relation is not a partial order");
    // strict part, then eliminate pairs with an element strictly between
    std::vector<std::uint64_t> strict = bits_;
    for (std::size_t i = 0; i < size(); ++i)
        strict[i * words_ + i / 64] &= ~(std::uint64_t{1} << (i % 64));
    const auto two_step = product_bits(strict, strict);
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) {
            const std::size_t slot = i * words_ + j / 64;
            const std::uint64_t mask = std::uint64_t{1} << (j % 64);
            if ((strict[slot] & mask) && !(two_step[slot] & mask))
                covers.emplace_back(i, j);
        }
    return covers;
}

PermRelation bruhat_relation(int n) {
    return PermRelation::build(n, "bruhat", [](const Permutation& x, const Permutation& y) {
        return bruhat_leq(y, x);
    });
}

PermRelation left_weak_relation(int n) {
    return PermRelation::build(n, "weak", [](const Permutation& x, const Permutation& y) {
        return left_weak_leq(y, x);
    });
}

}  // namespace parkpose
