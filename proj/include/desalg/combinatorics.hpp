#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace desalg {

/// Everything downstream indexes subsets and blocks by machine-word
/// bit-sets, so the ambient size is capped here.
inline constexpr int kMaxN = 16;

void check_n(int n);

/// A composition of n: tuple of positive integers summing to n.
/// The empty tuple is the unique composition of 0.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int n() const;
    int length() const { return static_cast<int>(parts.size()); }

    /// Text form "a1,a2,...,ak" (empty string for the empty composition).
    std::string str() const;
    static Composition parse(const std::string& s);

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Composition& a, const Composition& b) { return a.parts != b.parts; }
    friend bool operator<(const Composition& a, const Composition& b) { return a.parts < b.parts; }
};

/// Subset of [n-1] = {1,...,n-1}, stored as a bit-set (bit i-1 <-> element i).
struct IndexSet {
    int n = 0;
    std::uint32_t mask = 0;

    IndexSet() = default;
    IndexSet(int n_, std::uint32_t mask_);
    static IndexSet of(int n, std::initializer_list<int> elems);

    bool contains(int i) const { return i >= 1 && i <= n - 1 && (mask >> (i - 1) & 1u); }
    int size() const { return __builtin_popcount(mask); }
    bool subset_of(const IndexSet& o) const { return (mask & ~o.mask) == 0; }
    std::vector<int> elements() const;

    /// Text form "{1,3}"; "{}" for the empty set.
    std::string str() const;
    static IndexSet parse(int n, const std::string& s);

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.n == b.n && a.mask == b.mask; }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }
};

/// Permutation of [n] in one-line notation; entries are 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity(int n);
    /// The order-reversing permutation (n, n-1, ..., 1).
    static Permutation longest_word(int n);
    /// The cycle k1 -> k2 -> ... -> km -> k1, fixing everything else.
    static Permutation cycle(int n, const std::vector<int>& elems);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& oneline() const { return img_; }

    bool is_identity() const;
    /// (u.compose(v))(i) = u(v(i)).
    Permutation compose(const Permutation& v) const;
    Permutation inverse() const;

    /// Rank in lexicographic one-line order, 0 .. n!-1 (Lehmer code).
    std::uint64_t rank() const;
    static Permutation unrank(int n, std::uint64_t r);

    /// Text form "3,1,2".
    std::string str() const;
    static Permutation parse(const std::string& s);

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

std::uint64_t factorial(int n);

/// gaps(J): distances between adjacent elements of {0} u J u {n};
/// a composition of n with |J|+1 parts.
Composition gaps(const IndexSet& J);

/// Inverse of gaps: the partial sums of alpha, excluding n.
IndexSet gaps_inv(const Composition& alpha);

/// Reverses the part order (an involution).
Composition rev(const Composition& alpha);

/// sub(J) = {n - j : j in J}, the reflection of J across n/2.
/// Satisfies sub = gaps_inv o rev o gaps.
IndexSet sub(const IndexSet& J);

/// Des w = {i in [n-1] : w(i) > w(i+1)}.
IndexSet descent_set(const Permutation& w);

Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);
Permutation longest_word(int n);

/// All 2^(n-1) compositions of n, ordered by the cut-set bit-mask of
/// gaps_inv (J = 0 first, i.e. (n) first, (1,1,...,1) last).
std::vector<Composition> enumerate_compositions(int n);

/// All n! permutations in lexicographic one-line order.
std::vector<Permutation> enumerate_permutations(int n);

/// Calls fn on each permutation of [n] in lexicographic one-line order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

} // namespace desalg
