#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "desalg/combinatorics.hpp"
#include "desalg/knapsack.hpp"
#include "desalg/scalar.hpp"

namespace desalg {

/// Degree above which group-algebra elements switch from a dense
/// rank-indexed array to a sparse map (n! no longer fits comfortably).
inline constexpr int kGroupDenseMaxN = 7;

/// Element of the group algebra kS_n: finitely supported map from
/// permutations (by lexicographic rank) to scalars. Multiplication uses
/// the composition convention (uv)(i) = u(v(i)) throughout; the one-sided
/// shuffles w0*B_alpha and B_alpha*w0 are formed with this product.
template <class K>
class GroupElem {
public:
    explicit GroupElem(int n) : n_(n), dense_(n <= kGroupDenseMaxN) {
        check_n(n);
        if (dense_) vec_.assign(factorial(n), K::zero());
    }

    static GroupElem zero(int n) { return GroupElem(n); }
    static GroupElem of_permutation(const Permutation& w) {
        GroupElem e(w.n());
        e.add_coeff(w.rank(), K::one());
        return e;
    }
    static GroupElem identity(int n) { return of_permutation(Permutation::identity(n)); }
    static GroupElem longest_word_elem(int n) {
        return of_permutation(Permutation::longest_word(n));
    }

    int n() const { return n_; }
    std::uint64_t dim() const { return factorial(n_); }

    K coeff(std::uint64_t rank) const {
        if (dense_) return vec_[rank];
        auto it = map_.find(rank);
        return it == map_.end() ? K::zero() : it->second;
    }

    void add_coeff(std::uint64_t rank, const K& v) {
        if (v.is_zero()) return;
        if (dense_) {
            vec_[rank] += v;
        } else {
            auto [it, inserted] = map_.emplace(rank, v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) map_.erase(it);
            }
        }
    }

    /// Visits nonzero coefficients in increasing rank order.
    void for_each(const std::function<void(std::uint64_t, const K&)>& fn) const {
        if (dense_) {
            for (std::uint64_t r = 0; r < vec_.size(); ++r)
                if (!vec_[r].is_zero()) fn(r, vec_[r]);
        } else {
            for (const auto& [r, c] : map_) fn(r, c);
        }
    }

    bool is_zero() const {
        if (!dense_) return map_.empty();
        for (const auto& c : vec_)
            if (!c.is_zero()) return false;
        return true;
    }

    std::uint64_t support_size() const {
        if (!dense_) return map_.size();
        std::uint64_t s = 0;
        for (const auto& c : vec_)
            if (!c.is_zero()) ++s;
        return s;
    }

    GroupElem& operator+=(const GroupElem& o) {
        require_same(o);
        o.for_each([&](std::uint64_t r, const K& c) { add_coeff(r, c); });
        return *this;
    }
    GroupElem& operator-=(const GroupElem& o) {
        require_same(o);
        o.for_each([&](std::uint64_t r, const K& c) { add_coeff(r, -c); });
        return *this;
    }
    friend GroupElem operator+(GroupElem a, const GroupElem& b) { a += b; return a; }
    friend GroupElem operator-(GroupElem a, const GroupElem& b) { a -= b; return a; }

    friend GroupElem operator*(const K& s, const GroupElem& a) {
        GroupElem out(a.n_);
        if (s.is_zero()) return out;
        a.for_each([&](std::uint64_t r, const K& c) { out.add_coeff(r, s * c); });
        return out;
    }

    /// Convolution product, bilinear over the group multiplication.
    friend GroupElem operator*(const GroupElem& a, const GroupElem& b) {
        a.require_same(b);
        GroupElem out(a.n_);
        std::vector<std::pair<Permutation, K>> sa = a.support_perms();
        std::vector<std::pair<Permutation, K>> sb = b.support_perms();
        for (const auto& [p, cp] : sa)
            for (const auto& [q, cq] : sb) out.add_coeff(p.compose(q).rank(), cp * cq);
        return out;
    }

    friend bool operator==(const GroupElem& a, const GroupElem& b) {
        a.require_same(b);
        bool eq = true;
        a.for_each([&](std::uint64_t r, const K& c) {
            if (eq && b.coeff(r) != c) eq = false;
        });
        if (!eq) return false;
        b.for_each([&](std::uint64_t r, const K& c) {
            if (eq && a.coeff(r) != c) eq = false;
        });
        return eq;
    }
    friend bool operator!=(const GroupElem& a, const GroupElem& b) { return !(a == b); }

    /// Dense coordinate vector over all n! permutations by rank.
    std::vector<K> to_coords() const {
        std::vector<K> out(dim(), K::zero());
        for_each([&](std::uint64_t r, const K& c) { out[r] = c; });
        return out;
    }

    std::vector<std::pair<Permutation, K>> support_perms() const {
        std::vector<std::pair<Permutation, K>> out;
        out.reserve(support_size());
        for_each([&](std::uint64_t r, const K& c) {
            out.emplace_back(Permutation::unrank(n_, r), c);
        });
        return out;
    }

private:
    void require_same(const GroupElem& o) const {
        if (n_ != o.n_) throw std::invalid_argument("group algebra: degree mismatch");
    }

    int n_;
    bool dense_;
    std::vector<K> vec_;
    std::map<std::uint64_t, K> map_;
};

/// Linear map sending each permutation to its inverse; an algebra
/// anti-isomorphism and an involution.
template <class K>
GroupElem<K> antipode(const GroupElem<K>& a) {
    GroupElem<K> out(a.n());
    for (const auto& [p, c] : a.support_perms()) out.add_coeff(p.inverse().rank(), c);
    return out;
}

/// B_I: sum of all permutations with Des w contained in I.
template <class K>
GroupElem<K> basis_B(const IndexSet& I) {
    GroupElem<K> out(I.n);
    std::uint64_t r = 0;
    for_each_permutation(I.n, [&](const Permutation& w) {
        if (descent_set(w).subset_of(I)) out.add_coeff(r, K::one());
        ++r;
    });
    return out;
}

/// D_I: sum of all permutations with Des w equal to I.
template <class K>
GroupElem<K> basis_D(const IndexSet& I) {
    GroupElem<K> out(I.n);
    std::uint64_t r = 0;
    for_each_permutation(I.n, [&](const Permutation& w) {
        if (descent_set(w) == I) out.add_coeff(r, K::one());
        ++r;
    });
    return out;
}

/// B_alpha = B_{gaps_inv(alpha)}.
template <class K>
GroupElem<K> basis_B_comp(const Composition& alpha) {
    return basis_B<K>(gaps_inv(alpha));
}

/// The k-top-to-random shuffle: sum of permutations w with
/// w^{-1}(k+1) < ... < w^{-1}(n). k = 1 gives the top-to-random element.
template <class K>
GroupElem<K> top_to_random(int n, int k) {
    check_n(n);
    if (k < 0 || k > n) throw std::invalid_argument("top_to_random: k out of range");
    GroupElem<K> out(n);
    std::uint64_t r = 0;
    for_each_permutation(n, [&](const Permutation& w) {
        const Permutation wi = w.inverse();
        bool ok = true;
        for (int v = k + 1; v < n && ok; ++v) ok = wi(v) < wi(v + 1);
        if (ok) out.add_coeff(r, K::one());
        ++r;
    });
    return out;
}

/// B_gamma: the nonnegative combination sum_alpha gamma_alpha B_alpha.
inline GroupElem<Rat> weighted_B(const WeightVector& gamma) {
    GroupElem<Rat> out(gamma.n);
    for (const auto& [alpha, c] : gamma.weights) {
        if (c.sign() < 0) throw std::invalid_argument("weighted_B: negative weight");
        if (c.is_zero()) continue;
        out += c * basis_B_comp<Rat>(alpha);
    }
    return out;
}

} // namespace desalg
