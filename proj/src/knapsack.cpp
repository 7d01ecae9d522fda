#include "desalg/knapsack.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace desalg {

const std::vector<Face>& faces_of_type(const Composition& alpha) {
    static std::mutex mu;
    static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<std::vector<Face>>> cache;
    const auto key = std::make_pair(alpha.n(), alpha.parts);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto v = std::make_unique<std::vector<Face>>();
        for (const Face& f : FaceBasis::get(alpha.n()).faces())
            if (f.type() == alpha) v->push_back(f);
        it = cache.emplace(key, std::move(v)).first;
    }
    return *it->second;
}

std::vector<Face> knapsack_witnesses(const Composition& alpha, const Face& F) {
    if (alpha.n() != F.n())
        throw std::invalid_argument("knapsack_witnesses: ambient size mismatch");
    std::vector<Face> out;
    for (const Face& G : faces_of_type(alpha))
        if (contains(F, G)) out.push_back(G);
    return out;
}

long long knapsack_number(const Composition& alpha, const Face& F) {
    if (alpha.n() != F.n())
        throw std::invalid_argument("knapsack_number: ambient size mismatch");
    long long c = 0;
    for (const Face& G : faces_of_type(alpha))
        if (contains(F, G)) ++c;
    return c;
}

namespace {

// Ordered-bag packing count. The bag index is recoverable from the sum of
// the remaining blocks (parts are positive, so prefix sums are distinct),
// which lets us memoize on the remaining-block mask alone.
long long packing_rec(const std::vector<int>& sizes, const std::vector<int>& alpha,
                      std::uint32_t remaining, int bag,
                      std::unordered_map<std::uint32_t, long long>& memo) {
    const int k = static_cast<int>(alpha.size());
    if (bag == k) return remaining == 0 ? 1 : 0;
    auto it = memo.find(remaining);
    if (it != memo.end()) return it->second;
    long long total = 0;
    const int need = alpha[bag];
    // enumerate submasks of `remaining` whose sizes sum to `need`
    for (std::uint32_t s = remaining;; s = (s - 1) & remaining) {
        int sum = 0;
        for (std::uint32_t t = s; t; t &= t - 1) sum += sizes[__builtin_ctz(t)];
        if (sum == need) total += packing_rec(sizes, alpha, remaining & ~s, bag + 1, memo);
        if (s == 0) break;
    }
    memo.emplace(remaining, total);
    return total;
}

} // namespace

long long knapsack_number_packing(const Composition& alpha, const Face& F) {
    if (alpha.n() != F.n())
        throw std::invalid_argument("knapsack_number_packing: ambient size mismatch");
    std::vector<int> sizes;
    sizes.reserve(F.length());
    for (std::uint32_t b : F.blocks()) sizes.push_back(__builtin_popcount(b));
    std::unordered_map<std::uint32_t, long long> memo;
    const std::uint32_t all = F.length() == 0 ? 0u : ((1u << F.length()) - 1u);
    return packing_rec(sizes, alpha.parts, all, 0, memo);
}

long long signed_knapsack(const Composition& alpha, const Face& F) {
    const long long v = knapsack_number(alpha, F);
    return ((F.n() - F.length()) % 2 == 0) ? v : -v;
}

const std::vector<long long>& knapsack_values(const Composition& alpha) {
    static std::mutex mu;
    static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<std::vector<long long>>>
        cache;
    const auto key = std::make_pair(alpha.n(), alpha.parts);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const int n = alpha.n();
        const FaceBasis& basis = FaceBasis::get(n);
        auto v = std::make_unique<std::vector<long long>>(basis.size(), 0);
        // Same type-filter-plus-containment count as knapsack_number, with
        // the loops swapped: for each witness G, a per-element table of its
        // containing block makes "F contained in G" a walk over F's blocks.
        std::array<std::uint32_t, kMaxN> block_of{};
        for (const Face& G : faces_of_type(alpha)) {
            for (std::uint32_t g : G.blocks())
                for (std::uint32_t t = g; t; t &= t - 1) block_of[__builtin_ctz(t)] = g;
            for (int i = 0; i < basis.size(); ++i) {
                bool inside = true;
                for (std::uint32_t f : basis.face(i).blocks())
                    if (f & ~block_of[__builtin_ctz(f)]) {
                        inside = false;
                        break;
                    }
                if (inside) ++(*v)[i];
            }
        }
        it = cache.emplace(key, std::move(v)).first;
    }
    return *it->second;
}

std::vector<long long> signed_knapsack_values(const Composition& alpha) {
    const FaceBasis& basis = FaceBasis::get(alpha.n());
    const auto& vals = knapsack_values(alpha);
    std::vector<long long> out(vals.size());
    for (int i = 0; i < basis.size(); ++i) {
        const Face& F = basis.face(i);
        out[i] = ((F.n() - F.length()) % 2 == 0) ? vals[i] : -vals[i];
    }
    return out;
}

namespace {

std::vector<long long> sorted_distinct(const std::vector<long long>& v) {
    std::set<long long> s(v.begin(), v.end());
    return std::vector<long long>(s.begin(), s.end());
}

} // namespace

std::vector<long long> knapsack_spectrum(const Composition& alpha) {
    return sorted_distinct(knapsack_values(alpha));
}

std::vector<long long> signed_spectrum(const Composition& alpha) {
    return sorted_distinct(signed_knapsack_values(alpha));
}

std::vector<long long> filtration_ladder(const Composition& alpha) {
    return knapsack_spectrum(alpha);
}

int filtration_level(const Composition& alpha, const Face& F) {
    const auto ladder = filtration_ladder(alpha);
    const long long v = knapsack_number(alpha, F);
    const auto it = std::lower_bound(ladder.begin(), ladder.end(), v);
    return static_cast<int>(it - ladder.begin());
}

int singleton_count(const Face& F) { return F.singleton_count(); }

std::vector<long long> L_set(int n) {
    if (n <= 1) throw std::invalid_argument("L_set: requires n > 1");
    std::set<long long> s;
    s.insert(-n + 2);
    for (long long k = -n + 4; k <= n - 3; ++k) s.insert(k);
    s.insert(0);
    s.insert(n);
    return std::vector<long long>(s.begin(), s.end());
}

WeightVector::WeightVector(int n_, std::map<Composition, Rat> w)
    : n(n_), weights(std::move(w)) {
    check_n(n);
    for (const auto& [alpha, c] : weights) {
        if (alpha.n() != n)
            throw std::invalid_argument("WeightVector: composition " + alpha.str() +
                                        " is not a composition of " + std::to_string(n));
        if (c.sign() < 0)
            throw std::invalid_argument("WeightVector: negative weight for " + alpha.str());
    }
}

Rat weighted_knapsack(const WeightVector& gamma, const Face& F) {
    if (gamma.n != F.n()) throw std::invalid_argument("weighted_knapsack: size mismatch");
    const int idx = FaceBasis::get(F.n()).index(F);
    Rat out;
    for (const auto& [alpha, c] : gamma.weights) {
        if (c.is_zero()) continue;
        out += c * Rat(knapsack_values(alpha)[idx]);
    }
    return out;
}

Rat weighted_signed(const WeightVector& gamma, const Face& F) {
    const Rat v = weighted_knapsack(gamma, F);
    return ((F.n() - F.length()) % 2 == 0) ? v : -v;
}

std::vector<Rat> weighted_knapsack_values(const WeightVector& gamma) {
    const FaceBasis& basis = FaceBasis::get(gamma.n);
    std::vector<Rat> out(basis.size(), Rat::zero());
    for (const auto& [alpha, c] : gamma.weights) {
        if (c.is_zero()) continue;
        const auto& vals = knapsack_values(alpha);
        for (int i = 0; i < basis.size(); ++i) out[i] += c * Rat(vals[i]);
    }
    return out;
}

std::vector<Rat> weighted_signed_values(const WeightVector& gamma) {
    const FaceBasis& basis = FaceBasis::get(gamma.n);
    std::vector<Rat> out = weighted_knapsack_values(gamma);
    for (int i = 0; i < basis.size(); ++i)
        if ((basis.face(i).n() - basis.face(i).length()) % 2 != 0) out[i] = -out[i];
    return out;
}

namespace {

std::vector<Rat> sorted_distinct(std::vector<Rat> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::vector<Rat> weighted_spectrum(const WeightVector& gamma) {
    return sorted_distinct(weighted_knapsack_values(gamma));
}

std::vector<Rat> weighted_signed_spectrum(const WeightVector& gamma) {
    return sorted_distinct(weighted_signed_values(gamma));
}

} // namespace desalg
