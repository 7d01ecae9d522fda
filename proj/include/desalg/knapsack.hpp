#pragma once

#include <map>
#include <vector>

#include "desalg/face_monoid.hpp"
#include "desalg/scalar.hpp"

namespace desalg {

/// All faces of the given type, in canonical face order. Cached per type.
const std::vector<Face>& faces_of_type(const Composition& alpha);

/// N_alpha(F): the faces G of type alpha with F contained in G.
std::vector<Face> knapsack_witnesses(const Composition& alpha, const Face& F);

/// n_alpha(F) = |N_alpha(F)|, computed from the definition (type filter
/// plus containment). This is the reference everything else is checked
/// against.
long long knapsack_number(const Composition& alpha, const Face& F);

/// Same number by the bag-packing interpretation: distribute the blocks
/// of F into bags of sizes alpha_1,...,alpha_k. Cross-checked against
/// knapsack_number in the tests.
long long knapsack_number_packing(const Composition& alpha, const Face& F);

/// Signed knapsack number (-1)^(n - l(F)) * n_alpha(F).
long long signed_knapsack(const Composition& alpha, const Face& F);

/// n_alpha over all faces, aligned with the canonical FaceBasis order.
/// Cached per alpha.
const std::vector<long long>& knapsack_values(const Composition& alpha);

/// Signed values in FaceBasis order (not cached; derived from the cache).
std::vector<long long> signed_knapsack_values(const Composition& alpha);

/// Distinct knapsack numbers n_alpha(CF), sorted ascending.
std::vector<long long> knapsack_spectrum(const Composition& alpha);

/// Distinct signed knapsack numbers, sorted ascending.
std::vector<long long> signed_spectrum(const Composition& alpha);

/// The sorted ladder k_0 < ... < k_m of the knapsack filtration
/// (identical to knapsack_spectrum; named for the filtration).
std::vector<long long> filtration_ladder(const Composition& alpha);

/// Index i with n_alpha(F) = k_i in the ladder.
int filtration_level(const Composition& alpha, const Face& F);

/// Number of singleton blocks of F; equals n_{(1,n-1)}(F).
int singleton_count(const Face& F);

/// The closed-form set {-n+2} u [-n+4, n-3] u {0} u {n} (requires n > 1).
/// Equals signed_spectrum((1, n-1)) — asserted by the verification suite.
std::vector<long long> L_set(int n);

/// Nonnegative rational weights gamma_alpha indexed by compositions of n;
/// missing compositions weigh 0.
struct WeightVector {
    int n = 0;
    std::map<Composition, Rat> weights;

    WeightVector() = default;
    WeightVector(int n_, std::map<Composition, Rat> w);

    Rat weight(const Composition& alpha) const {
        auto it = weights.find(alpha);
        return it == weights.end() ? Rat::zero() : it->second;
    }
};

/// n_gamma(F) = sum_alpha gamma_alpha n_alpha(F).
Rat weighted_knapsack(const WeightVector& gamma, const Face& F);

/// (-1)^(n - l(F)) * n_gamma(F).
Rat weighted_signed(const WeightVector& gamma, const Face& F);

/// Weighted values for all faces in FaceBasis order.
std::vector<Rat> weighted_knapsack_values(const WeightVector& gamma);
std::vector<Rat> weighted_signed_values(const WeightVector& gamma);

/// Distinct weighted (signed) knapsack numbers, sorted ascending.
std::vector<Rat> weighted_spectrum(const WeightVector& gamma);
std::vector<Rat> weighted_signed_spectrum(const WeightVector& gamma);

} // namespace desalg
