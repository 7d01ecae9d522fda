#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "desalg/json_io.hpp"
#include "desalg/knapsack.hpp"

namespace desalg {

/// Outcome of one mechanically checked claim. A failed check always
/// carries a witness (the offending element, face or polynomial).
struct VerificationReport {
    std::string claim;
    ordered_json params;
    bool pass = true;
    std::string witness;
    long long millis = 0;

    ordered_json to_json() const;
};

/// Thrown when a requested n exceeds the desk-scale bound for a claim.
struct BoundsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// prod_{k in n_alpha(CF)} (B_alpha - k) = 0, evaluated in QS_n.
VerificationReport verify_annihilation_Balpha(const Composition& alpha);

/// w0 B_alpha prod_{k in n_alpha(CF), k != 0} (w0 B_alpha + k)(w0 B_alpha - k) = 0.
VerificationReport verify_annihilation_w0Balpha_long(const Composition& alpha);

/// prod_{k in signed spectrum} (a - k) = 0 for a in {w0 B_alpha, B_alpha w0},
/// plus minimality: dropping any one factor leaves a nonzero product.
VerificationReport verify_annihilation_optimal(const Composition& alpha);

/// mu(w0 B_alpha) = mu(B_alpha w0) = mu(w0~ B~_alpha) = prod (x - k) over
/// the signed spectrum, coefficient for coefficient (Krylov, over Q).
VerificationReport verify_min_poly(const Composition& alpha);

/// Top-to-random: mu(w0 A) = mu(A w0) = prod_{k in L(n)} (x - k), with the
/// antipode cross-check S(A w0) = w0 B_(1,n-1). Requires n > 1.
VerificationReport verify_ttr(int n);

/// mu(w0 A) over F_p. Asserts x(x-1)^2 for (n, p) = (4, 3); otherwise
/// reports the computed polynomial without asserting.
VerificationReport verify_ttr_finite_field(int n, std::uint64_t p);

/// Right multiplication by w0~ B~_alpha on kF: triangular in the canonical
/// face order with diagonal the signed knapsack numbers; kernel-dimension
/// multiplicities match the face counts per value and sum to dim kF.
VerificationReport verify_face_spectrum(const Composition& alpha);

/// The four weighted generalizations for a nonnegative rational gamma:
/// annihilation of B_gamma, annihilation of w0 B_gamma and B_gamma w0,
/// the minimal-polynomial equality, and the face-operator multiplicities.
VerificationReport verify_weighted(const WeightVector& gamma);

/// Alternating sums: sum_G (-1)^l(G) = (-1)^n, and for every face F,
/// sum_{G containing F} (-1)^(n-l(G)) = (-1)^(n-l(F)).
VerificationReport verify_altsum(int n);

/// Bundle of descent-algebra identities: B/D change of basis both ways,
/// the B-expansion of w0, w0 B_I w0 = B_sub(I), Des(w0 s w0) = sub(Des s)
/// exhaustively, the antipode of the top-to-random element, and the
/// orbit-sum basis of the invariant face subalgebra.
VerificationReport verify_descent_combinatorics(int n);

struct SuiteOptions {
    int n = 4;
    std::string claim = "all";
    /// 0 = default desk-scale bounds; otherwise raises the per-claim
    /// default up to its hard cap.
    int max_n_override = 0;
    std::uint64_t p = 3;
    std::optional<WeightVector> gamma;
    std::uint64_t seed = 20240814;
};

const std::vector<std::string>& all_claims();

/// Largest n the claim runs at (default bound, raised by override up to
/// the hard cap). Throws BoundsError from run_suite when exceeded.
int claim_max_n(const std::string& claim, int max_n_override);

/// Deterministic pseudo-random nonnegative weight vector (for the
/// weighted claims and the property suites).
WeightVector random_weight_vector(int n, std::uint64_t seed);

/// Runs the selected claims at the given n, streaming each report to
/// `sink` as it finishes. Composition-parameterized claims run over every
/// alpha of n. Throws BoundsError if n exceeds the claim's bound.
std::vector<VerificationReport> run_suite(
    const SuiteOptions& opts,
    const std::function<void(const VerificationReport&)>& sink = {});

} // namespace desalg
