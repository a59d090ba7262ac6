#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "insdel/finite_field.hpp"
#include "insdel/rs_code.hpp"

namespace insdel {

// Strictly increasing tuple of 1-based coordinate indices; the coordinate
// system of every candidate common-subsequence alignment.
using IncreasingVector = std::vector<int>;

// All C(n,s) increasing vectors over [1,n], lexicographic.
std::vector<IncreasingVector> increasing_vectors(int n, int s);

// #{i : I_i == J_i}.
int agreement_count(const IncreasingVector& I, const IncreasingVector& J);

// For two increasing vectors of equal length s >= 2 that agree on no
// coordinate, returns 1-based indices (i, j), i != j, with I_i absent from J
// and J_j absent from I. Such indices always exist: whichever vector has the
// smaller first coordinate contributes it, and the other vector must contain
// an element outside the first one at a different index.
std::pair<int, int> find_disjoint_pair(const IncreasingVector& I, const IncreasingVector& J);

// Row r of the (2k-1)x(2k-1) criterion matrix:
//   (1, a_{I_r}, ..., a_{I_r}^{k-1}, a_{J_r}, ..., a_{J_r}^{k-1}).
// For k = 1 this is the 1x1 matrix (1).
std::vector<std::vector<FieldElement>> build_matrix(std::span<const FieldElement> alphas,
                                                    const IncreasingVector& I,
                                                    const IncreasingVector& J, int k);
std::vector<std::vector<RingPoly>> build_ring_matrix(std::span<const RingPoly> alphas,
                                                     const IncreasingVector& I,
                                                     const IncreasingVector& J, int k);

// Exact determinant by Gaussian elimination with field inverses.
FieldElement determinant(std::vector<std::vector<FieldElement>> m);
// Exact determinant by fraction-free Bareiss elimination; divisions are exact
// in F_p[x], so no ring division is ever needed.
RingPoly ring_determinant(std::vector<std::vector<RingPoly>> m);

struct VerifyOptions {
    // Scan pairs in lexicographic order on a single thread; first_failure is
    // then reproducible.
    bool deterministic = false;
    // Keep scanning past the first singular pair and collect all failures.
    bool collect_all = false;
    // OpenMP worker count; 0 = runtime default, 1 = serial reference path.
    int jobs = 0;
    // For k = 2 test singularity via the cross-ratio identity
    // (y1-y2)(x2-x3) = (y2-y3)(x1-x2) instead of the generic determinant.
    bool k2_fast_path = true;
};

struct VerificationReport {
    bool pass = false;
    // Ordered qualifying pairs covered; each evaluated unordered pair counts
    // twice since det(V_{I,J}) and det(V_{J,I}) vanish together.
    std::uint64_t pairs_checked = 0;
    std::optional<std::pair<IncreasingVector, IncreasingVector>> first_failure;
    std::vector<std::pair<IncreasingVector, IncreasingVector>> failures;  // collect_all only
    std::int64_t elapsed_ms = 0;
};

// Exhaustive criterion check: pass iff det(V_{I,J}(alpha)) != 0 for every
// pair of increasing vectors I != J in [n]^{2k-1} agreeing on at most k-1
// coordinates. Pairs agreeing on >= k coordinates need no check (equal
// restrictions there force f = g).
VerificationReport verify_code(const RSCodeSpec& code, const VerifyOptions& opts = {});

// Same scan with evaluation points in F_p[x]: pass iff every qualifying
// determinant is the nonzero polynomial. Non-vanishing of a polynomial in
// gamma of degree < degree_bound certifies non-vanishing in any extension
// field of degree degree_bound over F_p; the structural degree bound
// max_deg(alpha) * k(k-1) must stay below degree_bound or the certificate is
// invalid (DegreeOverflow).
VerificationReport verify_ring_code(std::span<const RingPoly> alphas, int k, u64 degree_bound,
                                    const VerifyOptions& opts = {});

// Multivariate polynomial over the integers in the variables {X_l}, keyed by
// sorted (variable, exponent) maps. Coefficients stay below (2k-1)!.
struct SymbolicPoly {
    using Monomial = std::vector<std::pair<int, int>>;

    std::map<Monomial, long long> terms;

    bool is_zero() const { return terms.empty(); }
    bool has_unit_coefficient() const;

    FieldElement eval(std::span<const FieldElement> alphas) const;
    RingPoly eval_ring(std::span<const RingPoly> alphas) const;
};

// Exact expansion of det(V_{I,J}(X)) over the (2k-1)! permutations; k <= 3
// (DimensionTooLarge above). For qualifying pairs the result is nonzero and
// contains a monomial with coefficient +-1.
SymbolicPoly symbolic_determinant(const IncreasingVector& I, const IncreasingVector& J, int k);

}  // namespace insdel
