#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "insdel/criterion.hpp"
#include "insdel/finite_field.hpp"
#include "insdel/rs_code.hpp"

namespace insdel {

// ---------------------------------------------------------------------------
// Sidon spaces: S = {u + u^3 gamma : u in F_{3^{2m}}} inside F_{3^{4m}}.
// The map u -> u + u^3 gamma is F_3-linear in characteristic 3, so S is the
// span of the images of a subfield basis.
// ---------------------------------------------------------------------------
struct SidonSpace {
    FieldSpecPtr field;  // ambient F_{3^{4m}}
    int m = 0;
    FieldElement gamma;
    std::vector<FieldElement> basis;  // 2m independent elements spanning S
};

// F_3-basis of the subfield F_{p^sub_d} of the given field, computed as the
// kernel of Frobenius^sub_d - id.
std::vector<FieldElement> subfield_basis(const FieldSpecPtr& field, int sub_d);

// Exhaustive Sidon check over the span of `basis`: for all nonzero a, b, c, d
// in the span with ab = cd, the unordered line pair {aF_p, bF_p} must equal
// {cF_p, dF_p}. Enumerable spans only (cap on span size, default 3^6).
bool is_sidon(const FieldSpecPtr& field, std::span<const FieldElement> basis, u64 cap = 729);

// Seed-ordered search for a gamma making S a Sidon space, verified by
// is_sidon before returning. m <= 3 at desk scale.
SidonSpace construct_sidon(int m, u64 seed);

// ---------------------------------------------------------------------------
// Ternary parity check matrix with every 4 columns independent (the checked
// code has minimum distance >= 5).
// ---------------------------------------------------------------------------
struct ParityMatrix {
    int rows = 0;  // 2m
    int cols = 0;  // (3^m + 1)/2
    std::vector<std::uint8_t> entries;  // row-major, values in {0,1,2}

    std::uint8_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

// Every subset of min(4, cols) distinct columns is F_3-independent.
bool all_quads_independent(const ParityMatrix& h);

// Seeded depth-first search for a 2m x (3^m+1)/2 matrix over F_3 whose every
// 4 columns are independent; exhaustively verified before returning.
ParityMatrix construct_parity_check(int m, u64 seed);

// Every subset of min(4, n) distinct evaluation points is independent over
// the prime subfield (the coefficient vectors are the F_p coordinates).
bool any_four_independent(std::span<const FieldElement> points);

// ---------------------------------------------------------------------------
// Construction of [n,2] codes over F_{3^{4m}}, n = (3^m+1)/2: evaluation
// points alpha_j = sum_i s_i h_{i,j} from a Sidon basis and a parity matrix.
// ---------------------------------------------------------------------------
RSCodeSpec construct_k2(int m, u64 seed);

// ---------------------------------------------------------------------------
// Deterministic construction for general k with evaluation points
// (gamma - i)^ell in F_p[gamma], ell = ((2k)!)^2, p the smallest prime
// exceeding k^2 ell (and >= n). Verification happens in the polynomial ring:
// determinant degrees stay below the extension degree k^2 ell, so ring
// non-vanishing certifies field non-vanishing without ever building the
// degree-k^2 ell extension.
// ---------------------------------------------------------------------------
struct AbcParams {
    int k = 0;
    u64 ell = 0;           // ((2k)!)^2
    u64 p = 0;             // smallest prime > k^2 ell with p >= n
    int n = 0;
    u64 degree_bound = 0;  // k^2 ell
};

// Desk-practical for k = 2 (ell = 576); k >= 3 needs `force` (ell = 518400
// for k = 3 makes every determinant a multi-megabyte polynomial).
std::pair<AbcParams, std::vector<RingPoly>> construct_abc(int k, int n, bool force = false);

VerificationReport verify_abc(const AbcParams& params, std::span<const RingPoly> alphas,
                              const VerifyOptions& opts = {});

// ---------------------------------------------------------------------------
// Las Vegas search: sample distinct evaluation points uniformly until the
// criterion passes. The output, when produced, is always verified.
// ---------------------------------------------------------------------------
struct RandomConstructionResult {
    RSCodeSpec spec;
    u64 attempts = 0;
};

RandomConstructionResult random_construction(int n, int k, u64 q, u64 seed,
                                             u64 max_attempts = 100000);

// Field-size lower bound (1/2) (n / ((2k-1)(k-1)))^{(2k-1)/(k-1)} for codes
// correcting n-2k+1 insdel errors; k >= 2 (DegenerateDimension at k = 1).
double field_size_lower_bound(int n, int k);
// Exact form for k = 2, where the exponent is the integer 3.
Rational field_size_lower_bound_exact(int n, int k);

}  // namespace insdel
