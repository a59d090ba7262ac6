#include "insdel/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "insdel/rng.hpp"

namespace insdel {

// ---------------------------------------------------------------------------
// Small dense linear algebra over F_p
// ---------------------------------------------------------------------------

namespace {

int modp_rank(std::vector<std::vector<u64>> rows, u64 p) {
    const std::size_t nr = rows.size();
    if (nr == 0) return 0;
    const std::size_t nc = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pivot = rank;
        while (pivot < nr && rows[pivot][col] % p == 0) ++pivot;
        if (pivot == nr) continue;
        std::swap(rows[pivot], rows[rank]);
        const u64 inv = invmod(rows[rank][col], p);
        for (std::size_t c = col; c < nc; ++c) rows[rank][c] = mulmod(rows[rank][c], inv, p);
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == rank || rows[r][col] % p == 0) continue;
            const u64 f = rows[r][col] % p;
            for (std::size_t c = col; c < nc; ++c)
                rows[r][c] = (rows[r][c] + (p - mulmod(f, rows[rank][c], p))) % p;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// Kernel basis of the square matrix (rows) over F_p.
std::vector<std::vector<u64>> modp_kernel(std::vector<std::vector<u64>> rows, u64 p) {
    const std::size_t n = rows.size();
    std::vector<int> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && rows[pivot][col] % p == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(rows[pivot], rows[rank]);
        const u64 inv = invmod(rows[rank][col], p);
        for (std::size_t c = 0; c < n; ++c) rows[rank][c] = mulmod(rows[rank][c], inv, p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || rows[r][col] % p == 0) continue;
            const u64 f = rows[r][col] % p;
            for (std::size_t c = 0; c < n; ++c)
                rows[r][c] = (rows[r][c] + (p - mulmod(f, rows[rank][c], p))) % p;
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<std::vector<u64>> kernel;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<u64> v(n, 0);
        v[free_col] = 1;
        for (std::size_t col = 0; col < free_col; ++col) {
            if (pivot_of_col[col] >= 0) v[col] = (p - rows[pivot_of_col[col]][free_col] % p) % p;
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace

// ---------------------------------------------------------------------------
// Subfield and Sidon spaces
// ---------------------------------------------------------------------------

std::vector<FieldElement> subfield_basis(const FieldSpecPtr& field, int sub_d) {
    const int d = field->d();
    if (sub_d < 1 || d % sub_d != 0) throw Error("subfield degree must divide the field degree");
    const u64 p = field->p();

    // t = Frobenius^sub_d applied to x; column j of the map is t^j
    FieldElement::Coeffs xc(d, 0);
    xc[1 % d] = d > 1 ? 1 : 0;
    FieldElement x = field->element(std::vector<u64>(xc.begin(), xc.end()));
    FieldElement t = x;
    for (int i = 0; i < sub_d; ++i) t = t.pow(p);

    std::vector<std::vector<u64>> m(d, std::vector<u64>(d, 0));  // rows of (Frob^sub_d - I)
    FieldElement tj = field->one();
    for (int j = 0; j < d; ++j) {
        for (int r = 0; r < d; ++r) m[r][j] = tj.coeffs()[r] % p;
        m[j][j] = (m[j][j] + p - 1) % p;
        tj = tj * t;
    }
    auto kernel = modp_kernel(std::move(m), p);
    if (static_cast<int>(kernel.size()) != sub_d)
        throw Error("subfield kernel has unexpected dimension");
    std::vector<FieldElement> basis;
    basis.reserve(sub_d);
    for (auto& v : kernel) basis.push_back(field->element(v));
    return basis;
}

namespace {

// Span of an F_p-basis, deduplicated, as base-p packed element indices.
std::vector<u64> span_indices(const FieldSpecPtr& field, std::span<const FieldElement> basis,
                              u64 cap) {
    const u64 p = field->p();
    u128 count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        count *= p;
        if (count > cap) throw TooLargeToEnumerate("span too large for exhaustive enumeration");
    }
    std::unordered_set<u64> seen;
    std::vector<u64> out;
    std::vector<u64> digits(basis.size(), 0);
    FieldElement cur = field->zero();
    // odometer over F_p^dim, maintaining the running combination
    for (u64 idx = 0;; ++idx) {
        if (seen.insert(cur.to_index()).second) out.push_back(cur.to_index());
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            cur = cur + basis[i];
            if (++digits[i] < p) break;
            digits[i] = 0;
            // cur wrapped past p * basis[i], which equals 0 mod p; continue carry
        }
        if (i == digits.size()) break;
    }
    return out;
}

// Canonical representative of the punctured line {cx : c in F_p^*}.
u64 line_of(const FieldSpecPtr& field, const FieldElement& x) {
    const u64 p = field->p();
    u64 best = x.to_index();
    FieldElement cur = x;
    for (u64 c = 2; c < p; ++c) {
        cur = cur + x;
        best = std::min(best, cur.to_index());
    }
    return best;
}

// Product-grouping Sidon check over an explicit set of nonzero elements.
// Returns false at the first product that appears with two different
// unordered line pairs.
bool sidon_products_consistent(const FieldSpecPtr& field, std::span<const u64> nonzero) {
    std::vector<FieldElement> elems;
    elems.reserve(nonzero.size());
    for (u64 idx : nonzero) elems.push_back(field->element_at(idx));
    std::vector<u64> line(nonzero.size());
    for (std::size_t i = 0; i < nonzero.size(); ++i) line[i] = line_of(field, elems[i]);

    std::unordered_map<u64, std::pair<u64, u64>> groups;
    groups.reserve(nonzero.size() * nonzero.size() / 2);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i; j < elems.size(); ++j) {
            const u64 prod = (elems[i] * elems[j]).to_index();
            const std::pair<u64, u64> lines = std::minmax(line[i], line[j]);
            auto [it, inserted] = groups.emplace(prod, lines);
            if (!inserted && it->second != lines) return false;
        }
    }
    return true;
}

}  // namespace

bool is_sidon(const FieldSpecPtr& field, std::span<const FieldElement> basis, u64 cap) {
    if (!field->order()) throw TooLargeToEnumerate("field order does not fit in 64 bits");
    std::vector<u64> span = span_indices(field, basis, cap);
    std::vector<u64> nonzero;
    nonzero.reserve(span.size());
    for (u64 idx : span)
        if (idx != 0) nonzero.push_back(idx);
    return sidon_products_consistent(field, nonzero);
}

SidonSpace construct_sidon(int m, u64 seed) {
    if (m < 1 || m > 3) throw Error("construct_sidon supports m in {1,2,3}");
    SeededRng rng(seed);
    const u64 mod_seed = rng.fork();
    FieldSpecPtr field = FieldSpec::extension(3, find_irreducible(3, 4 * m, mod_seed));
    const std::vector<FieldElement> sub = subfield_basis(field, 2 * m);
    const u64 q = *field->order();          // 3^{4m}
    const u64 sub_order = powmod(3, 2 * m, UINT64_MAX);  // 3^{2m}, exact

    std::vector<u64> candidates(q);
    for (u64 i = 0; i < q; ++i) candidates[i] = i;
    rng.shuffle(candidates);

    for (u64 idx : candidates) {
        if (idx == 0) continue;
        FieldElement gamma = field->element_at(idx);
        if (gamma.pow(sub_order) == gamma) continue;  // gamma must lie outside F_{3^{2m}}

        std::vector<FieldElement> basis;
        basis.reserve(2 * m);
        std::vector<std::vector<u64>> coeff_rows;
        for (const auto& b : sub) {
            FieldElement s = b + b.pow(3) * gamma;
            coeff_rows.emplace_back(s.coeffs().begin(), s.coeffs().end());
            basis.push_back(std::move(s));
        }
        if (modp_rank(coeff_rows, 3) != 2 * m) continue;

        // cheap necessary condition first: product grouping restricted to a
        // small prefix of the span rejects most bad candidates early
        std::vector<u64> span = span_indices(field, basis, 729);
        std::vector<u64> nonzero;
        for (u64 v : span)
            if (v != 0) nonzero.push_back(v);
        std::sort(nonzero.begin(), nonzero.end());
        const std::size_t prefix = std::min<std::size_t>(nonzero.size(), 64);
        if (!sidon_products_consistent(field, std::span<const u64>(nonzero.data(), prefix)))
            continue;
        if (!sidon_products_consistent(field, nonzero)) continue;

        return SidonSpace{field, m, std::move(gamma), std::move(basis)};
    }
    throw SearchExhausted("no Sidon gamma found (inconsistent with the existence theorem)");
}

// ---------------------------------------------------------------------------
// Parity check matrix over F_3
// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint8_t> decode_base3(u64 idx, int digits) {
    std::vector<std::uint8_t> v(digits);
    for (int i = 0; i < digits; ++i) {
        v[i] = static_cast<std::uint8_t>(idx % 3);
        idx /= 3;
    }
    return v;
}

u64 encode_base3(std::span<const std::uint8_t> v) {
    u64 idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * 3 + v[i];
    return idx;
}

// Marks every F_3-combination of <= 3 of the chosen columns.
std::vector<bool> forbidden_set(const std::vector<std::vector<std::uint8_t>>& cols, int dim) {
    u64 size = 1;
    for (int i = 0; i < dim; ++i) size *= 3;
    std::vector<bool> forbidden(size, false);
    forbidden[0] = true;
    const std::size_t j = cols.size();
    std::vector<std::uint8_t> sum(dim);
    auto mark_combo = [&](std::initializer_list<std::pair<std::size_t, int>> terms) {
        std::fill(sum.begin(), sum.end(), 0);
        for (auto [c, coef] : terms)
            for (int t = 0; t < dim; ++t) sum[t] = static_cast<std::uint8_t>((sum[t] + coef * cols[c][t]) % 3);
        forbidden[encode_base3(sum)] = true;
    };
    for (std::size_t a = 0; a < j; ++a) {
        for (int ca = 1; ca <= 2; ++ca) {
            mark_combo({{a, ca}});
            for (std::size_t b = a + 1; b < j; ++b) {
                for (int cb = 1; cb <= 2; ++cb) {
                    mark_combo({{a, ca}, {b, cb}});
                    for (std::size_t c = b + 1; c < j; ++c) {
                        for (int cc = 1; cc <= 2; ++cc) mark_combo({{a, ca}, {b, cb}, {c, cc}});
                    }
                }
            }
        }
    }
    return forbidden;
}

bool parity_dfs(std::vector<std::vector<std::uint8_t>>& cols, int need, int dim,
                const std::vector<u64>& order, u64& nodes_left) {
    if (static_cast<int>(cols.size()) == need) return true;
    if (nodes_left == 0) return false;
    const std::vector<bool> forbidden = forbidden_set(cols, dim);
    for (u64 cand : order) {
        if (forbidden[cand]) continue;
        if (nodes_left == 0) return false;
        --nodes_left;
        cols.push_back(decode_base3(cand, dim));
        if (parity_dfs(cols, need, dim, order, nodes_left)) return true;
        cols.pop_back();
    }
    return false;
}

}  // namespace

bool all_quads_independent(const ParityMatrix& h) {
    const int t = std::min(4, h.cols);
    std::vector<int> sel(t);
    for (int i = 0; i < t; ++i) sel[i] = i;
    for (;;) {
        // every nontrivial F_3 combination of the selected columns is nonzero
        u64 combos = 1;
        for (int i = 0; i < t; ++i) combos *= 3;
        for (u64 c = 1; c < combos; ++c) {
            auto coefs = decode_base3(c, t);
            bool zero = true;
            for (int r = 0; r < h.rows && zero; ++r) {
                int acc = 0;
                for (int i = 0; i < t; ++i) acc += coefs[i] * h.at(r, sel[i]);
                if (acc % 3 != 0) zero = false;
            }
            if (zero) return false;
        }
        int i = t - 1;
        while (i >= 0 && sel[i] == h.cols - (t - i)) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < t; ++j) sel[j] = sel[j - 1] + 1;
    }
    return true;
}

ParityMatrix construct_parity_check(int m, u64 seed) {
    if (m < 1 || m > 3) throw Error("construct_parity_check supports m in {1,2,3}");
    const int dim = 2 * m;
    u64 universe = 1;
    for (int i = 0; i < dim; ++i) universe *= 3;
    const int n = (static_cast<int>(powmod(3, m, UINT64_MAX)) + 1) / 2;

    SeededRng rng(seed);
    for (int restart = 0; restart < 64; ++restart) {
        std::vector<u64> order;
        order.reserve(universe - 1);
        for (u64 v = 1; v < universe; ++v) order.push_back(v);
        rng.shuffle(order);

        std::vector<std::vector<std::uint8_t>> cols;
        u64 nodes_left = 2'000'000;
        if (parity_dfs(cols, n, dim, order, nodes_left)) {
            ParityMatrix h;
            h.rows = dim;
            h.cols = n;
            h.entries.resize(static_cast<std::size_t>(dim) * n);
            for (int c = 0; c < n; ++c)
                for (int r = 0; r < dim; ++r) h.entries[static_cast<std::size_t>(r) * n + c] = cols[c][r];
            if (!all_quads_independent(h))
                throw Error("parity search produced a dependent quadruple (internal bug)");
            return h;
        }
    }
    throw SearchExhausted("no parity matrix with independent quadruples found");
}

bool any_four_independent(std::span<const FieldElement> points) {
    if (points.empty()) return true;
    const u64 p = points[0].spec().p();
    const int d = points[0].spec().d();
    const int t = std::min<std::size_t>(4, points.size());
    std::vector<int> sel(t);
    for (int i = 0; i < t; ++i) sel[i] = i;
    for (;;) {
        u64 combos = 1;
        for (int i = 0; i < t; ++i) combos *= p;
        for (u64 c = 1; c < combos; ++c) {
            u64 rest = c;
            std::vector<u64> coefs(t);
            for (int i = 0; i < t; ++i) {
                coefs[i] = rest % p;
                rest /= p;
            }
            bool zero = true;
            for (int r = 0; r < d && zero; ++r) {
                u64 acc = 0;
                for (int i = 0; i < t; ++i) acc += coefs[i] * points[sel[i]].coeffs()[r] % p;
                if (acc % p != 0) zero = false;
            }
            if (zero) return false;
        }
        int i = t - 1;
        while (i >= 0 && sel[i] == static_cast<int>(points.size()) - (t - i)) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < t; ++j) sel[j] = sel[j - 1] + 1;
    }
    return true;
}

RSCodeSpec construct_k2(int m, u64 seed) {
    if (m < 2 || m > 3)
        throw Error("construct_k2 supports m in {2,3} (m=1 gives n=2 < 2k-1)");
    SeededRng rng(seed);
    const u64 sidon_seed = rng.fork();
    const u64 parity_seed = rng.fork();
    const SidonSpace sidon = construct_sidon(m, sidon_seed);
    const ParityMatrix h = construct_parity_check(m, parity_seed);

    const int n = h.cols;
    std::vector<FieldElement> alphas;
    alphas.reserve(n);
    for (int j = 0; j < n; ++j) {
        FieldElement a = sidon.field->zero();
        for (int i = 0; i < h.rows; ++i) a = a + sidon.basis[i].scaled(h.at(i, j));
        alphas.push_back(std::move(a));
    }
    return RSCodeSpec::make(sidon.field, n, 2, std::move(alphas));
}

// ---------------------------------------------------------------------------
// Construction with evaluation points (gamma - i)^ell
// ---------------------------------------------------------------------------

std::pair<AbcParams, std::vector<RingPoly>> construct_abc(int k, int n, bool force) {
    if (k < 1) throw Error("dimension must be >= 1");
    if (k >= 3 && !force)
        throw WorkCapExceeded("k >= 3 gives ell >= 518400; pass force to override");

    u64 fact = 1;
    for (int i = 2; i <= 2 * k; ++i) fact *= i;
    const u64 ell = fact * fact;
    const u64 degree_bound = static_cast<u64>(k) * k * ell;

    if (2 * k - 1 >= n) throw Error("need 2k-1 < n");

    u64 p = std::max<u64>(degree_bound + 1, static_cast<u64>(n));
    while (!is_prime(p)) ++p;

    std::vector<RingPoly> alphas;
    alphas.reserve(n);
    for (int i = 1; i <= n; ++i) {
        const RingPoly base(p, {(p - static_cast<u64>(i)) % p, 1});  // gamma - i
        alphas.push_back(base.pow(ell));
    }
    return {AbcParams{k, ell, p, n, degree_bound}, std::move(alphas)};
}

VerificationReport verify_abc(const AbcParams& params, std::span<const RingPoly> alphas,
                              const VerifyOptions& opts) {
    if (static_cast<int>(alphas.size()) != params.n)
        throw Error("evaluation point count differs from n");
    return verify_ring_code(alphas, params.k, params.degree_bound, opts);
}

// ---------------------------------------------------------------------------
// Las Vegas search
// ---------------------------------------------------------------------------

namespace {

u64 smallest_prime_factor(u64 q) {
    if (q % 2 == 0) return 2;
    for (u64 i = 3; i * i <= q; i += 2)
        if (q % i == 0) return i;
    return q;
}

}  // namespace

RandomConstructionResult random_construction(int n, int k, u64 q, u64 seed, u64 max_attempts) {
    if (k < 1 || 2 * k - 1 > n) throw Error("need 1 <= k and 2k-1 <= n");
    if (q < static_cast<u64>(n)) throw Error("need q >= n distinct evaluation points");

    const u64 p = smallest_prime_factor(q);
    int d = 0;
    u64 rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++d;
    }
    if (rest != 1) throw Error("q must be a prime power");

    SeededRng rng(seed);
    FieldSpecPtr field =
        d == 1 ? FieldSpec::prime(p) : FieldSpec::extension(p, find_irreducible(p, d, rng.fork()));

    for (u64 attempt = 1; attempt <= max_attempts; ++attempt) {
        std::unordered_set<u64> chosen;
        std::vector<FieldElement> alphas;
        alphas.reserve(n);
        while (alphas.size() < static_cast<std::size_t>(n)) {
            const u64 idx = rng.below(q);
            if (chosen.insert(idx).second) alphas.push_back(field->element_at(idx));
        }
        RSCodeSpec spec = RSCodeSpec::make(field, n, k, std::move(alphas));
        if (verify_code(spec).pass) return RandomConstructionResult{std::move(spec), attempt};
    }
    throw AttemptsExhausted("no verified evaluation vector within the attempt budget");
}

double field_size_lower_bound(int n, int k) {
    if (k < 2) throw DegenerateDimension("bound requires k >= 2");
    const double base = static_cast<double>(n) / ((2.0 * k - 1) * (k - 1));
    const double expo = (2.0 * k - 1) / (k - 1);
    return 0.5 * std::pow(base, expo);
}

Rational field_size_lower_bound_exact(int n, int k) {
    if (k != 2) throw Error("exact bound available for k = 2 only (integer exponent)");
    const long long nn = n;
    return Rational(nn * nn * nn, 54);  // (1/2) (n/3)^3
}

}  // namespace insdel
