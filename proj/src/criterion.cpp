#include "insdel/criterion.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>

namespace insdel {

std::vector<IncreasingVector> increasing_vectors(int n, int s) {
    if (s < 0 || s > n) return {};
    std::vector<IncreasingVector> out;
    IncreasingVector cur(s);
    for (int i = 0; i < s; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        int i = s - 1;
        while (i >= 0 && cur[i] == n - (s - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (s == 0) out.assign(1, {});
    return out;
}

int agreement_count(const IncreasingVector& I, const IncreasingVector& J) {
    if (I.size() != J.size()) throw LengthMismatch("increasing vectors of different lengths");
    int c = 0;
    for (std::size_t i = 0; i < I.size(); ++i)
        if (I[i] == J[i]) ++c;
    return c;
}

static bool contains(const IncreasingVector& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

std::pair<int, int> find_disjoint_pair(const IncreasingVector& I, const IncreasingVector& J) {
    const int s = static_cast<int>(I.size());
    if (s < 2 || static_cast<int>(J.size()) != s)
        throw Error("find_disjoint_pair needs equal lengths >= 2");
    if (agreement_count(I, J) != 0) throw Error("find_disjoint_pair requires zero agreement");
    if (I[0] < J[0]) {
        // I_1 < J_1 <= every J_t, so I_1 is not in J
        for (int t = 1; t < s; ++t) {
            if (!contains(I, J[t])) return {1, t + 1};
        }
    } else {
        for (int t = 1; t < s; ++t) {
            if (!contains(J, I[t])) return {t + 1, 1};
        }
    }
    throw Error("find_disjoint_pair: no witness found (violated precondition)");
}

template <class T, class MakeOne, class Mul>
static std::vector<std::vector<T>> build_matrix_impl(std::span<const T> alphas,
                                                     const IncreasingVector& I,
                                                     const IncreasingVector& J, int k,
                                                     MakeOne one, Mul mul) {
    const int s = 2 * k - 1;
    if (static_cast<int>(I.size()) != s || static_cast<int>(J.size()) != s)
        throw LengthMismatch("index vectors must have length 2k-1");
    for (int v : I)
        if (v < 1 || static_cast<std::size_t>(v) > alphas.size())
            throw IndexOutOfRange("index outside [1, n]");
    for (int v : J)
        if (v < 1 || static_cast<std::size_t>(v) > alphas.size())
            throw IndexOutOfRange("index outside [1, n]");

    std::vector<std::vector<T>> m(s);
    for (int r = 0; r < s; ++r) {
        m[r].reserve(s);
        m[r].push_back(one());
        const T& xi = alphas[I[r] - 1];
        T acc = xi;
        for (int j = 1; j < k; ++j) {
            m[r].push_back(acc);
            if (j + 1 < k) acc = mul(acc, xi);
        }
        const T& xj = alphas[J[r] - 1];
        acc = xj;
        for (int j = 1; j < k; ++j) {
            m[r].push_back(acc);
            if (j + 1 < k) acc = mul(acc, xj);
        }
    }
    return m;
}

std::vector<std::vector<FieldElement>> build_matrix(std::span<const FieldElement> alphas,
                                                    const IncreasingVector& I,
                                                    const IncreasingVector& J, int k) {
    const FieldSpec& fs = alphas[0].spec();
    return build_matrix_impl<FieldElement>(
        alphas, I, J, k, [&] { return fs.one(); },
        [](const FieldElement& a, const FieldElement& b) { return a * b; });
}

std::vector<std::vector<RingPoly>> build_ring_matrix(std::span<const RingPoly> alphas,
                                                     const IncreasingVector& I,
                                                     const IncreasingVector& J, int k) {
    u64 p = 0;
    for (const auto& a : alphas)
        if (!a.is_zero()) p = a.characteristic();
    if (p == 0) throw Error("cannot infer characteristic from all-zero points");
    return build_matrix_impl<RingPoly>(
        alphas, I, J, k, [&] { return RingPoly::constant(p, 1); },
        [](const RingPoly& a, const RingPoly& b) { return a * b; });
}

FieldElement determinant(std::vector<std::vector<FieldElement>> m) {
    const std::size_t s = m.size();
    const FieldSpec& fs = m[0][0].spec();
    FieldElement det = fs.one();
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t pivot = col;
        while (pivot < s && m[pivot][col].is_zero()) ++pivot;
        if (pivot == s) return fs.zero();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        const FieldElement inv = m[col][col].inv();
        for (std::size_t r = col + 1; r < s; ++r) {
            if (m[r][col].is_zero()) continue;
            const FieldElement f = m[r][col] * inv;
            for (std::size_t c = col; c < s; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return det;
}

RingPoly ring_determinant(std::vector<std::vector<RingPoly>> m) {
    const std::size_t s = m.size();
    u64 p = 0;
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) p = e.characteristic();
    if (p == 0) return RingPoly();  // a zero row exists, determinant is zero

    int sign = 1;
    RingPoly prev_pivot = RingPoly::constant(p, 1);
    for (std::size_t col = 0; col + 1 < s; ++col) {
        std::size_t pivot = col;
        while (pivot < s && m[pivot][col].is_zero()) ++pivot;
        if (pivot == s) return RingPoly::zero(p);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (std::size_t r = col + 1; r < s; ++r) {
            for (std::size_t c = col + 1; c < s; ++c) {
                RingPoly num = m[col][col] * m[r][c] - m[r][col] * m[col][c];
                m[r][c] = ring_divexact(num, prev_pivot);
            }
            m[r][col] = RingPoly::zero(p);
        }
        prev_pivot = m[col][col];
    }
    RingPoly det = m[s - 1][s - 1];
    if (sign < 0) det = RingPoly::zero(p) - det;
    return det;
}

// ---------------------------------------------------------------------------
// Exhaustive pair scan
// ---------------------------------------------------------------------------

namespace {

struct PairSpace {
    std::vector<IncreasingVector> vectors;
    // Unordered qualifying pairs (indices into `vectors`); each stands for
    // both (I,J) and (J,I) since singularity is symmetric in the two roles.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

PairSpace qualifying_pairs(int n, int k) {
    PairSpace ps;
    ps.vectors = increasing_vectors(n, 2 * k - 1);
    const std::size_t v = ps.vectors.size();
    for (std::size_t a = 0; a < v; ++a) {
        for (std::size_t b = a + 1; b < v; ++b) {
            if (agreement_count(ps.vectors[a], ps.vectors[b]) <= k - 1)
                ps.pairs.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        }
    }
    return ps;
}

// Generic scan driver shared by the field and ring verifiers. `singular`
// must be a pure predicate on a qualifying (I,J) pair.
template <class Singular>
VerificationReport scan_pairs(const PairSpace& ps, const VerifyOptions& opts, Singular singular) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    const std::size_t total = ps.pairs.size();

    std::vector<std::size_t> failed;  // indices into ps.pairs
    std::uint64_t examined = 0;

    const bool serial = opts.deterministic || opts.jobs == 1;
    if (serial) {
        for (std::size_t t = 0; t < total; ++t) {
            ++examined;
            const auto [a, b] = ps.pairs[t];
            if (singular(ps.vectors[a], ps.vectors[b])) {
                failed.push_back(t);
                if (!opts.collect_all) break;
            }
        }
    } else {
        if (opts.jobs > 0) omp_set_num_threads(opts.jobs);
        std::atomic<bool> stop{false};
        std::atomic<std::uint64_t> count{0};
#pragma omp parallel
        {
            std::vector<std::size_t> local;
#pragma omp for schedule(dynamic, 64)
            for (std::int64_t t = 0; t < static_cast<std::int64_t>(total); ++t) {
                if (!opts.collect_all && stop.load(std::memory_order_relaxed)) continue;
                count.fetch_add(1, std::memory_order_relaxed);
                const auto [a, b] = ps.pairs[t];
                if (singular(ps.vectors[a], ps.vectors[b])) {
                    local.push_back(t);
                    if (!opts.collect_all) stop.store(true, std::memory_order_relaxed);
                }
            }
#pragma omp critical
            failed.insert(failed.end(), local.begin(), local.end());
        }
        std::sort(failed.begin(), failed.end());
        examined = count.load();
    }

    rep.pass = failed.empty();
    rep.pairs_checked = 2 * examined;
    if (!failed.empty()) {
        const auto [a, b] = ps.pairs[failed.front()];
        rep.first_failure = {ps.vectors[a], ps.vectors[b]};
        if (opts.collect_all) {
            for (std::size_t t : failed) {
                const auto [x, y] = ps.pairs[t];
                rep.failures.emplace_back(ps.vectors[x], ps.vectors[y]);
            }
        }
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

}  // namespace

VerificationReport verify_code(const RSCodeSpec& code, const VerifyOptions& opts) {
    const int k = code.k;
    if (k == 1) {
        // Every criterion matrix is the 1x1 matrix (1); nothing can fail.
        VerificationReport rep;
        rep.pass = true;
        rep.pairs_checked = static_cast<std::uint64_t>(code.n) * (code.n - 1);
        return rep;
    }

    const PairSpace ps = qualifying_pairs(code.n, k);
    std::span<const FieldElement> alphas(code.alphas);

    if (k == 2 && opts.k2_fast_path) {
        // det of [[1,x1,y1],[1,x2,y2],[1,x3,y3]] vanishes iff
        // (y1-y2)(x2-x3) == (y2-y3)(x1-x2)
        return scan_pairs(ps, opts, [&](const IncreasingVector& I, const IncreasingVector& J) {
            const FieldElement& x1 = alphas[I[0] - 1];
            const FieldElement& x2 = alphas[I[1] - 1];
            const FieldElement& x3 = alphas[I[2] - 1];
            const FieldElement& y1 = alphas[J[0] - 1];
            const FieldElement& y2 = alphas[J[1] - 1];
            const FieldElement& y3 = alphas[J[2] - 1];
            return (y1 - y2) * (x2 - x3) == (y2 - y3) * (x1 - x2);
        });
    }
    return scan_pairs(ps, opts, [&](const IncreasingVector& I, const IncreasingVector& J) {
        return determinant(build_matrix(alphas, I, J, k)).is_zero();
    });
}

VerificationReport verify_ring_code(std::span<const RingPoly> alphas, int k, u64 degree_bound,
                                    const VerifyOptions& opts) {
    if (k < 1) throw Error("dimension must be >= 1");
    const int n = static_cast<int>(alphas.size());
    if (2 * k - 1 > n) throw Error("need 2k-1 <= n evaluation points");

    // Certificate validity: the determinant degree can reach
    // max_deg(alpha) * k(k-1); it must stay below the extension degree.
    u64 max_deg = 0;
    for (const auto& a : alphas) {
        if (auto d = a.degree()) max_deg = std::max<u64>(max_deg, *d);
    }
    if (max_deg * static_cast<u64>(k) * (k - 1) >= degree_bound && k > 1)
        throw DegreeOverflow("determinant degree bound reaches the extension degree");

    if (k == 1) {
        VerificationReport rep;
        rep.pass = true;
        rep.pairs_checked = static_cast<std::uint64_t>(n) * (n - 1);
        return rep;
    }

    const PairSpace ps = qualifying_pairs(n, k);
    return scan_pairs(ps, opts, [&](const IncreasingVector& I, const IncreasingVector& J) {
        return ring_determinant(build_ring_matrix(alphas, I, J, k)).is_zero();
    });
}

// ---------------------------------------------------------------------------
// Symbolic mode (permutation expansion)
// ---------------------------------------------------------------------------

bool SymbolicPoly::has_unit_coefficient() const {
    for (const auto& [mono, c] : terms) {
        if (c == 1 || c == -1) return true;
    }
    return false;
}

FieldElement SymbolicPoly::eval(std::span<const FieldElement> alphas) const {
    const FieldSpec& fs = alphas[0].spec();
    FieldElement acc = fs.zero();
    for (const auto& [mono, c] : terms) {
        FieldElement term = fs.from_int(static_cast<u64>(((c % static_cast<long long>(fs.p())) +
                                                          static_cast<long long>(fs.p())) %
                                                         static_cast<long long>(fs.p())));
        for (const auto& [var, exp] : mono) term = term * alphas[var - 1].pow(exp);
        acc = acc + term;
    }
    return acc;
}

RingPoly SymbolicPoly::eval_ring(std::span<const RingPoly> alphas) const {
    u64 p = 0;
    for (const auto& a : alphas)
        if (!a.is_zero()) p = a.characteristic();
    if (p == 0) throw Error("cannot infer characteristic");
    RingPoly acc = RingPoly::zero(p);
    for (const auto& [mono, c] : terms) {
        RingPoly term = RingPoly::constant(
            p, static_cast<u64>(((c % static_cast<long long>(p)) + static_cast<long long>(p)) %
                                static_cast<long long>(p)));
        for (const auto& [var, exp] : mono) term = term * alphas[var - 1].pow(exp);
        acc = acc + term;
    }
    return acc;
}

SymbolicPoly symbolic_determinant(const IncreasingVector& I, const IncreasingVector& J, int k) {
    if (k > 3) throw DimensionTooLarge("symbolic expansion supported for k <= 3 only");
    if (k < 1) throw Error("dimension must be >= 1");
    const int s = 2 * k - 1;
    if (static_cast<int>(I.size()) != s || static_cast<int>(J.size()) != s)
        throw LengthMismatch("index vectors must have length 2k-1");

    // entry (r, c) of V_{I,J}(X) as (variable, exponent); variable 0 = the
    // constant 1 column
    auto entry = [&](int r, int c) -> std::pair<int, int> {
        if (c == 0) return {0, 0};
        if (c < k) return {I[r], c};
        return {J[r], c - (k - 1)};
    };

    SymbolicPoly det;
    std::vector<int> perm(s);
    for (int i = 0; i < s; ++i) perm[i] = i;
    do {
        int sign = 1;
        {
            // permutation parity by counting inversions
            int inv = 0;
            for (int a = 0; a < s; ++a)
                for (int b = a + 1; b < s; ++b)
                    if (perm[a] > perm[b]) ++inv;
            if (inv % 2) sign = -1;
        }
        std::map<int, int> exps;
        for (int r = 0; r < s; ++r) {
            const auto [var, e] = entry(r, perm[r]);
            if (var != 0 && e != 0) exps[var] += e;
        }
        SymbolicPoly::Monomial mono(exps.begin(), exps.end());
        auto it = det.terms.find(mono);
        if (it == det.terms.end()) {
            det.terms.emplace(std::move(mono), sign);
        } else {
            it->second += sign;
            if (it->second == 0) det.terms.erase(it);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace insdel
