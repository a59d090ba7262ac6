#include "insdel/rs_code.hpp"

namespace insdel {

RSCodeSpec RSCodeSpec::make(FieldSpecPtr field, int n, int k, std::vector<FieldElement> alphas) {
    if (!field) throw InvalidCodeSpec("missing field");
    if (k < 1) throw InvalidCodeSpec("dimension must be >= 1");
    if (2 * k - 1 > n) throw InvalidCodeSpec("length must satisfy 2k-1 <= n");
    if (alphas.size() != static_cast<std::size_t>(n))
        throw InvalidCodeSpec("evaluation vector length differs from n");
    if (field->order() && static_cast<u64>(n) > *field->order())
        throw InvalidCodeSpec("more evaluation points than field elements");
    for (const auto& a : alphas) {
        if (!a.spec().same(*field)) throw FieldMismatch("evaluation point from a different field");
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        for (std::size_t j = i + 1; j < alphas.size(); ++j) {
            if (alphas[i] == alphas[j]) throw InvalidCodeSpec("evaluation points must be distinct");
        }
    }
    return RSCodeSpec{std::move(field), n, k, std::move(alphas)};
}

std::vector<FieldElement> encode(const RSCodeSpec& code, const MessagePoly& f) {
    if (f.size() != static_cast<std::size_t>(code.k))
        throw InvalidCodeSpec("message must have exactly k coefficients");
    for (const auto& c : f) {
        if (!c.spec().same(*code.field)) throw FieldMismatch("message coefficient from a different field");
    }
    std::vector<FieldElement> cw;
    cw.reserve(code.n);
    for (const auto& a : code.alphas) {
        FieldElement acc = code.field->zero();
        for (std::size_t i = f.size(); i-- > 0;) acc = acc * a + f[i];
        cw.push_back(std::move(acc));
    }
    return cw;
}

MessagePoly interpolate(std::span<const std::pair<FieldElement, FieldElement>> points, int k) {
    if (k < 1) throw InvalidCodeSpec("dimension must be >= 1");
    if (points.size() != static_cast<std::size_t>(k))
        throw InvalidCodeSpec("interpolation needs exactly k points");
    const FieldSpec& fs = points[0].first.spec();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) throw DuplicatePoint("repeated x-coordinate");
        }
    }

    // sum_i y_i * prod_{j != i} (x - x_j) / (x_i - x_j), accumulated on
    // coefficient vectors
    MessagePoly result(k, fs.zero());
    std::vector<FieldElement> basis(k, fs.zero());
    for (int i = 0; i < k; ++i) {
        basis.assign(k, fs.zero());
        basis[0] = fs.one();
        int deg = 0;
        FieldElement denom = fs.one();
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            // basis *= (x - x_j)
            for (int t = deg; t >= 0; --t) {
                basis[t + 1] = basis[t + 1] + basis[t];
                basis[t] = basis[t] * (-points[j].first);
            }
            ++deg;
            denom = denom * (points[i].first - points[j].first);
        }
        const FieldElement scale = points[i].second * denom.inv();
        for (int t = 0; t < k; ++t) result[t] = result[t] + basis[t] * scale;
    }
    return result;
}

int correction_radius(const RSCodeSpec& code) { return code.n - 2 * code.k + 1; }

RateReport rate_report(const RSCodeSpec& code) {
    const Rational rate(code.k, code.n);
    const Rational delta(code.n - 2 * code.k + 1, code.n);
    const Rational rhs = (Rational(1) - delta) / Rational(2);
    return RateReport{rate, delta, rhs};
}

}  // namespace insdel
