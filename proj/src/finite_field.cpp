#include "insdel/finite_field.hpp"

#include <algorithm>
#include <cassert>

#include "insdel/rng.hpp"

namespace insdel {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw DivisionByZero("inverse of 0 mod p");
    return powmod(a, p - 2, p);
}

bool is_prime(u64 p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (u64 i = 3; i * i <= p; i += 2) {
        if (p % i == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// RingPoly
// ---------------------------------------------------------------------------

RingPoly::RingPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) throw CharacteristicMismatch("polynomial characteristic must be >= 2");
    for (auto& c : c_) c %= p_;
    normalize();
}

void RingPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> RingPoly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

static void require_same_char(const RingPoly& a, const RingPoly& b) {
    if (a.characteristic() != b.characteristic())
        throw CharacteristicMismatch("polynomials over different prime fields");
}

RingPoly operator+(const RingPoly& a, const RingPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    require_same_char(a, b);
    const u64 p = a.p_;
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % p;
    return RingPoly(p, std::move(c));
}

RingPoly operator-(const RingPoly& a, const RingPoly& b) {
    if (b.is_zero()) return a;
    require_same_char(b, a.is_zero() ? b : a);
    const u64 p = b.p_;
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + p - b.coeff(i)) % p;
    return RingPoly(p, std::move(c));
}

// Schoolbook convolution. For p < 2^31 the per-term products fit a u128
// accumulator without intermediate reduction.
static std::vector<u64> conv(std::span<const u64> a, std::span<const u64> b, u64 p) {
    std::vector<u64> out(a.size() + b.size() - 1, 0);
    if (p < (1ull << 31)) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            u128 acc = 0;
            const std::size_t jlo = i >= b.size() ? i - b.size() + 1 : 0;
            const std::size_t jhi = std::min(i, a.size() - 1);
            for (std::size_t j = jlo; j <= jhi; ++j) acc += (u128)a[j] * b[i - j];
            out[i] = static_cast<u64>(acc % p);
        }
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
            }
        }
    }
    return out;
}

// Construction 1 verification multiplies degree-~576 operands in bulk, so
// sizes above this threshold go through Karatsuba.
static constexpr std::size_t kKaratsubaThreshold = 256;

static std::vector<u64> mul_rec(std::span<const u64> a, std::span<const u64> b, u64 p) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= kKaratsubaThreshold) return conv(a, b, p);

    const std::size_t h = std::max(a.size(), b.size()) / 2;
    std::span<const u64> a0 = a.subspan(0, std::min(h, a.size()));
    std::span<const u64> a1 = a.size() > h ? a.subspan(h) : std::span<const u64>{};
    std::span<const u64> b0 = b.subspan(0, std::min(h, b.size()));
    std::span<const u64> b1 = b.size() > h ? b.subspan(h) : std::span<const u64>{};

    std::vector<u64> z0 = mul_rec(a0, b0, p);
    std::vector<u64> z2 = mul_rec(a1, b1, p);

    std::vector<u64> a01(std::max(a0.size(), a1.size()), 0);
    for (std::size_t i = 0; i < a01.size(); ++i)
        a01[i] = ((i < a0.size() ? a0[i] : 0) + (i < a1.size() ? a1[i] : 0)) % p;
    std::vector<u64> b01(std::max(b0.size(), b1.size()), 0);
    for (std::size_t i = 0; i < b01.size(); ++i)
        b01[i] = ((i < b0.size() ? b0[i] : 0) + (i < b1.size() ? b1[i] : 0)) % p;

    std::vector<u64> z1 = mul_rec(a01, b01, p);
    // z1 -= z0 + z2
    for (std::size_t i = 0; i < z1.size(); ++i) {
        u64 sub = ((i < z0.size() ? z0[i] : 0) + (i < z2.size() ? z2[i] : 0)) % p;
        z1[i] = (z1[i] + p - sub) % p;
    }

    std::vector<u64> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] = (out[i + h] + z1[i]) % p;
    for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] = (out[i + 2 * h] + z2[i]) % p;
    return out;
}

RingPoly operator*(const RingPoly& a, const RingPoly& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    require_same_char(a, b);
    return RingPoly(a.p_, mul_rec(a.c_, b.c_, a.p_));
}

bool operator==(const RingPoly& a, const RingPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.p_ == b.p_ && a.c_ == b.c_;
}

RingPoly RingPoly::pow(u64 e) const {
    if (p_ == 0) throw CharacteristicMismatch("pow of uninitialized polynomial");
    RingPoly r = RingPoly::constant(p_, 1);
    RingPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

u64 RingPoly::eval(u64 a) const {
    u64 acc = 0;
    a %= p_ ? p_ : 1;
    for (std::size_t i = c_.size(); i-- > 0;) acc = (mulmod(acc, a, p_) + c_[i]) % p_;
    return acc;
}

std::pair<RingPoly, RingPoly> ring_divmod(const RingPoly& num, const RingPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    require_same_char(num.is_zero() ? den : num, den);
    const u64 p = den.characteristic();
    if (num.is_zero() || num.coeffs().size() < den.coeffs().size())
        return {RingPoly::zero(p), num.is_zero() ? RingPoly::zero(p) : num};

    std::vector<u64> rem = num.coeffs();
    const std::vector<u64>& d = den.coeffs();
    const u64 lead_inv = invmod(d.back(), p);
    std::vector<u64> q(rem.size() - d.size() + 1, 0);
    for (std::size_t qi = q.size(); qi-- > 0;) {
        const u64 f = mulmod(rem[qi + d.size() - 1], lead_inv, p);
        if (f != 0) {
            q[qi] = f;
            for (std::size_t j = 0; j < d.size(); ++j)
                rem[qi + j] = (rem[qi + j] + p - mulmod(f, d[j], p)) % p;
        }
    }
    return {RingPoly(p, std::move(q)), RingPoly(p, std::move(rem))};
}

RingPoly ring_divexact(const RingPoly& num, const RingPoly& den) {
    auto [q, r] = ring_divmod(num, den);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

RingPoly ring_gcd(RingPoly a, RingPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = ring_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // normalize to monic
    const u64 p = a.characteristic();
    const u64 s = invmod(a.coeffs().back(), p);
    std::vector<u64> c = a.coeffs();
    for (auto& v : c) v = mulmod(v, s, p);
    return RingPoly(p, std::move(c));
}

// ---------------------------------------------------------------------------
// Irreducibility (deterministic Rabin test)
// ---------------------------------------------------------------------------

static RingPoly polymod(const RingPoly& a, const RingPoly& f) { return ring_divmod(a, f).second; }

static RingPoly polypowmod(RingPoly base, u64 e, const RingPoly& f) {
    RingPoly r = RingPoly::constant(f.characteristic(), 1);
    base = polymod(base, f);
    while (e) {
        if (e & 1) r = polymod(r * base, f);
        base = polymod(base * base, f);
        e >>= 1;
    }
    return r;
}

// x^(p^e) mod f via e repeated p-th powers; p^e itself may not fit in u64.
static RingPoly frobenius_power(const RingPoly& f, int e) {
    const u64 p = f.characteristic();
    RingPoly g = polymod(RingPoly::x(p), f);
    for (int i = 0; i < e; ++i) g = polypowmod(g, p, f);
    return g;
}

bool is_irreducible(const RingPoly& f) {
    if (!f.is_monic()) throw NotMonic("irreducibility test requires a monic polynomial");
    const auto deg = f.degree();
    if (!deg || *deg == 0) return false;
    const int d = static_cast<int>(*deg);
    if (d == 1) return true;
    const u64 p = f.characteristic();
    const RingPoly x = RingPoly::x(p);

    // gcd(f, x^(p^(d/r)) - x) must be trivial for every prime divisor r of d
    int rest = d;
    for (int r = 2; r * r <= rest; ++r) {
        if (rest % r != 0) continue;
        while (rest % r == 0) rest /= r;
        const RingPoly g = frobenius_power(f, d / r) - x;
        if (!(ring_gcd(f, g) == RingPoly::constant(p, 1))) return false;
    }
    if (rest > 1) {
        const RingPoly g = frobenius_power(f, d / rest) - x;
        if (!(ring_gcd(f, g) == RingPoly::constant(p, 1))) return false;
    }
    // and x^(p^d) must equal x mod f
    return frobenius_power(f, d) == polymod(x, f);
}

RingPoly find_irreducible(u64 p, int d, u64 seed) {
    if (!is_prime(p)) throw CompositeCharacteristic("characteristic must be prime");
    if (d < 1) throw Error("extension degree must be >= 1");
    SeededRng rng(seed);
    for (;;) {
        std::vector<u64> c(d + 1, 0);
        c[d] = 1;
        for (int i = 0; i < d; ++i) c[i] = rng.below(p);
        RingPoly f(p, std::move(c));
        if (is_irreducible(f)) return f;
    }
}

// ---------------------------------------------------------------------------
// FieldSpec / FieldElement
// ---------------------------------------------------------------------------

FieldSpec::FieldSpec(u64 p, int d, std::vector<u64> mod) : p_(p), d_(d), mod_(std::move(mod)) {
    u128 o = 1;
    bool fits = true;
    for (int i = 0; i < d_; ++i) {
        o *= p_;
        if (o > UINT64_MAX) {
            fits = false;
            break;
        }
    }
    if (fits) order_ = static_cast<u64>(o);
}

FieldSpecPtr FieldSpec::prime(u64 p) {
    if (p >= (1ull << 62)) throw Error("characteristic too large (p < 2^62 required)");
    if (!is_prime(p)) throw CompositeCharacteristic("p is not prime");
    return FieldSpecPtr(new FieldSpec(p, 1, {}));
}

FieldSpecPtr FieldSpec::extension(u64 p, const RingPoly& mu) {
    if (p >= (1ull << 62)) throw Error("characteristic too large (p < 2^62 required)");
    if (!is_prime(p)) throw CompositeCharacteristic("p is not prime");
    if (mu.characteristic() != p) throw CharacteristicMismatch("modulus characteristic differs from p");
    if (!mu.is_monic()) throw NotMonic("modulus must be monic");
    const auto deg = mu.degree();
    if (!deg || *deg < 1) throw NotMonic("modulus must have degree >= 1");
    if (!is_irreducible(mu)) throw ReducibleModulus("modulus is reducible");
    if (*deg == 1) return prime(p);
    return FieldSpecPtr(new FieldSpec(p, static_cast<int>(*deg), mu.coeffs()));
}

FieldElement FieldSpec::zero() const { return FieldElement(this, FieldElement::Coeffs(d_, 0)); }

FieldElement FieldSpec::one() const {
    FieldElement::Coeffs c(d_, 0);
    c[0] = 1 % p_;
    return FieldElement(this, std::move(c));
}

FieldElement FieldSpec::from_int(u64 v) const {
    FieldElement::Coeffs c(d_, 0);
    c[0] = v % p_;
    return FieldElement(this, std::move(c));
}

FieldElement FieldSpec::element(std::span<const u64> coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(d_))
        throw Error("coefficient vector length must equal the extension degree");
    FieldElement::Coeffs c(coeffs.begin(), coeffs.end());
    for (auto& v : c) v %= p_;
    return FieldElement(this, std::move(c));
}

FieldElement FieldSpec::element_at(u64 index) const {
    FieldElement::Coeffs c(d_, 0);
    for (int i = 0; i < d_; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    return FieldElement(this, std::move(c));
}

bool FieldSpec::same(const FieldSpec& other) const {
    return p_ == other.p_ && d_ == other.d_ && mod_ == other.mod_;
}

void FieldSpec::require_same(const FieldSpec& other) const {
    if (this == &other) return;
    if (!same(other)) throw FieldMismatch("elements belong to different fields");
}

bool FieldElement::is_zero() const {
    for (u64 v : c_)
        if (v) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1 % spec_->p()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.spec_->require_same(*b.spec_);
    const u64 p = a.spec_->p();
    FieldElement::Coeffs c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + b.c_[i]) % p;
    return FieldElement(a.spec_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.spec_->require_same(*b.spec_);
    const u64 p = a.spec_->p();
    FieldElement::Coeffs c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + p - b.c_[i]) % p;
    return FieldElement(a.spec_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    const u64 p = spec_->p();
    Coeffs c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (p - c_[i]) % p;
    return FieldElement(spec_, std::move(c));
}

FieldElement FieldElement::scaled(u64 s) const {
    const u64 p = spec_->p();
    s %= p;
    Coeffs c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mulmod(c_[i], s, p);
    return FieldElement(spec_, std::move(c));
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
    if (d_ == 1) {
        FieldElement::Coeffs c(1, mulmod(a.c_[0], b.c_[0], p_));
        return FieldElement(this, std::move(c));
    }
    // convolution then reduction by the monic modulus
    boost::container::small_vector<u64, 24> buf(2 * d_ - 1, 0);
    if (p_ < (1ull << 31)) {
        for (int i = 0; i < d_; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < d_; ++j) buf[i + j] += a.c_[i] * b.c_[j] % p_;
        }
        for (auto& v : buf) v %= p_;
    } else {
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) buf[i + j] = (buf[i + j] + mulmod(a.c_[i], b.c_[j], p_)) % p_;
    }
    for (int i = 2 * d_ - 2; i >= d_; --i) {
        const u64 f = buf[i];
        if (f == 0) continue;
        buf[i] = 0;
        for (int j = 0; j < d_; ++j) {
            buf[i - d_ + j] = (buf[i - d_ + j] + (p_ - mulmod(f, mod_[j], p_))) % p_;
        }
    }
    FieldElement::Coeffs c(buf.begin(), buf.begin() + d_);
    return FieldElement(this, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.spec_->require_same(*b.spec_);
    return a.spec_->mul(a, b);
}

FieldElement FieldSpec::invert(const FieldElement& a) const {
    if (a.is_zero()) throw DivisionByZero("field inverse of zero");
    if (d_ == 1) {
        FieldElement::Coeffs c(1, invmod(a.c_[0], p_));
        return FieldElement(this, std::move(c));
    }
    // extended Euclid in F_p[x] against the modulus
    RingPoly r0(p_, mod_);
    RingPoly r1(p_, std::vector<u64>(a.c_.begin(), a.c_.end()));
    RingPoly s0 = RingPoly::zero(p_);
    RingPoly s1 = RingPoly::constant(p_, 1);
    while (!r1.is_zero()) {
        auto [q, r] = ring_divmod(r0, r1);
        RingPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 = gcd is a nonzero constant since the modulus is irreducible
    const u64 scale = invmod(r0.coeffs()[0], p_);
    FieldElement::Coeffs c(d_, 0);
    for (std::size_t i = 0; i < s0.coeffs().size(); ++i) c[i] = mulmod(s0.coeffs()[i], scale, p_);
    return FieldElement(this, std::move(c));
}

FieldElement FieldElement::inv() const { return spec_->invert(*this); }

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }

FieldElement FieldElement::pow(u64 e) const {
    FieldElement r = spec_->one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

u64 FieldElement::to_index() const {
    if (!spec_->order()) throw Error("field order does not fit in 64 bits");
    u64 idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * spec_->p() + c_[i];
    return idx;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    a.spec_->require_same(*b.spec_);
    return a.c_ == b.c_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
    a.spec_->require_same(*b.spec_);
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

FieldElement ring_eval(const RingPoly& f, const FieldElement& a) {
    if (!f.is_zero() && f.characteristic() != a.spec().p())
        throw CharacteristicMismatch("polynomial and field characteristics differ");
    FieldElement acc = a.spec().zero();
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + a.spec().from_int(c[i]);
    return acc;
}

}  // namespace insdel
