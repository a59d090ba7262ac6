#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "insdel/errors.hpp"

namespace insdel {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);  // p prime, a != 0

// Deterministic trial division; characteristics are small by design (p < 2^62).
bool is_prime(u64 p);

// -------------------------------------------------------------------------
// RingPoly: dense univariate polynomial over F_p with no degree bound.
// Coefficients are reduced mod p and normalized (no trailing zeros); the zero
// polynomial has an empty coefficient vector and degree() returns nullopt,
// which keeps degree comparisons explicit instead of overloading -1.
// -------------------------------------------------------------------------
class RingPoly {
  public:
    RingPoly() = default;  // zero polynomial with characteristic 0 sentinel
    RingPoly(u64 p, std::vector<u64> coeffs);

    static RingPoly zero(u64 p) { return RingPoly(p, {}); }
    static RingPoly constant(u64 p, u64 c) { return RingPoly(p, {c}); }
    static RingPoly x(u64 p) { return RingPoly(p, {0, 1}); }

    u64 characteristic() const { return p_; }
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<u64>& coeffs() const { return c_; }

    RingPoly pow(u64 e) const;
    u64 eval(u64 a) const;  // Horner over F_p

    friend RingPoly operator+(const RingPoly& a, const RingPoly& b);
    friend RingPoly operator-(const RingPoly& a, const RingPoly& b);
    friend RingPoly operator*(const RingPoly& a, const RingPoly& b);
    friend bool operator==(const RingPoly& a, const RingPoly& b);
    friend bool operator!=(const RingPoly& a, const RingPoly& b) { return !(a == b); }

  private:
    void normalize();

    u64 p_ = 0;
    std::vector<u64> c_;
};

// Quotient and remainder; the divisor must be nonzero.
std::pair<RingPoly, RingPoly> ring_divmod(const RingPoly& num, const RingPoly& den);
// Division known to be exact (throws Error on a nonzero remainder).
RingPoly ring_divexact(const RingPoly& num, const RingPoly& den);
// Monic gcd.
RingPoly ring_gcd(RingPoly a, RingPoly b);

// Deterministic Rabin irreducibility test for monic polynomials of degree >= 1.
bool is_irreducible(const RingPoly& f);

// Smallest-effort seeded search for a monic irreducible of degree d over F_p.
// Deterministic for a fixed seed; always terminates (irreducibles have
// density about 1/d among monic polynomials of degree d).
RingPoly find_irreducible(u64 p, int d, u64 seed);

// -------------------------------------------------------------------------
// FieldSpec / FieldElement: F_p for d = 1, else F_p[x]/(mu) with mu a stored
// monic irreducible of degree d. Elements are coefficient vectors of length
// d, little-endian in powers of x.
//
// FieldElement keeps a non-owning pointer to its FieldSpec; specs are
// immutable and shared via FieldSpecPtr, and must outlive their elements.
// All operations are pure, so a spec and its elements can be used from
// concurrent threads without synchronization.
// -------------------------------------------------------------------------
class FieldSpec;
class FieldElement;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

class FieldElement {
  public:
    using Coeffs = boost::container::small_vector<u64, 12>;

    FieldElement() = default;

    const FieldSpec& spec() const { return *spec_; }
    const Coeffs& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inv() const;            // DivisionByZero on 0
    FieldElement pow(u64 e) const;
    FieldElement scaled(u64 c) const;    // multiply by a prime-subfield scalar

    // Base-p packing of the coefficient vector; requires p^d to fit in u64.
    u64 to_index() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    // Lexicographic coefficient order; used for canonical representatives.
    friend bool operator<(const FieldElement& a, const FieldElement& b);

  private:
    friend class FieldSpec;
    FieldElement(const FieldSpec* spec, Coeffs c) : spec_(spec), c_(std::move(c)) {}

    const FieldSpec* spec_ = nullptr;
    Coeffs c_;
};

class FieldSpec {
  public:
    // F_p. Throws CompositeCharacteristic unless p is prime.
    static FieldSpecPtr prime(u64 p);
    // F_p[x]/(mu). Throws CompositeCharacteristic, NotMonic or
    // ReducibleModulus. A degree-1 modulus yields the prime field.
    static FieldSpecPtr extension(u64 p, const RingPoly& mu);

    u64 p() const { return p_; }
    int d() const { return d_; }
    // Modulus coefficients c_0..c_d (monic); empty for prime fields.
    const std::vector<u64>& modulus() const { return mod_; }
    // p^d when it fits in 64 bits.
    std::optional<u64> order() const { return order_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(u64 v) const;  // embeds v mod p as a constant
    FieldElement element(std::span<const u64> coeffs) const;
    FieldElement element_at(u64 index) const;  // inverse of to_index

    // Structural equality (same p, d, modulus).
    bool same(const FieldSpec& other) const;

  private:
    friend class FieldElement;
    FieldSpec(u64 p, int d, std::vector<u64> mod);

    void require_same(const FieldSpec& other) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement invert(const FieldElement& a) const;

    u64 p_;
    int d_;
    std::vector<u64> mod_;  // size d+1, monic; empty when d == 1
    std::optional<u64> order_;
};

// Evaluates f in a field of the same characteristic (the coefficients embed
// as constants). Throws CharacteristicMismatch.
FieldElement ring_eval(const RingPoly& f, const FieldElement& a);

}  // namespace insdel
