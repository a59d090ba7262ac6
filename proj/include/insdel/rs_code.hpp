#pragma once

#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "insdel/finite_field.hpp"

namespace insdel {

// Exact rational with 64-bit parts; plenty for rate/bound arithmetic at desk
// scale. Always normalized with a positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
};

// Message polynomial f_0 + f_1 x + ... + f_{k-1} x^{k-1}, exactly k
// coefficients (high ones may be zero).
using MessagePoly = std::vector<FieldElement>;

// An [n,k] Reed-Solomon code given by its evaluation vector. The evaluation
// points are the whole artifact: every construction in this library produces
// them and every verifier consumes them.
struct RSCodeSpec {
    FieldSpecPtr field;
    int n = 0;
    int k = 0;
    std::vector<FieldElement> alphas;

    // Validates: alphas distinct and in-field, 1 <= k, 2k-1 <= n <= q.
    // k = 1 is admitted as the degenerate repetition-like case.
    static RSCodeSpec make(FieldSpecPtr field, int n, int k, std::vector<FieldElement> alphas);
};

// c_f = (f(alpha_1), ..., f(alpha_n)).
std::vector<FieldElement> encode(const RSCodeSpec& code, const MessagePoly& f);

// Unique polynomial of degree < k through k points with distinct x; Lagrange.
MessagePoly interpolate(std::span<const std::pair<FieldElement, FieldElement>> points, int k);

// The claimed adversarial insdel correction radius n - 2k + 1; whether a
// given evaluation vector attains it is the verifier's job.
int correction_radius(const RSCodeSpec& code);

struct RateReport {
    Rational rate;                // k/n
    Rational delta;               // (n - 2k + 1)/n
    Rational half_singleton_rhs;  // (1 - delta)/2
};

RateReport rate_report(const RSCodeSpec& code);

}  // namespace insdel
