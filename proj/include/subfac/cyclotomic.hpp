#pragma once

#include <vector>

#include "subfac/rational.hpp"

namespace subfac {

// Element of a cyclotomic field Q(zeta_m), stored as coordinates in the power
// basis 1, zeta, ..., zeta^{phi(m)-1} after reduction modulo the m-th
// cyclotomic polynomial.  Orders are normalized to never be == 2 (mod 4),
// since Q(zeta_{2n}) = Q(zeta_n) for odd n; with that normalization
// Q(zeta_a) is a subfield of Q(zeta_b) exactly when a | b, and mixed-order
// arithmetic lifts both operands to the lcm order.
//
// Canonical-form invariant: two values of equal order are equal iff their
// coefficient vectors are equal; reduced() descends to the minimal order so
// that equality of reduced forms is equality in the union of all fields.
class Cyc {
  public:
    Cyc() : order_(1), c_(1) {}
    Cyc(long v) : order_(1), c_(1, Rational(v)) {}
    Cyc(const Rational& v) : order_(1), c_(1, v) {}

    // zeta_m^k (order reduced by gcd and 2-mod-4 normalization)
    static Cyc root_of_unity(unsigned m, long k);
    // sqrt of a positive squarefree integer, as an exact cyclotomic (Gauss sums)
    static Cyc sqrt_of(unsigned squarefree);
    // delta(ell) = 2 cos(pi/ell) = zeta_{2ell} + zeta_{2ell}^{-1}
    static Cyc two_cos_pi_over(unsigned ell);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()
    bool is_real() const;

    Cyc operator-() const;
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator/(const Cyc& o) const; // throws on division by zero
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    Cyc& operator/=(const Cyc& o) { return *this = *this / o; }
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    Cyc inverse() const;
    Cyc conj() const;               // complex conjugation, zeta -> zeta^{-1}
    Cyc galois(unsigned long a) const; // zeta -> zeta^a, requires gcd(a, order) = 1

    Cyc lifted(unsigned M) const;   // embed into Q(zeta_M); order() must divide M
    Cyc reduced() const;            // canonical form in the minimal cyclotomic field

    // exact power with integer exponent (negative uses inverse)
    Cyc pow(long e) const;

  private:
    unsigned order_;
    std::vector<Rational> c_; // size = phi(order_)

    Cyc(unsigned m, std::vector<Rational> c) : order_(m), c_(std::move(c)) {}
    static void align(Cyc& a, Cyc& b); // lift both to lcm order
    friend class CycField;
};

unsigned lcm_order(unsigned a, unsigned b);
unsigned euler_phi(unsigned m);

} // namespace subfac
