#pragma once

#include <utility>
#include <vector>

#include "subfac/cyclotomic.hpp"

namespace subfac {

// Dense univariate polynomial over a cyclotomic field, little-endian
// coefficients, normalized so that the leading coefficient is nonzero
// (the zero polynomial has an empty coefficient vector).
struct Poly {
    std::vector<Cyc> c;

    Poly() = default;
    explicit Poly(std::vector<Cyc> coeffs) : c(std::move(coeffs)) { normalize(); }
    static Poly from_rationals(const std::vector<Rational>& coeffs);
    static Poly monomial(const Cyc& a, size_t k); // a x^k

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    const Cyc& lead() const { return c.back(); }
    bool is_rational() const; // all coefficients rational

    Cyc eval(const Cyc& x) const;
    Rational eval_rational(const Rational& x) const; // requires is_rational()

    Poly derivative() const;
    Poly monic() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Cyc& s) const;
    bool operator==(const Poly& o) const;

    // euclidean division over the field: *this = q * d + r, deg r < deg d
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    // synthetic division by (x - r); requires eval(r) == 0
    Poly deflate(const Cyc& r) const;

    std::string to_string(const std::string& var = "x") const; // exact, rational coeffs only
};

Poly poly_gcd(Poly a, Poly b); // monic gcd

// (factor, multiplicity) pairs with factor squarefree, product = monic(p)
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// --- real-root machinery (coefficients must be real cyclotomics) ---

int sign_at(const Poly& p, const Rational& t); // certified sign of p(t)

// Sturm chain of p (p squarefree recommended; correctness for root counting
// only needs p(a), p(b) != 0 at query endpoints)
std::vector<Poly> sturm_chain(const Poly& p);
// number of distinct real roots in (a, b]; requires p(a) != 0 and p(b) != 0
int count_roots_in(const std::vector<Poly>& chain, const Rational& a, const Rational& b);

// all real roots ordered; intervals with lo == hi are exact rational roots,
// otherwise (lo, hi) contains exactly one simple root and p(lo), p(hi) != 0.
// Requires p squarefree.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p);

// shrink an isolating interval of a simple root until hi - lo <= width
std::pair<Rational, Rational> refine_root(const Poly& p, std::pair<Rational, Rational> iv,
                                          const Rational& width);

Rational root_bound(const Poly& p); // all real roots lie in [-B, B]

} // namespace subfac
