#include "subfac/approx.hpp"

#include <mpfr.h>

#include <cassert>
#include <stdexcept>

namespace subfac {

namespace {

// closed real interval [lo, hi] with all operations rounded outward
struct Iv {
    mpfr_t lo, hi;
    explicit Iv(mpfr_prec_t p) {
        mpfr_init2(lo, p);
        mpfr_init2(hi, p);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    Iv(const Iv&) = delete;
    Iv& operator=(const Iv&) = delete;
    ~Iv() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    void widen() { // one ulp outward on both ends, absorbs point-op rounding
        mpfr_nextbelow(lo);
        mpfr_nextabove(hi);
    }
};

void iv_add(Iv& acc, const Iv& x) {
    mpfr_add(acc.lo, acc.lo, x.lo, MPFR_RNDD);
    mpfr_add(acc.hi, acc.hi, x.hi, MPFR_RNDU);
}

// acc += q * x for rational q
void iv_add_scaled(Iv& acc, const Rational& q, const Iv& x, mpfr_prec_t p) {
    Iv t(p);
    if (sgn(q) >= 0) {
        mpfr_mul_q(t.lo, x.lo, q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(t.hi, x.hi, q.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(t.lo, x.hi, q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(t.hi, x.lo, q.get_mpq_t(), MPFR_RNDU);
    }
    iv_add(acc, t);
}

// enclosures of cos(2 pi j / m) and sin(2 pi j / m)
void trig_iv(unsigned long j, unsigned long m, mpfr_prec_t p, Iv& c, Iv& s) {
    Iv arg(p);
    mpfr_const_pi(arg.lo, MPFR_RNDD);
    mpfr_const_pi(arg.hi, MPFR_RNDU);
    mpq_class t(2 * mpz_class(j), mpz_class(m));
    t.canonicalize();
    mpfr_mul_q(arg.lo, arg.lo, t.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(arg.hi, arg.hi, t.get_mpq_t(), MPFR_RNDU);
    // |f(x) - f(mid)| <= |x - mid| for f = sin or cos, so mid-value +- halfwidth
    // is a valid enclosure regardless of monotonicity on the tiny interval
    mpfr_t mid, hw;
    mpfr_init2(mid, p);
    mpfr_init2(hw, p);
    mpfr_sub(hw, arg.hi, arg.lo, MPFR_RNDU);
    mpfr_div_2ui(hw, hw, 1, MPFR_RNDU);
    mpfr_add(mid, arg.lo, hw, MPFR_RNDN);
    mpfr_t cm, sm;
    mpfr_init2(cm, p);
    mpfr_init2(sm, p);
    mpfr_sin_cos(sm, cm, mid, MPFR_RNDN);
    mpfr_sub(c.lo, cm, hw, MPFR_RNDD);
    mpfr_add(c.hi, cm, hw, MPFR_RNDU);
    mpfr_sub(s.lo, sm, hw, MPFR_RNDD);
    mpfr_add(s.hi, sm, hw, MPFR_RNDU);
    c.widen();
    c.widen();
    s.widen();
    s.widen();
    mpfr_clears(mid, hw, cm, sm, (mpfr_ptr)nullptr);
}

void eval_re_im(const Cyc& x, mpfr_prec_t p, Iv& re, Iv& im) {
    unsigned long m = x.order();
    const auto& c = x.coeffs();
    for (unsigned long j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        if (j == 0) {
            Iv one(p);
            mpfr_set_ui(one.lo, 1, MPFR_RNDD);
            mpfr_set_ui(one.hi, 1, MPFR_RNDU);
            iv_add_scaled(re, c[j], one, p);
            continue;
        }
        Iv cj(p), sj(p);
        trig_iv(j, m, p, cj, sj);
        iv_add_scaled(re, c[j], cj, p);
        iv_add_scaled(im, c[j], sj, p);
    }
}

Rational mpfr_to_rational(const mpfr_t v) {
    if (mpfr_zero_p(v)) return Rational(0);
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v);
    Rational r(mant);
    if (e >= 0) {
        mpz_class two_e;
        mpz_ui_pow_ui(two_e.get_mpz_t(), 2, (unsigned long)e);
        r *= Rational(two_e);
    } else {
        mpz_class two_e;
        mpz_ui_pow_ui(two_e.get_mpz_t(), 2, (unsigned long)(-e));
        r /= Rational(two_e);
    }
    r.canonicalize();
    return r;
}

// enclosure of re(x) as exact rationals at working precision p
std::pair<Rational, Rational> enclosure_at(const Cyc& x, mpfr_prec_t p) {
    Iv re(p), im(p);
    eval_re_im(x, p, re, im);
    return {mpfr_to_rational(re.lo), mpfr_to_rational(re.hi)};
}

Rational pow10(unsigned d) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, d);
    return Rational(t);
}

// round q to `digits` fractional digits, half away from zero; exact
std::string round_decimal(const Rational& q, unsigned digits) {
    bool neg = sgn(q) < 0;
    Rational a = abs(q) * pow10(digits);
    mpz_class quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    if (2 * rem >= a.get_den()) quo += 1;
    std::string s = quo.get_str();
    if (digits > 0) {
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    if (neg && quo != 0) s.insert(0, "-");
    return s;
}

constexpr mpfr_prec_t kStartPrec = 64;
constexpr mpfr_prec_t kMaxPrec = 1 << 20;

// decimal of a certified-real irrational (or any non-tie) value
std::string decimal_of_real(const Cyc& x, unsigned digits) {
    if (x.is_rational()) return round_decimal(x.rational_value(), digits);
    Rational step2 = Rational(1) / (2 * pow10(digits)); // tie spacing
    for (mpfr_prec_t p = kStartPrec; p <= kMaxPrec; p *= 2) {
        auto [lo, hi] = enclosure_at(x, p);
        std::string a = round_decimal(lo, digits), b = round_decimal(hi, digits);
        if (a == b) return a;
        // enclosure straddles a rounding tie; test the tie candidates exactly
        if (hi - lo < step2) {
            Rational m2 = lo / step2;
            mpz_class k;
            mpz_cdiv_q(k.get_mpz_t(), m2.get_num_mpz_t(), m2.get_den_mpz_t());
            for (int off = 0; off < 2; ++off) {
                Rational t = Rational(k + off) * step2;
                if (t < lo || t > hi) continue;
                if (mpz_class(k + off) % 2 != 0 && x == Cyc(t))
                    return round_decimal(t, digits); // exact tie, half away
            }
        }
    }
    throw std::runtime_error("decimal_string: precision limit exceeded");
}

} // namespace

int certified_sign(const Cyc& x) {
    if (!x.is_real()) throw std::invalid_argument("certified_sign: value not real");
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.rational_value());
    for (mpfr_prec_t p = kStartPrec; p <= kMaxPrec; p *= 2) {
        auto [lo, hi] = enclosure_at(x, p);
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
    }
    throw std::runtime_error("certified_sign: precision limit exceeded");
}

bool certified_positive(const Cyc& x) { return certified_sign(x) > 0; }

bool certified_less(const Cyc& a, const Cyc& b) { return certified_sign(b - a) > 0; }

std::pair<Rational, Rational> rational_enclosure(const Cyc& x, unsigned digits) {
    if (!x.is_real()) throw std::invalid_argument("rational_enclosure: value not real");
    if (x.is_rational()) return {x.rational_value(), x.rational_value()};
    Rational target = Rational(1) / pow10(digits);
    for (mpfr_prec_t p = kStartPrec; p <= kMaxPrec; p *= 2) {
        auto [lo, hi] = enclosure_at(x, p);
        if (hi - lo <= target) return {lo, hi};
    }
    throw std::runtime_error("rational_enclosure: precision limit exceeded");
}

std::string decimal_string(const Rational& q, unsigned digits) {
    return round_decimal(q, digits);
}

std::string decimal_string(const Cyc& x, unsigned digits) {
    Cyc xc = x.conj();
    if (x == xc) return decimal_of_real(x, digits);
    // re = (x + conj)/2 and im = (x - conj)/(2i) are real cyclotomics
    Cyc half(Rational(1, 2));
    Cyc re = (x + xc) * half;
    Cyc im = (x - xc) * half * Cyc::root_of_unity(4, -1);
    std::string rs = decimal_of_real(re, digits);
    std::string is = decimal_of_real(im, digits);
    if (!is.empty() && is[0] == '-') return rs + is + "i";
    return rs + "+" + is + "i";
}

double to_double(const Cyc& x) {
    Iv re(128), im(128);
    eval_re_im(x, 128, re, im);
    mpfr_t mid;
    mpfr_init2(mid, 53);
    mpfr_add(mid, re.lo, re.hi, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    double d = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return d;
}

} // namespace subfac
