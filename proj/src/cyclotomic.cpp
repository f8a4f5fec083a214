#include "subfac/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>

namespace subfac {

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

unsigned lcm_order(unsigned a, unsigned b) {
    return a / std::gcd(a, b) * b;
}

namespace {

using Vec = std::vector<Rational>;

// ---- dense rational polynomials, little-endian, used only inside this file ----

void strip(Vec& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Vec poly_mul(const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// exact division, remainder must vanish
Vec poly_divexact(Vec num, const Vec& den) {
    strip(num);
    if (num.empty()) return {};
    Vec q(num.size() - den.size() + 1, Rational(0));
    for (size_t k = q.size(); k-- > 0;) {
        Rational f = num[k + den.size() - 1] / den.back();
        q[k] = f;
        if (f != 0)
            for (size_t j = 0; j < den.size(); ++j) num[k + j] -= f * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

// remainder of a modulo b (b nonzero)
Vec poly_mod(Vec a, const Vec& b) {
    strip(a);
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        strip(a);
    }
    return a;
}

struct FieldCtx {
    unsigned m = 1;
    unsigned deg = 1;
    Vec phi;                    // cyclotomic polynomial, size deg+1, monic
    std::vector<Vec> pow;       // pow[k] = zeta^k in the basis, k in [0, pow_len)
};

Vec cyclotomic_poly(unsigned m); // fwd

// field contexts are read from parallel kernels; shared lock on the hot path
const FieldCtx& field(unsigned m) {
    static std::map<unsigned, std::unique_ptr<FieldCtx>> cache;
    static std::shared_mutex mu;
    {
        std::shared_lock<std::shared_mutex> lk(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return *it->second;
    }
    auto ctx = std::make_unique<FieldCtx>();
    ctx->m = m;
    ctx->phi = cyclotomic_poly(m);
    ctx->deg = unsigned(ctx->phi.size() - 1);
    size_t len = std::max<size_t>(m, 2 * ctx->deg);
    ctx->pow.resize(len);
    Vec cur(1, Rational(1)); // zeta^0
    for (size_t k = 0; k < len; ++k) {
        Vec padded = cur;
        padded.resize(ctx->deg, Rational(0));
        ctx->pow[k] = padded;
        // multiply by zeta and reduce
        Vec next(cur.size() + 1, Rational(0));
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        next = poly_mod(std::move(next), ctx->phi);
        cur = std::move(next);
    }
    std::unique_lock<std::shared_mutex> lk(mu);
    auto [it, inserted] = cache.emplace(m, std::move(ctx));
    (void)inserted;
    return *it->second;
}

Vec cyclotomic_poly(unsigned m) {
    if (m == 1) return {Rational(-1), Rational(1)};
    Vec p(m + 1, Rational(0)); // x^m - 1
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) p = poly_divexact(std::move(p), cyclotomic_poly(d));
    return p;
}

// consistent-solve A x = b by Gaussian elimination; A is rows x cols row-major
std::optional<Vec> solve_consistent(std::vector<Vec> A, Vec b, size_t cols) {
    size_t rows = A.size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (A[i][c] != 0) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(A[sel], A[r]);
        std::swap(b[sel], b[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c] / A[r][c];
            for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    Vec x(cols, Rational(0));
    for (size_t k = 0; k < pivot_col.size(); ++k)
        x[pivot_col[k]] = b[k] / A[k][pivot_col[k]];
    return x;
}

} // namespace

// ---- Cyc ----

Cyc Cyc::root_of_unity(unsigned m, long k) {
    if (m == 0) throw std::invalid_argument("root_of_unity: order 0");
    long kk = k % long(m);
    if (kk < 0) kk += m;
    unsigned g = std::gcd(unsigned(kk), m);
    if (kk == 0) g = m;
    unsigned m1 = m / g;
    unsigned long k1 = (g == m) ? 0 : (unsigned long)(kk) / g;
    bool negate = false;
    if (m1 % 4 == 2) { // zeta_{2n} = -zeta_n^{(n+1)/2} for odd n
        unsigned n = m1 / 2;
        negate = (k1 % 2) != 0;
        k1 = (k1 * ((n + 1) / 2)) % n;
        m1 = n;
    }
    if (m1 == 1) return Cyc(negate ? -1 : 1);
    const FieldCtx& F = field(m1);
    Vec v = F.pow[k1];
    if (negate)
        for (auto& c : v) c = -c;
    return Cyc(m1, std::move(v));
}

Cyc Cyc::two_cos_pi_over(unsigned ell) {
    return root_of_unity(2 * ell, 1) + root_of_unity(2 * ell, -1);
}

Cyc Cyc::sqrt_of(unsigned d) {
    if (d == 0) return Cyc(0);
    Cyc result(1);
    for (unsigned p = 2; p <= d; ++p) {
        if (d % p != 0) continue;
        d /= p;
        if (d % p == 0) throw std::invalid_argument("sqrt_of: not squarefree");
        if (p == 2) {
            result *= root_of_unity(8, 1) + root_of_unity(8, -1);
        } else {
            Cyc g(0); // quadratic Gauss sum
            mpz_class pz(p);
            for (unsigned k = 1; k < p; ++k) {
                mpz_class kz(k);
                int leg = mpz_legendre(kz.get_mpz_t(), pz.get_mpz_t());
                g += Cyc(leg) * root_of_unity(p, k);
            }
            if (p % 4 == 1)
                result *= g;                                  // g = sqrt(p)
            else
                result *= Cyc(-1) * root_of_unity(4, 1) * g;  // g = i sqrt(p)
        }
    }
    return result;
}

bool Cyc::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyc::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value on irrational element");
    return c_[0];
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

void Cyc::align(Cyc& a, Cyc& b) {
    if (a.order_ == b.order_) return;
    unsigned L = lcm_order(a.order_, b.order_);
    a = a.lifted(L);
    b = b.lifted(L);
}

Cyc Cyc::lifted(unsigned M) const {
    if (M == order_) return *this;
    if (M % order_ != 0) throw std::invalid_argument("lifted: target order not a multiple");
    if (M % 4 == 2) throw std::invalid_argument("lifted: target order == 2 mod 4");
    const FieldCtx& F = field(M);
    unsigned stride = M / order_;
    Vec out(F.deg, Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const Vec& zj = F.pow[(j * stride) % M];
        for (unsigned i = 0; i < F.deg; ++i) out[i] += c_[j] * zj[i];
    }
    return Cyc(M, std::move(out));
}

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyc Cyc::operator-(const Cyc& o) const {
    Cyc a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

Cyc Cyc::operator*(const Cyc& o) const {
    Cyc a = *this, b = o;
    align(a, b);
    const FieldCtx& F = field(a.order_);
    // schoolbook convolution then power-table reduction
    Vec conv(2 * F.deg, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
    }
    Vec out(F.deg, Rational(0));
    for (size_t k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        if (k < F.deg) {
            out[k] += conv[k];
        } else {
            const Vec& zk = F.pow[k];
            for (unsigned i = 0; i < F.deg; ++i) out[i] += conv[k] * zk[i];
        }
    }
    return Cyc(a.order_, std::move(out));
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return Cyc(Rational(1) / c_[0]);
    const FieldCtx& F = field(order_);
    // extended Euclid: u * this == gcd (a nonzero constant) mod phi
    Vec r0 = F.phi, r1 = c_;
    strip(r1);
    Vec s0{}, s1{Rational(1)};
    while (!r1.empty() && r1.size() > 1) {
        // one full division step: r0 = q*r1 + r2
        Vec q(r0.size() - r1.size() + 1, Rational(0));
        Vec rem = r0;
        while (rem.size() >= r1.size()) {
            Rational f = rem.back() / r1.back();
            size_t off = rem.size() - r1.size();
            q[off] += f;
            for (size_t j = 0; j < r1.size(); ++j) rem[off + j] -= f * r1[j];
            strip(rem);
            if (rem.empty()) break;
        }
        Vec s2 = s0; // s2 = s0 - q*s1
        Vec qs = poly_mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        strip(s2);
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(rem);
        s1 = std::move(s2);
    }
    if (r1.empty())
        throw std::logic_error("inverse: gcd not constant (reducible modulus?)");
    Rational g = r1[0];
    Vec u = poly_mod(std::move(s1), F.phi);
    u.resize(F.deg, Rational(0));
    for (auto& c : u) c /= g;
    return Cyc(order_, std::move(u));
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

bool Cyc::operator==(const Cyc& o) const {
    Cyc a = *this, b = o;
    align(a, b);
    return a.c_ == b.c_;
}

Cyc Cyc::galois(unsigned long a) const {
    if (order_ == 1) return *this;
    a %= order_;
    if (std::gcd((unsigned long)order_, a) != 1)
        throw std::invalid_argument("galois: exponent not coprime to order");
    const FieldCtx& F = field(order_);
    Vec out(F.deg, Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const Vec& zj = F.pow[(j * a) % order_];
        for (unsigned i = 0; i < F.deg; ++i) out[i] += c_[j] * zj[i];
    }
    return Cyc(order_, std::move(out));
}

Cyc Cyc::conj() const {
    if (order_ == 1) return *this;
    return galois(order_ - 1);
}

bool Cyc::is_real() const { return *this == conj(); }

Cyc Cyc::pow(long e) const {
    if (e == 0) return Cyc(1);
    Cyc base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Cyc acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Cyc Cyc::reduced() const {
    if (order_ == 1) return *this;
    if (is_rational()) return Cyc(c_[0]);
    const FieldCtx& F = field(order_);
    for (unsigned d = 2; d < order_; ++d) {
        if (order_ % d != 0 || d % 4 == 2) continue;
        // columns: basis of Q(zeta_d) lifted into Q(zeta_order)
        unsigned dd = euler_phi(d);
        unsigned stride = order_ / d;
        std::vector<Vec> A(F.deg, Vec(dd, Rational(0)));
        for (unsigned j = 0; j < dd; ++j) {
            const Vec& col = F.pow[(size_t(j) * stride) % order_];
            for (unsigned i = 0; i < F.deg; ++i) A[i][j] = col[i];
        }
        auto x = solve_consistent(std::move(A), c_, dd);
        if (x) return Cyc(d, std::move(*x));
    }
    return *this;
}

} // namespace subfac
