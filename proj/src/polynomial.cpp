#include "subfac/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "subfac/approx.hpp"

namespace subfac {

Poly Poly::from_rationals(const std::vector<Rational>& coeffs) {
    std::vector<Cyc> v;
    v.reserve(coeffs.size());
    for (const auto& q : coeffs) v.emplace_back(q);
    return Poly(std::move(v));
}

Poly Poly::monomial(const Cyc& a, size_t k) {
    std::vector<Cyc> v(k + 1);
    v[k] = a;
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

bool Poly::is_rational() const {
    for (const auto& a : c)
        if (!a.is_rational()) return false;
    return true;
}

Cyc Poly::eval(const Cyc& x) const {
    Cyc acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Rational Poly::eval_rational(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].rational_value();
    return acc;
}

Poly Poly::derivative() const {
    if (c.size() <= 1) return Poly();
    std::vector<Cyc> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Cyc(long(i));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Cyc> r(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c.size()) r[i] += c[i];
        if (i < o.c.size()) r[i] += o.c[i];
    }
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Cyc> r(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c.size()) r[i] += c[i];
        if (i < o.c.size()) r[i] -= o.c[i];
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Cyc> r(c.size() + o.c.size() - 1);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Cyc& s) const {
    std::vector<Cyc> r = c;
    for (auto& a : r) a *= s;
    return Poly(std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != o.c[i]) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q, r = *this;
    if (r.degree() >= d.degree()) q.c.assign(r.degree() - d.degree() + 1, Cyc(0));
    Cyc dl = d.lead().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Cyc f = r.lead() * dl;
        size_t off = r.c.size() - d.c.size();
        q.c[off] = f;
        for (size_t j = 0; j < d.c.size(); ++j) r.c[off + j] -= f * d.c[j];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

Poly Poly::deflate(const Cyc& r) const {
    if (is_zero()) return Poly();
    std::vector<Cyc> q(c.size() - 1);
    Cyc carry = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c[i] + carry * r;
    }
    if (!carry.is_zero()) throw std::logic_error("deflate: not a root");
    return Poly(std::move(q));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        Rational q = c[i].rational_value();
        if (first) {
            if (q < 0) out << "-";
        } else {
            out << (q < 0 ? " - " : " + ");
        }
        Rational a = abs(q);
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    // Yun's algorithm
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() <= 0) return out;
    Poly f = p.monic();
    Poly d = f.derivative();
    Poly a = poly_gcd(f, d);
    Poly b = f.divmod(a).first;
    Poly c = d.divmod(a).first;
    int k = 1;
    while (b.degree() > 0) {
        Poly e = c - b.derivative();
        Poly g = poly_gcd(b, e);
        if (g.degree() > 0) out.emplace_back(g, k);
        b = b.divmod(g).first;
        c = e.divmod(g).first;
        ++k;
    }
    return out;
}

int sign_at(const Poly& p, const Rational& t) {
    if (p.is_zero()) return 0;
    if (p.is_rational()) return sgn(p.eval_rational(t));
    return certified_sign(p.eval(Cyc(t)));
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const Poly& s0 = chain[chain.size() - 2];
        const Poly& s1 = chain[chain.size() - 1];
        Poly r = s0.divmod(s1).second;
        if (r.is_zero()) break;
        chain.push_back(Poly() - r);
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

static int sign_changes(const std::vector<Poly>& chain, const Rational& t) {
    int changes = 0, prev = 0;
    for (const auto& s : chain) {
        int sg = sign_at(s, t);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++changes;
        prev = sg;
    }
    return changes;
}

int count_roots_in(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    if (a >= b) return 0;
    return sign_changes(chain, a) - sign_changes(chain, b);
}

Rational root_bound(const Poly& p) {
    if (p.degree() <= 0) return Rational(1);
    // Cauchy bound 1 + max |c_i| / |c_n| from certified enclosures
    Rational lead_low;
    for (unsigned digits = 3;; digits *= 2) {
        auto [lo, hi] = rational_enclosure(p.lead(), digits);
        if (sgn(lo) > 0 || sgn(hi) < 0) {
            Rational alo = abs(lo), ahi = abs(hi);
            lead_low = alo < ahi ? alo : ahi;
            break;
        }
        if (digits > 300) throw std::runtime_error("root_bound: leading coefficient ~ 0");
    }
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        auto [lo, hi] = rational_enclosure(p.c[i], 3);
        Rational alo = abs(lo), ahi = abs(hi);
        if (alo > m) m = alo;
        if (ahi > m) m = ahi;
    }
    return Rational(1) + m / lead_low;
}

static void isolate_rec(const Poly& p, const std::vector<Poly>& chain, const Rational& a,
                        const Rational& b, std::vector<std::pair<Rational, Rational>>& out) {
    int n = count_roots_in(chain, a, b);
    if (n == 0) return;
    if (n == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rational mid = (a + b) / 2;
    if (sign_at(p, mid) == 0) {
        out.emplace_back(mid, mid);
        // shrink a symmetric window around mid containing only that root
        Rational w = (b - a) / 4;
        while (sign_at(p, mid - w) == 0 || sign_at(p, mid + w) == 0 ||
               count_roots_in(chain, mid - w, mid + w) != 1)
            w /= 2;
        isolate_rec(p, chain, a, mid - w, out);
        isolate_rec(p, chain, mid + w, b, out);
    } else {
        isolate_rec(p, chain, a, mid, out);
        isolate_rec(p, chain, mid, b, out);
    }
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p) {
    std::vector<std::pair<Rational, Rational>> out;
    if (p.degree() <= 0) return out;
    auto chain = sturm_chain(p);
    Rational B = root_bound(p) + 1;
    if (sign_at(p, -B) == 0 || sign_at(p, B) == 0)
        throw std::logic_error("isolate_real_roots: root bound not strict");
    isolate_rec(p, chain, -B, B, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Rational, Rational> refine_root(const Poly& p, std::pair<Rational, Rational> iv,
                                          const Rational& width) {
    auto [lo, hi] = iv;
    if (lo == hi) return iv;
    int slo = sign_at(p, lo);
    int shi = sign_at(p, hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("refine_root: not a sign-change bracket");
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) return {mid, mid};
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

} // namespace subfac
