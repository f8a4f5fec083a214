#include "subfac/fusion.hpp"

#include <algorithm>

namespace subfac {

FusionParams FusionParams::generic(long depth_valid) {
    FusionParams p;
    p.mode = FusionParams::Mode::generic;
    p.depth_valid = depth_valid;
    return p;
}

FusionParams FusionParams::truncated(int n) {
    if (n < 3) throw std::invalid_argument("fusion: truncation parameter must be at least 3");
    FusionParams p;
    p.mode = FusionParams::Mode::truncated;
    p.n = n;
    return p;
}

int FusionParams::top_label() const {
    return mode == Mode::truncated ? (n - 2) / 2 : -1;
}

FusionVector::FusionVector(std::vector<long> m) : mults(std::move(m)) {
    for (long x : mults)
        if (x < 0) throw std::invalid_argument("fusion: negative multiplicity");
    while (!mults.empty() && mults.back() == 0) mults.pop_back();
}

long FusionVector::mult(int k) const {
    return k >= 0 && size_t(k) < mults.size() ? mults[k] : 0;
}

int FusionVector::top() const { return int(mults.size()) - 1; }

FusionVector& FusionVector::operator+=(const FusionVector& o) {
    if (o.mults.size() > mults.size()) mults.resize(o.mults.size(), 0);
    for (size_t k = 0; k < o.mults.size(); ++k) mults[k] += o.mults[k];
    return *this;
}

FusionVector FusionVector::operator+(const FusionVector& o) const {
    FusionVector r = *this;
    r += o;
    return r;
}

FusionVector FusionVector::operator*(long c) const {
    if (c < 0) throw std::invalid_argument("fusion: negative multiplicity");
    if (c == 0) return FusionVector{};
    FusionVector r = *this;
    for (long& x : r.mults) x *= c;
    return r;
}

FusionVector fuse(int i, int j, const FusionParams& params) {
    if (i < 0 || j < 0) throw std::invalid_argument("fuse: negative label");
    int lo = std::abs(i - j);
    int hi;
    if (params.mode == FusionParams::Mode::truncated) {
        int l = params.top_label();
        if (i > l || j > l)
            throw std::invalid_argument("fuse: label beyond V_" + std::to_string(l));
        hi = std::min(i + j, (params.n - 2) - (i + j));
    } else {
        if (params.depth_valid >= 0 && i + j > params.depth_valid)
            throw BeyondSupertransitivity(
                "fuse: V_" + std::to_string(i) + " x V_" + std::to_string(j) +
                " lies beyond the supertransitivity window (i+j > " +
                std::to_string(params.depth_valid) + ")");
        hi = i + j;
    }
    std::vector<long> m(size_t(hi) + 1, 0);
    for (int k = lo; k <= hi; ++k) m[size_t(k)] = 1;
    return FusionVector(std::move(m));
}

FusionVector fuse_vectors(const FusionVector& u, const FusionVector& v,
                          const FusionParams& params) {
    FusionVector out;
    for (int i = 0; i <= u.top(); ++i) {
        if (u.mult(i) == 0) continue;
        for (int j = 0; j <= v.top(); ++j) {
            if (v.mult(j) == 0) continue;
            out += fuse(i, j, params) * (u.mult(i) * v.mult(j));
        }
    }
    return out;
}

// dim V_k = gamma^k T_{2k+1}(1/gamma) with T_1 = T_2 = 1 and
// T_{m+2}(x) = T_{m+1}(x) - x T_m(x); written out this is a degree-k
// polynomial in gamma (the reversal of T_{2k+1}), so no division is needed
Poly dim_poly(int k) {
    if (k < 0) throw std::invalid_argument("dim_poly: negative label");
    Poly prev = Poly::from_rationals({Rational(1)});  // T_1
    Poly cur = prev;                                  // T_2
    Poly x = Poly::monomial(Cyc(1), 1);
    for (int m = 1; m + 2 <= 2 * k + 1; ++m) {
        Poly next = cur - x * prev;
        prev = cur;
        cur = next;
    }
    std::vector<Cyc> rev(size_t(k) + 1, Cyc(0));
    for (int j = 0; j <= cur.degree(); ++j) rev[size_t(k - j)] = cur.c[size_t(j)];
    return Poly(rev);
}

Cyc dim_irrep(int k, const Cyc& gamma) { return dim_poly(k).eval(gamma); }

Cyc dim_vector(const FusionVector& v, const Cyc& gamma) {
    Cyc s(0);
    for (int k = 0; k <= v.top(); ++k)
        if (v.mult(k) != 0) s += dim_irrep(k, gamma) * Cyc(v.mult(k));
    return s;
}

long hom_dimension_count(const FusionVector& v) {
    long s = 0;
    for (long m : v.mults) s += m * m;
    return s;
}

std::string to_string(const FusionVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= v.top(); ++k) {
        long m = v.mult(k);
        if (m == 0) continue;
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m);
        out += "V_" + std::to_string(k);
    }
    return out;
}

CoarseVector coarse_fuse(const CoarseVector& u, const CoarseVector& v) {
    if (u.a < 0 || u.b < 0 || v.a < 0 || v.b < 0)
        throw std::invalid_argument("coarse_fuse: negative multiplicity");
    CoarseVector r;
    r.a = 2 * u.a * v.a + 2 * u.b * v.b;
    r.b = 2 * (u.a * v.b + u.b * v.a) + 4 * u.b * v.b;
    return r;
}

std::string to_string(const CoarseVector& v) {
    if (v.a == 0 && v.b == 0) return "0";
    std::string out;
    if (v.a != 0) out += (v.a != 1 ? std::to_string(v.a) : "") + std::string("V_a");
    if (v.b != 0) {
        if (!out.empty()) out += " + ";
        out += (v.b != 1 ? std::to_string(v.b) : "") + std::string("V_b");
    }
    return out;
}

}  // namespace subfac
