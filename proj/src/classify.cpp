#include "subfac/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "subfac/approx.hpp"
#include "subfac/fusion.hpp"
#include "subfac/linalg.hpp"

namespace subfac {

namespace {

void need(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("classify internal check failed: ") + what);
}

bool in_unit_interval(const Cyc& t) {
    // real and in (0, 1]
    if (!t.is_real()) return false;
    if (certified_sign(t) <= 0) return false;
    return !certified_less(Cyc(1), t);
}

// exact square root of a nonnegative rational
Cyc sqrt_rational_exact(const Rational& r) {
    if (r < 0) throw std::invalid_argument("sqrt_rational_exact: negative");
    if (r == 0) return Cyc(0);
    mpz_class m = r.get_num() * r.get_den();
    mpz_class sq = 1;
    for (mpz_class f = 2; f * f <= m; ++f) {
        while (m % (f * f) == 0) {
            m /= f * f;
            sq *= f;
        }
    }
    Cyc root = (m == 1) ? Cyc(1) : Cyc::sqrt_of(unsigned(m.get_ui()));
    return root * Cyc(Rational(sq) / Rational(r.get_den()));
}

std::vector<Cyc> quadratic_roots_real(const Rational& a2, const Rational& a1, const Rational& a0) {
    Rational disc = a1 * a1 - 4 * a2 * a0;
    if (disc < 0) return {};
    Cyc s = sqrt_rational_exact(disc);
    Cyc inv = Cyc(Rational(1) / (2 * a2));
    Cyc b = Cyc(-a1);
    return {(b - s) * inv, (b + s) * inv};
}

struct RootInfo {
    bool exact = false;
    Cyc value;        // when exact
    Rational lo, hi;  // isolating interval otherwise
};

double approx_of(const RootInfo& r) {
    if (r.exact) return to_double(r.value);
    return (r.lo.get_d() + r.hi.get_d()) / 2.0;
}

// all real roots of a rational-coefficient polynomial of degree <= 3
std::vector<RootInfo> real_roots_of(const Poly& p) {
    need(p.is_rational(), "real_roots_of wants rational coefficients");
    std::vector<RootInfo> out;
    Poly rem = p;

    // strip rational roots until a quadratic (or less) remains
    bool progress = true;
    while (progress && rem.degree() > 2) {
        progress = false;
        if (rem.c.front().is_zero()) {
            out.push_back({true, Cyc(0), Rational(0), Rational(0)});
            rem = rem.deflate(Cyc(0));
            progress = true;
            continue;
        }
        std::vector<Rational> cs;
        for (const auto& ck : rem.c) cs.push_back(ck.rational_value());
        mpz_class den = 1;
        for (const auto& r : cs) den = den / gcd(den, r.get_den()) * r.get_den();
        mpz_class c0 = abs(cs.front().get_num() * (den / cs.front().get_den()));
        mpz_class cl = abs(cs.back().get_num() * (den / cs.back().get_den()));
        for (mpz_class nu = 1; nu <= c0 && !progress; ++nu) {
            if (c0 % nu != 0) continue;
            for (mpz_class de = 1; de <= cl && !progress; ++de) {
                if (cl % de != 0) continue;
                for (int sgn : {1, -1}) {
                    Rational cand = Rational(sgn) * Rational(nu) / Rational(de);
                    if (!rem.eval(Cyc(cand)).is_zero()) continue;
                    out.push_back({true, Cyc(cand), cand, cand});
                    rem = rem.deflate(Cyc(cand));
                    progress = true;
                    break;
                }
            }
        }
    }

    if (rem.degree() == 1) {
        Rational r0 = -(rem.c[0].rational_value() / rem.c[1].rational_value());
        out.push_back({true, Cyc(r0), r0, r0});
    } else if (rem.degree() == 2) {
        for (const auto& v : quadratic_roots_real(rem.c[2].rational_value(),
                                                  rem.c[1].rational_value(),
                                                  rem.c[0].rational_value()))
            out.push_back({true, v, Rational(0), Rational(0)});
    } else if (rem.degree() >= 3) {
        // no rational root: certified isolating intervals
        Poly sf = Poly::from_rationals({Rational(1)});
        for (const auto& [f, mult] : squarefree_decomposition(rem)) sf = sf * f;
        Rational width = Rational(1) / Rational(100000000);
        for (const auto& iv : isolate_real_roots(sf)) {
            auto ref = refine_root(sf, iv, width);
            if (ref.first == ref.second)
                out.push_back({true, Cyc(ref.first), ref.first, ref.second});
            else
                out.push_back({false, Cyc(0), ref.first, ref.second});
        }
    }

    std::sort(out.begin(), out.end(),
              [](const RootInfo& a, const RootInfo& b) { return approx_of(a) < approx_of(b); });
    return out;
}

std::string root_label(const RootInfo& r) {
    if (r.exact) return decimal_string(r.value, 6);
    Rational mid = (r.lo + r.hi) / 2;
    return decimal_string(Cyc(mid), 6);
}

std::vector<std::string> graphs_with_norm_squared(const Cyc& v) {
    std::vector<std::string> names;
    double target = to_double(v);
    for (const auto& g : catalogue(30)) {
        double d = to_double(g.delta);
        if (std::fabs(d * d - target) > 1e-8) continue;
        if (g.delta * g.delta == v) names.push_back(g.name);
    }
    std::sort(names.begin(), names.end());
    return names;
}

long closed_walks(const CoxeterGraph& g, int base, int length) {
    std::vector<long> v(size_t(g.rank), 0), nv(size_t(g.rank), 0);
    v[size_t(base)] = 1;
    for (int s = 0; s < length; ++s) {
        std::fill(nv.begin(), nv.end(), 0L);
        for (int u = 0; u < g.rank; ++u)
            for (int w : g.nbr[size_t(u)]) nv[size_t(w)] += v[size_t(u)];
        std::swap(v, nv);
    }
    return v[size_t(base)];
}

const long kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};

void check_monotone(int b, int c, CaseCertificate& cert) {
    Poly shifted = monotonicity_shift(b, c);
    bool has_positive_slope = false;
    for (int j = 0; j <= shifted.degree(); ++j) {
        need(shifted.c[size_t(j)].is_rational(), "monotone shift rational");
        Rational cj = shifted.c[size_t(j)].rational_value();
        need(cj >= 0, "monotone shift coefficient nonnegative");
        if (j >= 1 && cj > 0) has_positive_slope = true;
    }
    need(has_positive_slope, "monotone shift has positive part");
    cert.checks.push_back("at most one fixed point above 2: x^2 (f-x)'(x) at x = 2+u equals " +
                          shifted.to_string("u") + " with nonnegative coefficients");
}

// screen one exact root; returns true when it stays alive as an index candidate
bool screen_exact_root(const Cyc& r, CaseCertificate& cert, AdmissibleResult* res_out) {
    if (!certified_less(Cyc(1), r)) {
        cert.checks.push_back("root " + decimal_string(r, 6) + " rejected: not greater than 1");
        return false;
    }
    AdmissibleResult res = admissible_index(r);
    if (res_out) *res_out = res;
    if (!res.admissible) {
        cert.checks.push_back("root " + decimal_string(r, 6) + " inadmissible: " + res.witness);
        return false;
    }
    cert.checks.push_back("root " + decimal_string(r, 6) + " admissible: " + res.witness);
    return true;
}

}  // namespace

void validate(const QuadData& q) {
    if (!(q.alpha * q.beta == q.gamma))
        throw std::invalid_argument("QuadData: gamma != alpha * beta");
    auto chk = [](const std::optional<Cyc>& t, const char* name) {
        if (t && !in_unit_interval(*t))
            throw std::invalid_argument(std::string("QuadData: ") + name + " outside (0, 1]");
    };
    chk(q.tr_eP, "tr_eP");
    chk(q.tr_eQ, "tr_eQ");
    chk(q.tr_ePeQ, "tr_ePeQ");
    chk(q.tr_ePQ, "tr_ePQ");
}

Cyc trace_multiplication_formula(const Cyc& trP, const Cyc& trQ, const Cyc& trPQproduct) {
    if (certified_sign(trPQproduct) == 0)
        throw std::invalid_argument("trace_multiplication_formula: zero divisor");
    if (!in_unit_interval(trP) || !in_unit_interval(trQ) || !in_unit_interval(trPQproduct))
        throw std::invalid_argument("trace_multiplication_formula: traces must lie in (0, 1]");
    return trP * trQ / trPQproduct;
}

Cyc lambda_angle(const Cyc& alpha, const Cyc& tr_dual_PQ) {
    if (alpha == Cyc(1))
        throw std::invalid_argument("lambda_angle: alpha = 1 has no angle");
    if (!alpha.is_real() || certified_sign(alpha) <= 0)
        throw std::invalid_argument("lambda_angle: alpha must be real positive");
    if (!in_unit_interval(tr_dual_PQ))
        throw std::invalid_argument("lambda_angle: trace must lie in (0, 1]");
    return (tr_dual_PQ.inverse() - Cyc(1)) / (alpha - Cyc(1));
}

Cyc cocommuting_dim_formula(const Cyc& alpha, const Cyc& beta, const Cyc& gamma) {
    if (certified_sign(alpha) == 0)
        throw std::invalid_argument("cocommuting_dim_formula: alpha = 0");
    if (gamma == beta)
        throw std::invalid_argument("cocommuting_dim_formula: gamma = beta");
    Cyc lam = (alpha - beta) / (gamma - beta);
    Cyc inner = Cyc(1) + lam * lam * (alpha - Cyc(1));
    return beta * beta * (Cyc(2) - (beta / alpha) * inner);
}

AdmissibleResult admissible_index(const Cyc& x, int n_max) {
    if (!x.is_real()) throw std::invalid_argument("admissible_index: x must be real");
    if (!certified_less(x, Cyc(4))) return {true, 0, ">=4"};
    double xd = to_double(x);
    for (int n = 3; n <= n_max; ++n) {
        double tn = 2.0 * std::cos(M_PI / n);
        if (std::fabs(tn * tn - xd) > 1e-9) continue;
        Cyc t = Cyc::two_cos_pi_over(unsigned(n));
        if (x == t * t) return {true, n, "4cos^2(pi/" + std::to_string(n) + ")"};
    }
    if (certified_less(x, Cyc(1))) return {false, 0, "not greater than 1"};
    for (int n = 3; n < n_max; ++n) {
        double lo = 4.0 * std::cos(M_PI / n) * std::cos(M_PI / n);
        double hi = 4.0 * std::cos(M_PI / (n + 1)) * std::cos(M_PI / (n + 1));
        if (xd < lo - 1e-9 || xd > hi + 1e-9) continue;
        Cyc tl = Cyc::two_cos_pi_over(unsigned(n));
        Cyc th = Cyc::two_cos_pi_over(unsigned(n + 1));
        if (certified_less(tl * tl, x) && certified_less(x, th * th))
            return {false, n,
                    "strictly between 4cos^2(pi/" + std::to_string(n) + ") and 4cos^2(pi/" +
                        std::to_string(n + 1) + ")"};
    }
    throw std::runtime_error("admissible_index: needs-higher-precision");
}

ObstructionResult a11_obstruction(long bound) {
    ObstructionResult res;
    res.bound = bound;
    long best = -1;
    for (long m = 0; m <= 6; ++m) {
        long n = 6 - m;
        long value = 20 * (m + n) + 12 * (m * m + n * n);
        if (best < 0 || value < best) {
            best = value;
            res.best_m = m;
            res.best_n = n;
            res.best_value = value;
        }
    }
    res.feasible = res.best_value <= bound;
    return res;
}

int graph_supertransitivity(const CoxeterGraph& g, int base, int cap) {
    if (base < 0 || base >= g.rank)
        throw std::invalid_argument("graph_supertransitivity: base out of range");
    int k = 0;
    for (int j = 1; j <= cap && j <= 8; ++j) {
        if (closed_walks(g, base, 2 * j) != kCatalan[j]) break;
        k = j;
    }
    return k;
}

std::string to_string(EliminationReason r) {
    switch (r) {
        case EliminationReason::survivor: return "survivor";
        case EliminationReason::inadmissible_index: return "inadmissible_index";
        case EliminationReason::pimsner_popa: return "pimsner_popa";
        case EliminationReason::bratteli_obstruction: return "bratteli_obstruction";
        case EliminationReason::duality_contradiction: return "duality_contradiction";
    }
    return "unknown";
}

Poly fixed_point_poly(int b, int c) {
    if (b < 2 || b > 4 || c < 0 || c > 1)
        throw std::invalid_argument("fixed_point_poly: case out of range");
    return Poly::from_rationals(
        {Rational(b - c - 1), Rational(2 - 3 * b + 6 * c), Rational(b - 5 * c - 1), Rational(c)});
}

Poly monotonicity_shift(int b, int c) {
    Poly fp = fixed_point_poly(b, c);
    Poly x = Poly::monomial(Cyc(1), 1);
    Poly numer = fp.derivative() * x - fp;  // x^2 (f - x)'
    Poly shift = Poly::from_rationals({Rational(2), Rational(1)});
    Poly res;
    for (int j = numer.degree(); j >= 0; --j)
        res = res * shift + Poly({numer.c[size_t(j)]});
    return res;
}

namespace {

// the common eliminations and bookkeeping for one (b, c) case
CaseCertificate begin_case(int b, int c) {
    CaseCertificate cert;
    cert.label = "b=" + std::to_string(b) + ",c=" + std::to_string(c);
    cert.fixed_point = fixed_point_poly(b, c);
    cert.checks.push_back("fixed-point polynomial " + cert.fixed_point.to_string("x"));
    // f_{b,c}(x) - x clears to the fixed-point polynomial over x
    Poly x = Poly::monomial(Cyc(1), 1);
    Poly numer = dim_poly(0) + dim_poly(1) * Cyc(2) + dim_poly(2) * Cyc(b) + dim_poly(3) * Cyc(c);
    need(numer - x * x == cert.fixed_point, "fixed-point numerator");
    cert.checks.push_back(
        "1 + 2 dim V1 + " + std::to_string(b) + " dim V2 + " + std::to_string(c) +
        " dim V3 - x^2 = " + (numer - x * x).to_string("x"));
    check_monotone(b, c, cert);
    return cert;
}

CaseCertificate case_20() {
    CaseCertificate cert = begin_case(2, 0);
    auto roots = real_roots_of(cert.fixed_point);
    need(roots.size() == 2 && roots[1].exact, "b=2,c=0 roots");
    need(screen_exact_root(roots[0].value, cert, nullptr) == false, "small root dies");
    AdmissibleResult adm;
    need(screen_exact_root(roots[1].value, cert, &adm) && adm.n == 12, "2+sqrt(3) admissible");
    Cyc alpha = roots[1].value;
    need(alpha == Cyc(2) + Cyc::sqrt_of(3), "alpha = 2 + sqrt(3)");

    auto names = graphs_with_norm_squared(alpha);
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    cert.checks.push_back("graphs of norm^2 = 2 + sqrt(3): " + list);
    need(names == std::vector<std::string>({"A11", "D7", "E6"}), "norm ladder at ell = 12");

    cert.checks.push_back("axiom (external): D graphs of odd rank are not principal graphs");

    CoxeterGraph e6 = build_graph(Kind::E, 6);
    int best = 0;
    for (int u : e6.univalent()) best = std::max(best, graph_supertransitivity(e6, u));
    need(best < 4, "E6 fails 4-supertransitivity");
    long w6 = closed_walks(e6, e6.univalent().front(), 6);
    cert.checks.push_back("E6 supertransitivity at any end is " + std::to_string(best) +
                          " < 4 (closed 6-walks " + std::to_string(w6) + " vs Catalan 5)");

    ObstructionResult obs = a11_obstruction();
    need(!obs.feasible, "A11 obstruction infeasible");
    cert.checks.push_back(
        "A11 Bratteli bound: 196 >= 20(m+n) + 12(m^2+n^2) with m+n = 6 is infeasible, minimum " +
        std::to_string(obs.best_value) + " at (" + std::to_string(obs.best_m) + "," +
        std::to_string(obs.best_n) + ")");
    cert.reason = EliminationReason::bratteli_obstruction;
    return cert;
}

CaseCertificate case_30() {
    CaseCertificate cert = begin_case(3, 0);
    auto roots = real_roots_of(cert.fixed_point);
    need(roots.size() == 2 && roots[0].exact && roots[1].exact, "b=3,c=0 roots");
    Cyc big = roots[1].value;
    need(big * Cyc(4) == Cyc(7) + Cyc::sqrt_of(33), "root (7+sqrt(33))/4");
    need(!screen_exact_root(roots[0].value, cert, nullptr), "small root dies");
    AdmissibleResult adm;
    need(!screen_exact_root(big, cert, &adm) && adm.n == 6, "gap bracket at n = 6");
    cert.reason = EliminationReason::inadmissible_index;
    return cert;
}

CaseCertificate case_40() {
    CaseCertificate cert = begin_case(4, 0);
    auto roots = real_roots_of(cert.fixed_point);
    need(roots.size() == 2, "b=4,c=0 roots");
    need(!screen_exact_root(roots[0].value, cert, nullptr), "1/3 dies");
    AdmissibleResult adm;
    need(screen_exact_root(roots[1].value, cert, &adm) && adm.n == 6, "alpha = 3 admissible");
    Cyc alpha = roots[1].value;
    need(alpha == Cyc(3), "alpha = 3");
    Cyc dv2 = dim_irrep(2, alpha);
    need(dv2 == Cyc(1), "dim V2 at alpha = 3");
    cert.checks.push_back(
        "at alpha = 3, dim V2 = 1 < 4 copies demanded: multiplicity bound violated");
    cert.reason = EliminationReason::pimsner_popa;
    return cert;
}

CaseCertificate case_31() {
    CaseCertificate cert = begin_case(3, 1);
    // x (x^2 - 3x + 1) - (2x - 1) equals the fixed-point polynomial, so every
    // root x > 1 has dim V2 = 2 - 1/x < 2 < 3
    Poly x = Poly::monomial(Cyc(1), 1);
    Poly identity = x * dim_poly(2) - Poly::from_rationals({Rational(-1), Rational(2)});
    need(identity == cert.fixed_point, "dim V2 identity");
    cert.checks.push_back("identity x dim V2 - (2x - 1) = " + identity.to_string("x"));

    auto roots = real_roots_of(cert.fixed_point);
    need(roots.size() == 3, "b=3,c=1 has three real roots");
    int alive = 0;
    for (const auto& r : roots) {
        need(!r.exact, "b=3,c=1 roots are cubic irrationals");
        if (r.hi <= 1) {
            cert.checks.push_back("root near " + root_label(r) + " rejected: not greater than 1");
            continue;
        }
        need(r.lo >= 1, "root interval clears 1");
        ++alive;
        cert.checks.push_back("root near " + root_label(r) +
                              " has dim V2 = 2 - 1/x in (1, 2), below the 3 copies demanded");
    }
    need(alive == 1, "one root above 1");
    cert.reason = EliminationReason::pimsner_popa;
    return cert;
}

CaseCertificate case_41() {
    CaseCertificate cert = begin_case(4, 1);
    auto roots = real_roots_of(cert.fixed_point);
    need(roots.size() == 3, "b=4,c=1 has three real roots");
    Cyc tc7 = Cyc::two_cos_pi_over(7);
    int alive = 0;
    for (const auto& r : roots) {
        need(!r.exact, "b=4,c=1 roots are cubic irrationals");
        if (r.hi <= 1) {
            cert.checks.push_back("root near " + root_label(r) + " rejected: not greater than 1");
            continue;
        }
        ++alive;
        need(r.lo >= 3, "large root above 3");
        need(certified_less(Cyc(r.hi), tc7 * tc7), "large root below 4cos^2(pi/7)");
        cert.checks.push_back("root near " + root_label(r) +
                              " lies strictly between 4cos^2(pi/6) and 4cos^2(pi/7)");
    }
    need(alive == 1, "one root above 1");
    cert.reason = EliminationReason::inadmissible_index;
    return cert;
}

CaseCertificate case_21() {
    CaseCertificate cert = begin_case(2, 1);
    auto roots = real_roots_of(cert.fixed_point);
    need(roots.size() == 3, "b=2,c=1 roots");
    need(!screen_exact_root(roots[0].value, cert, nullptr), "root 0 dies");
    need(!screen_exact_root(roots[1].value, cert, nullptr), "2 - sqrt(2) dies");
    AdmissibleResult adm;
    need(screen_exact_root(roots[2].value, cert, &adm) && adm.n == 8, "2+sqrt(2) admissible");
    Cyc alpha = roots[2].value;
    Cyc sq2 = Cyc::sqrt_of(2);
    need(alpha == Cyc(2) + sq2, "alpha = 2 + sqrt(2)");

    need(cert.fixed_point.eval(alpha).is_zero(), "fixed point at the survivor");
    cert.checks.push_back("f_{2,1}(2 + sqrt(2)) = 2 + sqrt(2): the dual index equals the index");

    auto names = graphs_with_norm_squared(alpha);
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    cert.checks.push_back("graphs of norm^2 = 2 + sqrt(2): " + list);
    need(names == std::vector<std::string>({"A7", "D5"}), "norm ladder at ell = 8");
    cert.checks.push_back("axiom (external): no subfactor has principal graph D5");
    CoxeterGraph a7 = build_graph(Kind::A, 7);
    int st = graph_supertransitivity(a7, 0);
    need(st >= 4, "A7 end is at least 4-supertransitive");
    cert.checks.push_back("A7 from an end is " + std::to_string(st) + "-supertransitive");

    QuadData q;
    q.alpha = alpha;
    q.beta = alpha;
    q.gamma = alpha * alpha;
    need(q.gamma == Cyc(6) + sq2 * Cyc(4), "gamma = 6 + 4 sqrt(2)");
    Cyc trP = alpha.inverse();
    q.tr_eP = trP;
    q.tr_eQ = trP;
    // dim_N L^2(PQ) = 1 + 2(alpha - 1) + (alpha^2 - 3 alpha + 1) = 4 + 3 sqrt(2)
    Cyc dimPQ = dim_irrep(0, alpha) + Cyc(2) * dim_irrep(1, alpha) + dim_irrep(2, alpha);
    need(dimPQ == Cyc(4) + sq2 * Cyc(3), "dim L^2(PQ) = 4 + 3 sqrt(2)");
    Cyc trePQ = dimPQ / q.gamma;
    need(trePQ == sq2 * Cyc(Rational(1) / 2), "tr(e_PQ) = 1/sqrt(2)");
    q.tr_ePQ = trePQ;
    Cyc trePeQ = trP * trP / trePQ;
    need(trePeQ == dimPQ.inverse(), "tr(e_P e_Q) = 1/(4 + 3 sqrt(2))");
    need(trace_multiplication_formula(trP, trP, trePeQ) == trePQ, "multiplication formula");
    q.tr_ePeQ = trePeQ;
    q.commuting = false;
    q.cocommuting = false;
    validate(q);
    cert.checks.push_back("tr(e_PQ) = 1/sqrt(2), tr(e_P e_Q) = 1/(4 + 3 sqrt(2))");

    Cyc lam = lambda_angle(alpha, trePQ);
    need(lam == Cyc(3) - sq2 * Cyc(2), "lambda = 3 - 2 sqrt(2)");
    cert.checks.push_back("angle: cos^2 = 3 - 2 sqrt(2), so cos = sqrt(2) - 1");

    cert.data = q;
    cert.survives = true;
    cert.indices = {q.gamma};
    cert.reason = EliminationReason::survivor;
    return cert;
}

}  // namespace

ClassificationReport enumerate_noncocommuting() {
    ClassificationReport rep;
    rep.branch = "noncocommuting";
    rep.cases.push_back(case_20());
    rep.cases.push_back(case_21());
    rep.cases.push_back(case_30());
    rep.cases.push_back(case_31());
    rep.cases.push_back(case_40());
    rep.cases.push_back(case_41());
    int survivors = 0;
    for (const auto& c : rep.cases) survivors += c.survives ? 1 : 0;
    need(survivors == 1, "unique noncocommuting survivor");
    return rep;
}

namespace {

CaseCertificate cocommuting_case_1() {
    CaseCertificate cert;
    cert.label = "L2(M) = V0 + 3V1 + V2";
    Poly x = Poly::monomial(Cyc(1), 1);
    Poly numer = dim_poly(0) + dim_poly(1) * Cyc(3) + dim_poly(2);
    need(numer == Poly::from_rationals({Rational(-1), Rational(0), Rational(1)}),
         "beta numerator x^2 - 1");
    cert.checks.push_back("beta = (x^2 - 1)/x = x - 1/x");
    cert.checks.push_back("axiom (external): cocommuting duals commute, dim L^2(PbarQbar) = beta^2");
    // x^2 (gamma - beta^2) with gamma = x^2 - 1 collapses to x^2 - 1, so the
    // complement of L^2(PbarQbar) in L^2(M1) has dimension 1 - 1/x^2
    Poly gamma = numer;  // gamma = alpha beta = x^2 - 1
    Poly lhs = x * x * gamma - numer * numer;
    need(lhs == gamma, "complement dimension collapses");
    cert.checks.push_back("dim L^2(M1) - dim L^2(PbarQbar) = 1 - 1/x^2, strictly inside (0, 1)");
    // sample instance at x = 2 + sqrt(2)
    Cyc a = Cyc(2) + Cyc::sqrt_of(2);
    Cyc comp = Cyc(1) - (a * a).inverse();
    need(certified_sign(comp) > 0 && certified_less(comp, Cyc(1)), "complement in (0,1)");
    cert.checks.push_back(
        "a nonzero bimodule of dimension below 1 violates the multiplicity bound");
    cert.reason = EliminationReason::pimsner_popa;
    return cert;
}

CaseCertificate cocommuting_case_2() {
    CaseCertificate cert;
    cert.label = "L2(M) = V0 + 3V1";
    Poly numer = dim_poly(0) + dim_poly(1) * Cyc(3);
    need(numer == Poly::from_rationals({Rational(-2), Rational(3)}), "beta numerator 3x - 2");
    cert.checks.push_back("beta = (3x - 2)/x = 3 - 2/x, so 1 < beta < 3");
    cert.checks.push_back(
        "index values below 3: the ladder admits only 2 = 4cos^2(pi/4) and "
        "(3 + sqrt(5))/2 = 4cos^2(pi/5)");
    // beta = 2 forces alpha = 2, gamma = 4
    {
        Cyc beta{2}, alpha = Cyc(2) / (Cyc(3) - beta);
        need(alpha * beta == Cyc(4), "beta = 2 gives total index 4");
        cert.checks.push_back("beta = 2 gives gamma = 4; axiom (external): index-4 quadrilaterals commute");
    }
    Cyc sq5 = Cyc::sqrt_of(5);
    Cyc half = Cyc(Rational(1) / 2);
    Cyc beta = (Cyc(3) + sq5) * half;
    need(beta * beta == Cyc(3) * beta - Cyc(1), "beta^2 = 3 beta - 1");
    Cyc alpha = Cyc(2) / (Cyc(3) - beta);
    need(alpha == Cyc(3) + sq5, "alpha = 3 + sqrt(5)");
    need(alpha == beta * Cyc(2), "alpha = 2 beta");
    Cyc gamma = alpha * beta;
    need(gamma == Cyc(7) + sq5 * Cyc(3), "gamma = 7 + 3 sqrt(5)");
    cert.checks.push_back("forced: beta = (3 + sqrt(5))/2, alpha = 3 + sqrt(5), gamma = 7 + 3 sqrt(5)");

    Cyc dimPbarQbar = beta * beta;
    Cyc dimJoin = Cyc(2) * beta - Cyc(1);
    need(dimPbarQbar - dimJoin == beta, "T has dimension beta");
    Cyc dimS = gamma - (Cyc(2) * dimPbarQbar - dimJoin);
    need(dimS == dimJoin, "S has dimension 2 beta - 1");
    cert.checks.push_back("dim T = beta, dim S = 2 beta - 1 = 2 + sqrt(5)");

    long homs = hom_dimension_count(FusionVector({1, 3}));
    need(homs == 10, "dim(M' cap M2) = 10");
    cert.checks.push_back("dim(M' cap M2) = 10");
    cert.checks.push_back(
        "axiom (external): S splits into three summands, one of dimension 1, giving an "
        "intermediate subfactor of integer index");

    // candidate intermediate indices (1 + 3(alpha - 1))/(1 + k(alpha - 1)), k = 1, 2
    need(gamma == Cyc(1) + (alpha - Cyc(1)) * Cyc(3), "gamma = 1 + 3(alpha - 1)");
    Cyc cand1 = gamma / alpha;
    need(cand1 == beta, "k = 1 candidate is beta");
    need(certified_less(Cyc(2), cand1) && certified_less(cand1, Cyc(3)), "beta in (2, 3)");
    Cyc cand2 = gamma / (Cyc(2) * alpha - Cyc(1));
    need(cand2 == (Cyc(5) + sq5) * Cyc(Rational(1) / 5), "k = 2 candidate is (5 + sqrt(5))/5");
    need(certified_less(Cyc(1), cand2) && certified_less(cand2, Cyc(2)), "candidate in (1, 2)");
    cert.checks.push_back(
        "candidate integer indices (1 + 3(alpha-1))/(1 + k(alpha-1)): k = 1 gives (3 + sqrt(5))/2 "
        "in (2, 3), k = 2 gives (5 + sqrt(5))/5 in (1, 2); neither is an integer");
    cert.reason = EliminationReason::duality_contradiction;
    return cert;
}

CaseCertificate cocommuting_case_3() {
    CaseCertificate cert;
    cert.label = "L2(M) = V0 + 2V1 + V2";
    Poly x = Poly::monomial(Cyc(1), 1);
    Poly numer = dim_poly(0) + dim_poly(1) * Cyc(2) + dim_poly(2);
    need(numer == x * x - x, "beta numerator x^2 - x");
    cert.checks.push_back("beta = (x^2 - x)/x = x - 1");

    long homs = hom_dimension_count(FusionVector({1, 2, 1}));
    need(homs == 6, "dim(N' cap M1) = 6");
    cert.checks.push_back("dim(N' cap M1) = 6");
    cert.checks.push_back(
        "axiom (external): the six-step chain of invariant subspaces forces M' cap M2 abelian "
        "with six summands");

    // with x = beta, alpha = x + 1 and gamma = x^2 + x the dimension formula
    // gives x^2 + x - 1, leaving a complement of dimension exactly 1
    for (const Cyc& xv : {Cyc(2), Cyc(3), Cyc(Rational(7) / 2), Cyc(2) + Cyc::sqrt_of(2)}) {
        Cyc got = cocommuting_dim_formula(xv + Cyc(1), xv, xv * xv + xv);
        need(got == xv * xv + xv - Cyc(1), "dimension formula on the beta = alpha - 1 line");
    }
    cert.checks.push_back("dim L^2(PbarQbar + QbarPbar) = x^2 + x - 1: complement has dimension 1");

    // discrepancy in the printed summand dimensions
    Poly printed = Poly::from_rationals({Rational(1)}) * Cyc(2) +
                   Poly::from_rationals({Rational(-1), Rational(1)}) * Cyc(2) +
                   Poly::from_rationals({Rational(-1), Rational(-2), Rational(1)}) * Cyc(2);
    need(printed == Poly::from_rationals({Rational(-2), Rational(-2), Rational(2)}),
         "printed dimensions sum to 2x^2 - 2x - 2");
    Poly gap = printed - (x * x + x);
    need(gap == Poly::from_rationals({Rational(-2), Rational(-3), Rational(1)}),
         "equation x^2 - 3x - 2 = 0");
    auto roots = quadratic_roots_real(Rational(1), Rational(-3), Rational(-2));
    Cyc sq17 = Cyc::sqrt_of(17);
    Cyc half = Cyc(Rational(1) / 2);
    need(roots.size() == 2 && roots[1] == (Cyc(3) + sq17) * half, "root (3 + sqrt(17))/2");
    need(!(roots[1] == Cyc(2)), "printed equation misses the endpoint");
    cert.checks.push_back(
        "discrepancy: the printed summand dimensions 1, x-1, x-1, x^2-2x-1, x^2-2x-1, 1 sum to "
        "2x^2 - 2x - 2; equating to x^2 + x gives x = (3 + sqrt(17))/2, not the endpoint x = 2");
    cert.checks.push_back("axiom (external): the theorem endpoint is x = 2");

    QuadData q;
    q.alpha = Cyc(3);
    q.beta = Cyc(2);
    q.gamma = Cyc(6);
    q.commuting = false;
    q.cocommuting = true;
    validate(q);
    AdmissibleResult adm = admissible_index(q.gamma);
    need(adm.admissible && adm.witness == ">=4", "index 6 admissible");
    cert.checks.push_back(
        "endpoint: [P:N] = 3, [M:P] = 2, [M:N] = 6; axiom (external): Goldman forces the fixed "
        "points of an outer S3 action");
    cert.data = q;
    cert.survives = true;
    cert.indices = {q.gamma};
    cert.reason = EliminationReason::survivor;
    return cert;
}

}  // namespace

ClassificationReport cocommuting_branch() {
    ClassificationReport rep;
    rep.branch = "cocommuting";
    rep.cases.push_back(cocommuting_case_1());
    rep.cases.push_back(cocommuting_case_2());
    rep.cases.push_back(cocommuting_case_3());
    int survivors = 0;
    for (const auto& c : rep.cases) survivors += c.survives ? 1 : 0;
    need(survivors == 1, "unique cocommuting survivor");
    return rep;
}

Cyc four_equiangular_projections() {
    // traces of pairwise products of four distinct equiangular rank-1
    // projections in a II_1 factor: a = cos^2 solves 3a^2 - 4a + 1 = 0
    auto roots = quadratic_roots_real(Rational(3), Rational(-4), Rational(1));
    need(roots.size() == 2, "two roots");
    Cyc third = Cyc(Rational(1) / 3);
    need(roots[0] == third && roots[1] == Cyc(1), "roots 1/3 and 1");
    // a = 1 collapses all four projections to one; reject it
    // witness at a = 1/3 inside M_2 with phases at the cube roots of unity
    Cyc omega = Cyc::root_of_unity(3, 1);
    need(omega + omega.conj() == Cyc(-1), "Re(omega) = -1/2");
    Cyc a = third;
    Cyc relation = a * a + (Cyc(1) - a) * (Cyc(1) - a) - a * (Cyc(1) - a) - a;
    need(relation.is_zero(), "trace equation at a = 1/3");

    Cyc sq2 = Cyc::sqrt_of(2);
    std::vector<Mat> ps;
    Mat p1(2, 2);
    p1.at(0, 0) = Cyc(1);
    ps.push_back(p1);
    for (long k = 0; k < 3; ++k) {
        Cyc w = Cyc::root_of_unity(3, k);
        Mat p(2, 2);
        p.at(0, 0) = third;
        p.at(0, 1) = w * sq2 * third;
        p.at(1, 0) = w.conj() * sq2 * third;
        p.at(1, 1) = third * Cyc(2);
        ps.push_back(p);
    }
    for (size_t i = 0; i < ps.size(); ++i) {
        need(ps[i] * ps[i] == ps[i], "idempotent");
        need(ps[i].conj_transpose() == ps[i], "self-adjoint");
        for (size_t j = 0; j < ps.size(); ++j) {
            if (i == j) continue;
            need((ps[i] * ps[j]).trace() == third, "tr(p_i p_j) = 1/3");
            need(ps[i] * ps[j] * ps[i] == ps[i] * third, "p_i p_j p_i = p_i / 3");
        }
    }
    return third;
}

}  // namespace subfac
