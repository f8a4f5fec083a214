#include "subfac/angle.hpp"

#include <algorithm>

#include "subfac/approx.hpp"
#include "subfac/linalg.hpp"

namespace subfac {

AngleResult angle_closed_form(const PointedCoxeterGraph& p) {
    if (p.graph.kind == Kind::A)
        throw std::invalid_argument("angle_closed_form: type A has no trivalent vertex");
    long d = distance_to_trivalent(p);
    unsigned ell = unsigned(p.graph.ell);
    Cyc s = Cyc::root_of_unity(2 * ell, 1);
    Cyc num = s.pow(2 * d + 3) + s.pow(-(2 * d + 3));  // 2 cos((2d+3) pi / ell)
    Cyc den = s + s.pow(-1);                           // 2 cos(pi / ell)
    Cyc r = num / den;
    if (certified_sign(r) < 0) r = -r;
    AngleResult res;
    res.method = "closed_form";
    res.cos_value = r;
    res.witnesses.emplace_back("two_cos_(2d+3)pi/ell", num);
    res.witnesses.emplace_back("two_cos_pi/ell", den);
    return res;
}

Subspace corner_tl_floor(Tower& t, int star, int level, int first) {
    Corner corner(t, star);
    AlgElement p = corner.p(level);
    std::vector<AlgElement> gens{p};
    for (int i = first; i < level; ++i) gens.push_back(p * t.include(t.jones(i), level));
    return algebra_closure(t, level, gens, false);
}

AngleResult angle_path_oracle(const PointedCoxeterGraph& pg) {
    if (pg.graph.kind == Kind::A)
        throw std::invalid_argument("angle_path_oracle: type A has no trivalent vertex");
    int d = distance_to_trivalent(pg);
    int lvl = d + 1;
    Tower t = Tower::from_pointed(pg);
    Corner corner(t, pg.star);

    Subspace tlcut = corner_tl_floor(t, pg.star, lvl, 1);
    Subspace amb = corner.units_span(lvl);
    auto comp = orthogonal_complement(tlcut, amb);
    if (comp.size() != 1)
        throw HypothesisFailure(
            "angle_path_oracle: orthogonal complement of the cut TL floor in pA_" +
            std::to_string(lvl) + "p has dimension " + std::to_string(comp.size()) +
            ", expected 1 (2-transitivity fails)");
    AlgElement y = comp[0] + t.adjoint(comp[0]);
    if (y.is_zero()) y = (comp[0] - t.adjoint(comp[0])) * Cyc::root_of_unity(4, 1);
    if (y.is_zero() || t.adjoint(y) != y || !tlcut.project(y).is_zero())
        throw std::logic_error("angle_path_oracle: could not form a self-adjoint spanning y");

    AlgElement v = t.braid_word_v(lvl);
    AlgElement w = t.braid_word_w(lvl);
    AlgElement pL = corner.p(lvl + 1);
    if (v * pL != pL * v || w * pL != pL * w)
        throw std::logic_error("angle_path_oracle: braid word does not commute with p");

    AlgElement iy = t.include(y, lvl + 1);
    AlgElement x = v * iy * t.adjoint(v);
    AlgElement yt = w * iy * t.adjoint(w);

    Cyc n2 = t.trace_pairing(y, y);
    if (t.trace_pairing(yt, yt) != n2 || t.trace_pairing(x, x) != n2)
        throw std::logic_error("angle_path_oracle: conjugation did not preserve the norm");
    Cyc ip = t.trace_pairing(x, yt);  // x is self-adjoint, so this is tr(x yt)
    Cyc ratio = ip / n2;

    // E_Q(x), computed in the corner at level d+2, must be that multiple of yt
    std::vector<AlgElement> qg;
    for (AlgElement& u : corner.units(lvl)) {
        AlgElement iu = t.include(u, lvl + 1);
        qg.push_back(w * iu * t.adjoint(w));
    }
    Subspace qfl = span_of(t, lvl + 1, qg);
    if (qfl.project(x) != yt * ratio)
        throw HypothesisFailure(
            "angle_path_oracle: E_Q(x) is not the expected multiple of w y w*");

    AngleResult res;
    res.method = "path_oracle";
    res.cos_value = certified_sign(ratio) < 0 ? -ratio : ratio;
    res.witnesses.emplace_back("trace_x_ytilde", ip);
    res.witnesses.emplace_back("norm_squared_y", n2);
    return res;
}

AngleResult simpler_quadrilateral(const PointedCoxeterGraph& pg) {
    const CoxeterGraph& g = pg.graph;
    bool dn2 = g.kind == Kind::D && g.rank >= 5 && (pg.star == g.rank - 2 || pg.star == g.rank - 1);
    bool e62 = g.kind == Kind::E && g.rank == 6 && pg.star == 5;
    if (!dn2 && !e62)
        throw std::invalid_argument(
            "simpler_quadrilateral: input must be a fork-starred D_n (n >= 5) or short-arm E6");

    Tower t = Tower::from_pointed(pg);
    Corner corner(t, pg.star);
    Cyc tau = t.tau();
    Cyc one(1);

    AlgElement p2 = corner.p(2);
    AlgElement pe1 = p2 * t.include(t.jones(1), 2);
    auto cents = corner.central_idempotents(2);
    bool saw_pe1 = false;
    for (const AlgElement& c : cents) saw_pe1 = saw_pe1 || c == pe1;
    if (!saw_pe1)
        throw std::logic_error("simpler_quadrilateral: pe_1 is not a minimal central projection");

    // the level-2 corner is commutative here (one path to each neighbour of
    // the trivalent vertex), so every projection orthogonal to pe_1 is a sum
    // of the remaining minimal central idempotents
    if (corner.dim(2) != int(cents.size()))
        throw std::logic_error("simpler_quadrilateral: level-2 corner is not commutative");
    std::vector<AlgElement> others;
    std::string traces;
    for (const AlgElement& c : cents) {
        if (c == pe1) continue;
        traces += (traces.empty() ? "" : ", ") + decimal_string(corner.trace(c));
        others.push_back(c);
    }
    int k = int(others.size());
    if (k > 16) throw std::logic_error("simpler_quadrilateral: too many central projections");

    AlgElement p3 = corner.p(3);
    AlgElement pe2 = p3 * t.include(t.jones(2), 3);
    AlgElement f = t.zero(2);
    bool found = false, trace_match = false;
    for (int mask = 1; mask < (1 << k) && !found; ++mask) {
        AlgElement cand = t.zero(2);
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) cand = cand + others[i];
        if (corner.trace(cand) != tau) continue;
        trace_match = true;
        if (!(cand * pe1).is_zero()) continue;
        AlgElement c3 = t.include(cand, 3);
        if (pe2 * c3 * pe2 != pe2 * tau || c3 * pe2 * c3 != c3 * tau) continue;
        f = cand;
        found = true;
    }
    if (!found)
        throw HypothesisFailure(
            trace_match
                ? "simpler_quadrilateral: every trace-tau projection fails the e_2 "
                  "exchange relations"
                : "simpler_quadrilateral: no projection in pA_2p has trace tau = " +
                      decimal_string(tau) + " away from pe_1 (minimal central traces: " +
                      traces + ")");

    AlgElement x = f - p2 * tau;
    Cyc nx = corner.trace(x * x);
    if (nx != tau * (one - tau))
        throw std::logic_error("simpler_quadrilateral: ||x||^2 != tau(1-tau)");

    // E(x): projection onto the two-dimensional cut TL floor span{p, pe_1}
    Subspace fl2 = span_of(t, 2, std::vector<AlgElement>{p2, pe1});
    AlgElement ex = fl2.project(x);
    Cyc lambda = tau * tau / (one - tau);
    if (ex != pe1 * (-tau) + (p2 - pe1) * lambda)
        throw std::logic_error("simpler_quadrilateral: E(x) has unexpected coordinates");
    // commuting squares: projecting from one level higher gives the same E(x)
    Subspace fl3 = corner_tl_floor(t, pg.star, 3, 1);
    if (fl3.project(t.include(x, 3)) != t.include(ex, 3))
        throw std::logic_error("simpler_quadrilateral: TL floors fail the commuting square");

    Cyc ne = corner.trace(ex * ex);
    if (ne != tau * tau * tau / (one - tau))
        throw std::logic_error("simpler_quadrilateral: ||E(x)||^2 != tau^3/(1-tau)");
    Cyc cosv = tau / (one - tau);
    if (ne / nx != cosv * cosv)
        throw std::logic_error("simpler_quadrilateral: ||E(x)||^2/||x||^2 != (tau/(1-tau))^2");

    AngleResult res;
    res.method = "simpler";
    res.cos_value = cosv;
    res.witnesses.emplace_back("trace_f", tau);
    res.witnesses.emplace_back("norm_squared_x", nx);
    res.witnesses.emplace_back("norm_squared_Ex", ne);
    return res;
}

QuadFloors quadrilateral_floors(Tower& t, int star, int level) {
    if (level < 2) throw std::invalid_argument("quadrilateral_floors: level must be at least 2");
    Corner corner(t, star);
    Subspace amb = corner.units_span(level);
    Subspace tl2 = corner_tl_floor(t, star, level, 2);
    AlgElement v = t.braid_word_v(level - 1);
    AlgElement w = t.braid_word_w(level - 1);
    AlgElement pL = corner.p(level);
    if (v * pL != pL * v || w * pL != pL * w)
        throw std::logic_error("quadrilateral_floors: braid word does not commute with p");
    std::vector<AlgElement> pg, qg;
    for (AlgElement& u : corner.units(level - 1)) {
        AlgElement iu = t.include(u, level);
        pg.push_back(v * iu * t.adjoint(v));
        qg.push_back(w * iu * t.adjoint(w));
    }
    return QuadFloors{std::move(amb), std::move(tl2), span_of(t, level, pg),
                      span_of(t, level, qg)};
}

namespace {

// try to recognize one isolated real root of f exactly; returns entry fields
SpectrumEntry identify_root(const Poly& f, std::pair<Rational, Rational> iv,
                            const std::vector<Cyc>& hints) {
    SpectrumEntry e;
    if (iv.first == iv.second) {
        e.exact = true;
        e.value = Cyc(iv.first);
        e.factor = Poly(std::vector<Cyc>{-e.value, Cyc(1)});
        e.lo = e.hi = iv.first;
        return e;
    }
    Rational width(1, 1);
    for (int i = 0; i < 12; ++i) width /= 10;
    iv = refine_root(f, iv, width);
    e.lo = iv.first;
    e.hi = iv.second;
    if (iv.first == iv.second) {
        e.exact = true;
        e.value = Cyc(iv.first);
        e.factor = Poly(std::vector<Cyc>{-e.value, Cyc(1)});
        return e;
    }
    std::vector<Cyc> cands{Cyc(0), Cyc(1)};
    cands.insert(cands.end(), hints.begin(), hints.end());
    for (const Cyc& cand : cands) {
        if (!f.eval(cand).is_zero()) continue;
        if (!certified_less(Cyc(iv.first), cand) || !certified_less(cand, Cyc(iv.second)))
            continue;
        e.exact = true;
        e.value = cand;
        e.factor = Poly(std::vector<Cyc>{-cand, Cyc(1)});
        return e;
    }
    e.exact = false;
    e.factor = f;
    return e;
}

} // namespace

SpectrumResult angle_spectrum_finite(Subspace& ambient, Subspace& tl2, Subspace& pfl,
                                     Subspace& qfl, const std::vector<Cyc>& hints) {
    for (const AlgElement& b : tl2.basis())
        if (!pfl.contains(b) || !qfl.contains(b))
            throw std::logic_error("angle_spectrum_finite: TL2 floor not inside both floors");

    int n = ambient.dim();
    Mat tmat(n, n);
    Cyc tr(0);
    for (int j = 0; j < n; ++j) {
        AlgElement z = pfl.project(ambient.basis()[j]);
        if (pfl.project(z) != z)
            throw std::logic_error("angle_spectrum_finite: non-idempotent expectation (P)");
        AlgElement z2 = qfl.project(z);
        if (qfl.project(z2) != z2)
            throw std::logic_error("angle_spectrum_finite: non-idempotent expectation (Q)");
        AlgElement z3 = pfl.project(z2);
        auto co = ambient.coords(z3);
        if (!co)
            throw std::logic_error("angle_spectrum_finite: operator leaves the ambient space");
        for (int i = 0; i < n; ++i) tmat.at(i, j) = (*co)[i];
        tr += tmat.at(j, j);
    }

    SpectrumResult res;
    res.operator_trace = tr;
    Poly cp = charpoly(tmat);
    for (const auto& [f, mult] : squarefree_decomposition(cp)) {
        auto roots = isolate_real_roots(f);
        if (int(roots.size()) != f.degree())
            throw std::logic_error("angle_spectrum_finite: eigenvalue polynomial has a "
                                   "non-real root");
        for (const auto& iv : roots) {
            SpectrumEntry e = identify_root(f, iv, hints);
            e.multiplicity = mult;
            res.entries.push_back(std::move(e));
        }
    }
    std::sort(res.entries.begin(), res.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  return a.lo + a.hi < b.lo + b.hi;
              });
    return res;
}

}  // namespace subfac
