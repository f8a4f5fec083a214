#include "subfac/serialize.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "subfac/approx.hpp"

namespace subfac {

namespace {

// The eight squarefree products of {2, 3, 5}; sqrt of these form a Q-basis
// of Q(sqrt 2, sqrt 3, sqrt 5) inside Q(zeta_120).
const std::array<long, 8> kRadD = {1, 2, 3, 5, 6, 10, 15, 30};

struct RadicalField {
    std::array<Cyc, 8> sqrts;           // sqrt(d) lifted to order 120
    std::array<unsigned long, 8> auts;  // automorphism exponent per sign pattern
};

// pattern index bit meanings: bit0 = sqrt(2) flips, bit1 = sqrt(3), bit2 = sqrt(5)
const RadicalField& radical_field() {
    static const RadicalField field = [] {
        RadicalField f;
        for (size_t j = 0; j < kRadD.size(); ++j) {
            Cyc s = (kRadD[j] == 1) ? Cyc(1) : Cyc::sqrt_of(unsigned(kRadD[j]));
            f.sqrts[j] = s.lifted(120);
        }
        const Cyc& r2 = f.sqrts[1];
        const Cyc& r3 = f.sqrts[2];
        const Cyc& r5 = f.sqrts[3];
        std::array<bool, 8> seen{};
        int found = 0;
        for (unsigned long k = 1; k < 120 && found < 8; k += 2) {
            if (std::gcd(k, 120ul) != 1) continue;
            auto flip = [&](const Cyc& r) {
                Cyc img = r.galois(k);
                if (img == r) return 0;
                if (img == Cyc(0) - r) return 1;
                throw std::logic_error("radical_field: non-sign galois image");
            };
            int idx = flip(r2) | (flip(r3) << 1) | (flip(r5) << 2);
            if (seen[size_t(idx)]) continue;
            seen[size_t(idx)] = true;
            f.auts[size_t(idx)] = k;
            ++found;
        }
        if (found != 8) throw std::logic_error("radical_field: missing sign patterns");
        return f;
    }();
    return field;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

void append_term(std::string& out, const Rational& coeff, long d) {
    if (coeff == 0) return;
    Rational a = coeff > 0 ? coeff : Rational(-coeff);
    if (out.empty()) {
        if (coeff < 0) out += "-";
    } else {
        out += coeff < 0 ? " - " : " + ";
    }
    if (d == 1) {
        out += rational_str(a);
    } else if (a == 1) {
        out += "sqrt(" + std::to_string(d) + ")";
    } else {
        out += rational_str(a) + "*sqrt(" + std::to_string(d) + ")";
    }
}

}  // namespace

std::optional<std::string> radical_string(const Cyc& v) {
    if (!v.is_real()) return std::nullopt;
    Cyc r = v.reduced();
    if (r.is_rational()) return rational_str(r.rational_value());
    if (120 % r.order() != 0) return std::nullopt;

    const RadicalField& f = radical_field();
    Cyc x = r.lifted(120);
    Cyc eighth = Cyc(Rational(1) / 8);
    std::array<Rational, 8> coeffs;
    Cyc recon(0);
    for (size_t j = 0; j < kRadD.size(); ++j) {
        Cyc proj(0);
        for (size_t idx = 0; idx < 8; ++idx) {
            int chi = 1;
            if (kRadD[j] % 2 == 0 && (idx & 1)) chi = -chi;
            if (kRadD[j] % 3 == 0 && (idx & 2)) chi = -chi;
            if (kRadD[j] % 5 == 0 && (idx & 4)) chi = -chi;
            proj += x.galois(f.auts[idx]) * Cyc(chi);
        }
        proj *= eighth;
        Cyc coeff = proj / f.sqrts[j];
        if (!coeff.is_rational()) return std::nullopt;
        coeffs[j] = coeff.rational_value();
        recon += coeff * f.sqrts[j];
    }
    if (recon != x) return std::nullopt;

    // positive terms first so differences read "sqrt(2) - 1", not "-1 + sqrt(2)"
    std::string out;
    for (size_t j = 0; j < kRadD.size(); ++j)
        if (coeffs[j] > 0) append_term(out, coeffs[j], kRadD[j]);
    for (size_t j = 0; j < kRadD.size(); ++j)
        if (coeffs[j] < 0) append_term(out, coeffs[j], kRadD[j]);
    if (out.empty()) out = "0";
    return out;
}

Json cyc_json(const Cyc& v, int digits) {
    Cyc r = v.reduced();
    Json j;
    j["order"] = r.order();
    Json cs = Json::array();
    for (const auto& q : r.coeffs()) cs.push_back(rational_str(q));
    j["coeffs"] = cs;
    if (auto rad = radical_string(r)) j["radical"] = *rad;
    j["approx"] = decimal_string(r, unsigned(digits));
    return j;
}

Json graph_json(const CoxeterGraph& g, int digits) {
    Json j;
    j["name"] = g.name;
    switch (g.kind) {
        case Kind::A: j["kind"] = "A"; break;
        case Kind::D: j["kind"] = "D"; break;
        case Kind::E: j["kind"] = "E"; break;
    }
    j["rank"] = g.rank;
    j["coxeter_number"] = g.ell;
    j["norm"] = cyc_json(g.delta, digits);
    j["norm_squared"] = cyc_json(g.delta * g.delta, digits);
    Json verts = Json::array();
    for (int v = 0; v < g.rank; ++v) {
        Json jv;
        jv["id"] = v;
        jv["neighbors"] = g.nbr[size_t(v)];
        jv["color"] = g.color[size_t(v)];
        jv["pf_weight"] = cyc_json(g.pf[size_t(v)], digits);
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    return j;
}

Json pointed_json(const PointedCoxeterGraph& p, int digits) {
    Json j;
    j["name"] = p.name;
    j["star"] = p.star;
    if (p.graph.kind != Kind::A) j["distance_to_trivalent"] = p.d;
    j["graph"] = graph_json(p.graph, digits);
    return j;
}

Json inclusion_json(const InclusionMatrix& m) {
    Json j;
    j["level"] = m.level;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json mult = Json::array();
    for (const auto& row : m.mult) mult.push_back(row);
    j["mult"] = mult;
    return j;
}

Json principal_graph_json(const PrincipalGraphResult& r, int digits) {
    Json j;
    j["graph"] = r.graph.name;
    j["vertex"] = r.vertex;
    j["parity"] = r.parity;
    j["stable_level"] = r.stable_level;
    j["depth"] = r.depth;
    j["stable"] = inclusion_json(r.stable);
    j["charpoly"] = r.norm_charpoly.to_string("x");
    j["norm_identified"] = r.norm_identified;
    if (r.norm_identified) j["norm_squared"] = cyc_json(r.norm_squared, digits);
    j["norm_enclosure"] = Json::array({rational_str(r.norm_lo), rational_str(r.norm_hi)});
    return j;
}

Json angle_json(const AngleResult& r, int digits) {
    Json j;
    j["method"] = r.method;
    j["cos"] = cyc_json(r.cos_value, digits);
    j["cos_squared"] = cyc_json(r.cos_value * r.cos_value, digits);
    Json w = Json::array();
    for (const auto& [name, value] : r.witnesses) {
        Json jw;
        jw["name"] = name;
        jw["value"] = cyc_json(value, digits);
        w.push_back(jw);
    }
    j["witnesses"] = w;
    return j;
}

Json spectrum_json(const SpectrumResult& r, int digits) {
    Json j;
    j["operator_trace"] = cyc_json(r.operator_trace, digits);
    Json es = Json::array();
    for (const auto& e : r.entries) {
        Json je;
        je["multiplicity"] = e.multiplicity;
        je["exact"] = e.exact;
        if (e.exact) {
            je["value"] = cyc_json(e.value, digits);
        } else {
            je["interval"] = Json::array({rational_str(e.lo), rational_str(e.hi)});
            je["interval_approx"] = Json::array(
                {decimal_string(e.lo, unsigned(digits)), decimal_string(e.hi, unsigned(digits))});
        }
        if (e.factor.is_rational()) je["factor"] = e.factor.to_string("x");
        es.push_back(je);
    }
    j["entries"] = es;
    return j;
}

Json fusion_json(const FusionVector& v) {
    Json j;
    j["mults"] = v.mults;
    j["pretty"] = to_string(v);
    return j;
}

Json quad_json(const QuadData& q, int digits) {
    Json j;
    j["alpha"] = cyc_json(q.alpha, digits);
    j["beta"] = cyc_json(q.beta, digits);
    j["gamma"] = cyc_json(q.gamma, digits);
    if (q.tr_eP) j["tr_eP"] = cyc_json(*q.tr_eP, digits);
    if (q.tr_eQ) j["tr_eQ"] = cyc_json(*q.tr_eQ, digits);
    if (q.tr_ePeQ) j["tr_ePeQ"] = cyc_json(*q.tr_ePeQ, digits);
    if (q.tr_ePQ) j["tr_ePQ"] = cyc_json(*q.tr_ePQ, digits);
    if (q.commuting) j["commuting"] = *q.commuting;
    if (q.cocommuting) j["cocommuting"] = *q.cocommuting;
    return j;
}

Json report_json(const ClassificationReport& r, int digits) {
    Json j;
    j["branch"] = r.branch;
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json jc;
        jc["label"] = c.label;
        if (!c.fixed_point.is_zero()) jc["fixed_point"] = c.fixed_point.to_string("x");
        jc["survives"] = c.survives;
        jc["reason"] = to_string(c.reason);
        Json idx = Json::array();
        for (const auto& v : c.indices) idx.push_back(cyc_json(v, digits));
        jc["indices"] = idx;
        jc["checks"] = c.checks;
        if (c.data) jc["data"] = quad_json(*c.data, digits);
        cases.push_back(jc);
    }
    j["cases"] = cases;
    return j;
}

Json tower_json(Tower& t, int up_to_level, int digits) {
    Json j;
    j["graph"] = t.graph().name;
    j["delta"] = cyc_json(t.delta(), digits);
    j["tau"] = cyc_json(t.tau(), digits);
    Json levels = Json::array();
    for (int n = 0; n <= up_to_level; ++n) {
        const TowerLevel& lvl = t.level(n);
        Json jl;
        jl["n"] = n;
        jl["dimension"] = lvl.dim();
        Json blocks = Json::array();
        for (size_t b = 0; b < lvl.verts.size(); ++b) {
            Json jb;
            jb["vertex"] = lvl.verts[b];
            jb["size"] = lvl.block_size(int(b));
            jb["trace_weight"] = cyc_json(lvl.trace_weight[b], digits);
            blocks.push_back(jb);
        }
        jl["blocks"] = blocks;
        levels.push_back(jl);
    }
    j["levels"] = levels;
    return j;
}

std::string graph_dot(const CoxeterGraph& g, int star) {
    std::string s = "graph \"" + g.name + "\" {\n";
    for (int v = 0; v < g.rank; ++v) {
        s += "  n" + std::to_string(v) + " [label=\"" + std::to_string(v);
        if (v == star) s += "*";
        s += "\"";
        if (v == star) s += ", shape=doublecircle";
        s += "];\n";
    }
    for (int u = 0; u < g.rank; ++u)
        for (int v : g.nbr[size_t(u)])
            if (u < v) s += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + ";\n";
    s += "}\n";
    return s;
}

std::string principal_graph_dot(const PrincipalGraphResult& r) {
    std::string s = "graph \"principal " + r.graph.name + "\" {\n";
    for (size_t i = 0; i < r.stable.rows.size(); ++i) {
        int lab = r.stable.rows[i];
        s += "  r" + std::to_string(lab) + " [label=\"" + (lab == 0 ? "*" : std::to_string(lab)) +
             "\"";
        if (lab == 0) s += ", shape=doublecircle";
        s += "];\n";
    }
    for (size_t jc = 0; jc < r.stable.cols.size(); ++jc)
        s += "  c" + std::to_string(r.stable.cols[jc]) + " [label=\"v" +
             std::to_string(r.stable.cols[jc]) + "\", shape=box];\n";
    for (size_t i = 0; i < r.stable.rows.size(); ++i)
        for (size_t jc = 0; jc < r.stable.cols.size(); ++jc)
            for (long e = 0; e < r.stable.mult[i][jc]; ++e)
                s += "  r" + std::to_string(r.stable.rows[i]) + " -- c" +
                     std::to_string(r.stable.cols[jc]) + ";\n";
    s += "}\n";
    return s;
}

}  // namespace subfac
