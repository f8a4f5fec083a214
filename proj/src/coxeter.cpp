#include "subfac/coxeter.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "subfac/approx.hpp"
#include "subfac/linalg.hpp"

namespace subfac {

bool CoxeterGraph::adjacent(int u, int v) const {
    return std::binary_search(nbr[u].begin(), nbr[u].end(), v);
}

int CoxeterGraph::distance(int u, int v) const {
    std::vector<int> dist(rank, -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        if (w == v) return dist[w];
        for (int x : nbr[w])
            if (dist[x] < 0) {
                dist[x] = dist[w] + 1;
                q.push(x);
            }
    }
    throw std::logic_error("graph is disconnected");
}

std::vector<int> CoxeterGraph::univalent() const {
    std::vector<int> out;
    for (int v = 0; v < rank; ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

namespace {

void add_edge(std::vector<std::vector<int>>& nbr, int u, int v) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
}

// the one-dimensional kernel of (A - delta I), scaled to 1 at the base
// vertex; each weight is certified real and positive
std::vector<Cyc> pf_weights(const CoxeterGraph& g) {
    Mat m(g.rank, g.rank);
    for (int v = 0; v < g.rank; ++v) {
        for (int w : g.nbr[v]) m.at(v, w) += Cyc(1);
        m.at(v, v) -= g.delta;
    }
    auto ker = nullspace(m);
    if (ker.size() != 1) throw std::logic_error("PF eigenspace is not one-dimensional");
    std::vector<Cyc> w = ker[0];
    Cyc scale = w[g.base].inverse();
    for (auto& x : w) x = (x * scale).reduced();
    for (const auto& x : w)
        if (!x.is_real() || !certified_positive(x))
            throw std::logic_error("PF weight fails the positivity certificate");
    return w;
}

void finish(CoxeterGraph& g) {
    for (auto& l : g.nbr) std::sort(l.begin(), l.end());
    g.color.assign(g.rank, -1);
    std::queue<int> q;
    g.color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.nbr[v])
            if (g.color[w] < 0) {
                g.color[w] = 1 - g.color[v];
                q.push(w);
            }
    }
    g.delta = Cyc::two_cos_pi_over(unsigned(g.ell));
    g.pf = pf_weights(g);
}

PointedCoxeterGraph make_pointed(const CoxeterGraph& g, int star, int variant, int nvariants) {
    PointedCoxeterGraph p;
    p.graph = g;
    p.star = star;
    p.d = g.trivalent >= 0 ? g.distance(star, g.trivalent) : -1;
    p.name = nvariants > 1 ? g.name + "," + std::to_string(variant) : g.name;
    p.graph.base = star;
    Cyc scale = g.pf[star].inverse();
    for (auto& x : p.graph.pf) x = (x * scale).reduced();
    return p;
}

} // namespace

CoxeterGraph build_graph(Kind kind, int n) {
    CoxeterGraph g;
    g.kind = kind;
    g.rank = n;
    g.nbr.assign(std::max(n, 0), {});
    switch (kind) {
    case Kind::A:
        if (n < 2) throw std::invalid_argument("A_n needs n >= 2");
        for (int i = 0; i + 1 < n; ++i) add_edge(g.nbr, i, i + 1);
        g.ell = n + 1;
        g.trivalent = -1;
        g.base = 0;
        g.name = "A" + std::to_string(n);
        break;
    case Kind::D:
        if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
        for (int i = 0; i + 1 <= n - 3; ++i) add_edge(g.nbr, i, i + 1);
        add_edge(g.nbr, 0, n - 2);
        add_edge(g.nbr, 0, n - 1);
        g.ell = 2 * n - 2;
        g.trivalent = 0;
        g.base = n - 3;
        g.name = "D" + std::to_string(n);
        break;
    case Kind::E: {
        if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
        int arm1 = n - 4; // 2, 3, 4
        for (int i = 0; i + 1 <= arm1; ++i) add_edge(g.nbr, i, i + 1);
        add_edge(g.nbr, 0, arm1 + 1);
        add_edge(g.nbr, arm1 + 1, arm1 + 2);
        add_edge(g.nbr, 0, n - 1);
        g.ell = n == 6 ? 12 : n == 7 ? 18 : 30;
        g.trivalent = 0;
        g.base = arm1;
        g.name = "E" + std::to_string(n);
        break;
    }
    }
    finish(g);
    return g;
}

std::vector<PointedCoxeterGraph> pointed_variants(const CoxeterGraph& g) {
    std::vector<PointedCoxeterGraph> out;
    switch (g.kind) {
    case Kind::A:
        out.push_back(make_pointed(g, 0, 1, 1));
        break;
    case Kind::D:
        if (g.rank == 4) {
            out.push_back(make_pointed(g, 1, 1, 1));
        } else {
            out.push_back(make_pointed(g, g.rank - 3, 1, 2)); // long-arm end
            out.push_back(make_pointed(g, g.rank - 2, 2, 2)); // fork
        }
        break;
    case Kind::E: {
        int arm1 = g.rank - 4;
        if (g.rank == 6) {
            out.push_back(make_pointed(g, arm1, 1, 2));
            out.push_back(make_pointed(g, g.rank - 1, 2, 2));
        } else {
            out.push_back(make_pointed(g, arm1, 1, 3));
            out.push_back(make_pointed(g, arm1 + 2, 2, 3));
            out.push_back(make_pointed(g, g.rank - 1, 3, 3));
        }
        break;
    }
    }
    return out;
}

int distance_to_trivalent(const PointedCoxeterGraph& p) {
    if (p.graph.kind == Kind::A) throw std::invalid_argument("type A graphs have no trivalent vertex");
    return p.d;
}

namespace {

std::pair<std::string, std::string> split_name(const std::string& name) {
    auto comma = name.find(',');
    if (comma == std::string::npos) return {name, ""};
    return {name.substr(0, comma), name.substr(comma + 1)};
}

CoxeterGraph parse_base(const std::string& base) {
    if (base.size() < 2) throw std::invalid_argument("bad graph name: " + base);
    Kind kind;
    switch (base[0]) {
    case 'A': kind = Kind::A; break;
    case 'D': kind = Kind::D; break;
    case 'E': kind = Kind::E; break;
    default: throw std::invalid_argument("bad graph kind in name: " + base);
    }
    size_t pos = 0;
    int n;
    try {
        n = std::stoi(base.substr(1), &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rank in graph name: " + base);
    }
    if (pos + 1 != base.size()) throw std::invalid_argument("bad rank in graph name: " + base);
    return build_graph(kind, n);
}

} // namespace

CoxeterGraph parse_graph(const std::string& name) {
    auto [base, variant] = split_name(name);
    if (!variant.empty()) throw std::invalid_argument("unexpected variant in graph name: " + name);
    return parse_base(base);
}

PointedCoxeterGraph parse_pointed(const std::string& name) {
    auto [base, variant] = split_name(name);
    auto vars = pointed_variants(parse_base(base));
    if (variant.empty()) {
        if (vars.size() != 1)
            throw std::invalid_argument(base + " has " + std::to_string(vars.size()) +
                                        " pointed variants; specify one, e.g. " + base + ",1");
        return vars[0];
    }
    size_t pos = 0;
    int k = 0;
    try {
        k = std::stoi(variant, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad variant in pointed name: " + name);
    }
    if (pos != variant.size() || k < 1 || size_t(k) > vars.size())
        throw std::invalid_argument("no pointed variant " + name);
    return vars[size_t(k) - 1];
}

std::vector<CoxeterGraph> catalogue(int max_ell) {
    std::vector<CoxeterGraph> out;
    for (int n = 2; n + 1 <= max_ell; ++n) out.push_back(build_graph(Kind::A, n));
    for (int n = 4; 2 * n - 2 <= max_ell; ++n) out.push_back(build_graph(Kind::D, n));
    for (int n = 6; n <= 8; ++n)
        if ((n == 6 ? 12 : n == 7 ? 18 : 30) <= max_ell) out.push_back(build_graph(Kind::E, n));
    return out;
}

} // namespace subfac
