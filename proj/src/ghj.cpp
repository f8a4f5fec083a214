#include "subfac/ghj.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <queue>
#include <string>

#include "subfac/approx.hpp"
#include "subfac/linalg.hpp"

namespace subfac {

namespace {

std::optional<size_t> index_of(const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) return std::nullopt;
    return size_t(it - v.begin());
}

} // namespace

InclusionMatrix InclusionMatrix::stripped() const {
    InclusionMatrix r;
    r.level = level;
    r.cols = cols;
    for (size_t i = 0; i < rows.size(); ++i) {
        bool nonzero = false;
        for (long m : mult[i]) nonzero = nonzero || m != 0;
        if (nonzero) {
            r.rows.push_back(rows[i]);
            r.mult.push_back(mult[i]);
        }
    }
    return r;
}

bool InclusionMatrix::same_data(const InclusionMatrix& o) const {
    return rows == o.rows && cols == o.cols && mult == o.mult;
}

long InclusionMatrix::entry_squares() const {
    long s = 0;
    for (const auto& row : mult)
        for (long m : row) s += m * m;
    return s;
}

NotStabilized::NotStabilized(int needed, int cap)
    : std::runtime_error("inclusion matrices do not stabilize below the level cap: need level " +
                         std::to_string(needed) + ", cap " + std::to_string(cap)),
      needed_level(needed),
      level_cap(cap) {}

std::vector<long> graph_walks(const CoxeterGraph& g, int from, int length) {
    std::vector<long> c(g.rank, 0);
    c[from] = 1;
    for (int s = 0; s < length; ++s) {
        std::vector<long> nx(g.rank, 0);
        for (int v = 0; v < g.rank; ++v)
            if (c[v] != 0)
                for (int w : g.nbr[v]) nx[w] += c[v];
        c = std::move(nx);
    }
    return c;
}

std::vector<long> chain_walks(int ell, int length) {
    int n = ell - 1; // positions 0 .. ell-2
    std::vector<long> t(n, 0);
    t[0] = 1;
    for (int s = 0; s < length; ++s) {
        std::vector<long> nx(n, 0);
        for (int k = 0; k < n; ++k)
            if (t[k] != 0) {
                if (k > 0) nx[k - 1] += t[k];
                if (k + 1 < n) nx[k + 1] += t[k];
            }
        t = std::move(nx);
    }
    return t;
}

namespace {

// Certificate: multiplicities weighted by TL simple dimensions account for
// every path ending at each vertex.
void check_unitality(const InclusionMatrix& im, const std::vector<long>& tk,
                     const std::vector<long>& cv) {
    for (size_t j = 0; j < im.cols.size(); ++j) {
        long s = 0;
        for (size_t i = 0; i < im.rows.size(); ++i) s += im.mult[i][j] * tk[im.rows[i]];
        if (s != cv[im.cols[j]])
            throw std::logic_error("ghj recursion: unitality certificate failed at level " +
                                   std::to_string(im.level));
    }
}

// Certificate: Lambda_{m-1} S = R Lambda_m, with S the graph adjacency
// restricted to the reachable vertices and R the chain adjacency restricted
// to the present labels.
void check_intertwiner(const CoxeterGraph& g, const InclusionMatrix& prev,
                       const InclusionMatrix& cur) {
    for (size_t i = 0; i < prev.rows.size(); ++i) {
        for (size_t j = 0; j < cur.cols.size(); ++j) {
            long lhs = 0;
            for (size_t a = 0; a < prev.cols.size(); ++a)
                if (g.adjacent(prev.cols[a], cur.cols[j])) lhs += prev.mult[i][a];
            long rhs = 0;
            for (size_t b = 0; b < cur.rows.size(); ++b)
                if (std::abs(prev.rows[i] - cur.rows[b]) == 1) rhs += cur.mult[b][j];
            if (lhs != rhs)
                throw std::logic_error("ghj recursion: intertwiner certificate failed at level " +
                                       std::to_string(cur.level));
        }
    }
}

} // namespace

std::vector<InclusionMatrix> ghj_inclusion_tower(const CoxeterGraph& g, int vertex,
                                                 int up_to_level) {
    if (vertex < 0 || vertex >= g.rank)
        throw std::invalid_argument("ghj_inclusion_tower: vertex out of range");
    std::vector<InclusionMatrix> lam;
    lam.reserve(up_to_level + 1);
    for (int m = 0; m <= up_to_level; ++m) {
        std::vector<long> cv = graph_walks(g, vertex, m);
        std::vector<long> tk = chain_walks(g.ell, m);
        InclusionMatrix im;
        im.level = m;
        for (int k = m % 2; k <= std::min(m, g.ell - 2); k += 2) im.rows.push_back(k);
        for (int v = 0; v < g.rank; ++v)
            if (cv[v] > 0) im.cols.push_back(v);
        im.mult.assign(im.rows.size(), std::vector<long>(im.cols.size(), 0));
        const InclusionMatrix* prev = m >= 2 ? &lam[m - 2] : nullptr;
        for (size_t i = 0; i < im.rows.size(); ++i) {
            int k = im.rows[i];
            if (k <= m - 2) {
                // old row: entries persist, vertices seen for the first time get 0
                auto pi = index_of(prev->rows, k);
                if (!pi) throw std::logic_error("ghj recursion: missing persisted row");
                for (size_t j = 0; j < im.cols.size(); ++j) {
                    auto pj = index_of(prev->cols, im.cols[j]);
                    im.mult[i][j] = pj ? prev->mult[*pi][*pj] : 0;
                }
            } else {
                // fresh row k == m: whatever the old simples do not account for
                for (size_t j = 0; j < im.cols.size(); ++j) {
                    long rem = cv[im.cols[j]];
                    for (size_t i2 = 0; i2 < im.rows.size(); ++i2) {
                        if (im.rows[i2] == k) continue;
                        rem -= im.mult[i2][j] * tk[im.rows[i2]];
                    }
                    if (rem < 0)
                        throw std::logic_error("ghj recursion: negative multiplicity at level " +
                                               std::to_string(m));
                    im.mult[i][j] = rem;
                }
            }
        }
        check_unitality(im, tk, cv);
        if (m >= 1) check_intertwiner(g, lam[m - 1], im);
        lam.push_back(std::move(im));
    }
    return lam;
}

namespace {

// factor out the square part: d = s^2 * squarefree
std::pair<long, unsigned> square_split(long d) {
    long s = 1;
    for (long f = 2; f * f <= d; ++f)
        while (d % (f * f) == 0) {
            d /= f * f;
            s *= f;
        }
    return {s, unsigned(d)};
}

// exact candidates for the top root of a monic integer polynomial: roots of
// its integer quadratic divisors, plus the closed families 4cos^2(pi/n) and
// small multiples of powers of the graph norm
std::vector<Cyc> norm_candidates(const Poly& psf, const CoxeterGraph& g) {
    std::vector<Cyc> cands;
    bool integral = true;
    std::vector<long> pc(psf.c.size());
    for (size_t i = 0; i < psf.c.size(); ++i) {
        if (!psf.c[i].is_rational()) { integral = false; break; }
        Rational q = psf.c[i].rational_value();
        if (q.get_den() != 1) { integral = false; break; }
        pc[i] = q.get_num().get_si();
    }
    if (integral && psf.degree() >= 2) {
        Poly work = psf;
        // strip factors of x so the constant term is nonzero
        while (!work.is_zero() && work.c[0].is_zero() && work.degree() > 0) {
            Poly x(std::vector<Cyc>{Cyc(0), Cyc(1)});
            work = work.divmod(x).first;
        }
        long c0 = 0;
        if (!work.is_zero() && work.c[0].is_rational())
            c0 = work.c[0].rational_value().get_num().get_si();
        if (c0 != 0 && work.degree() >= 2) {
            Rational rb = root_bound(work);
            long abound = 2 + 2 * (rb.get_num().get_si() / std::max<long>(1, rb.get_den().get_si()));
            std::vector<long> bs;
            for (long b = 1; b * b <= std::labs(c0); ++b)
                if (c0 % b == 0) {
                    bs.push_back(b);
                    bs.push_back(-b);
                    bs.push_back(c0 / b);
                    bs.push_back(-(c0 / b));
                }
            for (long b : bs)
                for (long a = -abound; a <= abound; ++a) {
                    Poly q(std::vector<Cyc>{Cyc(b), Cyc(a), Cyc(1)});
                    if (!work.divmod(q).second.is_zero()) continue;
                    long disc = a * a - 4 * b;
                    if (disc <= 0) continue;
                    auto [s, d] = square_split(disc);
                    Cyc sqrt_disc = d == 1 ? Cyc(s) : Cyc::sqrt_of(d) * Cyc(s);
                    cands.push_back((Cyc(-a) + sqrt_disc) * Cyc(Rational(1, 2)));
                    cands.push_back((Cyc(-a) - sqrt_disc) * Cyc(Rational(1, 2)));
                }
        }
    }
    for (unsigned n = 3; n <= 200; ++n) {
        Cyc c2 = Cyc::two_cos_pi_over(n);
        cands.push_back(c2 * c2);
    }
    Cyc d2 = g.delta * g.delta;
    Cyc pw = Cyc(1);
    for (int k = 0; k <= 4; ++k) {
        for (int q = 1; q <= 10; ++q) cands.push_back(pw * Cyc(q));
        pw = pw * d2;
    }
    return cands;
}

} // namespace

PrincipalGraphResult ghj_principal_graph_at(const CoxeterGraph& g, int vertex, int parity,
                                            int level_cap) {
    if (vertex < 0 || vertex >= g.rank)
        throw std::invalid_argument("ghj_principal_graph_at: vertex out of range");
    parity &= 1;

    // after this level no fresh label and no fresh vertex can appear
    int lmax = g.ell - 2;
    if (lmax % 2 != parity) --lmax;
    int maxdist = 0;
    for (int v = 0; v < g.rank; ++v) {
        int d = g.distance(vertex, v);
        if (d % 2 == parity) maxdist = std::max(maxdist, d);
    }
    int complete = std::max(lmax, maxdist);
    int verify = complete + 2;
    if (verify > level_cap) throw NotStabilized(verify, level_cap);

    auto lam = ghj_inclusion_tower(g, vertex, verify);

    PrincipalGraphResult res;
    res.graph = g;
    res.vertex = vertex;
    res.parity = parity;
    res.stable = lam[complete].stripped();
    if (!res.stable.same_data(lam[verify].stripped()))
        throw std::logic_error("ghj: stabilization verification failed");
    res.stable_level = complete;
    for (int m = parity; m < complete; m += 2)
        if (lam[m].stripped().same_data(res.stable)) {
            res.stable_level = m;
            break;
        }

    // bipartite graph checks and depth, breadth-first from the lowest TL row
    const InclusionMatrix& st = res.stable;
    if (st.rows.empty() || st.cols.empty())
        throw std::logic_error("ghj: empty stable inclusion matrix");
    int nr = int(st.rows.size()), nc = int(st.cols.size());
    std::vector<int> dist(nr + nc, -1);
    std::queue<int> bfs;
    dist[0] = 0;
    bfs.push(0);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        if (u < nr) {
            for (int j = 0; j < nc; ++j)
                if (st.mult[u][j] > 0 && dist[nr + j] < 0) {
                    dist[nr + j] = dist[u] + 1;
                    bfs.push(nr + j);
                }
        } else {
            for (int i = 0; i < nr; ++i)
                if (st.mult[i][u - nr] > 0 && dist[i] < 0) {
                    dist[i] = dist[u] + 1;
                    bfs.push(i);
                }
        }
    }
    res.depth = 0;
    for (int d : dist) {
        if (d < 0) throw std::logic_error("ghj: stable inclusion graph is not connected");
        res.depth = std::max(res.depth, d);
    }

    // exact norm of the stable matrix via the characteristic polynomial of
    // Lambda^T Lambda
    Mat b(nc, nc);
    for (int j = 0; j < nc; ++j)
        for (int j2 = 0; j2 < nc; ++j2) {
            long s = 0;
            for (int i = 0; i < nr; ++i) s += st.mult[i][j] * st.mult[i][j2];
            b.at(j, j2) = Cyc(s);
        }
    res.norm_charpoly = charpoly(b);
    Poly psf(std::vector<Cyc>{Cyc(1)});
    for (const auto& fm : squarefree_decomposition(res.norm_charpoly)) psf = psf * fm.first;
    auto roots = isolate_real_roots(psf);
    if (roots.empty()) throw std::logic_error("ghj: norm polynomial has no real root");
    auto top = roots.back();
    if (top.first == top.second) {
        res.norm_squared = Cyc(top.first);
        res.norm_identified = true;
        res.norm_lo = res.norm_hi = top.first;
    } else {
        Rational width(1, 1);
        for (int i = 0; i < 12; ++i) width /= 10;
        auto iv = refine_root(psf, top, width);
        res.norm_lo = iv.first;
        res.norm_hi = iv.second;
        if (iv.first == iv.second) {
            // bisection landed on the root exactly, so it is rational
            res.norm_squared = Cyc(iv.first);
            res.norm_identified = true;
            return res;
        }
        double lo_d = mpq_class(iv.first).get_d(), hi_d = mpq_class(iv.second).get_d();
        // a monic integer polynomial has only integer rational roots; the
        // refined window brackets at most two integers, so try them first
        std::vector<Cyc> cands;
        {
            mpz_class num = iv.first.get_num(), den = iv.first.get_den(), f;
            mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            cands.push_back(Cyc(Rational(f)));
            cands.push_back(Cyc(Rational(f + 1)));
        }
        auto fam = norm_candidates(psf, g);
        cands.insert(cands.end(), fam.begin(), fam.end());
        for (const Cyc& cand : cands) {
            double cd = to_double(cand);
            if (cd < lo_d - 1e-6 || cd > hi_d + 1e-6) continue;
            if (!psf.eval(cand).is_zero()) continue;
            if (!certified_less(Cyc(iv.first), cand) || !certified_less(cand, Cyc(iv.second)))
                continue;
            res.norm_squared = cand;
            res.norm_identified = true;
            break;
        }
    }
    if (!res.norm_identified && res.norm_hi < Rational(4))
        throw std::logic_error("ghj: norm below 2 but not a recognized 2cos(pi/n)");
    return res;
}

PrincipalGraphResult ghj_principal_graph(const PointedCoxeterGraph& p, int level_cap) {
    if (p.graph.degree(p.star) != 1)
        throw std::invalid_argument("ghj_principal_graph: star must be univalent");
    return ghj_principal_graph_at(p.graph, p.graph.nbr[p.star][0], 0, level_cap);
}

Cyc ghj_index(const PointedCoxeterGraph& p, int level_cap) {
    PrincipalGraphResult r = ghj_principal_graph(p, level_cap);
    if (!r.norm_identified)
        throw std::runtime_error("ghj_index: norm not identified exactly; certified enclosure [" +
                                 decimal_string(r.norm_lo, 8) + ", " +
                                 decimal_string(r.norm_hi, 8) + "]");
    return r.norm_squared;
}

std::pair<Subspace, Subspace> conjugated_towers(Tower& t, int n) {
    AlgElement v = t.braid_word_v(n);
    AlgElement w = t.braid_word_w(n);
    Subspace p = conjugated_floor(t, n + 1, v, n);
    Subspace q = conjugated_floor(t, n + 1, w, n);
    return {std::move(p), std::move(q)};
}

} // namespace subfac
