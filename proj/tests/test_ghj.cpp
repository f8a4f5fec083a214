#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "subfac/approx.hpp"
#include "subfac/coxeter.hpp"
#include "subfac/ghj.hpp"
#include "subfac/linalg.hpp"
#include "subfac/subalgebra.hpp"
#include "subfac/tower.hpp"

using namespace subfac;

namespace {

long brute_count(const CoxeterGraph& g, int from, int to, int len) {
    if (len == 0) return from == to ? 1 : 0;
    long s = 0;
    for (int w : g.nbr[from]) s += brute_count(g, w, to, len - 1);
    return s;
}

typedef std::vector<std::vector<long>> LMat;

// dimension of the joint commutant of `gens` inside the full matrix algebra,
// by iterated nullspace restriction starting from all matrix units
long block_commutant_dim(const std::vector<Mat>& gens, int n) {
    std::vector<Mat> cur;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            Mat u(n, n);
            u.at(r, s) = Cyc(1);
            cur.push_back(u);
        }
    for (const Mat& g : gens) {
        if (cur.empty()) break;
        Mat c(n * n, int(cur.size()));
        for (size_t j = 0; j < cur.size(); ++j) {
            Mat com = cur[j] * g - g * cur[j];
            for (int i1 = 0; i1 < n; ++i1)
                for (int i2 = 0; i2 < n; ++i2) c.at(i1 * n + i2, int(j)) = com.at(i1, i2);
        }
        auto ns = nullspace(c);
        std::vector<Mat> nxt;
        for (const auto& v : ns) {
            Mat z(n, n);
            for (size_t j = 0; j < cur.size(); ++j)
                if (!v[j].is_zero()) z = z + cur[j] * v[j];
            nxt.push_back(std::move(z));
        }
        cur = std::move(nxt);
    }
    return long(cur.size());
}

} // namespace

TEST_CASE("walk counts match brute-force enumeration") {
    CoxeterGraph d5 = build_graph(Kind::D, 5);
    for (int len = 0; len <= 8; ++len) {
        auto c = graph_walks(d5, 0, len);
        for (int v = 0; v < d5.rank; ++v) CHECK(c[v] == brute_count(d5, 0, v, len));
    }
    // the chain A_{ell-1} for ell = 8 is the path graph A7
    CoxeterGraph a7 = build_graph(Kind::A, 7);
    for (int len = 0; len <= 8; ++len) {
        auto t = chain_walks(8, len);
        REQUIRE(t.size() == 7);
        for (int k = 0; k < 7; ++k) CHECK(t[k] == brute_count(a7, 0, k, len));
    }
    auto c6 = graph_walks(d5, 0, 6);
    CHECK(c6[0] == 34);
    CHECK(c6[2] == 14);
    auto t6 = chain_walks(8, 6);
    CHECK(t6 == std::vector<long>{5, 0, 9, 0, 5, 0, 1});
}

TEST_CASE("inclusion tower for D5 at the trivalent vertex") {
    CoxeterGraph d5 = build_graph(Kind::D, 5);
    auto lam = ghj_inclusion_tower(d5, 0, 8);

    CHECK(lam[0].rows == std::vector<int>{0});
    CHECK(lam[0].cols == std::vector<int>{0});
    CHECK(lam[0].mult == LMat{{1}});

    CHECK(lam[1].rows == std::vector<int>{1});
    CHECK(lam[1].cols == std::vector<int>{1, 3, 4});
    CHECK(lam[1].mult == LMat{{1, 1, 1}});

    CHECK(lam[2].rows == std::vector<int>{0, 2});
    CHECK(lam[2].cols == std::vector<int>{0, 2});
    CHECK(lam[2].mult == LMat{{1, 0}, {2, 1}});

    CHECK(lam[3].rows == std::vector<int>{1, 3});
    CHECK(lam[3].mult == LMat{{1, 1, 1}, {2, 1, 1}});

    CHECK(lam[4].rows == std::vector<int>{0, 2, 4});
    CHECK(lam[4].mult == LMat{{1, 0}, {2, 1}, {2, 1}});

    CHECK(lam[5].rows == std::vector<int>{1, 3, 5});
    CHECK(lam[5].mult == LMat{{1, 1, 1}, {2, 1, 1}, {1, 1, 1}});

    CHECK(lam[6].rows == std::vector<int>{0, 2, 4, 6});
    CHECK(lam[6].mult == LMat{{1, 0}, {2, 1}, {2, 1}, {1, 0}});

    // levels 7, 8 repeat levels 5, 6 (labels are capped at ell - 2 = 6)
    CHECK(lam[7].same_data(lam[5]));
    CHECK(lam[8].same_data(lam[6]));

    CHECK(lam[2].entry_squares() == 6);
    CHECK(lam[3].entry_squares() == 9);
    CHECK(lam[4].entry_squares() == 11);
    CHECK(lam[5].entry_squares() == 12);
    CHECK(lam[6].entry_squares() == 12);
}

TEST_CASE("D5 fork star: principal graph and index") {
    PointedCoxeterGraph p = parse_pointed("D5,2");
    PrincipalGraphResult r = ghj_principal_graph(p);

    CHECK(r.vertex == 0); // the star's unique neighbour is the trivalent vertex
    CHECK(r.parity == 0);
    CHECK(r.stable.rows == std::vector<int>{0, 2, 4, 6});
    CHECK(r.stable.cols == std::vector<int>{0, 2});
    CHECK(r.stable.mult == LMat{{1, 0}, {2, 1}, {2, 1}, {1, 0}});
    CHECK(r.stable_level == 6);
    CHECK(r.depth == 3);

    // Lambda^T Lambda = [[10,4],[4,2]], charpoly x^2 - 12x + 4
    CHECK(r.norm_charpoly == Poly::from_rationals({Rational(4), Rational(-12), Rational(1)}));

    Cyc d2 = p.graph.delta * p.graph.delta;
    CHECK(r.norm_identified);
    CHECK(r.norm_squared == d2 * d2);
    CHECK(r.norm_squared == Cyc(6) + Cyc(4) * Cyc::sqrt_of(2));
    CHECK(r.norm_lo < r.norm_hi);

    CHECK(ghj_index(p) == Cyc(6) + Cyc(4) * Cyc::sqrt_of(2));
}

TEST_CASE("opposite parity: different shape, same norm") {
    CoxeterGraph d5 = build_graph(Kind::D, 5);
    PrincipalGraphResult even = ghj_principal_graph_at(d5, 0, 0);
    PrincipalGraphResult odd = ghj_principal_graph_at(d5, 0, 1);

    CHECK(odd.stable.rows == std::vector<int>{1, 3, 5});
    CHECK(odd.stable.cols == std::vector<int>{1, 3, 4});
    CHECK(odd.stable.mult == LMat{{1, 1, 1}, {2, 1, 1}, {1, 1, 1}});
    CHECK(odd.stable_level == 5);
    CHECK(odd.depth == 2);
    CHECK(odd.norm_charpoly ==
          Poly::from_rationals({Rational(0), Rational(4), Rational(-12), Rational(1)}));

    CHECK(even.stable.rows.size() + even.stable.cols.size() == 6);
    CHECK(odd.stable.rows.size() + odd.stable.cols.size() == 6);
    CHECK(even.stable.rows.size() != odd.stable.rows.size());

    CHECK(odd.norm_identified);
    CHECK(odd.norm_squared == even.norm_squared);
}

TEST_CASE("A_n with an end star reproduces A_n") {
    for (int n = 2; n <= 9; ++n) {
        CAPTURE(n);
        PointedCoxeterGraph p = parse_pointed("A" + std::to_string(n));
        PrincipalGraphResult r = ghj_principal_graph(p);
        int nr = int(r.stable.rows.size()), nc = int(r.stable.cols.size());
        CHECK(nr + nc == n);
        CHECK(r.depth == n - 1);
        // the stable matrix is the staircase of a path: row i meets columns i-1, i
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j)
                CHECK(r.stable.mult[i][j] == ((j == i || j == i - 1) ? 1 : 0));
        CHECK(r.norm_identified);
        Cyc c2 = Cyc::two_cos_pi_over(unsigned(n + 1));
        CHECK(r.norm_squared == c2 * c2);
        CHECK(r.norm_squared == p.graph.delta * p.graph.delta);
    }
}

TEST_CASE("catalogue sweep: certified stabilization and exact indices") {
    // all values below were derived by running the integer recursion by hand
    // and checking unitality at the stable level
    std::map<std::string, Cyc> expected;
    for (int n = 2; n <= 11; ++n) {
        Cyc c2 = Cyc::two_cos_pi_over(unsigned(n + 1));
        expected["A" + std::to_string(n)] = c2 * c2;
    }
    expected["D4"] = Cyc(6);
    expected["D5,1"] = Cyc(4) + Cyc(2) * Cyc::sqrt_of(2);
    expected["D5,2"] = Cyc(6) + Cyc(4) * Cyc::sqrt_of(2);
    expected["D6,1"] = Cyc(5) + Cyc::sqrt_of(5);
    expected["D6,2"] = Cyc(10) + Cyc(4) * Cyc::sqrt_of(5);
    expected["D7,1"] = Cyc(4) + Cyc(2) * Cyc::sqrt_of(3);
    expected["D7,2"] = Cyc(14) + Cyc(8) * Cyc::sqrt_of(3);
    expected["E6,1"] = Cyc(9) + Cyc(5) * Cyc::sqrt_of(3);
    expected["E6,2"] = Cyc(18) + Cyc(10) * Cyc::sqrt_of(3);

    int seen = 0;
    for (const CoxeterGraph& g : catalogue(12)) {
        for (const PointedCoxeterGraph& p : pointed_variants(g)) {
            CAPTURE(p.name);
            PrincipalGraphResult r = ghj_principal_graph(p);
            CHECK(r.stable.rows.front() == 0);
            CHECK(r.depth >= 1);
            CHECK(r.norm_identified);
            auto it = expected.find(p.name);
            REQUIRE(it != expected.end());
            CHECK(r.norm_squared == it->second);
            // the other parity also stabilizes and has the same norm
            PrincipalGraphResult o = ghj_principal_graph_at(p.graph, r.vertex, 1);
            CHECK(o.norm_identified);
            CHECK(o.norm_squared == r.norm_squared);
            ++seen;
        }
    }
    CHECK(seen == int(expected.size()));
}

TEST_CASE("level cap: large Coxeter numbers fail loudly") {
    auto needs = [](const std::string& name, int cap) {
        try {
            ghj_principal_graph(parse_pointed(name), cap);
        } catch (const NotStabilized& e) {
            return e.needed_level;
        }
        return -1;
    };
    CHECK(needs("E7,1", kGhjLevelCap) == 18);
    CHECK(needs("E8,1", kGhjLevelCap) == 30);
    CHECK(needs("A15", kGhjLevelCap) == 16);
    CHECK_THROWS_AS(ghj_principal_graph(parse_pointed("E7,1")), NotStabilized);

    // with a raised cap E7 stabilizes fine
    PrincipalGraphResult r = ghj_principal_graph(parse_pointed("E7,1"), 20);
    CHECK(!r.stable.rows.empty());
    CHECK(r.depth >= 1);
    CHECK(r.norm_lo <= r.norm_hi);

    // the star must be univalent
    CoxeterGraph d5 = build_graph(Kind::D, 5);
    PointedCoxeterGraph bad{d5, 0, 0, "bad"};
    CHECK_THROWS_AS(ghj_principal_graph(bad), std::invalid_argument);
}

TEST_CASE("path model: corner commutants of the shifted Jones projections") {
    // {p e_2, ..., p e_{n-1}}' inside p A_n p, for the D5 fork corner, equals
    // the squared-entry count of the level-(n-1) inclusion matrix at the
    // trivalent vertex: the conjugation by braid words shifts the tower by
    // one step along the star's unique edge.
    PointedCoxeterGraph pd = parse_pointed("D5,2");
    Tower t = Tower::from_pointed(pd);
    auto lam = ghj_inclusion_tower(pd.graph, 0, 5);
    std::vector<long> frozen = {6, 9, 11, 12};

    for (int n = 3; n <= 6; ++n) {
        CAPTURE(n);
        const TowerLevel& l = t.level(n);
        std::vector<AlgElement> gens;
        for (int i = 2; i < n; ++i) gens.push_back(t.include(t.jones(i), n));

        long dim = 0;
        for (size_t b = 0; b < l.verts.size(); ++b) {
            std::vector<int> sel = t.walks_from(n, int(b), pd.star);
            if (sel.empty()) continue;
            int nb = int(sel.size());
            std::vector<Mat> gb;
            for (const AlgElement& g : gens) {
                Mat m(nb, nb);
                for (int i = 0; i < nb; ++i)
                    for (int j = 0; j < nb; ++j) m.at(i, j) = g.blocks[b].at(sel[i], sel[j]);
                gb.push_back(std::move(m));
            }
            dim += block_commutant_dim(gb, nb);
        }
        CHECK(dim == frozen[n - 3]);
        CHECK(dim == lam[n - 1].entry_squares());
    }
}

TEST_CASE("path model: corner TL dimensions match the chain walk squares") {
    // dim pTL_m at the D5 trivalent corner = sum of t_k(m)^2 over labels
    CoxeterGraph d5 = build_graph(Kind::D, 5);
    Tower t(d5, d5.color[0]);
    std::vector<long> want;
    for (int m = 2; m <= 5; ++m) {
        auto tk = chain_walks(d5.ell, m);
        long s = 0;
        for (long v : tk) s += v * v;
        want.push_back(s);
    }
    CHECK(want == std::vector<long>{2, 5, 14, 42});
    Corner corner(t, 0);
    for (int m = 2; m <= 5; ++m) {
        CAPTURE(m);
        std::vector<AlgElement> gens{corner.p(m)};
        for (int i = 1; i < m; ++i) gens.push_back(corner.p(m) * t.include(t.jones(i), m));
        Subspace sp = algebra_closure(t, m, gens, false);
        CHECK(sp.dim() == int(want[m - 2]));
    }

    // truncation bites: at the A3 end corner, dim pTL_3 = 4 < dim TL_3 = 5
    CoxeterGraph a3 = build_graph(Kind::A, 3);
    Tower t3(a3, a3.color[0]);
    Corner corner3(t3, 0);
    std::vector<AlgElement> g3{corner3.p(3)};
    for (int i = 1; i < 3; ++i) g3.push_back(corner3.p(3) * t3.include(t3.jones(i), 3));
    CHECK(algebra_closure(t3, 3, g3, false).dim() == 4);
    auto tk3 = chain_walks(a3.ell, 3);
    CHECK(tk3 == std::vector<long>{0, 2, 0});
}

TEST_CASE("conjugated towers: containment and commuting squares") {
    PointedCoxeterGraph pd = parse_pointed("D5,2");
    Tower t = Tower::from_pointed(pd);

    for (int n = 2; n <= 3; ++n) {
        CAPTURE(n);
        auto [pn, qn] = conjugated_towers(t, n);
        CHECK(pn.dim() == t.level(n).dim());
        CHECK(qn.dim() == t.level(n).dim());
        for (int i = 2; i <= n; ++i) {
            AlgElement ei = t.include(t.jones(i), n + 1);
            CHECK(pn.contains(ei));
            CHECK(qn.contains(ei));
        }
        CHECK(pn.contains(t.identity(n + 1)));
    }

    // E_{A_2} (E_{P_3} x) = E_{P_2} x for every x in A_3, and likewise for Q
    auto [p3, q3] = conjugated_towers(t, 2);
    Subspace p2 = conjugated_floor(t, 2, t.braid(1), 1);
    Subspace q2 = conjugated_floor(t, 2, t.braid_inv(1), 1);
    for (AlgElement& x : matrix_units(t, 3)) {
        AlgElement viaP = t.expect_floor(p3.project(x), 2);
        CHECK(viaP == p2.project(t.expect_floor(x, 2)));
        AlgElement viaQ = t.expect_floor(q3.project(x), 2);
        CHECK(viaQ == q2.project(t.expect_floor(x, 2)));
    }

    // braid word conjugation shifts the braid generators too
    for (int n = 2; n <= 3; ++n) {
        AlgElement v = t.braid_word_v(n);
        // v_n is unitary: v v^dag = 1
        CHECK(v * t.adjoint(v) == t.identity(n + 1));
        for (int i = 1; i < n; ++i) {
            AlgElement lhs = v * t.include(t.braid(i), n + 1) * t.adjoint(v);
            CHECK(lhs == t.include(t.braid(i + 1), n + 1));
        }
    }
}

TEST_CASE("degenerate ell = 3: the braid generator is a phase") {
    CoxeterGraph a2 = build_graph(Kind::A, 2);
    Tower t(a2, a2.color[0]);
    AlgElement g = t.braid(1);
    CHECK(g == t.identity(2) * Cyc::root_of_unity(3, 1));
    CHECK(g * g * g == t.identity(2));
}
