#pragma once

#include <string>
#include <vector>

#include "subfac/cyclotomic.hpp"

namespace subfac {

// Simply laced Coxeter-Dynkin graphs A_n, D_n, E_6/7/8 with exact
// Perron-Frobenius data over Q(zeta_{2 ell}).
//
// Vertex ids are fixed so serialized output is stable:
//   A_n : path 0 - 1 - ... - (n-1)
//   D_n : 0 = trivalent vertex; 1 .. n-3 = long arm outward (n-3 = end);
//         n-2, n-1 = the fork pair
//   E_n : 0 = trivalent vertex; arms outward in decreasing length:
//         E6: 1,2 / 3,4 / 5    E7: 1,2,3 / 4,5 / 6    E8: 1,2,3,4 / 5,6 / 7

enum class Kind { A, D, E };

struct CoxeterGraph {
    Kind kind = Kind::A;
    int rank = 0;
    int ell = 0;                       // Coxeter number
    std::string name;                  // "A7", "D5", "E6"
    std::vector<std::vector<int>> nbr; // sorted adjacency lists
    std::vector<int> color;            // bipartition: parity of distance to 0
    int trivalent = -1;                // -1 for type A
    int base = 0;                      // PF normalization vertex, pf[base] = 1
    Cyc delta;                         // 2 cos(pi/ell), the graph norm
    std::vector<Cyc> pf;               // exact PF weights

    bool adjacent(int u, int v) const;
    int degree(int v) const { return int(nbr[v].size()); }
    int distance(int u, int v) const; // hops, BFS
    std::vector<int> univalent() const;
};

// A graph with a starred univalent vertex.  pf is renormalized so that
// pf[star] = 1; towers built from a pointed graph use the star's color class
// as Gamma_0.
struct PointedCoxeterGraph {
    CoxeterGraph graph;
    int star = 0;
    int d = -1;       // distance from star to the trivalent vertex, -1 for A
    std::string name; // "D5,2"
};

CoxeterGraph build_graph(Kind kind, int n);

// One variant per univalent-vertex orbit under the graph symmetry, numbered
// by decreasing d: D_{n,1} stars the long-arm end, D_{n,2} a fork vertex,
// and E_{6,1}/E_{6,2}, E_{7,1..3}, E_{8,1..3} likewise.  Type A has a single
// variant (the two ends are symmetric), as does D_4.
std::vector<PointedCoxeterGraph> pointed_variants(const CoxeterGraph& g);

int distance_to_trivalent(const PointedCoxeterGraph& p); // throws for type A

// Name grammar "<Kind><rank>[,variant]": "A7", "D5", "D5,2", "E6,1".
CoxeterGraph parse_graph(const std::string& name);
// The variant may be omitted only when the graph has a single one, so "A7"
// means "A7,1" but "D5" alone is rejected.
PointedCoxeterGraph parse_pointed(const std::string& name);

// all catalogue graphs with Coxeter number <= max_ell
std::vector<CoxeterGraph> catalogue(int max_ell = 30);

} // namespace subfac
