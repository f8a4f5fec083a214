#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "subfac/coxeter.hpp"
#include "subfac/polynomial.hpp"
#include "subfac/subalgebra.hpp"

namespace subfac {

// Inclusion matrix of the Temperley-Lieb subalgebra inside the path-algebra
// corner at one tower level.  Rows are TL labels (chain positions, parity =
// level mod 2), columns are graph vertices reachable at that level, entries
// are multiplicities.
struct InclusionMatrix {
    int level = 0;
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<std::vector<long>> mult;

    InclusionMatrix stripped() const; // drop all-zero rows
    bool same_data(const InclusionMatrix& o) const; // rows/cols/mult, not level
    long entry_squares() const;
};

struct NotStabilized : std::runtime_error {
    int needed_level;
    int level_cap;
    NotStabilized(int needed, int cap);
};

inline constexpr int kGhjLevelCap = 14;

// Stable bipartite inclusion graph with the exact norm data of its matrix.
// The distinguished vertex is the TL row with label 0 (present exactly at
// parity 0, the convention that yields the principal graph).
struct PrincipalGraphResult {
    CoxeterGraph graph;
    int vertex = 0; // starting vertex of the recursion
    int parity = 0;
    InclusionMatrix stable;
    int stable_level = 0; // first level whose stripped matrix is the stable one
    int depth = 0;        // graph eccentricity of the lowest TL row
    Poly norm_charpoly;   // characteristic polynomial of Lambda^T Lambda
    Cyc norm_squared;     // exact top root, meaningful when norm_identified
    bool norm_identified = false;
    Rational norm_lo, norm_hi; // certified enclosure of the top root
};

// Walk counts: on the graph starting at `from`, and on the A_{ell-1} chain
// starting at position 0 (positions 0 .. ell-2).
std::vector<long> graph_walks(const CoxeterGraph& g, int from, int length);
std::vector<long> chain_walks(int ell, int length);

// Inclusion matrices Lambda_0 .. Lambda_{up_to_level} for the tower started
// at `vertex`, built by integer recursion.  Every level is certified against
// the walk counts (unitality) and against the adjacency intertwiners; a
// violation throws std::logic_error.
std::vector<InclusionMatrix> ghj_inclusion_tower(const CoxeterGraph& g, int vertex,
                                                 int up_to_level);

// Stabilized inclusion graph for the tower started at `vertex`.  Throws
// NotStabilized when stabilization cannot be certified at or below the cap.
PrincipalGraphResult ghj_principal_graph_at(const CoxeterGraph& g, int vertex,
                                            int parity = 0, int level_cap = kGhjLevelCap);

// Principal graph of the subfactor built from a pointed graph: the star must
// be univalent and the recursion runs at its unique neighbour.
PrincipalGraphResult ghj_principal_graph(const PointedCoxeterGraph& p,
                                         int level_cap = kGhjLevelCap);

// Index of that subfactor: the squared norm of the principal graph.  Throws
// if the norm was not identified exactly.
Cyc ghj_index(const PointedCoxeterGraph& p, int level_cap = kGhjLevelCap);

// P_{n+1} = v_n A_n v_n^* and Q_{n+1} = w_n A_n w_n^* inside A_{n+1}, where
// v_n, w_n are the braid words g_1 ... g_n and g_1^{-1} ... g_n^{-1}.
std::pair<Subspace, Subspace> conjugated_towers(Tower& t, int n);

} // namespace subfac
