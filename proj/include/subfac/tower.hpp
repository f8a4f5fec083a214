#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subfac/coxeter.hpp"
#include "subfac/linalg.hpp"

namespace subfac {

// Path-model tower of finite-dimensional algebras A_0 c A_1 c A_2 c ...
// attached to a bipartite graph.  Level n has one matrix block per vertex
// reachable by a length-n walk from the initial colour class Gamma_0, and the
// block at vertex v is indexed by those walks (stored explicitly as vertex
// sequences of length n+1).  Walks are ordered recursively: level-(n-1) blocks
// in vertex order, walks within a block in order, each extended to its
// neighbours in vertex order.
//
// The Markov trace assigns a diagonal matrix unit in the block at v the
// weight mu(v) / (delta^n * S), where mu is the Perron-Frobenius weighting of
// the graph and S is the sum of mu over Gamma_0, so tr(1) = 1 at every level
// and the trace is compatible with the inclusions.
//
// Elements are stored in a non-selfadjoint gauge: the *-operation is
//   (x*)_{xi,eta} = (w(xi) / w(eta)) * conj(x_{eta,xi}),
// with w(xi) the product of mu over the vertices of the walk xi.  In this
// gauge the Jones projection e_i (an element of A_{i+1}) has the rational
// entries mu(xi_i) / (delta * mu(xi_{i+1})) and no square roots are needed.

struct TowerLevel {
    int n = 0;
    std::vector<int> verts;  // vertex ids with at least one walk, ascending
    // paths[b][k] = k-th walk landing at verts[b], as n+1 vertex ids
    std::vector<std::vector<std::vector<int>>> paths;
    // parent[b][k] = (block, walk) of the length n-1 prefix; empty at level 0
    std::vector<std::vector<std::pair<int, int>>> parent;
    std::vector<Cyc> trace_weight;  // weight of a diagonal unit in block b
    std::vector<std::vector<Cyc>> path_weight;  // w(xi) per walk

    int block_of(int v) const;  // index into verts, -1 if absent
    int block_size(int b) const { return static_cast<int>(paths[b].size()); }
    int dim() const;  // sum of squared block sizes
};

// Element of A_n: one matrix per block of level n, aligned with verts.
struct AlgElement {
    int level = 0;
    std::vector<Mat> blocks;

    bool is_zero() const;
    bool operator==(const AlgElement& o) const;
    bool operator!=(const AlgElement& o) const { return !(*this == o); }
    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator*(const AlgElement& o) const;
    AlgElement operator*(const Cyc& s) const;
    AlgElement operator-() const;
    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
};

class Tower {
  public:
    static constexpr int kDefaultLevelCap = 12;

    Tower(CoxeterGraph g, int gamma0_color, int level_cap = kDefaultLevelCap);

    // Gamma_0 is the colour class away from the trivalent vertex (types D and
    // E), or the class of vertex 0 (type A).
    static Tower from_graph(const CoxeterGraph& g, int level_cap = kDefaultLevelCap);
    // Gamma_0 is the colour class of the starred vertex.
    static Tower from_pointed(const PointedCoxeterGraph& p, int level_cap = kDefaultLevelCap);

    const CoxeterGraph& graph() const { return g_; }
    int gamma0_color() const { return color0_; }
    const Cyc& delta() const { return g_.delta; }
    const Cyc& tau() const { return tau_; }  // delta^{-2}
    int level_cap() const { return cap_; }

    int top_level() const { return static_cast<int>(levels_.size()) - 1; }
    const TowerLevel& level(int n);  // extends the tower on demand
    const TowerLevel& level_built(int n) const;  // requires the level to exist
    void extend_to(int n);

    AlgElement zero(int n);
    AlgElement identity(int n);
    AlgElement matrix_unit(int n, int block, int r, int s);
    AlgElement vertex_projection(int n, int v);

    // Jones projection e_i, an element of A_{i+1} (i >= 1).
    AlgElement jones(int i);
    // Braid element g_i = (t+1) e_i - 1 with t a primitive ell-th root of
    // unity, and its inverse (t^{-1}+1) e_i - 1; both in A_{i+1}.
    AlgElement braid(int i);
    AlgElement braid_inv(int i);
    // v_n = g_1 g_2 ... g_n and w_n = g_1^{-1} g_2^{-1} ... g_n^{-1} in A_{n+1}.
    AlgElement braid_word_v(int n);
    AlgElement braid_word_w(int n);

    AlgElement include(const AlgElement& x, int to_level);
    AlgElement adjoint(const AlgElement& x) const;
    Cyc trace(const AlgElement& x) const;
    // tr(a* x), computed entrywise (no matrix product).
    Cyc trace_pairing(const AlgElement& a, const AlgElement& x) const;
    // Trace-preserving conditional expectation onto the floor A_m, m <= level.
    AlgElement expect_floor(const AlgElement& x, int to_level) const;

    // Walks in block b of level n whose first vertex is start (for corners).
    std::vector<int> walks_from(int n, int block, int start) const;

    std::vector<Cyc> vectorize(const AlgElement& x) const;
    AlgElement devectorize(int n, const std::vector<Cyc>& v);

  private:
    CoxeterGraph g_;
    int color0_;
    int cap_;
    Cyc tau_;
    Cyc sum0_;                    // sum of mu over Gamma_0
    std::vector<Cyc> delta_pow_;  // delta^n
    std::vector<TowerLevel> levels_;

    void extend_once_();
    AlgElement zero_at_(const TowerLevel& l) const;
};

}  // namespace subfac
