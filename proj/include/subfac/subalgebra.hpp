#pragma once

#include <optional>
#include <vector>

#include "subfac/tower.hpp"

namespace subfac {

// Subspace of a tower level, carrying the trace form <a, b> = tr(a* b).
// project() is the exact orthogonal projection via a Gram solve; when the
// subspace is a *-subalgebra this is the unique trace-preserving conditional
// expectation onto it.
class Subspace {
  public:
    Subspace(Tower& t, int level);

    Tower& tower() const { return *t_; }
    int level() const { return level_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<AlgElement>& basis() const { return basis_; }

    bool add(const AlgElement& x);  // true if the span grew
    bool contains(const AlgElement& x) const;
    std::optional<std::vector<Cyc>> coords(const AlgElement& x) const;
    AlgElement from_coords(const std::vector<Cyc>& c) const;
    AlgElement project(const AlgElement& x);

  private:
    Tower* t_;
    int level_;
    std::vector<AlgElement> basis_;
    Span span_;
    Mat gram_inv_;
    bool gram_ready_ = false;
    void ensure_gram_();
};

Subspace span_of(Tower& t, int level, const std::vector<AlgElement>& gens);

// Close the span of gens (plus the identity unless with_unit is false) under
// multiplication.
Subspace algebra_closure(Tower& t, int level, const std::vector<AlgElement>& gens,
                         bool with_unit = true);

// Trace-preserving conditional expectation onto a *-subalgebra.
AlgElement conditional_expectation(const AlgElement& x, Subspace& onto);

// Basis of {x in ambient : xg = gx for every g in gens}.
std::vector<AlgElement> commutant_in(const Subspace& ambient, const std::vector<AlgElement>& gens);
// Same with ambient all of A_level.
std::vector<AlgElement> commutant(Tower& t, int level, const std::vector<AlgElement>& gens);

// Basis of the orthogonal complement of `small_space` inside `big`.
std::vector<AlgElement> orthogonal_complement(Subspace& small_space, const Subspace& big);

// Temperley-Lieb floor <1, e_first, ..., e_{n-1}> inside A_n.
Subspace tl_floor(Tower& t, int n, int first = 1);

// Span of u x u* for x over the given elements, all included into A_n; u must
// be a unitary of A_n.  With elems the matrix units of A_m this is the floor
// u A_m u* of a conjugated tower.
Subspace conjugated_span(Tower& t, int n, const AlgElement& u,
                         const std::vector<AlgElement>& elems);
Subspace conjugated_floor(Tower& t, int n, const AlgElement& u, int floor_level);

std::vector<AlgElement> matrix_units(Tower& t, int level);

// Corner p A_n p at a vertex of the initial colour class, where p is the
// rank-one projection onto the length-zero walk at that vertex.  Walk indices
// r, s in unit() refer to positions in walks_from(n, block, star).
class Corner {
  public:
    Corner(Tower& t, int star);

    Tower& tower() const { return *t_; }
    int star() const { return star_; }
    AlgElement p(int n);   // the cut-down identity, included into A_n
    Cyc p_trace() const;   // tr(p)
    Cyc trace(const AlgElement& x) const;  // tr(x) / tr(p), the corner trace
    int dim(int n);        // dim p A_n p
    AlgElement unit(int n, int block, int r, int s);
    std::vector<AlgElement> units(int n);
    Subspace units_span(int n);
    // Per-block corner identities: the minimal central idempotents of p A_n p.
    std::vector<AlgElement> central_idempotents(int n);

  private:
    Tower* t_;
    int star_;
};

}  // namespace subfac
