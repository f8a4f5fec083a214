#include "subfac/subalgebra.hpp"

#include <stdexcept>

namespace subfac {

Subspace::Subspace(Tower& t, int level) : t_(&t), level_(level), span_(t.level(level).dim()) {}

bool Subspace::add(const AlgElement& x) {
    if (x.level != level_) throw std::invalid_argument("Subspace::add: level mismatch");
    if (!span_.add(t_->vectorize(x))) return false;
    basis_.push_back(x);
    gram_ready_ = false;
    return true;
}

bool Subspace::contains(const AlgElement& x) const { return span_.contains(t_->vectorize(x)); }

std::optional<std::vector<Cyc>> Subspace::coords(const AlgElement& x) const {
    return span_.coords(t_->vectorize(x));
}

AlgElement Subspace::from_coords(const std::vector<Cyc>& c) const {
    if (static_cast<int>(c.size()) != dim())
        throw std::invalid_argument("Subspace::from_coords: wrong length");
    AlgElement out = t_->devectorize(level_, std::vector<Cyc>(span_.ambient(), Cyc(0)));
    for (int j = 0; j < dim(); ++j)
        if (!c[j].is_zero()) out += basis_[j] * c[j];
    return out;
}

void Subspace::ensure_gram_() {
    if (gram_ready_) return;
    int d = dim();
    Mat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g.at(i, j) = t_->trace_pairing(basis_[i], basis_[j]);
    try {
        gram_inv_ = inverse(g);
    } catch (const std::domain_error&) {
        throw std::runtime_error("Subspace::project: singular Gram matrix");
    }
    gram_ready_ = true;
}

AlgElement Subspace::project(const AlgElement& x) {
    if (x.level != level_) throw std::invalid_argument("Subspace::project: level mismatch");
    if (dim() == 0) return t_->zero(level_);
    ensure_gram_();
    int d = dim();
    std::vector<Cyc> coeff(d, Cyc(0));
    for (int i = 0; i < d; ++i) {
        Cyc r = t_->trace_pairing(basis_[i], x);
        if (r.is_zero()) continue;
        for (int j = 0; j < d; ++j) coeff[j] += gram_inv_.at(j, i) * r;
    }
    return from_coords(coeff);
}

Subspace span_of(Tower& t, int level, const std::vector<AlgElement>& gens) {
    Subspace s(t, level);
    for (const auto& g : gens) s.add(g.level == level ? g : t.include(g, level));
    return s;
}

Subspace algebra_closure(Tower& t, int level, const std::vector<AlgElement>& gens,
                         bool with_unit) {
    Subspace s(t, level);
    std::vector<AlgElement> lifted;
    for (const auto& g : gens) lifted.push_back(g.level == level ? g : t.include(g, level));
    std::vector<AlgElement> fresh;
    if (with_unit) {
        AlgElement one = t.identity(level);
        if (s.add(one)) fresh.push_back(one);
    }
    for (const auto& x : lifted)
        if (s.add(x)) fresh.push_back(x);
    // closing under one-sided products by the generators closes the algebra
    while (!fresh.empty()) {
        std::vector<AlgElement> next;
        for (const auto& a : fresh)
            for (const auto& g : lifted) {
                AlgElement left = a * g;
                if (s.add(left)) next.push_back(left);
                AlgElement right = g * a;
                if (s.add(right)) next.push_back(right);
            }
        fresh = std::move(next);
    }
    return s;
}

AlgElement conditional_expectation(const AlgElement& x, Subspace& onto) {
    return onto.project(x);
}

std::vector<AlgElement> commutant_in(const Subspace& ambient, const std::vector<AlgElement>& gens) {
    Tower& t = ambient.tower();
    int level = ambient.level();
    int cols = ambient.dim();
    std::vector<std::vector<Cyc>> rows_of_cols;  // per column: stacked commutators
    rows_of_cols.reserve(cols);
    size_t stacked = 0;
    for (int j = 0; j < cols; ++j) {
        std::vector<Cyc> col;
        for (const auto& g : gens) {
            AlgElement gg = g.level == level ? g : t.include(g, level);
            AlgElement c = ambient.basis()[j] * gg - gg * ambient.basis()[j];
            std::vector<Cyc> v = t.vectorize(c);
            col.insert(col.end(), v.begin(), v.end());
        }
        stacked = col.size();
        rows_of_cols.push_back(std::move(col));
    }
    Mat m(static_cast<int>(stacked), cols);
    for (int j = 0; j < cols; ++j)
        for (size_t i = 0; i < stacked; ++i) m.at(static_cast<int>(i), j) = rows_of_cols[j][i];
    std::vector<AlgElement> out;
    for (const auto& k : nullspace(m)) out.push_back(ambient.from_coords(k));
    return out;
}

std::vector<AlgElement> commutant(Tower& t, int level, const std::vector<AlgElement>& gens) {
    Subspace full = span_of(t, level, matrix_units(t, level));
    return commutant_in(full, gens);
}

std::vector<AlgElement> orthogonal_complement(Subspace& small_space, const Subspace& big) {
    if (small_space.level() != big.level())
        throw std::invalid_argument("orthogonal_complement: level mismatch");
    Subspace keep(big.tower(), big.level());
    std::vector<AlgElement> out;
    for (const auto& b : big.basis()) {
        AlgElement r = b - small_space.project(b);
        if (!r.is_zero() && keep.add(r)) out.push_back(r);
    }
    return out;
}

Subspace tl_floor(Tower& t, int n, int first) {
    std::vector<AlgElement> gens;
    for (int i = first; i <= n - 1; ++i) gens.push_back(t.include(t.jones(i), n));
    return algebra_closure(t, n, gens, true);
}

Subspace conjugated_span(Tower& t, int n, const AlgElement& u,
                         const std::vector<AlgElement>& elems) {
    AlgElement ustar = t.adjoint(u.level == n ? u : t.include(u, n));
    AlgElement uu = u.level == n ? u : t.include(u, n);
    Subspace s(t, n);
    for (const auto& x : elems) {
        AlgElement xx = x.level == n ? x : t.include(x, n);
        s.add(uu * xx * ustar);
    }
    return s;
}

Subspace conjugated_floor(Tower& t, int n, const AlgElement& u, int floor_level) {
    return conjugated_span(t, n, u, matrix_units(t, floor_level));
}

std::vector<AlgElement> matrix_units(Tower& t, int level) {
    const TowerLevel& l = t.level(level);
    std::vector<AlgElement> out;
    for (int b = 0; b < static_cast<int>(l.verts.size()); ++b)
        for (int r = 0; r < l.block_size(b); ++r)
            for (int s = 0; s < l.block_size(b); ++s) out.push_back(t.matrix_unit(level, b, r, s));
    return out;
}

Corner::Corner(Tower& t, int star) : t_(&t), star_(star) {
    if (star < 0 || star >= t.graph().rank) throw std::invalid_argument("Corner: bad vertex");
    if (t.graph().color[star] != t.gamma0_color())
        throw std::invalid_argument("Corner: vertex not in the initial colour class");
}

AlgElement Corner::p(int n) {
    int b0 = t_->level(0).block_of(star_);
    return t_->include(t_->matrix_unit(0, b0, 0, 0), n);
}

Cyc Corner::p_trace() const { return t_->level_built(0).trace_weight[t_->level_built(0).block_of(star_)]; }

Cyc Corner::trace(const AlgElement& x) const { return t_->trace(x) / p_trace(); }

int Corner::dim(int n) {
    const TowerLevel& l = t_->level(n);
    int d = 0;
    for (int b = 0; b < static_cast<int>(l.verts.size()); ++b) {
        int c = static_cast<int>(t_->walks_from(n, b, star_).size());
        d += c * c;
    }
    return d;
}

AlgElement Corner::unit(int n, int block, int r, int s) {
    std::vector<int> w = t_->walks_from(n, block, star_);
    return t_->matrix_unit(n, block, w.at(r), w.at(s));
}

std::vector<AlgElement> Corner::units(int n) {
    const TowerLevel& l = t_->level(n);
    std::vector<AlgElement> out;
    for (int b = 0; b < static_cast<int>(l.verts.size()); ++b) {
        std::vector<int> w = t_->walks_from(n, b, star_);
        for (int r : w)
            for (int s : w) out.push_back(t_->matrix_unit(n, b, r, s));
    }
    return out;
}

Subspace Corner::units_span(int n) { return span_of(*t_, n, units(n)); }

std::vector<AlgElement> Corner::central_idempotents(int n) {
    const TowerLevel& l = t_->level(n);
    std::vector<AlgElement> out;
    for (int b = 0; b < static_cast<int>(l.verts.size()); ++b) {
        std::vector<int> w = t_->walks_from(n, b, star_);
        if (w.empty()) continue;
        AlgElement z = t_->zero(n);
        for (int k : w) z.blocks[b].at(k, k) = Cyc(1);
        out.push_back(z);
    }
    return out;
}

}  // namespace subfac
