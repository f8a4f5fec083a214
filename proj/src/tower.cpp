#include "subfac/tower.hpp"

#include <map>
#include <stdexcept>

namespace subfac {

int TowerLevel::block_of(int v) const {
    for (int b = 0; b < static_cast<int>(verts.size()); ++b)
        if (verts[b] == v) return b;
    return -1;
}

int TowerLevel::dim() const {
    int d = 0;
    for (const auto& p : paths) d += static_cast<int>(p.size()) * static_cast<int>(p.size());
    return d;
}

bool AlgElement::is_zero() const {
    for (const auto& m : blocks)
        if (!m.is_zero()) return false;
    return true;
}

bool AlgElement::operator==(const AlgElement& o) const {
    if (level != o.level || blocks.size() != o.blocks.size()) return false;
    for (size_t b = 0; b < blocks.size(); ++b)
        if (!(blocks[b] == o.blocks[b])) return false;
    return true;
}

static void check_same_level(const AlgElement& x, const AlgElement& y, const char* what) {
    if (x.level != y.level || x.blocks.size() != y.blocks.size())
        throw std::invalid_argument(std::string(what) + ": elements live at different levels");
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    check_same_level(*this, o, "AlgElement+");
    AlgElement r = *this;
    for (size_t b = 0; b < blocks.size(); ++b) r.blocks[b] = r.blocks[b] + o.blocks[b];
    return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    check_same_level(*this, o, "AlgElement-");
    AlgElement r = *this;
    for (size_t b = 0; b < blocks.size(); ++b) r.blocks[b] = r.blocks[b] - o.blocks[b];
    return r;
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
    check_same_level(*this, o, "AlgElement*");
    AlgElement r;
    r.level = level;
    r.blocks.reserve(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) r.blocks.push_back(blocks[b] * o.blocks[b]);
    return r;
}

AlgElement AlgElement::operator*(const Cyc& s) const {
    AlgElement r = *this;
    for (auto& m : r.blocks) m = m * s;
    return r;
}

AlgElement AlgElement::operator-() const { return *this * Cyc(-1); }

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    *this = *this + o;
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    *this = *this - o;
    return *this;
}

Tower::Tower(CoxeterGraph g, int gamma0_color, int level_cap)
    : g_(std::move(g)), color0_(gamma0_color), cap_(level_cap) {
    if (color0_ != 0 && color0_ != 1) throw std::invalid_argument("Tower: colour must be 0 or 1");
    if (cap_ < 1) throw std::invalid_argument("Tower: level cap must be at least 1");
    Cyc one(1);
    tau_ = one / (g_.delta * g_.delta);
    sum0_ = Cyc(0);
    for (int v = 0; v < g_.rank; ++v)
        if (g_.color[v] == color0_) sum0_ += g_.pf[v];
    delta_pow_.push_back(one);

    TowerLevel l0;
    l0.n = 0;
    for (int v = 0; v < g_.rank; ++v) {
        if (g_.color[v] != color0_) continue;
        l0.verts.push_back(v);
        l0.paths.push_back({{v}});
        l0.parent.emplace_back();
        l0.trace_weight.push_back(g_.pf[v] / sum0_);
        l0.path_weight.push_back({g_.pf[v]});
    }
    if (l0.verts.empty()) throw std::invalid_argument("Tower: empty initial colour class");
    levels_.push_back(std::move(l0));
}

Tower Tower::from_graph(const CoxeterGraph& g, int level_cap) {
    int c = g.color[0];
    if (g.trivalent >= 0) c = 1 - g.color[g.trivalent];
    return Tower(g, c, level_cap);
}

Tower Tower::from_pointed(const PointedCoxeterGraph& p, int level_cap) {
    return Tower(p.graph, p.graph.color[p.star], level_cap);
}

void Tower::extend_once_() {
    const TowerLevel& prev = levels_.back();
    int n = prev.n + 1;
    if (n > cap_)
        throw std::runtime_error("tower level cap " + std::to_string(cap_) +
                                 " exceeded; raise the cap to go deeper");
    delta_pow_.push_back(delta_pow_.back() * g_.delta);

    TowerLevel l;
    l.n = n;
    std::vector<char> present(g_.rank, 0);
    for (int v : prev.verts)
        for (int w : g_.nbr[v]) present[w] = 1;
    for (int v = 0; v < g_.rank; ++v)
        if (present[v]) l.verts.push_back(v);

    for (int w : l.verts) {
        std::vector<std::vector<int>> ps;
        std::vector<std::pair<int, int>> par;
        std::vector<Cyc> pw;
        for (int b = 0; b < static_cast<int>(prev.verts.size()); ++b) {
            if (!g_.adjacent(prev.verts[b], w)) continue;
            for (int k = 0; k < prev.block_size(b); ++k) {
                std::vector<int> walk = prev.paths[b][k];
                walk.push_back(w);
                ps.push_back(std::move(walk));
                par.emplace_back(b, k);
                pw.push_back(prev.path_weight[b][k] * g_.pf[w]);
            }
        }
        l.paths.push_back(std::move(ps));
        l.parent.push_back(std::move(par));
        l.path_weight.push_back(std::move(pw));
        l.trace_weight.push_back(g_.pf[w] / (delta_pow_[n] * sum0_));
    }
    levels_.push_back(std::move(l));
}

void Tower::extend_to(int n) {
    while (top_level() < n) extend_once_();
}

const TowerLevel& Tower::level(int n) {
    extend_to(n);
    return levels_[n];
}

const TowerLevel& Tower::level_built(int n) const {
    if (n < 0 || n > top_level()) throw std::out_of_range("Tower::level_built: level not built");
    return levels_[n];
}

AlgElement Tower::zero_at_(const TowerLevel& l) const {
    AlgElement x;
    x.level = l.n;
    for (int b = 0; b < static_cast<int>(l.verts.size()); ++b) {
        int s = l.block_size(b);
        x.blocks.emplace_back(s, s);
    }
    return x;
}

AlgElement Tower::zero(int n) { return zero_at_(level(n)); }

AlgElement Tower::identity(int n) {
    AlgElement x = zero(n);
    for (auto& m : x.blocks) m = Mat::identity(m.rows);
    return x;
}

AlgElement Tower::matrix_unit(int n, int block, int r, int s) {
    AlgElement x = zero(n);
    x.blocks.at(block).at(r, s) = Cyc(1);
    return x;
}

AlgElement Tower::vertex_projection(int n, int v) {
    const TowerLevel& l = level(n);
    int b = l.block_of(v);
    if (b < 0) throw std::invalid_argument("vertex_projection: vertex absent at this level");
    AlgElement x = zero(n);
    x.blocks[b] = Mat::identity(l.block_size(b));
    return x;
}

AlgElement Tower::jones(int i) {
    if (i < 1) throw std::invalid_argument("jones: index must be >= 1");
    extend_to(i + 1);
    const TowerLevel& l = levels_[i + 1];
    const TowerLevel& lm = levels_[i];
    const TowerLevel& lg = levels_[i - 1];
    AlgElement e = zero_at_(l);
    for (int b = 0; b < static_cast<int>(l.verts.size()); ++b) {
        int v = l.verts[b];
        // Group walks with xi_{i-1} = xi_{i+1} = v by their length i-1 prefix;
        // within a group e_i acts with entries mu(xi_i) / (delta * mu(v)).
        std::map<std::pair<int, int>, std::vector<int>> groups;
        for (int r = 0; r < l.block_size(b); ++r) {
            auto [pb, pk] = l.parent[b][r];
            auto gp = lm.parent[pb][pk];
            if (lg.verts[gp.first] != v) continue;
            groups[gp].push_back(r);
        }
        Cyc dv = g_.delta * g_.pf[v];
        for (const auto& [gp, rs] : groups) {
            for (int r : rs) {
                Cyc entry = g_.pf[l.paths[b][r][i]] / dv;
                for (int s : rs) e.blocks[b].at(r, s) = entry;
            }
        }
    }
    return e;
}

AlgElement Tower::braid(int i) {
    Cyc t = Cyc::root_of_unity(g_.ell, 1);
    AlgElement e = jones(i);
    return e * (t + Cyc(1)) - identity(i + 1);
}

AlgElement Tower::braid_inv(int i) {
    Cyc t = Cyc::root_of_unity(g_.ell, 1);
    AlgElement e = jones(i);
    return e * (t.inverse() + Cyc(1)) - identity(i + 1);
}

AlgElement Tower::braid_word_v(int n) {
    if (n < 1) throw std::invalid_argument("braid_word_v: n must be >= 1");
    AlgElement x = include(braid(1), n + 1);
    for (int i = 2; i <= n; ++i) x = x * include(braid(i), n + 1);
    return x;
}

AlgElement Tower::braid_word_w(int n) {
    if (n < 1) throw std::invalid_argument("braid_word_w: n must be >= 1");
    AlgElement x = include(braid_inv(1), n + 1);
    for (int i = 2; i <= n; ++i) x = x * include(braid_inv(i), n + 1);
    return x;
}

AlgElement Tower::include(const AlgElement& x, int to_level) {
    if (to_level < x.level) throw std::invalid_argument("include: target below element level");
    extend_to(to_level);
    AlgElement y = x;
    for (int m = x.level; m < to_level; ++m) {
        const TowerLevel& l = levels_[m + 1];
        AlgElement z = zero_at_(l);
        for (int b = 0; b < static_cast<int>(l.verts.size()); ++b) {
            int sz = l.block_size(b);
            for (int r = 0; r < sz; ++r) {
                auto [ib, ik] = l.parent[b][r];
                for (int s = 0; s < sz; ++s) {
                    auto [jb, jk] = l.parent[b][s];
                    if (ib != jb) continue;
                    const Cyc& val = y.blocks[ib].at(ik, jk);
                    if (!val.is_zero()) z.blocks[b].at(r, s) = val;
                }
            }
        }
        y = std::move(z);
    }
    return y;
}

AlgElement Tower::adjoint(const AlgElement& x) const {
    const TowerLevel& l = level_built(x.level);
    AlgElement y = zero_at_(l);
    for (int b = 0; b < static_cast<int>(l.verts.size()); ++b) {
        int sz = l.block_size(b);
        for (int r = 0; r < sz; ++r)
            for (int s = 0; s < sz; ++s) {
                const Cyc& val = x.blocks[b].at(s, r);
                if (val.is_zero()) continue;
                y.blocks[b].at(r, s) = (l.path_weight[b][r] / l.path_weight[b][s]) * val.conj();
            }
    }
    return y;
}

Cyc Tower::trace(const AlgElement& x) const {
    const TowerLevel& l = level_built(x.level);
    Cyc t(0);
    for (int b = 0; b < static_cast<int>(l.verts.size()); ++b)
        t += l.trace_weight[b] * x.blocks[b].trace();
    return t;
}

Cyc Tower::trace_pairing(const AlgElement& a, const AlgElement& x) const {
    if (a.level != x.level) throw std::invalid_argument("trace_pairing: level mismatch");
    const TowerLevel& l = level_built(a.level);
    Cyc t(0);
    for (int b = 0; b < static_cast<int>(l.verts.size()); ++b) {
        int sz = l.block_size(b);
        for (int s = 0; s < sz; ++s)
            for (int r = 0; r < sz; ++r) {
                const Cyc& av = a.blocks[b].at(s, r);
                if (av.is_zero()) continue;
                const Cyc& xv = x.blocks[b].at(s, r);
                if (xv.is_zero()) continue;
                t += l.trace_weight[b] * (l.path_weight[b][r] / l.path_weight[b][s]) *
                     av.conj() * xv;
            }
    }
    return t;
}

AlgElement Tower::expect_floor(const AlgElement& x, int to_level) const {
    if (to_level > x.level) throw std::invalid_argument("expect_floor: target above element level");
    AlgElement y = x;
    for (int m = x.level; m > to_level; --m) {
        const TowerLevel& l = level_built(m);
        const TowerLevel& lp = level_built(m - 1);
        AlgElement z = zero_at_(lp);
        for (int b = 0; b < static_cast<int>(l.verts.size()); ++b) {
            Cyc ratio = Cyc(0);
            int ratio_for = -1;
            int sz = l.block_size(b);
            for (int r = 0; r < sz; ++r) {
                auto [ib, ik] = l.parent[b][r];
                for (int s = 0; s < sz; ++s) {
                    auto [jb, jk] = l.parent[b][s];
                    if (ib != jb) continue;
                    const Cyc& val = y.blocks[b].at(r, s);
                    if (val.is_zero()) continue;
                    if (ratio_for != ib) {
                        ratio = l.trace_weight[b] / lp.trace_weight[ib];
                        ratio_for = ib;
                    }
                    z.blocks[ib].at(ik, jk) += val * ratio;
                }
            }
        }
        y = std::move(z);
    }
    return y;
}

std::vector<int> Tower::walks_from(int n, int block, int start) const {
    const TowerLevel& l = level_built(n);
    std::vector<int> out;
    for (int k = 0; k < l.block_size(block); ++k)
        if (l.paths[block][k][0] == start) out.push_back(k);
    return out;
}

std::vector<Cyc> Tower::vectorize(const AlgElement& x) const {
    std::vector<Cyc> v;
    for (const auto& m : x.blocks) v.insert(v.end(), m.a.begin(), m.a.end());
    return v;
}

AlgElement Tower::devectorize(int n, const std::vector<Cyc>& v) {
    AlgElement x = zero(n);
    size_t pos = 0;
    for (auto& m : x.blocks) {
        if (pos + m.a.size() > v.size()) throw std::invalid_argument("devectorize: vector too short");
        std::copy(v.begin() + pos, v.begin() + pos + m.a.size(), m.a.begin());
        pos += m.a.size();
    }
    if (pos != v.size()) throw std::invalid_argument("devectorize: vector too long");
    return x;
}

}  // namespace subfac
