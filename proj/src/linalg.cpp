#include "subfac/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subfac {

namespace par {

static bool g_enabled = [] {
    const char* s = std::getenv("SUBFAC_SERIAL");
    if (s && s[0] == '1') return false;
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}();

bool enabled() { return g_enabled; }
void set_enabled(bool on) { g_enabled = on; }

} // namespace par

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat+: shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat-: shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
}

Mat Mat::operator*(const Cyc& s) const {
    Mat r = *this;
    for (auto& x : r.a) x *= s;
    return r;
}

Mat Mat::conj_transpose() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Cyc Mat::trace() const {
    if (rows != cols) throw std::invalid_argument("trace: not square");
    Cyc t(0);
    for (int i = 0; i < rows; ++i) t += at(i, i);
    return t;
}

static void mul_row_range(const Mat& x, const Mat& y, Mat& out, int i0, int i1) {
    for (int i = i0; i < i1; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Cyc& f = x.at(i, k);
            if (f.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Cyc& g = y.at(k, j);
                if (!g.is_zero()) out.at(i, j) += f * g;
            }
        }
}

Mat mul_serial(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Mat*: shape mismatch");
    Mat out(x.rows, y.cols);
    mul_row_range(x, y, out, 0, x.rows);
    return out;
}

Mat mul_parallel(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Mat*: shape mismatch");
    Mat out(x.rows, y.cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < x.rows; ++i) mul_row_range(x, y, out, i, i + 1);
#else
    mul_row_range(x, y, out, 0, x.rows);
#endif
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    // field ops dominate, so parallelize even moderate sizes
    bool big = size_t(rows) * cols * o.cols >= 512 && rows >= 4;
    if (par::enabled() && big) return mul_parallel(*this, o);
    return mul_serial(*this, o);
}

// pivot choice: smallest total coefficient size, to limit rational growth
static size_t entry_size(const Cyc& x) {
    size_t s = 1;
    for (const auto& q : x.coeffs())
        if (q != 0) s += rational_size(q);
    return s;
}

Rref rref_of(Mat m) {
    Rref out;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int best = -1;
        size_t best_size = 0;
        for (int i = r; i < m.rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            size_t s = entry_size(m.at(i, c));
            if (best < 0 || s < best_size) {
                best = i;
                best_size = s;
            }
        }
        if (best < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(best, j), m.at(r, j));
        Cyc inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Cyc f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(m);
    return out;
}

std::optional<std::vector<Cyc>> solve_linear(const Mat& A, const std::vector<Cyc>& b) {
    if (int(b.size()) != A.rows) throw std::invalid_argument("solve_linear: size mismatch");
    Mat aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    Rref rr = rref_of(std::move(aug));
    std::vector<Cyc> x(A.cols, Cyc(0));
    for (int k = 0; k < rr.rank; ++k) {
        int pc = rr.pivot_cols[k];
        if (pc == A.cols) return std::nullopt; // pivot in the rhs column
        x[pc] = rr.mat.at(k, A.cols);
    }
    return x;
}

std::vector<std::vector<Cyc>> nullspace(const Mat& A) {
    Rref rr = rref_of(A);
    std::vector<bool> is_pivot(A.cols, false);
    for (int pc : rr.pivot_cols) is_pivot[pc] = true;
    std::vector<std::vector<Cyc>> basis;
    for (int c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Cyc> v(A.cols, Cyc(0));
        v[c] = Cyc(1);
        for (int k = 0; k < rr.rank; ++k) v[rr.pivot_cols[k]] = -rr.mat.at(k, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

Cyc det(Mat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    Cyc d(1);
    int n = m.rows;
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) return Cyc(0);
        if (sel != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Cyc inv = m.at(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Cyc f = m.at(i, c) * inv;
            for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Cyc(1);
    }
    Rref rr = rref_of(std::move(aug));
    if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1)
        throw std::domain_error("inverse: singular matrix");
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = rr.mat.at(i, n + j);
    return out;
}

Poly charpoly(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("charpoly: not square");
    int n = m.rows;
    std::vector<Cyc> c(n + 1);
    c[n] = Cyc(1);
    Mat M = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        Mat N = m * M;
        c[n - k] = N.trace() * Cyc(Rational(-1, k));
        if (k < n) {
            M = std::move(N);
            for (int i = 0; i < n; ++i) M.at(i, i) += c[n - k];
        }
    }
    return Poly(std::move(c));
}

std::pair<std::vector<Cyc>, std::vector<Cyc>> Span::reduce(const std::vector<Cyc>& v) const {
    std::vector<Cyc> w = v;
    std::vector<Cyc> combo(basis_.size(), Cyc(0));
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Cyc& lead = w[pivot_[r]];
        if (lead.is_zero()) continue;
        Cyc f = lead; // rows are pivot-normalized to 1
        for (int j = 0; j < ambient_; ++j)
            if (!rows_[r][j].is_zero()) w[j] -= f * rows_[r][j];
        for (size_t t = 0; t < tf_[r].size(); ++t)
            if (!tf_[r][t].is_zero()) combo[t] += f * tf_[r][t];
    }
    return {std::move(w), std::move(combo)};
}

bool Span::add(const std::vector<Cyc>& v) {
    if (int(v.size()) != ambient_) throw std::invalid_argument("Span::add: wrong dimension");
    auto [w, combo] = reduce(v);
    int pc = -1;
    for (int j = 0; j < ambient_; ++j)
        if (!w[j].is_zero()) {
            pc = j;
            break;
        }
    if (pc < 0) return false;
    Cyc inv = w[pc].inverse();
    for (auto& x : w) x *= inv;
    // v = sum combo_t basis_t + w_raw, so the new reduced row's combination is
    // (e_new - combo) / lead
    basis_.push_back(v);
    std::vector<Cyc> tf(basis_.size(), Cyc(0));
    for (size_t t = 0; t < combo.size(); ++t) tf[t] = -combo[t] * inv;
    tf[basis_.size() - 1] = inv;
    rows_.push_back(std::move(w));
    tf_.push_back(std::move(tf));
    pivot_.push_back(pc);
    return true;
}

bool Span::contains(const std::vector<Cyc>& v) const {
    auto [w, combo] = reduce(v);
    (void)combo;
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<std::vector<Cyc>> Span::coords(const std::vector<Cyc>& v) const {
    auto [w, combo] = reduce(v);
    for (const auto& x : w)
        if (!x.is_zero()) return std::nullopt;
    combo.resize(basis_.size(), Cyc(0));
    return combo;
}

} // namespace subfac
