#pragma once

#include <optional>
#include <vector>

#include "subfac/cyclotomic.hpp"
#include "subfac/polynomial.hpp"

namespace subfac {

// runtime switch for the OpenMP kernels (env SUBFAC_SERIAL=1 forces serial)
namespace par {
bool enabled();
void set_enabled(bool on);
} // namespace par

struct Mat {
    int rows = 0, cols = 0;
    std::vector<Cyc> a; // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    static Mat identity(int n);

    Cyc& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Cyc& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const; // dispatches serial/parallel kernel
    Mat operator*(const Cyc& s) const;
    Mat conj_transpose() const;
    Mat transpose() const;
    Cyc trace() const;
};

// reference kernel and the OpenMP kernel; exact results, bit-identical
Mat mul_serial(const Mat& x, const Mat& y);
Mat mul_parallel(const Mat& x, const Mat& y);

struct Rref {
    Mat mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};
Rref rref_of(Mat m);

// one solution of A x = b if consistent
std::optional<std::vector<Cyc>> solve_linear(const Mat& A, const std::vector<Cyc>& b);
// basis of the right nullspace
std::vector<std::vector<Cyc>> nullspace(const Mat& A);
Cyc det(Mat m);
Mat inverse(const Mat& m); // throws if singular

// characteristic polynomial det(x I - M) by the Faddeev-LeVerrier recursion
Poly charpoly(const Mat& m);

// Incremental row-space tracker with transformation bookkeeping: add() keeps
// the vectors that enlarge the span, coords() expresses a vector in terms of
// exactly those kept vectors.
class Span {
  public:
    explicit Span(int ambient_dim) : ambient_(ambient_dim) {}
    int ambient() const { return ambient_; }
    int dim() const { return int(rows_.size()); }
    const std::vector<std::vector<Cyc>>& basis() const { return basis_; }

    bool add(const std::vector<Cyc>& v); // true if the span grew
    bool contains(const std::vector<Cyc>& v) const;
    std::optional<std::vector<Cyc>> coords(const std::vector<Cyc>& v) const;

  private:
    int ambient_;
    std::vector<std::vector<Cyc>> basis_; // vectors that grew the span
    std::vector<std::vector<Cyc>> rows_;  // reduced rows
    std::vector<std::vector<Cyc>> tf_;    // tf_[r]: rows_[r] as combo of basis_
    std::vector<int> pivot_;              // pivot column of rows_[r]

    // reduce v against rows_, tracking the combination; returns (residual, combo)
    std::pair<std::vector<Cyc>, std::vector<Cyc>> reduce(const std::vector<Cyc>& v) const;
};

} // namespace subfac
