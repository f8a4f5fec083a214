#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "subfac/cyclotomic.hpp"
#include "subfac/polynomial.hpp"

namespace subfac {

// product outside the window where the generic rules are known to hold
struct BeyondSupertransitivity : std::runtime_error {
    explicit BeyondSupertransitivity(const std::string& what) : std::runtime_error(what) {}
};

struct FusionParams {
    enum class Mode { generic, truncated };
    Mode mode = Mode::generic;
    int n = 0;              // truncated mode: labels run over V_0..V_{floor((n-2)/2)}
    long depth_valid = -1;  // generic mode: largest valid i+j, -1 for unlimited

    static FusionParams generic(long depth_valid = -1);
    static FusionParams truncated(int n);
    int top_label() const;  // -1 in generic mode
};

// multiplicity list over V_0, V_1, ...; trailing zeros are stripped
struct FusionVector {
    std::vector<long> mults;

    FusionVector() = default;
    explicit FusionVector(std::vector<long> m);
    long mult(int k) const;
    int top() const;  // largest label with nonzero multiplicity, -1 for the zero vector
    bool is_zero() const { return mults.empty(); }
    bool operator==(const FusionVector& o) const { return mults == o.mults; }
    bool operator!=(const FusionVector& o) const { return !(*this == o); }
    FusionVector& operator+=(const FusionVector& o);
    FusionVector operator+(const FusionVector& o) const;
    FusionVector operator*(long c) const;
};

FusionVector fuse(int i, int j, const FusionParams& params);
FusionVector fuse_vectors(const FusionVector& u, const FusionVector& v,
                          const FusionParams& params);

// dim V_k as a polynomial in the index, and its exact evaluations
Poly dim_poly(int k);
Cyc dim_irrep(int k, const Cyc& gamma);
Cyc dim_vector(const FusionVector& v, const Cyc& gamma);

// dimension of the endomorphism algebra of a multiplicity module
long hom_dimension_count(const FusionVector& v);

std::string to_string(const FusionVector& v);

// two-label coarse ring: Va Va = 2Va, Va Vb = Vb Va = 2Vb, Vb Vb = 2Va + 4Vb
struct CoarseVector {
    long a = 0, b = 0;
    bool operator==(const CoarseVector& o) const { return a == o.a && b == o.b; }
};
CoarseVector coarse_fuse(const CoarseVector& u, const CoarseVector& v);
std::string to_string(const CoarseVector& v);

}  // namespace subfac
