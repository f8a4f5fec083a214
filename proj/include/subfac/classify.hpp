#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subfac/coxeter.hpp"
#include "subfac/cyclotomic.hpp"
#include "subfac/polynomial.hpp"

namespace subfac {

// quadrilateral N in P,Q in M with alpha = [P:N], beta = [M:P], gamma = [M:N]
struct QuadData {
    Cyc alpha, beta, gamma;
    std::optional<Cyc> tr_eP, tr_eQ, tr_ePeQ, tr_ePQ;
    std::optional<bool> commuting, cocommuting;
};
void validate(const QuadData& q);  // gamma = alpha beta, traces in (0,1]

// tr(e_PQ) tr(e_P e_Q) = tr(e_P) tr(e_Q)
Cyc trace_multiplication_formula(const Cyc& trP, const Cyc& trQ, const Cyc& trPQproduct);

// coefficient in e_P e_Q e_P = e_N + lambda (e_P - e_N)
Cyc lambda_angle(const Cyc& alpha, const Cyc& tr_dual_PQ);

// dim_M L^2(PbarQbar + QbarPbar) for a cocommuting quadrilateral
Cyc cocommuting_dim_formula(const Cyc& alpha, const Cyc& beta, const Cyc& gamma);

struct AdmissibleResult {
    bool admissible = false;
    int n = 0;  // matching 4cos^2(pi/n) when there is one
    std::string witness;
};
// certified decision: x >= 4, an exact 4cos^2(pi/n) match, or a strict
// bracket between consecutive index values
AdmissibleResult admissible_index(const Cyc& x, int n_max = 200);

struct ObstructionResult {
    bool feasible = false;
    long best_m = 0, best_n = 0, best_value = 0, bound = 0;
};
// integer search: m + n = 6 with bound >= 20(m+n) + 12(m^2+n^2)
ObstructionResult a11_obstruction(long bound = 196);

// largest k <= cap with closed 2j-walk counts at base equal to the Catalan
// numbers for all j <= k
int graph_supertransitivity(const CoxeterGraph& g, int base, int cap = 8);

enum class EliminationReason {
    survivor,
    inadmissible_index,
    pimsner_popa,
    bratteli_obstruction,
    duality_contradiction,
};
std::string to_string(EliminationReason r);

struct CaseCertificate {
    std::string label;
    Poly fixed_point;  // cleared-denominator fixed-point polynomial (may be zero)
    EliminationReason reason = EliminationReason::survivor;
    bool survives = false;
    std::vector<Cyc> indices;          // exact surviving indices
    std::vector<std::string> checks;   // machine-checked facts; unverified steps marked axiom (external)
    std::optional<QuadData> data;
};

struct ClassificationReport {
    std::string branch;
    std::vector<CaseCertificate> cases;
};

// the fixed-point polynomial c x^3 + (b-5c-1) x^2 + (2-3b+6c) x + (b-c-1)
Poly fixed_point_poly(int b, int c);
// x^2 (f_{b,c} - x)'(x) rewritten at x = 2+u; all coefficients nonnegative
Poly monotonicity_shift(int b, int c);

ClassificationReport enumerate_noncocommuting();
ClassificationReport cocommuting_branch();

// cos^2 of the common angle of four distinct equiangular lines in C^2
Cyc four_equiangular_projections();

}  // namespace subfac
