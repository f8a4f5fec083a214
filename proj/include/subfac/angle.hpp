#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subfac/coxeter.hpp"
#include "subfac/cyclotomic.hpp"
#include "subfac/polynomial.hpp"
#include "subfac/subalgebra.hpp"
#include "subfac/tower.hpp"

namespace subfac {

// Raised when a structural hypothesis of a computation fails in the model:
// an orthogonal complement that should be a line is not, or a projection
// required to exist does not.  The CLI maps this to exit code 2.
struct HypothesisFailure : std::runtime_error {
    explicit HypothesisFailure(const std::string& what) : std::runtime_error(what) {}
};

struct AngleResult {
    std::string method;  // "closed_form" | "path_oracle" | "simpler"
    Cyc cos_value;       // |cos| of the nontrivial angle, exact
    // named exact quantities the method produced along the way
    std::vector<std::pair<std::string, Cyc>> witnesses;
};

// |cos((2d+3) pi / ell)| / cos(pi / ell) where d is the arm distance from the
// star to the trivalent vertex.  Types D and E only.
AngleResult angle_closed_form(const PointedCoxeterGraph& p);

// Path-model computation: the line y in pA_{d+1}p orthogonal to the cut
// Temperley-Lieb floor, conjugated into the two shifted towers by the braid
// words v = g_1...g_{d+1} and w = g_1^{-1}...g_{d+1}^{-1}; the cosine is
// |tr(v y v^* w y w^*)| / tr(y^* y).  Throws HypothesisFailure when the
// complement is not one-dimensional.
AngleResult angle_path_oracle(const PointedCoxeterGraph& p);

// Real-form construction: the projection f in pA_2p with tr(f) = tau,
// f pe_1 = 0, pe_2 f pe_2 = tau pe_2, f pe_2 f = tau f, and the angle cosine
// tau/(1-tau) obtained from x = f - tau p.  Throws HypothesisFailure when no
// such f exists (this happens: the required equal-trace partner of pe_1 is a
// fork-symmetry artifact and the short-arm E6 star has none).
AngleResult simpler_quadrilateral(const PointedCoxeterGraph& p);

// The four corner subspaces of the quadrilateral at a level: the corner
// algebra pA_Lp, the cut floor pTL2_L, and the conjugated floors pP_Lp and
// pQ_Lp (P_L = v A_{L-1} v^*, Q_L = w A_{L-1} w^*).
struct QuadFloors {
    Subspace ambient;
    Subspace tl2;
    Subspace pfl;
    Subspace qfl;
};

QuadFloors quadrilateral_floors(Tower& t, int star, int level);

// The cut full Temperley-Lieb floor <p, pe_1, ..., pe_{L-1}> (the corner of
// the tower generated from e_1 on; with first = 2 this is the tl2 floor).
Subspace corner_tl_floor(Tower& t, int star, int level, int first = 1);

struct SpectrumEntry {
    bool exact = false;  // eigenvalue identified as an explicit cyclotomic
    Cyc value;           // meaningful when exact
    Poly factor;         // monic exact factor of the charpoly carrying this root
    int multiplicity = 0;
    Rational lo, hi;     // certified enclosure of the eigenvalue
};

struct SpectrumResult {
    std::vector<SpectrumEntry> entries;  // ascending by eigenvalue
    Cyc operator_trace;                  // trace of E_P E_Q E_P on the ambient
};

// Exact spectrum of E_P E_Q E_P acting on `ambient` with the trace form.
// `hints` are extra exact candidates tried when identifying irrational roots.
SpectrumResult angle_spectrum_finite(Subspace& ambient, Subspace& tl2, Subspace& pfl,
                                     Subspace& qfl, const std::vector<Cyc>& hints = {});

}  // namespace subfac
