#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "subfac/angle.hpp"
#include "subfac/classify.hpp"
#include "subfac/coxeter.hpp"
#include "subfac/fusion.hpp"
#include "subfac/ghj.hpp"
#include "subfac/tower.hpp"

namespace subfac {

using Json = nlohmann::ordered_json;

// Human-readable radical form over Q(sqrt 2, sqrt 3, sqrt 5) when the value
// lies in that field, e.g. "6 + 4*sqrt(2)" or "3/2 + 1/2*sqrt(5)".
std::optional<std::string> radical_string(const Cyc& v);

// {"order", "coeffs", "radical"?, "approx"}: exact coefficient list in the
// power basis of Q(zeta_order) plus a decimal approximation
Json cyc_json(const Cyc& v, int digits);

Json graph_json(const CoxeterGraph& g, int digits);
Json pointed_json(const PointedCoxeterGraph& p, int digits);
Json inclusion_json(const InclusionMatrix& m);
Json principal_graph_json(const PrincipalGraphResult& r, int digits);
Json angle_json(const AngleResult& r, int digits);
Json spectrum_json(const SpectrumResult& r, int digits);
Json fusion_json(const FusionVector& v);
Json quad_json(const QuadData& q, int digits);
Json report_json(const ClassificationReport& r, int digits);
Json tower_json(Tower& t, int up_to_level, int digits);

std::string graph_dot(const CoxeterGraph& g, int star = -1);
std::string principal_graph_dot(const PrincipalGraphResult& r);

}  // namespace subfac
