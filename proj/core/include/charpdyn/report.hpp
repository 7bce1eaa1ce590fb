#pragma once

#include <string>
#include <vector>

#include "charpdyn/audit.hpp"
#include "charpdyn/lab.hpp"
#include "charpdyn/param_poly.hpp"

namespace charpdyn {

// JSON value strings (compact, no trailing newline) for the result types.
// Schema conventions: every rational is a "num/den" string, places use the
// grammar ("inf" or the monic polynomial), field elements come with an
// explicit "p^k" field spec, and unavailable optionals serialize as null.
std::string json_local_height(const LocalHeightResult& r);
std::string json_orbit(const OrbitResult& r);
std::string json_global_height(const GlobalHeight& g);
std::string json_mandelbrot(const MandelbrotResult& m);
std::string json_param_poly(const ParamPoly& f);
std::string json_values(const std::vector<RatFunc>& xs);
std::string json_trichotomy(const TrichotomyReport& t);
std::string json_equivalence(const EquivalenceReport& e);
std::string json_constants(const std::vector<FqElem>& cs, const FieldPtr& field);
std::string json_audit(const AuditTrace& a);

}  // namespace charpdyn
