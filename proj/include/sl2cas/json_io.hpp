#pragma once

#include <json.hpp>

#include "sl2cas/duality.hpp"
#include "sl2cas/module_lab.hpp"

namespace sl2cas {

using nlohmann::json;

// Wire formats. Rationals travel as "num/den" strings (integer shorthand
// allowed on input), polynomials as ascending coefficient arrays, e.g.
// z^2 - z as ["0","-1","1"]. Schema violations raise std::invalid_argument.

json rational_json(const Rational& q);
Rational rational_from_json(const json& j);

json poly_json(const UniPoly& p);
UniPoly poly_from_json(const json& j);

json ratfunc_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

json skew_json(const SkewElement& a);       // {"<degree>": RatFunc, ...}
SkewElement skew_from_json(const json& j);

json matrix_json(const PolyMatrix& m);      // {"rows", "cols", "entries"}
PolyMatrix matrix_from_json(const json& j);

json smith_form_json(const SmithForm& f);   // {"U", "S", "V"}

json smith_type_json(const SmithType& t);   // {"variant", "indices"}
SmithType smith_type_from_json(const json& j);

json rep_json(const CasimirRep& rep);       // {"mu", "n", "A1"}
CasimirRep rep_from_json(const json& j);

json verification_json(const VerificationReport& r);

json module_json(const QuotientModule& q);  // {"alpha", "mu", "rank", "A1"}
QuotientModule module_from_json(const json& j);

json verdict_json(const FalsifierVerdict& v);

}  // namespace sl2cas
