#pragma once

#include "json.hpp"

#include "jac/expr.hpp"
#include "jac/tensor.hpp"
#include "jac/units.hpp"

namespace jac {

using Json = nlohmann::json;

Json rf_to_json(const ShiftRatFun& a);
ShiftRatFun rf_from_json(const Json& j);

Json sk_to_json(const SkewLaurent& a);
SkewLaurent sk_from_json(const Json& j);

Json fm_to_json(const FiniteMatrix& a);
FiniteMatrix fm_from_json(const Json& j);

Json a1_to_json(const A1Element& a);
A1Element a1_from_json(const Json& j);

Json pn_to_json(const PolyN& p);
PolyN pn_from_json(const Json& j);

Json hu_to_json(const HUnit& h);
HUnit hu_from_json(const Json& j);

Json uf_to_json(const UnitFactorization& uf);
Json mu_to_json(const MinimalUnit& mu);

Json ideal_to_json(const IdealNF& a);
IdealNF ideal_from_json(const Json& j);

Json tn_to_json(const TensorElement& t);
TensorElement tn_from_json(const Json& j);

// Arity-sensitive element serialization: the one-variable canonical form for
// n = 1, the tensor form otherwise.
Json elem_to_json(const TensorElement& t);

} // namespace jac
