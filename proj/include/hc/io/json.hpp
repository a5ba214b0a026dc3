#pragma once

#include <json.hpp>

#include "hc/exact/radial_form.hpp"
#include "hc/hydrogen/states.hpp"
#include "hc/special/poly1.hpp"
#include "hc/stark/stark.hpp"
#include "hc/tensor/sym_tensor.hpp"

namespace hc {

using Json = nlohmann::ordered_json;

/// Real values become "p/q"; complex ones {"re": "p/q", "im": "p/q"}.
Json scalar_to_json(const ExactScalar& c);
ExactScalar scalar_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json form_to_json(const RadialForm& f);
RadialForm form_from_json(const Json& j);

/// Indices are written 1-based.
Json tensor_to_json(const SymTensor& t);
SymTensor tensor_from_json(const Json& j);

Json poly1_to_json(const Poly1& p);
Poly1 poly1_from_json(const Json& j);

Json state_to_json(const CoulombState& s);
CoulombState state_from_json(const Json& j);

Json momentum_to_json(const MomentumState& m);
MomentumState momentum_from_json(const Json& j);

Json stark_to_json(const StarkResult& s);
StarkResult stark_from_json(const Json& j);

}  // namespace hc
