#pragma once

#include <json.hpp>

#include "kron/cr_system.hpp"
#include "kron/kronecker.hpp"
#include "kron/multitableau.hpp"
#include "kron/tableau.hpp"
#include "kron/tensor.hpp"

namespace kron {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const Composition& c);
Json to_json(const SkewTableau& t);
Json to_json(const LRMultitableau& m);
Json to_json(const Tensor3& x);
Json to_json(const TensorImage& image);
Json to_json(const CRSystem& sys);
Json to_json(const JTTerm& term);
Json to_json(const JTPairTerm& term);
Json to_json(const FaceTerm& term);

Tensor3 tensor_from_json(const Json& j);

} // namespace kron
