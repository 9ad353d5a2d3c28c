#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "eigmult/tensor.hpp"

namespace eigmult {

using Json = nlohmann::ordered_json;
using AnyTensor = std::variant<Tensor<Rational>, Tensor<double>>;

/// {"m":3,"n":2,"scalar":"rational"|"float","entries":[{"idx":[1,1,2],"val":"1"}],
///  "kind":"general"|"symmetric"|"slice-symmetric"}; omitted entries are zero,
/// indices are 1-based. Throws InputError on any malformed field.
AnyTensor tensor_from_json(const Json& j);
AnyTensor parse_tensor(std::string_view text);
AnyTensor load_tensor(const std::string& path);

/// Nonzero entries only, in lexicographic index order.
Json tensor_to_json(const Tensor<Rational>& t);
Json tensor_to_json(const Tensor<double>& t);

TensorKind parse_kind(std::string_view text);

}  // namespace eigmult
