#pragma once

#include <string>

#include "json.hpp"

#include "g2a/scalar.hpp"

namespace g2a {

using Json = nlohmann::ordered_json;

/// Expression-tree JSON for scalars, ops: add, mul, div, pow, const, gen.
/// Export writes the canonical form, so import(export(s)) == s bit-exactly.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

std::string rational_str(const Q& q);  // decimal-free "p/q" or "p"

std::string scalar_to_latex(const Scalar& s);
std::string alg_to_latex(const Alg& a);

}  // namespace g2a
