#pragma once

#include <json.hpp>

#include "trinion/glue.hpp"
#include "trinion/okounkov.hpp"
#include "trinion/volumes.hpp"

// JSON encodings shared by the CLI: complex numbers as [re, im], matrices as
// row arrays, rationals as "num/den" strings, volume tables keyed "j1,j2,j3".
namespace trinion::serialize {

using json = nlohmann::ordered_json;

json complex_to_json(const matgroup::Complex& z);
matgroup::Complex json_to_complex(const json& j);

json matrix_to_json(const matgroup::Matrix& m);
matgroup::Matrix json_to_matrix(const json& j);

json volume_table_to_json(const volumes::VolumeTable& table);

std::string rational_to_string(const okounkov::Rational& q);
okounkov::Rational string_to_rational(const std::string& s);

json polytope_to_json(const okounkov::RationalPolytope& p);
okounkov::RationalPolytope json_to_polytope(const json& j);

okounkov::MonomialSystem json_to_system(const json& j);

glue::FramedSheafDescriptor json_to_sheaf(const json& j);

json graph_to_json(const glue::TrinionGraph& g);

}  // namespace trinion::serialize
