#pragma once
// JSON serialization for cyclotomic numbers, matrices and matrix groups.
// The formats are documented in docs/schema.md; import re-validates every
// group invariant (unitarity, word log, closure) before returning.

#include <string>
#include <vector>

#include "json.hpp"
#include "su3kit/cyclo.hpp"
#include "su3kit/engine.hpp"
#include "su3kit/mat3.hpp"

namespace su3kit::json_io {

// CycloNum <-> array of phi(n) [numerator, denominator] pairs, ascending
// powers of zeta. Each component is a JSON integer when it fits in 64 bits
// and a decimal string otherwise; from_json accepts both.
nlohmann::json cyclo_to_json(const CycloNum& c);
CycloNum cyclo_from_json(const nlohmann::json& j, int conductor);

// Mat3 <-> { "conductor": n, "entries": [9 CycloNum arrays, row-major] }.
nlohmann::json mat3_to_json(const Mat3& m);
Mat3 mat3_from_json(const nlohmann::json& j);

// MatrixGroup <-> { name, conductor, order, generators, elements, words }.
nlohmann::json group_to_json(const engine::MatrixGroup& g);

// Parses and re-validates: every listed element must be special unitary,
// elements[0] the identity, each word must evaluate to its element over the
// listed generators, and the closure of the generators (re-computed, cap
// `cap`) must equal the listed element set. Malformed data throws
// usage_error; well-formed data violating an invariant throws
// invariant_error.
engine::MatrixGroup group_from_json(const nlohmann::json& j, int cap = 10000);

void write_group(const engine::MatrixGroup& g, const std::string& path);
engine::MatrixGroup read_group(const std::string& path, int cap = 10000);

// Generator file for `cli group --gens`: either a bare JSON array of Mat3
// objects or { "generators": [Mat3...] } (a full group export works too).
std::vector<Mat3> read_generators(const std::string& path);

}  // namespace su3kit::json_io
