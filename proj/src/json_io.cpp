#include "su3kit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace su3kit::json_io {

using nlohmann::json;

namespace {

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class mpz_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw usage_error(std::string("bad integer string in ") + what);
    }
  }
  throw usage_error(std::string("expected integer or string in ") + what);
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw usage_error(std::string("missing or non-integer field: ") + key);
  return j[key].get<int>();
}

}  // namespace

json cyclo_to_json(const CycloNum& c) {
  json out = json::array();
  for (const mpq_class& q : c.coeffs())
    out.push_back(json::array({mpz_to_json(q.get_num()), mpz_to_json(q.get_den())}));
  return out;
}

CycloNum cyclo_from_json(const json& j, int conductor) {
  if (!j.is_array()) throw usage_error("cyclotomic number must be an array");
  std::vector<mpq_class> coeffs;
  coeffs.reserve(j.size());
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw usage_error("cyclotomic coordinate must be a [num, den] pair");
    const mpz_class num = mpz_from_json(pair[0], "numerator");
    const mpz_class den = mpz_from_json(pair[1], "denominator");
    if (den == 0) throw usage_error("zero denominator in coordinate");
    mpq_class q(num, den);
    q.canonicalize();
    coeffs.push_back(std::move(q));
  }
  return CycloNum::from_coeffs(std::move(coeffs), conductor);
}

json mat3_to_json(const Mat3& m) {
  json entries = json::array();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) entries.push_back(cyclo_to_json(m.at(r, c)));
  return json{{"conductor", m.conductor()}, {"entries", entries}};
}

Mat3 mat3_from_json(const json& j) {
  if (!j.is_object()) throw usage_error("matrix must be an object");
  const int n = int_field(j, "conductor");
  if (n < 1 || n > 100000)
    throw usage_error("conductor out of range: " + std::to_string(n));
  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != 9)
    throw usage_error("matrix needs an array of 9 entries");
  Mat3 m(n);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      m.at(r, c) = cyclo_from_json(j["entries"][3 * r + c], n);
  return m;
}

json group_to_json(const engine::MatrixGroup& g) {
  json gens = json::array(), elems = json::array(), words = json::array();
  for (const Mat3& m : g.generators()) gens.push_back(mat3_to_json(m));
  for (const Mat3& m : g.elements()) elems.push_back(mat3_to_json(m));
  for (const std::vector<int>& w : g.words()) words.push_back(json(w));
  return json{{"name", g.name()},       {"conductor", g.conductor()},
              {"order", g.order()},     {"generators", gens},
              {"elements", elems},      {"words", words}};
}

engine::MatrixGroup group_from_json(const json& j, int cap) {
  if (!j.is_object()) throw usage_error("group must be an object");
  if (!j.contains("name") || !j["name"].is_string())
    throw usage_error("missing or non-string field: name");
  const int conductor = int_field(j, "conductor");
  const int order = int_field(j, "order");
  for (const char* key : {"generators", "elements", "words"})
    if (!j.contains(key) || !j[key].is_array())
      throw usage_error(std::string("missing or non-array field: ") + key);
  if (j["generators"].empty()) throw usage_error("empty generator list");
  if (j["elements"].size() != j["words"].size())
    throw usage_error("elements and words arrays differ in length");

  auto parse_at_conductor = [conductor](const json& mj) {
    Mat3 m = mat3_from_json(mj);
    if (m.conductor() != conductor)
      throw usage_error("matrix conductor differs from group conductor");
    return m;
  };
  std::vector<Mat3> gens, elems;
  for (const json& mj : j["generators"]) gens.push_back(parse_at_conductor(mj));
  for (const json& mj : j["elements"]) elems.push_back(parse_at_conductor(mj));

  if (static_cast<int>(elems.size()) != order)
    throw invariant_error("order field does not match the element count");
  if (elems.empty() || !elems[0].is_identity())
    throw invariant_error("elements[0] is not the identity");
  for (size_t i = 0; i < elems.size(); ++i)
    if (!elems[i].is_special_unitary())
      throw invariant_error("element " + std::to_string(i) +
                            " is not special unitary");

  const int k = static_cast<int>(gens.size());
  for (size_t i = 0; i < elems.size(); ++i) {
    Mat3 acc = Mat3::identity(conductor);
    for (const json& lj : j["words"][i]) {
      const mpz_class lz = mpz_from_json(lj, "word letter");
      if (!lz.fits_sint_p()) throw usage_error("word letter out of range");
      const int l = static_cast<int>(lz.get_si());
      if (l == 0 || std::abs(l) > k)
        throw usage_error("word letter out of range");
      acc = acc * (l > 0 ? gens[l - 1] : gens[-l - 1].inverse());
    }
    if (acc != elems[i])
      throw invariant_error("word " + std::to_string(i) +
                            " does not evaluate to its element");
  }

  engine::MatrixGroup g =
      engine::generate(gens, std::max(cap, order), j["name"].get<std::string>());
  if (g.order() != order)
    throw invariant_error("generator closure has order " +
                          std::to_string(g.order()) + ", file claims " +
                          std::to_string(order));
  std::set<int> seen;
  for (const Mat3& m : elems) {
    const int idx = g.index_of(m);
    if (idx < 0 || !seen.insert(idx).second)
      throw invariant_error("element list is not the closure of the generators");
  }
  return g;
}

void write_group(const engine::MatrixGroup& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot open for writing: " + path);
  out << group_to_json(g).dump() << "\n";
  if (!out) throw usage_error("write failed: " + path);
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw usage_error("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace

engine::MatrixGroup read_group(const std::string& path, int cap) {
  return group_from_json(parse_file(path), cap);
}

std::vector<Mat3> read_generators(const std::string& path) {
  const json j = parse_file(path);
  const json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object() && j.contains("generators") &&
             j["generators"].is_array()) {
    arr = &j["generators"];
  } else {
    throw usage_error("expected a matrix array or a 'generators' field in " +
                      path);
  }
  if (arr->empty()) throw usage_error("empty generator list in " + path);
  std::vector<Mat3> gens;
  for (const json& mj : *arr) gens.push_back(mat3_from_json(mj));
  return gens;
}

}  // namespace su3kit::json_io
