// Tests for JSON serialization: cyclotomic numbers, matrices, and group
// export/import with invariant re-validation.
#include "doctest.h"

#include "json.hpp"
#include "su3kit/catalog.hpp"
#include "su3kit/engine.hpp"
#include "su3kit/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace su3kit;
namespace cat = su3kit::catalog;
namespace jio = su3kit::json_io;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/su3kit_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cyclotomic round trip") {
  const CycloNum vals[] = {
      CycloNum(),  // zero
      CycloNum::from_rational(mpq_class(-7, 3)),
      CycloNum::zeta_pow(5),
      cyclo_sqrt2() + cyclo_sqrt3() * CycloNum::from_rational(mpq_class(1, 2)),
  };
  for (const CycloNum& c : vals) {
    json j = jio::cyclo_to_json(c);
    CHECK(j.is_array());
    CHECK(j.size() == 24);  // phi(72)
    CHECK(jio::cyclo_from_json(j, 72) == c);
  }
  // String-encoded big integers are accepted.
  json j = jio::cyclo_to_json(CycloNum(72));
  j[0] = json::array({"123456789012345678901234567890", 1});
  CycloNum big = jio::cyclo_from_json(j, 72);
  CHECK(big.coeffs()[0] == mpq_class("123456789012345678901234567890"));

  CHECK_THROWS_AS((void)jio::cyclo_from_json(json::object(), 72), usage_error);
  CHECK_THROWS_AS((void)jio::cyclo_from_json(json::array(), 72), usage_error);
  json bad = jio::cyclo_to_json(CycloNum(72));
  bad[3] = json::array({1, 0});  // zero denominator
  CHECK_THROWS_AS((void)jio::cyclo_from_json(bad, 72), usage_error);
}

TEST_CASE("matrix round trip") {
  for (const Mat3& m : {cat::braid_g2(), cat::fum(), cat::sigma_v(),
                        cat::f_matrix(5, 1, 0)}) {
    json j = jio::mat3_to_json(m);
    Mat3 back = jio::mat3_from_json(j);
    CHECK(back == m);
    CHECK(back.conductor() == m.conductor());
  }
  CHECK_THROWS_AS((void)jio::mat3_from_json(json::array()), usage_error);
  CHECK_THROWS_AS((void)jio::mat3_from_json(json{{"conductor", 72}}),
                  usage_error);
  json bad = jio::mat3_to_json(cat::fum());
  bad["conductor"] = 0;
  CHECK_THROWS_AS((void)jio::mat3_from_json(bad), usage_error);
  bad["conductor"] = 70;  // wrong phi: entries have 24 coords, phi(70)=24
  // phi(70) = 24 as well, so this parses; the entries then denote different
  // numbers, which is fine at this layer (group import pins conductors).
  (void)0;
}

TEST_CASE("group export / import round trip") {
  engine::MatrixGroup fr162 = engine::generate(
      {cat::braid_g1(), cat::braid_g2()}, 10000, "fr162");
  json j = jio::group_to_json(fr162);
  CHECK(j["order"] == 162);
  CHECK(j["elements"].size() == 162);
  CHECK(j["words"][0].empty());

  engine::MatrixGroup back = jio::group_from_json(j);
  CHECK(back.order() == 162);
  CHECK(back.name() == "fr162");
  CHECK(engine::set_equal(back, fr162));

  TempFile f("roundtrip.json");
  jio::write_group(fr162, f.path);
  engine::MatrixGroup reread = jio::read_group(f.path);
  CHECK(reread.order() == 162);
  CHECK(engine::set_equal(reread, fr162));
}

TEST_CASE("import rejects invariant violations") {
  engine::MatrixGroup s3 = engine::generate(
      {cat::e_matrix(), cat::btilde()}, 100, "s3");
  const json good = jio::group_to_json(s3);
  CHECK(jio::group_from_json(good).order() == 6);

  // Non-unitary element.
  json bad = good;
  bad["elements"][2] = jio::mat3_to_json(
      Mat3::diag(CycloNum::from_int(2), CycloNum::from_int(1),
                 CycloNum::from_int(1)));
  CHECK_THROWS_AS((void)jio::group_from_json(bad), invariant_error);

  // Unitary but det != 1 is also rejected.
  bad = good;
  bad["elements"][2] = jio::mat3_to_json(
      Mat3::diag(-CycloNum::from_int(1), CycloNum::from_int(1),
                 CycloNum::from_int(1)));
  CHECK_THROWS_AS((void)jio::group_from_json(bad), invariant_error);

  // Wrong order field.
  bad = good;
  bad["order"] = 7;
  CHECK_THROWS_AS((void)jio::group_from_json(bad), invariant_error);

  // First element not the identity.
  bad = good;
  std::swap(bad["elements"][0], bad["elements"][1]);
  CHECK_THROWS_AS((void)jio::group_from_json(bad), invariant_error);

  // Word log broken.
  bad = good;
  bad["words"][1] = json::array({1, 1, 1, 1});
  CHECK_THROWS_AS((void)jio::group_from_json(bad), invariant_error);

  // Element replaced by a group member that is not in canonical agreement:
  // duplicate entries are not a closure.
  bad = good;
  bad["elements"][2] = bad["elements"][1];
  bad["words"][2] = bad["words"][1];
  CHECK_THROWS_AS((void)jio::group_from_json(bad), invariant_error);

  // Element list smaller than the generator closure.
  bad = good;
  bad["elements"].erase(5);
  bad["words"].erase(5);
  bad["order"] = 5;
  CHECK_THROWS_AS((void)jio::group_from_json(bad), invariant_error);
}

TEST_CASE("import rejects malformed structure") {
  engine::MatrixGroup s3 = engine::generate(
      {cat::e_matrix(), cat::btilde()}, 100, "s3");
  const json good = jio::group_to_json(s3);

  CHECK_THROWS_AS((void)jio::group_from_json(json::array()), usage_error);
  json bad = good;
  bad.erase("words");
  CHECK_THROWS_AS((void)jio::group_from_json(bad), usage_error);
  bad = good;
  bad["words"].erase(5);
  CHECK_THROWS_AS((void)jio::group_from_json(bad), usage_error);
  bad = good;
  bad["generators"] = json::array();
  CHECK_THROWS_AS((void)jio::group_from_json(bad), usage_error);
  bad = good;
  bad["words"][3] = json::array({9});  // letter out of range
  CHECK_THROWS_AS((void)jio::group_from_json(bad), usage_error);
  bad = good;
  bad["name"] = 42;
  CHECK_THROWS_AS((void)jio::group_from_json(bad), usage_error);
}

TEST_CASE("generator files") {
  TempFile arr("gens_array.json");
  {
    std::ofstream out(arr.path);
    json a = json::array({jio::mat3_to_json(cat::braid_g1()),
                          jio::mat3_to_json(cat::braid_g2())});
    out << a.dump();
  }
  std::vector<Mat3> gens = jio::read_generators(arr.path);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == cat::braid_g1());
  CHECK(engine::generate(gens, 10000).order() == 162);

  // A full group export also works as a generator file.
  TempFile grp("gens_group.json");
  jio::write_group(engine::generate({cat::e_matrix(), cat::btilde()}, 100,
                                    "s3"),
                   grp.path);
  CHECK(jio::read_generators(grp.path).size() == 2);

  TempFile badf("gens_bad.json");
  {
    std::ofstream out(badf.path);
    out << "{\"nope\": 1}";
  }
  CHECK_THROWS_AS((void)jio::read_generators(badf.path), usage_error);
  TempFile syn("gens_syntax.json");
  {
    std::ofstream out(syn.path);
    out << "{not json";
  }
  CHECK_THROWS_AS((void)jio::read_generators(syn.path), usage_error);
  CHECK_THROWS_AS((void)jio::read_generators("/tmp/su3kit_missing_file.json"),
                  usage_error);
}

TEST_CASE("export determinism") {
  engine::MatrixGroup g = engine::generate(
      {cat::e_matrix(), cat::btilde()}, 100, "s3");
  CHECK(jio::group_to_json(g).dump() == jio::group_to_json(g).dump());
  engine::MatrixGroup g2 = engine::generate(
      {cat::e_matrix(), cat::btilde()}, 100, "s3");
  CHECK(jio::group_to_json(g).dump() == jio::group_to_json(g2).dump());
}
