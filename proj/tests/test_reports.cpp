#include <doctest.h>

#include <cstdlib>
#include <string>

#include "chromhom/chromhom.h"
#include "chromhom/errors.hpp"
#include "chromhom/reports.hpp"

using namespace chromhom;

namespace {

std::string take(char* p) {
  std::string s = p ? p : "";
  chromhom_string_free(p);
  return s;
}

}  // namespace

TEST_CASE("homology report fields") {
  const auto [g, norm] = normalize(parse_graph("D~{", GraphFormat::Graph6));
  const auto r = homology_report(g, norm, {});
  CHECK(r["graph6"] == "D~{");
  CHECK(r["n"] == 5);
  CHECK(r["m"] == 10);
  CHECK(r["has_z2"] == true);
  REQUIRE(r["shapes"].size() == 1);
  CHECK(r["shapes"][0]["dims"] == Json::array({15, 20, 5}));
  CHECK(r["shapes"][0]["invariant_factors"] == Json::array({2}));

  const auto [lg, lnorm] = normalize(parse_graph("3 3\n1 2\n2 3\n3 3\n", GraphFormat::EdgeList));
  const auto lr = homology_report(lg, lnorm, {});
  CHECK(lr["loop"] == true);
  CHECK(lr["verdict"] == "homology zero");
}

TEST_CASE("certificate documents round trip and detect tampering") {
  const auto nc = certify_nonplanar(complete_graph(5));
  const Json doc = certificate_json(nc);
  CHECK(doc["format"] == "chromhom-certificate/1");
  CHECK(check_certificate_json(doc).valid());
  CHECK(check_certificate_json(Json::parse(doc.dump())).valid());

  Json tampered = doc;
  tampered["h"][0]["coeff"] = tampered["h"][0]["coeff"].get<long>() + 1;
  CHECK_FALSE(check_certificate_json(tampered).valid());

  Json broken = doc;
  broken.erase("shape");
  CHECK_THROWS_AS(check_certificate_json(broken), Error);

  const Graph other = complete_graph(6);
  CHECK_THROWS_AS(check_certificate_json(doc, &other), Error);
}

TEST_CASE("survey records") {
  const auto planar = survey_record(complete_graph(4), {});
  CHECK(planar.record["planar"] == true);
  CHECK(planar.certificate.is_null());
  const auto k5 = survey_record(complete_graph(5), {});
  CHECK(k5.record["planar"] == false);
  CHECK(k5.record["has_z2"] == true);
  CHECK(k5.record["certificate"]["valid"] == true);
}

TEST_CASE("worked-example battery passes and its mutation fails") {
  for (const auto& c : reproduction_battery(false)) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  bool any_fail = false;
  for (const auto& c : reproduction_battery(true)) any_fail = any_fail || !c.pass;
  CHECK(any_fail);
}

TEST_CASE("C interface") {
  chromhom_graph* g = nullptr;
  REQUIRE(chromhom_graph_parse("D~{", CHROMHOM_GRAPH6, &g) == CHROMHOM_OK);
  CHECK(chromhom_graph_vertex_count(g) == 5);
  CHECK(chromhom_graph_edge_count(g) == 10);
  int planar = -1;
  CHECK(chromhom_graph_is_planar(g, &planar) == CHROMHOM_OK);
  CHECK(planar == 0);

  char* s = nullptr;
  REQUIRE(chromhom_certify_json(g, &s) == CHROMHOM_OK);
  const std::string cert = take(s);
  int valid = 0;
  char* verdict = nullptr;
  CHECK(chromhom_check_json(cert.c_str(), nullptr, &valid, &verdict) == CHROMHOM_OK);
  CHECK(valid == 1);
  CHECK(Json::parse(take(verdict))["not_in_image"] == true);
  chromhom_graph_free(g);

  const int edges[] = {1, 2, 2, 3, 3, 4, 4, 1};
  REQUIRE(chromhom_graph_from_edges(4, edges, 4, &g) == CHROMHOM_OK);
  CHECK(chromhom_certify_json(g, &s) == CHROMHOM_ERR_PLANAR_INPUT);
  CHECK(std::string(chromhom_last_error()).size() > 0);
  CHECK(chromhom_homology_json(g, 3, &s) == CHROMHOM_ERR_INVALID_ARGUMENT);
  chromhom_graph_free(g);

  const int bad[] = {1, 9};
  CHECK(chromhom_graph_from_edges(4, bad, 1, &g) == CHROMHOM_ERR_INVALID_ARGUMENT);
  CHECK(g == nullptr);
  CHECK(chromhom_graph_parse("3 1\n1 2 3 4\n", CHROMHOM_EDGE_LIST, &g) == CHROMHOM_ERR_PARSE);
  CHECK(chromhom_check_json("{not json", nullptr, &valid, nullptr) == CHROMHOM_ERR_PARSE);
  CHECK(chromhom_graph_parse(nullptr, CHROMHOM_GRAPH6, &g) == CHROMHOM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(chromhom_status_string(CHROMHOM_ERR_LIFT_FAILED)) == "lift failed");

  char* list = nullptr;
  REQUIRE(chromhom_connected_graphs_graph6(4, &list) == CHROMHOM_OK);
  const std::string l = take(list);
  CHECK(std::count(l.begin(), l.end(), '\n') == 6);
  CHECK(chromhom_connected_graphs_graph6(9, &list) == CHROMHOM_ERR_SIZE_BOUND);
}
