#include <cmath>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "spectra/spectra.h"

namespace {

struct String {
  char* ptr = nullptr;
  ~String() { spectra_string_free(ptr); }
};

struct Graph {
  spectra_digraph* ptr = nullptr;
  ~Graph() { spectra_digraph_free(ptr); }
};

}  // namespace

TEST_CASE("c api: family parse and digraph accessors") {
  Graph g;
  REQUIRE(spectra_family_parse("Inf(5,5,5)", &g.ptr) == SPECTRA_OK);
  CHECK(spectra_digraph_order(g.ptr) == 13);
  CHECK(spectra_digraph_size(g.ptr) == 15);

  Graph bad;
  CHECK(spectra_family_parse("C(1)", &bad.ptr) == SPECTRA_ERR_INVALID);
  CHECK(std::string(spectra_last_error()).find("cycle") != std::string::npos);

  String canon;
  REQUIRE(spectra_family_canonical("Th(2,2;3)", &canon.ptr) == SPECTRA_OK);
  CHECK(std::string(canon.ptr) == "Th(2,2;3)");
}

TEST_CASE("c api: digraph json round trip") {
  Graph g;
  REQUIRE(spectra_family_parse("R(3,2)", &g.ptr) == SPECTRA_OK);
  String json;
  REQUIRE(spectra_digraph_to_json(g.ptr, &json.ptr) == SPECTRA_OK);
  Graph back;
  REQUIRE(spectra_digraph_from_json(json.ptr, &back.ptr) == SPECTRA_OK);
  String json2;
  REQUIRE(spectra_digraph_to_json(back.ptr, &json2.ptr) == SPECTRA_OK);
  CHECK(std::string(json.ptr) == json2.ptr);
  Graph broken;
  CHECK(spectra_digraph_from_json("{\"n\":2,\"arcs\":[[0,0]]}", &broken.ptr) ==
        SPECTRA_ERR_INVALID);
}

TEST_CASE("c api: radius, bisect, perron") {
  Graph g;
  REQUIRE(spectra_family_parse("C(7)", &g.ptr) == SPECTRA_OK);
  spectra_radius_result res{};
  REQUIRE(spectra_radius(g.ptr, 0.3, 1e-12, &res) == SPECTRA_OK);
  CHECK(std::fabs(res.rho - 1.0) < 1e-10);
  CHECK(res.residual <= 1e-12);
  CHECK(res.iterations >= 1);

  double via_bisect = 0.0;
  REQUIRE(spectra_radius_bisect(g.ptr, 0.3, 0.5, 2.0, 1e-10, &via_bisect) == SPECTRA_OK);
  CHECK(std::fabs(via_bisect - 1.0) < 1e-8);

  double perron[7];
  REQUIRE(spectra_perron_vector(g.ptr, 0.3, 1e-12, perron, 7) == SPECTRA_OK);
  double sum = 0.0;
  for (double v : perron) {
    CHECK(v > 0.0);
    sum += v;
  }
  CHECK(std::fabs(sum - 1.0) < 1e-9);
  CHECK(spectra_perron_vector(g.ptr, 0.3, 1e-12, perron, 3) == SPECTRA_ERR_INVALID);

  Graph pb;
  REQUIRE(spectra_family_parse("PB(2,1)", &pb.ptr) == SPECTRA_OK);
  CHECK(spectra_radius(pb.ptr, 0.3, 1e-12, &res) == SPECTRA_ERR_INVALID);
}

TEST_CASE("c api: charpoly pair") {
  Graph g;
  REQUIRE(spectra_family_parse("Th(2,1;1)", &g.ptr) == SPECTRA_OK);
  double oracle = 0.0, closed = 0.0;
  REQUIRE(spectra_charpoly_oracle(g.ptr, 2.0, 0.0, &oracle) == SPECTRA_OK);
  REQUIRE(spectra_charpoly_closed("Th(2,1;1)", 2.0, 0.0, &closed) == SPECTRA_OK);
  CHECK(oracle == doctest::Approx(5.0));
  CHECK(closed == doctest::Approx(5.0));
  for (const char* fam : {"C(6)", "R(3,2,2)", "Inf(3,4,2)", "CnG(8,5)", "ThHat(7)"}) {
    Graph h;
    REQUIRE(spectra_family_parse(fam, &h.ptr) == SPECTRA_OK);
    REQUIRE(spectra_charpoly_oracle(h.ptr, 1.9, 0.35, &oracle) == SPECTRA_OK);
    REQUIRE(spectra_charpoly_closed(fam, 1.9, 0.35, &closed) == SPECTRA_OK);
    CHECK(std::fabs(oracle - closed) <= 1e-9 * std::max({1.0, std::fabs(oracle)}));
  }
  CHECK(spectra_charpoly_closed("PB(2,1)", 2.0, 0.0, &closed) == SPECTRA_ERR_INVALID);
}

TEST_CASE("c api: tables") {
  String csv;
  REQUIRE(spectra_table_inf_csv(15, 0.5, 4, &csv.ptr) == SPECTRA_OK);
  const std::string table = csv.ptr;
  CHECK(table.rfind("rank,spec,rho\r\n", 0) == 0);
  CHECK(table.find("\"Inf(5,5,5)\"") != std::string::npos);
  String csv2;
  REQUIRE(spectra_table_theta_csv(12, 3, 2, 0.2, 2, &csv2.ptr) == SPECTRA_OK);
  CHECK(std::string(csv2.ptr).find("Th(") != std::string::npos);
  String bad;
  CHECK(spectra_table_inf_csv(5, 0.5, 4, &bad.ptr) == SPECTRA_ERR_INVALID);
}

TEST_CASE("c api: verify") {
  String report;
  REQUIRE(spectra_verify("inf_max", "{\"m\":8,\"alpha\":0.2}", &report.ptr) == SPECTRA_OK);
  const auto parsed = nlohmann::json::parse(report.ptr);
  CHECK(parsed["theorem_id"] == "inf_max");
  CHECK(parsed["verified"] == true);
  CHECK(parsed["counterexamples"].is_array());
  CHECK(parsed.contains("min_margin"));
  CHECK(parsed.contains("grid"));

  String missing;
  CHECK(spectra_verify("inf_max", "{\"alpha\":0.2}", &missing.ptr) == SPECTRA_ERR_INVALID);
  String unknown;
  CHECK(spectra_verify("nosuch", "{}", &unknown.ptr) == SPECTRA_ERR_INVALID);
}

TEST_CASE("c api: conjecture csv") {
  String csv;
  const double grid[2] = {0.55, 0.95};
  REQUIRE(spectra_conjecture_csv(6, 7, grid, 2, &csv.ptr) == SPECTRA_OK);
  const std::string body = csv.ptr;
  CHECK(body.rfind("n,alpha,rho_theta31,rho_theta_hat,gap,boundary\r\n", 0) == 0);
  int lines = 0;
  for (char c : body)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + 2 * 3);  // header + 2 n-values x (boundary + 2 grid)
}
