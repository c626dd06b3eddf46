// Command-line front end. Talks to the library exclusively through the C API
// in spectra/spectra.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spectra/spectra.h"

namespace {

// Exit-code contract: 0 verified/ok, 1 falsified, 2 usage, 3 numeric failure.
int exit_code(spectra_status st) {
  switch (st) {
    case SPECTRA_OK:
      return 0;
    case SPECTRA_ERR_FALSIFIED:
      return 1;
    case SPECTRA_ERR_INVALID:
      return 2;
    case SPECTRA_ERR_NUMERIC:
      return 3;
  }
  return 2;
}

int fail(spectra_status st) {
  std::cerr << "error: " << spectra_last_error() << "\n";
  return exit_code(st);
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { spectra_string_free(ptr); }
};

struct OwnedDigraph {
  spectra_digraph* ptr = nullptr;
  ~OwnedDigraph() { spectra_digraph_free(ptr); }
};

int load_graph(const std::string& family, const std::string& load_path, OwnedDigraph& g) {
  if (!load_path.empty()) {
    std::ifstream in(load_path);
    if (!in) {
      std::cerr << "error: cannot read " << load_path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const auto st = spectra_digraph_from_json(buf.str().c_str(), &g.ptr);
    if (st != SPECTRA_OK) return fail(st);
    return 0;
  }
  const auto st = spectra_family_parse(family.c_str(), &g.ptr);
  if (st != SPECTRA_OK) return fail(st);
  return 0;
}

std::string json_params(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out = "{";
  for (size_t i = 0; i < kv.size(); ++i) {
    if (i) out += ",";
    out += "\"" + kv[i].first + "\":" + kv[i].second;
  }
  return out + "}";
}

std::string json_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-spectral radius toolkit for digraph families"};
  app.require_subcommand(1);

  // rho
  std::string rho_family, rho_load, rho_dump, rho_format = "text";
  double rho_alpha = 0.0, rho_tol = 1e-12;
  auto* rho = app.add_subcommand("rho", "spectral radius of a family instance");
  rho->add_option("--family", rho_family, "family text, e.g. Inf(5,5,5)");
  rho->add_option("--load", rho_load, "read digraph JSON instead of --family");
  rho->add_option("--alpha", rho_alpha)->required();
  rho->add_option("--tol", rho_tol);
  rho->add_option("--dump", rho_dump, "write the digraph JSON to this file");
  rho->add_option("--format", rho_format)->check(CLI::IsMember({"text", "json"}));

  // charpoly
  std::string cp_family;
  double cp_x = 2.0, cp_alpha = 0.0;
  auto* charpoly = app.add_subcommand("charpoly", "closed form and determinant oracle values");
  charpoly->add_option("--family", cp_family)->required();
  charpoly->add_option("--x", cp_x)->required();
  charpoly->add_option("--alpha", cp_alpha)->required();

  // table1 / table2
  int t1_m = 15, t1_top = 4;
  double t1_alpha = 0.5;
  auto* table1 = app.add_subcommand("table1", "ascending radius table of tri-rings");
  table1->add_option("--m", t1_m)->required();
  table1->add_option("--alpha", t1_alpha)->required();
  table1->add_option("--top", t1_top);

  int t2_m = 18, t2_s = 4, t2_t = 3, t2_top = 4;
  double t2_alpha = 0.6;
  auto* table2 = app.add_subcommand("table2", "ascending radius table of (s,t)-thetas");
  table2->add_option("--m", t2_m)->required();
  table2->add_option("--s", t2_s)->required();
  table2->add_option("--t", t2_t)->required();
  table2->add_option("--alpha", t2_alpha)->required();
  table2->add_option("--top", t2_top);

  // verify
  std::string v_id, v_family = "C(3)";
  int v_m = 0, v_k = 0, v_n = 0, v_s = 0, v_t = 0, v_m1 = 0, v_m2 = 0, v_p = 0, v_q = 0;
  double v_alpha = 0.0;
  auto* verify = app.add_subcommand("verify", "run a theorem verification, JSON report on stdout");
  verify->add_option("theorem", v_id, "theorem id")->required();
  verify->add_option("--m", v_m);
  verify->add_option("--k", v_k);
  verify->add_option("--n", v_n);
  verify->add_option("--s", v_s);
  verify->add_option("--t", v_t);
  verify->add_option("--m1", v_m1);
  verify->add_option("--m2", v_m2);
  verify->add_option("--p", v_p);
  verify->add_option("--q", v_q);
  verify->add_option("--alpha", v_alpha);
  verify->add_option("--family", v_family, "auxiliary family for c_ordering");

  // conjecture
  int c_nlo = 5, c_nhi = 40;
  std::vector<double> c_alphas;
  auto* conjecture = app.add_subcommand("conjecture", "gap scan CSV for the alpha > 1/2 range");
  conjecture->add_option("--n-lo", c_nlo);
  conjecture->add_option("--n-hi", c_nhi);
  conjecture->add_option("--alphas", c_alphas, "grid points in (0.5, 1)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (rho->parsed()) {
    if (rho_family.empty() && rho_load.empty()) {
      std::cerr << "error: need --family or --load\n";
      return 2;
    }
    OwnedDigraph g;
    if (int rc = load_graph(rho_family, rho_load, g)) return rc;
    if (!rho_dump.empty()) {
      OwnedString json;
      const auto st = spectra_digraph_to_json(g.ptr, &json.ptr);
      if (st != SPECTRA_OK) return fail(st);
      std::ofstream out(rho_dump);
      if (!out) {
        std::cerr << "error: cannot write " << rho_dump << "\n";
        return 2;
      }
      out << json.ptr << "\n";
    }
    spectra_radius_result res{};
    const auto st = spectra_radius(g.ptr, rho_alpha, rho_tol, &res);
    if (st != SPECTRA_OK) return fail(st);
    char buf[192];
    if (rho_format == "json") {
      std::snprintf(buf, sizeof buf,
                    "{\"rho\":%.12f,\"method\":\"power\",\"iterations\":%ld,\"residual\":%.3e}\n",
                    res.rho, res.iterations, res.residual);
    } else {
      std::snprintf(buf, sizeof buf, "rho %.6f\nmethod power\niterations %ld\nresidual %.3e\n",
                    res.rho, res.iterations, res.residual);
    }
    std::fputs(buf, stdout);
    return 0;
  }

  if (charpoly->parsed()) {
    double closed = 0.0, oracle = 0.0;
    auto st = spectra_charpoly_closed(cp_family.c_str(), cp_x, cp_alpha, &closed);
    if (st != SPECTRA_OK) return fail(st);
    OwnedDigraph g;
    st = spectra_family_parse(cp_family.c_str(), &g.ptr);
    if (st != SPECTRA_OK) return fail(st);
    st = spectra_charpoly_oracle(g.ptr, cp_x, cp_alpha, &oracle);
    if (st != SPECTRA_OK) return fail(st);
    std::printf("closed %.12g\noracle %.12g\n", closed, oracle);
    return 0;
  }

  if (table1->parsed()) {
    OwnedString csv;
    const auto st = spectra_table_inf_csv(t1_m, t1_alpha, t1_top, &csv.ptr);
    if (st != SPECTRA_OK) return fail(st);
    std::fputs(csv.ptr, stdout);
    return 0;
  }

  if (table2->parsed()) {
    OwnedString csv;
    const auto st = spectra_table_theta_csv(t2_m, t2_s, t2_t, t2_alpha, t2_top, &csv.ptr);
    if (st != SPECTRA_OK) return fail(st);
    std::fputs(csv.ptr, stdout);
    return 0;
  }

  if (verify->parsed()) {
    std::vector<std::pair<std::string, std::string>> kv;
    auto add_int = [&](const char* key, const CLI::Option* opt, int value) {
      if (opt->count()) kv.emplace_back(key, std::to_string(value));
    };
    add_int("m", verify->get_option("--m"), v_m);
    add_int("k", verify->get_option("--k"), v_k);
    add_int("n", verify->get_option("--n"), v_n);
    add_int("s", verify->get_option("--s"), v_s);
    add_int("t", verify->get_option("--t"), v_t);
    add_int("m1", verify->get_option("--m1"), v_m1);
    add_int("m2", verify->get_option("--m2"), v_m2);
    add_int("p", verify->get_option("--p"), v_p);
    add_int("q", verify->get_option("--q"), v_q);
    if (verify->get_option("--alpha")->count())
      kv.emplace_back("alpha", std::to_string(v_alpha));
    if (verify->get_option("--family")->count()) kv.emplace_back("family", json_quote(v_family));
    OwnedString report;
    const auto st = spectra_verify(v_id.c_str(), json_params(kv).c_str(), &report.ptr);
    if (st == SPECTRA_OK || st == SPECTRA_ERR_FALSIFIED) {
      std::fputs(report.ptr, stdout);
      std::fputs("\n", stdout);
      return exit_code(st);
    }
    return fail(st);
  }

  if (conjecture->parsed()) {
    OwnedString csv;
    const auto st = spectra_conjecture_csv(c_nlo, c_nhi, c_alphas.empty() ? nullptr : c_alphas.data(),
                                           c_alphas.size(), &csv.ptr);
    if (st != SPECTRA_OK) return fail(st);
    std::fputs(csv.ptr, stdout);
    std::fputs("note: numerical evidence, not proof\n", stderr);
    return 0;
  }

  return 2;
}
