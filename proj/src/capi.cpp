#include "spectra/spectra.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "spectra/alpha.hpp"
#include "spectra/digraph.hpp"
#include "spectra/extremal.hpp"
#include "spectra/families.hpp"
#include "spectra/spectral.hpp"

struct spectra_digraph {
  spectra::Digraph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
spectra_status guarded(F&& f) {
  try {
    return f();
  } catch (const spectra::NumericError& e) {
    g_last_error = e.what();
    return SPECTRA_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPECTRA_ERR_INVALID;
  }
}

double closed_form(const spectra::FamilySpec& spec, const spectra::EvalPoint& p) {
  using spectra::Composition;
  using Kind = spectra::FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::Cycle:
      return std::pow(p.x - p.alpha, spec.a) - std::pow(1.0 - p.alpha, spec.a);
    case Kind::Rose: {
      // coalescence of the petal cycles at the hub
      std::vector<std::pair<double, double>> parts;
      for (int len : spec.k1)
        parts.emplace_back(
            std::pow(p.x - p.alpha, len) - std::pow(1.0 - p.alpha, len),
            std::pow(p.x - p.alpha, len - 1));
      return spectra::cp_coalescence(parts, p.x);
    }
    case Kind::Inf:
      return spectra::cp_two_cycles_two_vertices(spectra::cycle(spec.b), 0, 1, spec.a, spec.c, p);
    case Kind::Theta:
      return spectra::cp_theta(Composition(spec.k1), Composition(spec.k2), p);
    case Kind::CnG:
      return spectra::cp_theta(Composition({spec.a + 1 - spec.b, 1}), Composition({spec.b - 1}),
                               p);
    case Kind::ThetaHat:
      return spectra::cp_theta_hat(spec.a, p);
    case Kind::PathBundle:
      break;
  }
  throw std::invalid_argument("charpoly_closed: no closed form for this family");
}

}  // namespace

extern "C" {

const char* spectra_last_error(void) { return g_last_error.c_str(); }

void spectra_string_free(char* s) { delete[] s; }

spectra_status spectra_family_parse(const char* text, spectra_digraph** out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("family_parse: null argument");
    auto g = spectra::build_family(spectra::parse_family(text));
    *out = new spectra_digraph{std::move(g)};
    return SPECTRA_OK;
  });
}

spectra_status spectra_family_canonical(const char* text, char** out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("family_canonical: null argument");
    *out = dup_string(spectra::print_family(spectra::parse_family(text)));
    return SPECTRA_OK;
  });
}

spectra_status spectra_digraph_from_json(const char* json, spectra_digraph** out) {
  return guarded([&] {
    if (!json || !out) throw std::invalid_argument("digraph_from_json: null argument");
    *out = new spectra_digraph{spectra::digraph_from_json(json)};
    return SPECTRA_OK;
  });
}

spectra_status spectra_digraph_to_json(const spectra_digraph* g, char** out) {
  return guarded([&] {
    if (!g || !out) throw std::invalid_argument("digraph_to_json: null argument");
    *out = dup_string(spectra::digraph_to_json(g->g));
    return SPECTRA_OK;
  });
}

void spectra_digraph_free(spectra_digraph* g) { delete g; }

int spectra_digraph_order(const spectra_digraph* g) { return g ? g->g.n : 0; }

int spectra_digraph_size(const spectra_digraph* g) { return g ? g->g.size() : 0; }

spectra_status spectra_radius(const spectra_digraph* g, double alpha, double tol,
                              spectra_radius_result* out) {
  return guarded([&] {
    if (!g || !out) throw std::invalid_argument("radius: null argument");
    const auto res = spectra::spectral_radius(g->g, alpha, tol);
    out->rho = res.rho;
    out->residual = res.residual;
    out->iterations = res.iterations;
    return SPECTRA_OK;
  });
}

spectra_status spectra_radius_bisect(const spectra_digraph* g, double alpha, double lo, double hi,
                                     double tol, double* out) {
  return guarded([&] {
    if (!g || !out) throw std::invalid_argument("radius_bisect: null argument");
    *out = spectra::rho_bisect(g->g, alpha, lo, hi, tol);
    return SPECTRA_OK;
  });
}

spectra_status spectra_perron_vector(const spectra_digraph* g, double alpha, double tol,
                                     double* buf, size_t buflen) {
  return guarded([&] {
    if (!g || !buf) throw std::invalid_argument("perron_vector: null argument");
    const auto res = spectra::spectral_radius(g->g, alpha, tol);
    if (buflen < res.perron.size())
      throw std::invalid_argument("perron_vector: buffer too small");
    std::memcpy(buf, res.perron.data(), res.perron.size() * sizeof(double));
    return SPECTRA_OK;
  });
}

spectra_status spectra_charpoly_oracle(const spectra_digraph* g, double x, double alpha,
                                       double* out) {
  return guarded([&] {
    if (!g || !out) throw std::invalid_argument("charpoly_oracle: null argument");
    *out = spectra::charpoly_oracle(g->g, spectra::EvalPoint(x, alpha));
    return SPECTRA_OK;
  });
}

spectra_status spectra_charpoly_closed(const char* family_text, double x, double alpha,
                                       double* out) {
  return guarded([&] {
    if (!family_text || !out) throw std::invalid_argument("charpoly_closed: null argument");
    *out = closed_form(spectra::parse_family(family_text), spectra::EvalPoint(x, alpha));
    return SPECTRA_OK;
  });
}

spectra_status spectra_table_inf_csv(int m, double alpha, int top, char** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("table_inf: null argument");
    *out = dup_string(spectra::ranked_to_csv(spectra::rank_inf(m, alpha, top)));
    return SPECTRA_OK;
  });
}

spectra_status spectra_table_theta_csv(int m, int s, int t, double alpha, int top, char** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("table_theta: null argument");
    *out = dup_string(spectra::ranked_to_csv(spectra::rank_theta(m, s, t, alpha, top)));
    return SPECTRA_OK;
  });
}

spectra_status spectra_verify(const char* theorem_id, const char* params_json, char** report_out) {
  return guarded([&]() -> spectra_status {
    if (!theorem_id || !report_out) throw std::invalid_argument("verify: null argument");
    nlohmann::json params =
        params_json && *params_json ? nlohmann::json::parse(params_json) : nlohmann::json::object();
    auto geti = [&](const char* key) {
      if (!params.contains(key))
        throw std::invalid_argument(std::string("verify: missing parameter '") + key + "'");
      return params[key].get<int>();
    };
    auto getd = [&](const char* key) {
      if (!params.contains(key))
        throw std::invalid_argument(std::string("verify: missing parameter '") + key + "'");
      return params[key].get<double>();
    };

    const std::string id = theorem_id;
    spectra::TheoremReport report;
    if (id == "rose_monotone") {
      report = spectra::verify_rose_monotone(geti("m"), geti("k"), getd("alpha"));
    } else if (id == "inf_max") {
      report = spectra::verify_inf_max(geti("m"), getd("alpha"));
    } else if (id == "c_ordering") {
      const std::string family =
          params.contains("family") ? params["family"].get<std::string>() : std::string("C(3)");
      report = spectra::verify_c_ordering(geti("p"), geti("q"), spectra::parse_family(family),
                                          getd("alpha"));
    } else if (id == "theta_block") {
      report = spectra::verify_theta_block(geti("m1"), geti("m2"), geti("s"), geti("t"),
                                           getd("alpha"));
    } else if (id == "theta_family") {
      report = spectra::verify_theta_family(geti("m"), geti("s"), geti("t"), getd("alpha"));
    } else if (id == "joint_extremal") {
      report = spectra::verify_joint_extremal(geti("m"), geti("k"), getd("alpha"));
    } else if (id == "girth_chain") {
      report = spectra::verify_girth_chain(geti("n"), getd("alpha"));
    } else if (id == "first_four") {
      report = spectra::verify_first_four(geti("n"), getd("alpha"));
    } else if (id == "delta_threshold") {
      report = spectra::verify_delta_threshold(geti("m"), geti("k"));
    } else {
      throw std::invalid_argument("verify: unknown theorem id '" + id + "'");
    }
    *report_out = dup_string(spectra::report_to_json(report));
    return report.verified ? SPECTRA_OK : SPECTRA_ERR_FALSIFIED;
  });
}

spectra_status spectra_conjecture_csv(int n_lo, int n_hi, const double* alphas, size_t n_alphas,
                                      char** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("conjecture: null argument");
    std::vector<double> grid;
    if (alphas && n_alphas) grid.assign(alphas, alphas + n_alphas);
    *out = dup_string(spectra::conjecture_to_csv(spectra::conjecture_scan(n_lo, n_hi, grid)));
    return SPECTRA_OK;
  });
}

}  // extern "C"
