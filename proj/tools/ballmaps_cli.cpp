// Command-line front end: builds maps and witnesses from JSON configs, runs
// the numerical certification engine, and emits machine-readable JSON
// (floats with 17 significant digits; identical seeds give identical bytes).
//
// Exit codes: 0 success, 2 input validation failure, 3 certificate violation
// under --strict.

#include "ballmaps/ballmaps.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace ballmaps;

struct GlobalOptions {
  std::uint64_t seed = 12345;
  double tol = kCertificateTol;
  std::string out_path;
  bool strict = false;
};

struct Violation {
  bool any = false;

  void track(const Certificate& c) { any = any || c.kind == CertKind::violated; }
};

void emit(const Json& doc, const GlobalOptions& global) {
  const std::string text = dump_json_17(doc);
  std::cout << text << "\n";
  if (!global.out_path.empty()) {
    std::ofstream out(global.out_path);
    if (!out) throw std::invalid_argument("cannot write: " + global.out_path);
    out << text << "\n";
  }
}

SpectralState load_state(const std::string& path) {
  return SpectralState::from_density(matrix_from_json(load_json_file(path)));
}

Json action_entry(int i, int j, const Matrix& m) {
  Json e;
  e["i"] = i;
  e["j"] = j;
  e["matrix"] = matrix_to_json(m);
  return e;
}

Json action_table(const LinearMap& phi) {
  Json entries = Json::array();
  for (int i = 0; i < phi.dim; ++i)
    for (int j = 0; j < phi.dim; ++j)
      entries.push_back(action_entry(i, j, phi(matrix_unit(phi.dim, i, j))));
  return entries;
}

Json state_summary(const SpectralState& st) {
  Json j;
  j["dim"] = st.dim;
  j["lambda_tilde"] = std::vector<double>(
      st.lambda_tilde.data(), st.lambda_tilde.data() + st.dim);
  j["lambda"] =
      std::vector<double>(st.lambda.data(), st.lambda.data() + st.dim - 1);
  j["lambda_n"] = st.lambda_n;
  return j;
}

// ---------------------------------------------------------------------------
// ball
// ---------------------------------------------------------------------------

Json cmd_ball(const std::string& state_path) {
  const SpectralState st = load_state(state_path);
  const SimplexBall ball = simplex_ball(st);
  Json doc = state_summary(st);
  doc["r_max"] = ball.radius;
  doc["alpha_star"] = std::vector<double>(ball.tangency.data(),
                                          ball.tangency.data() + st.dim - 1);
  return doc;
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

Json certificates_for(const BallMap& bm, const GlobalOptions& global,
                      int samples, int restarts, Violation& violation) {
  const LinearMap phi = bm.as_linear_map();
  Json certs;
  const Certificate cp = cp_check(phi, bm.state.dim);
  certs["cp"] = certificate_to_json(cp);
  const Certificate pos = positivity_scan(phi, bm.state.dim, samples, restarts,
                                          global.seed, global.tol);
  violation.track(pos);
  certs["positivity"] = certificate_to_json(pos);
  const Certificate ball = ball_image_check(bm, samples, global.seed + 1);
  violation.track(ball);
  certs["ball"] = certificate_to_json(ball);
  return certs;
}

Json cmd_map(const std::string& config_path, bool certify, int samples,
             int restarts, const GlobalOptions& global, Violation& violation) {
  const Json cfg = load_json_file(config_path);
  const BallMap bm = ball_map_from_config(cfg);
  if (!bm.certified_positive)
    std::cerr << "warning: |mu| exceeds mu_max; map is not certified positive\n";
  Json doc;
  doc["dim"] = bm.state.dim;
  doc["mu"] = bm.mu;
  doc["mu_max"] = bm.mu_max_value;
  doc["r_max"] = bm.r_max_value;
  doc["certified_positive"] = bm.certified_positive;
  doc["state"] = state_summary(bm.state);
  doc["action"] = action_table(bm.as_linear_map());
  if (certify)
    doc["certificates"] =
        certificates_for(bm, global, samples, restarts, violation);
  return doc;
}

// ---------------------------------------------------------------------------
// choi
// ---------------------------------------------------------------------------

Json cmd_choi(double alpha, const std::optional<std::string>& state_path) {
  const SpectralState st =
      state_path ? load_state(*state_path) : SpectralState::maximally_mixed(3);
  const ChoiFamilyMap phi = family_map(st, alpha);
  Json doc;
  doc["alpha"] = alpha;
  doc["choi_angle"] = choi_angle();
  doc["mu_max"] = phi.mu;
  doc["eta"] = phi.eta_coeff;
  doc["xi"] = phi.xi_coeff;
  Json lambda_rows = Json::array();
  for (int i = 0; i < 3; ++i)
    lambda_rows.push_back(std::vector<double>{
        phi.lambda(i, 0), phi.lambda(i, 1), phi.lambda(i, 2)});
  doc["lambda"] = lambda_rows;
  doc["action"] = action_table(phi.as_linear_map());
  return doc;
}

// ---------------------------------------------------------------------------
// witness
// ---------------------------------------------------------------------------

Json witness_to_json(const Witness& w) {
  Json doc;
  doc["dimA"] = w.dim_a;
  doc["dimB"] = w.dim_b;
  doc["matrix"] = matrix_to_json(w.matrix);
  doc["min_eigenvalue"] = w.min_eigenvalue;
  doc["block_positivity_lower_bound"] =
      w.block_positivity_lower_bound ? Json(*w.block_positivity_lower_bound)
                                     : Json(nullptr);
  doc["source"] = w.source;
  return doc;
}

Json coefficients_to_json(const FamilyCoefficients& fc) {
  Json j;
  j["a"] = fc.a;
  j["b"] = fc.b;
  j["c"] = fc.c;
  j["sums"] = fc.sums();
  j["mu_max"] = fc.mu_max;
  return j;
}

/// Reassemble a witness from the "action" table of a `map` output document.
Witness witness_from_map_output(const Json& map_doc) {
  const int n = map_doc.at("dim").get<int>();
  Matrix w(n * n, n * n);
  for (const auto& entry : map_doc.at("action")) {
    const int i = entry.at("i").get<int>();
    const int j = entry.at("j").get<int>();
    // action blocks of a Hermiticity-preserving map need not be Hermitian
    const Json& mj = entry.at("matrix");
    Matrix block(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        block(r, c) = Complex(mj.at("re")[r][c].get<double>(),
                              mj.at("im")[r][c].get<double>());
    w.block(i * n, j * n, n, n) = block;
  }
  Witness out;
  out.dim_a = n;
  out.dim_b = n;
  out.matrix = make_hermitian(w, 1e-10);
  out.min_eigenvalue = min_eigenvalue(out.matrix);
  out.source = "map-output";
  return out;
}

Json cmd_witness_build(const std::optional<double>& alpha,
                       const std::optional<std::string>& state_path,
                       const std::optional<std::string>& from_map, bool certify,
                       int restarts, const GlobalOptions& global,
                       Violation& violation) {
  Witness w;
  Json doc;
  if (from_map) {
    w = witness_from_map_output(load_json_file(*from_map));
  } else {
    if (!alpha)
      throw std::invalid_argument("witness build needs --alpha or --from-map");
    const SpectralState st = state_path ? load_state(*state_path)
                                        : SpectralState::maximally_mixed(3);
    w = family_witness(st, *alpha);
    doc["coefficients"] = coefficients_to_json(coefficients(st, *alpha));
  }
  if (certify) {
    const Certificate block =
        block_positivity(w.matrix, w.dim_a, w.dim_b, restarts, global.seed,
                         global.tol);
    violation.track(block);
    w.block_positivity_lower_bound = block.bound;
    doc["certificates"] = Json{{"block", certificate_to_json(block)}};
    doc["entanglement_witness"] = w.is_entanglement_witness();
  }
  Json merged = witness_to_json(w);
  for (auto& item : doc.items()) merged[item.key()] = item.value();
  return merged;
}

Json cmd_witness_detect(const std::string& witness_path,
                        const std::string& rho_path) {
  const Json wj = load_json_file(witness_path);
  Witness w;
  if (wj.contains("matrix")) {
    w.matrix = matrix_from_json(wj.at("matrix"), 1e-10);
    w.dim_a = wj.at("dimA").get<int>();
    w.dim_b = wj.at("dimB").get<int>();
  } else {
    w.matrix = matrix_from_json(wj, 1e-10);
    const int side = static_cast<int>(std::lround(std::sqrt(
        static_cast<double>(w.matrix.rows()))));
    if (side * side != w.matrix.rows())
      throw std::invalid_argument("witness detect: cannot infer dimensions");
    w.dim_a = w.dim_b = side;
  }
  const Matrix rho = matrix_from_json(load_json_file(rho_path));
  const double value = detect(w, rho);
  Json doc;
  doc["value"] = value;
  doc["verdict"] = value < -kEigenTol ? "entangled-detected" : "no-detection";
  return doc;
}

Json cmd_witness_coeffs(double alpha,
                        const std::optional<std::string>& state_path) {
  const SpectralState st =
      state_path ? load_state(*state_path) : SpectralState::maximally_mixed(3);
  Json doc = coefficients_to_json(coefficients(st, alpha));
  const auto [sub, negative] = negativity_submatrix(st, alpha);
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back(std::vector<double>{sub(i, 0), sub(i, 1), sub(i, 2)});
  doc["negativity_submatrix"] = rows;
  doc["is_witness"] = negative;
  return doc;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

Json cmd_verify(const std::string& config_path, const std::string& checks,
                int samples, int restarts, const GlobalOptions& global,
                Violation& violation) {
  const BallMap bm = ball_map_from_config(load_json_file(config_path));
  const LinearMap phi = bm.as_linear_map();
  Json certs;
  std::stringstream ss(checks);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "cp") {
      certs["cp"] = certificate_to_json(cp_check(phi, bm.state.dim));
    } else if (item == "positivity") {
      const Certificate c = positivity_scan(phi, bm.state.dim, samples,
                                            restarts, global.seed, global.tol);
      violation.track(c);
      certs["positivity"] = certificate_to_json(c);
    } else if (item == "ball") {
      const Certificate c = ball_image_check(bm, samples, global.seed + 1);
      violation.track(c);
      certs["ball"] = certificate_to_json(c);
    } else if (item == "block") {
      const Witness w = from_map(phi, bm.state.dim, "verify");
      const Certificate c =
          block_positivity(w.matrix, w.dim_a, w.dim_b,
                           std::max(restarts, 100), global.seed, global.tol);
      violation.track(c);
      certs["block"] = certificate_to_json(c);
    } else {
      throw std::invalid_argument("verify: unknown check '" + item + "'");
    }
  }
  Json doc;
  doc["mu"] = bm.mu;
  doc["mu_max"] = bm.mu_max_value;
  doc["certified_positive"] = bm.certified_positive;
  doc["certificates"] = certs;
  return doc;
}

// ---------------------------------------------------------------------------
// figure
// ---------------------------------------------------------------------------

Json cmd_figure(const std::string& state_path, const std::string& mu_spec,
                const std::optional<double>& alpha) {
  const SpectralState st = load_state(state_path);
  const Json mu_json = mu_spec == "max" || mu_spec == "-max"
                           ? Json(mu_spec)
                           : Json(std::stod(mu_spec));
  const double mu = mu_from_config(mu_json, st);
  AffineMap affine = alpha ? family_rotation(*alpha)
                           : AffineMap::identity(st.dim * st.dim - 1);
  if (alpha && st.dim != 3)
    throw std::invalid_argument("figure: --alpha requires n = 3");
  const BallMap bm = BallMap::compose(st, mu, std::move(affine));
  const GellMannBasis& basis = bm.basis;

  const auto project = [&](const Matrix& m) {
    return std::vector<double>{hs_inner(basis.f[0], m),
                               hs_inner(basis.f[1], m)};
  };

  Json doc;
  doc["mu"] = mu;
  doc["r_max"] = bm.r_max_value;
  doc["center"] = project(st.rho);
  Json pk = Json::array();
  Json pk_image = Json::array();
  for (int i = 0; i < st.dim; ++i) {
    pk.push_back(project(st.projectors[i]));
    pk_image.push_back(project(bm.apply(st.projectors[i])));
  }
  doc["projectors"] = pk;
  doc["images"] = pk_image;
  Json circle = Json::array();
  const auto center = project(st.rho);
  for (int k = 0; k < 64; ++k) {
    const double t = 2.0 * kPi * k / 64;
    circle.push_back(std::vector<double>{
        center[0] + bm.r_max_value * std::cos(t),
        center[1] + bm.r_max_value * std::sin(t)});
  }
  doc["circle"] = circle;
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ball-geometry positive maps and entanglement witnesses"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "base seed for all sampling");
  app.add_option("--tol", global.tol, "certificate tolerance");
  app.add_option("--out", global.out_path, "also write the JSON to this file");
  app.add_flag("--strict", global.strict,
               "exit 3 when a certificate reports a violation");

  // ball
  auto* ball = app.add_subcommand("ball", "simplex ball of a faithful state");
  std::string ball_state;
  ball->add_option("--state", ball_state, "state JSON file")->required();

  // map
  auto* map = app.add_subcommand("map", "build a composed ball map");
  std::string map_config;
  bool map_certify = false;
  int samples = 10'000;
  int restarts = 10;
  map->add_option("--config", map_config, "map config JSON file")->required();
  map->add_flag("--certify", map_certify, "run cp/positivity/ball checks");
  map->add_option("--samples", samples, "samples for sampled certificates");
  map->add_option("--restarts", restarts, "refinement restarts");

  // choi
  auto* choi = app.add_subcommand("choi", "closed-form n=3 family");
  double choi_alpha = 0.0;
  std::string choi_state;
  choi->add_option("--alpha", choi_alpha, "family angle in radians")->required();
  choi->add_option("--state", choi_state, "state JSON file (default I/3)");

  // witness
  auto* witness = app.add_subcommand("witness", "entanglement witnesses");
  witness->require_subcommand(1);
  auto* wbuild = witness->add_subcommand("build", "assemble a witness");
  double wb_alpha = 0.0;
  std::string wb_state, wb_from_map;
  bool wb_certify = false;
  int wb_restarts = 100;
  auto* wb_alpha_opt =
      wbuild->add_option("--alpha", wb_alpha, "family angle in radians");
  wbuild->add_option("--state", wb_state, "state JSON file (default I/3)");
  wbuild->add_option("--from-map", wb_from_map,
                     "assemble from a `map` output JSON file");
  wbuild->add_flag("--certify", wb_certify, "run the block-positivity scan");
  wbuild->add_option("--restarts", wb_restarts, "block-positivity restarts");

  auto* wdetect = witness->add_subcommand("detect", "evaluate Tr(W rho)");
  std::string wd_witness, wd_rho;
  wdetect->add_option("--witness", wd_witness, "witness JSON file")->required();
  wdetect->add_option("--rho", wd_rho, "state JSON file")->required();

  auto* wcoeffs = witness->add_subcommand("coeffs", "family coefficients");
  double wc_alpha = 0.0;
  std::string wc_state;
  wcoeffs->add_option("--alpha", wc_alpha, "family angle in radians")
      ->required();
  wcoeffs->add_option("--state", wc_state, "state JSON file (default I/3)");

  // verify
  auto* verify = app.add_subcommand("verify", "run certification checks");
  std::string verify_config;
  std::string verify_checks = "cp,positivity,ball";
  int verify_samples = 10'000;
  int verify_restarts = 10;
  verify->add_option("--config", verify_config, "map config JSON file")
      ->required();
  verify->add_option("--checks", verify_checks,
                     "comma list from cp,positivity,ball,block");
  verify->add_option("--samples", verify_samples, "sample count");
  verify->add_option("--restarts", verify_restarts, "refinement restarts");

  // figure
  auto* figure = app.add_subcommand("figure", "2d projection data");
  std::string fig_state, fig_mu = "max";
  double fig_alpha = 0.0;
  figure->add_option("--state", fig_state, "state JSON file")->required();
  figure->add_option("--mu", fig_mu, "mu value, 'max' or '-max'");
  auto* fig_alpha_opt =
      figure->add_option("--alpha", fig_alpha, "family rotation angle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    Violation violation;
    Json doc;
    if (*ball) {
      doc = cmd_ball(ball_state);
    } else if (*map) {
      doc = cmd_map(map_config, map_certify, samples, restarts, global,
                    violation);
    } else if (*choi) {
      doc = cmd_choi(choi_alpha,
                     choi_state.empty()
                         ? std::nullopt
                         : std::optional<std::string>(choi_state));
    } else if (*witness) {
      if (*wbuild)
        doc = cmd_witness_build(
            wb_alpha_opt->count() > 0 ? std::optional<double>(wb_alpha)
                                      : std::nullopt,
            wb_state.empty() ? std::nullopt
                             : std::optional<std::string>(wb_state),
            wb_from_map.empty() ? std::nullopt
                                : std::optional<std::string>(wb_from_map),
            wb_certify, wb_restarts, global, violation);
      else if (*wdetect)
        doc = cmd_witness_detect(wd_witness, wd_rho);
      else
        doc = cmd_witness_coeffs(
            wc_alpha, wc_state.empty()
                          ? std::nullopt
                          : std::optional<std::string>(wc_state));
    } else if (*verify) {
      doc = cmd_verify(verify_config, verify_checks, verify_samples,
                       verify_restarts, global, violation);
    } else if (*figure) {
      doc = cmd_figure(fig_state, fig_mu,
                       fig_has_alpha ? std::optional<double>(fig_alpha)
                                     : std::nullopt);
    }
    emit(doc, global);
    if (global.strict && violation.any) return 3;
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
