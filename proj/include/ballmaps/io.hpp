#pragma once

// JSON interchange: the matrix format {"dim": n, "re": [[..]], "im": [[..]]}
// (row-major, Hermiticity validated on read), certificates, map configs, and
// a serializer that prints floats with 17 significant digits for bit-faithful
// reproduction.

#include "ballmaps/choi.hpp"
#include "ballmaps/hermitian.hpp"
#include "ballmaps/maps.hpp"
#include "ballmaps/random.hpp"
#include "ballmaps/verify.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace ballmaps {

using Json = nlohmann::ordered_json;

/// Reject configs with keys outside the allowed set.
inline void require_keys(const Json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  if (!j.is_object())
    throw std::invalid_argument(where + ": expected a JSON object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw std::invalid_argument(where + ": unknown key '" + item.key() + "'");
}

inline Json matrix_to_json(const Matrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rrow = Json::array();
    Json irow = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return Json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

/// Parse and validate Hermiticity.
inline Matrix matrix_from_json(const Json& j, double tol = kHermitianTol) {
  require_keys(j, {"dim", "re", "im"}, "matrix");
  const int n = j.at("dim").get<int>();
  if (n < 1) throw std::invalid_argument("matrix: dim must be positive");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
    throw std::invalid_argument("matrix: row count does not match dim");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(re[i].size()) != n ||
        static_cast<int>(im[i].size()) != n)
      throw std::invalid_argument("matrix: column count does not match dim");
    for (int k = 0; k < n; ++k)
      m(i, k) = Complex(re[i][k].get<double>(), im[i][k].get<double>());
  }
  return make_hermitian(m, tol);
}

inline Json certificate_to_json(const Certificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["bound"] = c.bound;
  j["samples"] = c.samples;
  j["restarts"] = c.restarts;
  j["seed"] = c.seed;
  j["tolerance"] = c.tolerance;
  j["violator"] = c.violator ? matrix_to_json(*c.violator) : Json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// Map config:
//   {"state": <matrix object or "maximally_mixed">, "dim": n (for the mixed
//    shorthand), "mu": number | "max" | "-max",
//    "affine": {"kind": "identity"} |
//              {"kind": "extremal", "kappa":.., "delta":.., "r1_seed":..,
//               "r2_seed":..} |
//              {"kind": "rotation_alpha", "alpha":..}}
// ---------------------------------------------------------------------------

inline SpectralState state_from_config(const Json& j) {
  require_keys(j, {"state", "dim", "mu", "affine"}, "map config");
  const Json& st = j.at("state");
  if (st.is_string()) {
    if (st.get<std::string>() != "maximally_mixed")
      throw std::invalid_argument("map config: unknown state '" +
                                  st.get<std::string>() + "'");
    if (!j.contains("dim"))
      throw std::invalid_argument(
          "map config: 'maximally_mixed' requires a 'dim' key");
    return SpectralState::maximally_mixed(j.at("dim").get<int>());
  }
  return SpectralState::from_density(matrix_from_json(st));
}

inline double mu_from_config(const Json& mu, const SpectralState& state) {
  if (mu.is_number()) return mu.get<double>();
  const std::string s = mu.get<std::string>();
  if (s == "max") return mu_max(state);
  if (s == "-max") return -mu_max(state);
  throw std::invalid_argument("map config: mu must be a number, 'max' or '-max'");
}

inline AffineMap affine_from_config(const Json& j, int dim) {
  const int m = dim * dim - 1;
  if (j.is_null()) return AffineMap::identity(m);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "identity") {
    require_keys(j, {"kind"}, "affine config");
    return AffineMap::identity(m);
  }
  if (kind == "extremal") {
    require_keys(j, {"kind", "kappa", "delta", "r1_seed", "r2_seed"},
                 "affine config");
    return AffineMap::extremal(
        m, random_orthogonal(m, j.at("r1_seed").get<std::uint64_t>()),
        random_orthogonal(m, j.at("r2_seed").get<std::uint64_t>()),
        j.at("kappa").get<double>(), j.at("delta").get<double>());
  }
  if (kind == "rotation_alpha") {
    require_keys(j, {"kind", "alpha"}, "affine config");
    if (dim != 3)
      throw std::invalid_argument("affine config: rotation_alpha requires n = 3");
    return family_rotation(j.at("alpha").get<double>());
  }
  throw std::invalid_argument("affine config: unknown kind '" + kind + "'");
}

inline BallMap ball_map_from_config(const Json& j) {
  const SpectralState state = state_from_config(j);
  const double mu = mu_from_config(j.at("mu"), state);
  AffineMap affine = j.contains("affine")
                         ? affine_from_config(j.at("affine"), state.dim)
                         : AffineMap::identity(state.dim * state.dim - 1);
  return BallMap::compose(state, mu, std::move(affine));
}

// ---------------------------------------------------------------------------
// Serialization with 17 significant digits for doubles.
// ---------------------------------------------------------------------------

namespace detail {

inline void dump17(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& el : j) {
        if (!first) out += ',';
        first = false;
        dump17(el, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(item.key()).dump();
        out += ':';
        dump17(item.value(), out);
      }
      out += '}';
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace detail

inline std::string dump_json_17(const Json& j) {
  std::string out;
  detail::dump17(j, out);
  return out;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace ballmaps
