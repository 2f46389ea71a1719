#include <fstream>
#include <set>
#include <string>

#include "cgme/cli.hpp"
#include "cgme/errors.hpp"
#include "cgme/pauli.hpp"
#include "json.hpp"

namespace cgme {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw config_error("unknown key '" + it.key() + "' in " + where);
  }
}

double parse_beta(const json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    throw config_error("beta: expected a positive number or \"inf\"");
  }
  if (!v.is_number()) throw config_error("beta: expected a positive number or \"inf\"");
  return v.get<double>();
}

Eigen::Matrix4cd parse_custom_state(const json& obj) {
  reject_unknown_keys(obj, {"re", "im"}, "task.initial_state");
  if (!obj.contains("re") || !obj.contains("im"))
    throw config_error("custom initial_state needs 're' and 'im' 4x4 arrays");
  Eigen::Matrix4cd rho;
  for (const char* part : {"re", "im"}) {
    const json& m = obj.at(part);
    if (!m.is_array() || m.size() != 4)
      throw config_error(std::string("initial_state.") + part + " must be a 4x4 array");
    for (int i = 0; i < 4; ++i) {
      if (!m[i].is_array() || m[i].size() != 4)
        throw config_error(std::string("initial_state.") + part + " must be a 4x4 array");
      for (int j = 0; j < 4; ++j) {
        const double v = m[i][j].get<double>();
        if (part[0] == 'r')
          rho(i, j) = std::complex<double>(v, 0.0);
        else
          rho(i, j) += std::complex<double>(0.0, v);
      }
    }
  }
  return rho;
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw config_error("config '" + path + "' is not valid JSON: " + e.what());
  }

  reject_unknown_keys(doc, {"schema_version", "system", "mode", "rel_tol", "task"},
                      "top level");
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<int>() != 1)
    throw config_error("config must declare schema_version = 1");
  if (!doc.contains("system")) throw config_error("config must have a 'system' block");

  RunConfig rc;
  const json& sys = doc["system"];
  reject_unknown_keys(
      sys, {"omega1", "omega2", "n", "ell", "beta", "lambda", "delta_t", "epsilon"},
      "system");
  if (sys.contains("omega1")) rc.system.omega1 = sys["omega1"].get<double>();
  if (sys.contains("omega2")) rc.system.omega2 = sys["omega2"].get<double>();
  if (sys.contains("n")) {
    const json& n = sys["n"];
    if (!n.is_array() || n.size() != 3)
      throw config_error("system.n must be a 3-element array");
    for (int i = 0; i < 3; ++i) rc.system.n[i] = n[i].get<double>();
  }
  if (sys.contains("ell")) rc.system.ell = sys["ell"].get<double>();
  if (sys.contains("beta")) rc.system.beta = parse_beta(sys["beta"]);
  if (sys.contains("lambda")) rc.system.lambda = sys["lambda"].get<double>();
  if (sys.contains("delta_t")) rc.system.delta_t = sys["delta_t"].get<double>();
  if (sys.contains("epsilon")) rc.system.epsilon = sys["epsilon"].get<double>();
  rc.system.validate();

  if (doc.contains("mode")) rc.mode = mode_from_string(doc["mode"].get<std::string>());
  if (doc.contains("rel_tol")) {
    rc.rel_tol = doc["rel_tol"].get<double>();
    if (!(rc.rel_tol > 0.0 && rc.rel_tol < 1.0))
      throw config_error("rel_tol must be in (0, 1)");
  }

  if (doc.contains("task")) {
    const json& task = doc["task"];
    reject_unknown_keys(task, {"initial_state", "t_max", "n_points"}, "task");
    if (task.contains("initial_state")) {
      const json& st = task["initial_state"];
      if (st.is_string()) {
        rc.initial_state = st.get<std::string>();
        if (rc.initial_state != "product_mp" && rc.initial_state != "bell")
          throw config_error("initial_state must be product_mp, bell, or a {re, im} object");
      } else if (st.is_object()) {
        rc.initial_state = "custom";
        rc.custom_rho = parse_custom_state(st);
      } else {
        throw config_error("initial_state must be product_mp, bell, or a {re, im} object");
      }
    }
    if (task.contains("t_max")) rc.t_max = task["t_max"].get<double>();
    if (task.contains("n_points")) rc.n_points = task["n_points"].get<int>();
  }
  return rc;
}

Eigen::Matrix4cd initial_state_matrix(const RunConfig& rc) {
  if (rc.initial_state == "product_mp") {
    // atom 1 in the lower n.sigma eigenstate, atom 2 in the upper one: the
    // canonical configuration probed by the entanglement criteria.
    const Eigen::Vector2cd phi = spin_state(rc.system.n, -1);
    const Eigen::Vector2cd psi = spin_state(rc.system.n, +1);
    Eigen::Vector4cd prod;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) prod(2 * a + b) = phi(a) * psi(b);
    return prod * prod.adjoint();
  }
  if (rc.initial_state == "bell") {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    v(0) = 1.0 / std::sqrt(2.0);
    v(3) = 1.0 / std::sqrt(2.0);
    return v * v.adjoint();
  }
  check_two_qubit_state(rc.custom_rho);
  return rc.custom_rho;
}

}  // namespace cgme
