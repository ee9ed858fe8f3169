#include "sabc/config.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sabc {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownKeys = {
    "M", "N", "K",
    "ad_pos", "ap_pos", "bd_circle_center", "bd_circle_radius",
    "path_loss_exponent", "rician_factor_db",
    "p_max", "r_min", "p_circuit",
    "eh_a", "eh_b", "eh_p_se", "eh_p_sa",
    "sigma_w2", "sigma_n2",
    "omega_th", "phi_th", "eps_th",
    "max_iter_a1", "max_iter_a2", "max_iter_a3",
    "trials", "seed", "frc_alpha", "redraw_bd_positions"};

const std::set<std::string> kIntKeys = {
    "M", "N", "K", "max_iter_a1", "max_iter_a2", "max_iter_a3", "trials"};

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

double get_number(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number()) fail(std::string(key) + " must be a number");
  return v.get<double>();
}

int get_int(const json& doc, const char* key, int fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number_integer()) fail(std::string(key) + " must be an integer");
  return v.get<int>();
}

Vec2 get_vec2(const json& doc, const char* key, Vec2 fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(std::string(key) + " must be a 2-element numeric array");
  return {v[0].get<double>(), v[1].get<double>()};
}

// Scalar broadcast or per-tag array of length N.
std::vector<double> get_per_bd(const json& doc, const char* key, int n,
                               double fallback) {
  if (!doc.contains(key)) return std::vector<double>(n, fallback);
  const json& v = doc.at(key);
  if (v.is_number()) return std::vector<double>(n, v.get<double>());
  if (v.is_array()) {
    if (static_cast<int>(v.size()) != n)
      fail(std::string(key) + " array must have one entry per tag (N=" +
           std::to_string(n) + ")");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
      if (!v[i].is_number()) fail(std::string(key) + " entries must be numbers");
      out[i] = v[i].get<double>();
    }
    return out;
  }
  fail(std::string(key) + " must be a number or an array");
}

void require_positive(double x, const char* key) {
  if (!(x > 0.0)) fail(std::string(key) + " must be positive");
}

void require_finite(double x, const char* key) {
  if (!std::isfinite(x)) fail(std::string(key) + " must be finite");
}

}  // namespace

void SystemConfig::validate() const {
  if (M < 1) fail("M must be at least 1");
  if (N < 1) fail("N must be at least 1");
  if (K < 1) fail("K must be at least 1");
  require_positive(bd_circle_radius, "bd_circle_radius");
  require_positive(path_loss_exponent, "path_loss_exponent");
  require_finite(rician_factor_db, "rician_factor_db");
  require_positive(p_max, "p_max");
  if (r_min < 0.0) fail("r_min must be nonnegative");
  require_positive(sigma_w2, "sigma_w2");
  require_positive(sigma_n2, "sigma_n2");
  if (!(omega_th > 0.0 && omega_th < 1.0)) fail("omega_th must lie in (0, 1)");
  if (!(phi_th > 0.0 && phi_th < 1.0)) fail("phi_th must lie in (0, 1)");
  if (!(eps_th > 0.0 && eps_th < 1.0)) fail("eps_th must lie in (0, 1)");
  if (max_iter_a1 < 1) fail("max_iter_a1 must be at least 1");
  if (max_iter_a2 < 1) fail("max_iter_a2 must be at least 1");
  if (max_iter_a3 < 1) fail("max_iter_a3 must be at least 1");
  if (trials < 1) fail("trials must be at least 1");
  if (!(frc_alpha > 0.0 && frc_alpha <= 1.0))
    fail("frc_alpha must lie in (0, 1]");
  if (static_cast<int>(p_circuit.size()) != N ||
      static_cast<int>(eh.size()) != N)
    fail("per-tag parameter vectors must have length N");
  for (double pc : p_circuit)
    if (pc < 0.0) fail("p_circuit must be nonnegative");
  for (const EHParams& e : eh) {
    require_positive(e.a, "eh_a");
    require_finite(e.b, "eh_b");
    if (e.p_se < 0.0) fail("eh_p_se must be nonnegative");
    require_positive(e.p_sa, "eh_p_sa");
  }
}

SystemConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("config document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!kKnownKeys.count(it.key()))
      fail("unknown config key '" + it.key() + "'");

  SystemConfig defaults;
  SystemConfig c;
  c.M = get_int(doc, "M", defaults.M);
  c.N = get_int(doc, "N", defaults.N);
  c.K = get_int(doc, "K", defaults.K);
  if (c.M < 1) fail("M must be at least 1");
  if (c.N < 1) fail("N must be at least 1");
  if (c.K < 1) fail("K must be at least 1");

  c.ad_pos = get_vec2(doc, "ad_pos", defaults.ad_pos);
  c.ap_pos = get_vec2(doc, "ap_pos", defaults.ap_pos);
  c.bd_circle_center = get_vec2(doc, "bd_circle_center", defaults.bd_circle_center);
  c.bd_circle_radius = get_number(doc, "bd_circle_radius", defaults.bd_circle_radius);

  c.path_loss_exponent = get_number(doc, "path_loss_exponent", defaults.path_loss_exponent);
  c.rician_factor_db = get_number(doc, "rician_factor_db", defaults.rician_factor_db);
  c.rician_kappa = std::pow(10.0, c.rician_factor_db / 10.0);

  c.p_max = get_number(doc, "p_max", defaults.p_max);
  c.r_min = get_number(doc, "r_min", defaults.r_min);
  c.p_circuit = get_per_bd(doc, "p_circuit", c.N, 1e-3);

  EHParams eh_default;
  std::vector<double> a = get_per_bd(doc, "eh_a", c.N, eh_default.a);
  std::vector<double> b = get_per_bd(doc, "eh_b", c.N, eh_default.b);
  std::vector<double> p_se = get_per_bd(doc, "eh_p_se", c.N, eh_default.p_se);
  std::vector<double> p_sa = get_per_bd(doc, "eh_p_sa", c.N, eh_default.p_sa);
  c.eh.resize(c.N);
  for (int n = 0; n < c.N; ++n)
    c.eh[n] = EHParams{a[n], b[n], p_se[n], p_sa[n]};

  c.sigma_w2 = get_number(doc, "sigma_w2", defaults.sigma_w2);
  c.sigma_n2 = get_number(doc, "sigma_n2", defaults.sigma_n2);
  c.omega_th = get_number(doc, "omega_th", defaults.omega_th);
  c.phi_th = get_number(doc, "phi_th", defaults.phi_th);
  c.eps_th = get_number(doc, "eps_th", defaults.eps_th);
  c.max_iter_a1 = get_int(doc, "max_iter_a1", defaults.max_iter_a1);
  c.max_iter_a2 = get_int(doc, "max_iter_a2", defaults.max_iter_a2);
  c.max_iter_a3 = get_int(doc, "max_iter_a3", defaults.max_iter_a3);
  c.trials = get_int(doc, "trials", defaults.trials);
  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_unsigned() && !s.is_number_integer())
      fail("seed must be an integer");
    c.seed = s.get<std::uint64_t>();
  }
  c.frc_alpha = get_number(doc, "frc_alpha", defaults.frc_alpha);
  if (doc.contains("redraw_bd_positions")) {
    const json& v = doc.at("redraw_bd_positions");
    if (!v.is_boolean()) fail("redraw_bd_positions must be a boolean");
    c.redraw_bd_positions = v.get<bool>();
  }

  c.validate();
  return c;
}

SystemConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed config document: ") + e.what());
  }
  return parse_config(doc);
}

json render_config(const SystemConfig& c) {
  json doc;
  doc["M"] = c.M;
  doc["N"] = c.N;
  doc["K"] = c.K;
  doc["ad_pos"] = c.ad_pos;
  doc["ap_pos"] = c.ap_pos;
  doc["bd_circle_center"] = c.bd_circle_center;
  doc["bd_circle_radius"] = c.bd_circle_radius;
  doc["path_loss_exponent"] = c.path_loss_exponent;
  doc["rician_factor_db"] = c.rician_factor_db;
  doc["p_max"] = c.p_max;
  doc["r_min"] = c.r_min;
  doc["p_circuit"] = c.p_circuit;
  std::vector<double> a, b, p_se, p_sa;
  for (const EHParams& e : c.eh) {
    a.push_back(e.a);
    b.push_back(e.b);
    p_se.push_back(e.p_se);
    p_sa.push_back(e.p_sa);
  }
  doc["eh_a"] = a;
  doc["eh_b"] = b;
  doc["eh_p_se"] = p_se;
  doc["eh_p_sa"] = p_sa;
  doc["sigma_w2"] = c.sigma_w2;
  doc["sigma_n2"] = c.sigma_n2;
  doc["omega_th"] = c.omega_th;
  doc["phi_th"] = c.phi_th;
  doc["eps_th"] = c.eps_th;
  doc["max_iter_a1"] = c.max_iter_a1;
  doc["max_iter_a2"] = c.max_iter_a2;
  doc["max_iter_a3"] = c.max_iter_a3;
  doc["trials"] = c.trials;
  doc["seed"] = c.seed;
  doc["frc_alpha"] = c.frc_alpha;
  doc["redraw_bd_positions"] = c.redraw_bd_positions;
  return doc;
}

void apply_override(json& doc, const std::string& key, double value) {
  if (!kKnownKeys.count(key))
    fail("unknown config key '" + key + "' in sweep/override");
  if (key == "seed") {
    doc[key] = static_cast<std::uint64_t>(value);
  } else if (key == "redraw_bd_positions") {
    doc[key] = value != 0.0;
  } else if (kIntKeys.count(key)) {
    doc[key] = static_cast<int>(std::llround(value));
  } else {
    doc[key] = value;
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys(kKnownKeys.begin(),
                                             kKnownKeys.end());
  return keys;
}

}  // namespace sabc
