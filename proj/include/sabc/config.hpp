#ifndef SABC_CONFIG_HPP
#define SABC_CONFIG_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sabc/energy.hpp"

namespace sabc {

using Vec2 = std::array<double, 2>;

/// Full scenario description. Defaults reproduce the reference setup: a
/// 4-antenna active device at the origin, a 4-antenna access point at
/// (6, 0) m, four tags dropped uniformly in a circle of radius 2 m around
/// (3, 3) m, path-loss exponent 2.2 and a 2.8 dB Rician factor.
///
/// All quantities are SI: powers in watts, rates in bits/s/Hz with the slot
/// normalized to unit duration. dB inputs are converted once at parse time
/// (`rician_kappa` is the linear factor actually used downstream).
struct SystemConfig {
  int M = 4;  // transmit antennas at the active device
  int N = 4;  // tags (backscatter devices)
  int K = 4;  // receive antennas at the access point

  Vec2 ad_pos{0.0, 0.0};
  Vec2 ap_pos{6.0, 0.0};
  Vec2 bd_circle_center{3.0, 3.0};
  double bd_circle_radius = 2.0;

  double path_loss_exponent = 2.2;
  double rician_factor_db = 2.8;
  double rician_kappa = 0.0;  // derived: 10^(rician_factor_db / 10)

  double p_max = 1.0;   // W
  double r_min = 1.0;   // bits/s/Hz floor for the active device
  std::vector<double> p_circuit;  // W, per tag
  std::vector<EHParams> eh;       // per tag

  double sigma_w2 = 1e-8;  // W, receiver noise
  double sigma_n2 = 1e-8;  // W, tag-side noise (carried, unused in rates)

  double omega_th = 1e-3;
  double phi_th = 1e-3;
  double eps_th = 1e-3;
  int max_iter_a1 = 1000;
  int max_iter_a2 = 1000;
  int max_iter_a3 = 1000;

  int trials = 200;
  std::uint64_t seed = 1;

  double frc_alpha = 0.3;          // reflection coefficient of the FRC baseline
  bool redraw_bd_positions = true; // re-drop tags every trial

  /// Throws std::invalid_argument naming the offending key.
  void validate() const;
};

/// Parse a JSON document; missing keys fall back to defaults, unknown keys
/// are rejected. Scalar-or-array semantics for the per-tag fields
/// (p_circuit, eh_a, eh_b, eh_p_se, eh_p_sa): a scalar is broadcast to all
/// N tags.
SystemConfig parse_config(const std::string& text);
SystemConfig parse_config(const nlohmann::json& doc);

/// Inverse of parse_config up to formatting; parse(render(c)) == c.
nlohmann::json render_config(const SystemConfig& config);

/// Sweep support: set `key` to `value` in a rendered document. Integer and
/// boolean keys are coerced; unknown keys are rejected.
void apply_override(nlohmann::json& doc, const std::string& key, double value);

/// case-insensitive list of valid top-level keys (for CLI diagnostics)
const std::vector<std::string>& config_keys();

}  // namespace sabc

#endif
