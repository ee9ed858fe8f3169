#include "sabc/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sabc {

double harvested_input(double alpha, double p, double h_f_gain) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("harvested_input: alpha must lie in [0, 1]");
  if (p < 0.0)
    throw std::invalid_argument("harvested_input: power must be nonnegative");
  return (1.0 - alpha) * p * h_f_gain;
}

double eh_transfer(double p_eh, const EHParams& params) {
  if (p_eh < 0.0)
    throw std::invalid_argument("eh_transfer: input power must be nonnegative");
  const double e_se = std::exp(-params.a * params.p_se + params.b);
  const double denom = 1.0 + std::exp(-params.a * p_eh + params.b);
  const double value = params.p_sa / e_se * ((1.0 + e_se) / denom - 1.0);
  return std::max(value, 0.0);
}

double eh_inverse(double x, const EHParams& params) {
  if (x < 0.0)
    throw std::invalid_argument("eh_inverse: argument must be nonnegative");
  if (x >= params.p_sa)
    throw std::domain_error(
        "eh_inverse: harvested power " + std::to_string(x) +
        " W is at or above the saturation level; no finite preimage");
  const double e_se = std::exp(-params.a * params.p_se + params.b);
  const double b_n = e_se / params.p_sa;
  const double a_n = (1.0 + e_se) / (b_n * x + 1.0) - 1.0;
  return std::max((params.b - std::log(a_n)) / params.a, 0.0);
}

}  // namespace sabc
