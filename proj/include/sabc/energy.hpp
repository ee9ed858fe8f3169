#ifndef SABC_ENERGY_HPP
#define SABC_ENERGY_HPP

namespace sabc {

/// Constants of the sigmoidal harvester transfer function. All powers in
/// watts; `a` has units 1/W.
struct EHParams {
  double a = 274.0;       // steepness, 1/W
  double b = 0.29;        // offset
  double p_se = 6.4e-5;   // sensitivity threshold, W
  double p_sa = 4.927e-3; // saturation level, W
};

/// RF power arriving at a tag's harvester: the (1-alpha) share of the
/// incident signal that is not reflected.
double harvested_input(double alpha, double p, double h_f_gain);

/// Harvested DC power for a given RF input. Non-decreasing, zero at and
/// below the sensitivity threshold, saturates at p_sa.
double eh_transfer(double p_eh, const EHParams& params);

/// Preimage of eh_transfer on its active region. The clamp below the
/// sensitivity threshold means eh_inverse(0) == p_se.
/// Throws std::domain_error for x >= p_sa (no finite preimage).
double eh_inverse(double x, const EHParams& params);

}  // namespace sabc

#endif
