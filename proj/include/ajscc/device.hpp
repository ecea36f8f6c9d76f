#pragma once

#include <string>

namespace ajscc {

/// Device constants of the saturation-region current equation
/// ids = 0.5 * kprime * (vgs - vth)^2 * (1 + lambda * vds).
struct MosfetParams {
    double kprime = 155e-6;  ///< combined W*mu*Cox/L factor [A/V^2]
    double vth = 0.74;       ///< threshold voltage [V]
    double lambda = 0.037;   ///< channel-length modulation [1/V]
    std::string label = "nmos-0.18um";
};

/// One bias point on a device's output characteristic.
struct OperatingPoint {
    double vgs = 0.0;  // [V]
    double vds = 0.0;  // [V]
    double ids = 0.0;  // [A]
};

/// Throws std::invalid_argument unless kprime > 0, vth > 0 and lambda >= 0.
void validate(const MosfetParams& p);

/// Saturation-region drain current. Strictly increasing in vgs, and in vds
/// when lambda > 0. Saturation validity (vds > vgs - vth) is not enforced
/// here; grid builders check it at configuration time.
/// Throws std::domain_error when vgs <= vth (device off).
double ids_forward(const MosfetParams& p, double vgs, double vds);

/// Solves the current equation for vds given a candidate vgs:
/// vds = (ids / (0.5*kprime*(vgs-vth)^2) - 1) / lambda.
/// The result may be negative; callers interpret out-of-range values.
/// Throws std::domain_error when vgs <= vth or lambda == 0.
double invert_vds(const MosfetParams& p, double vgs, double ids);

/// Exact slope d(ids)/d(vds) = lambda * 0.5*kprime*(vgs-vth)^2,
/// independent of vds (the current is affine in vds).
double curve_slope_exact(const MosfetParams& p, double vgs);

/// Receiver-side slope estimate lambda*(ids_a + ids_b)/2, the lambda*ids
/// approximation averaged over two consecutive samples. Valid only for
/// lambda*vds << 1; the relative error against the exact slope is
/// exactly lambda*vds at equal inputs.
double approx_slope_from_currents(const MosfetParams& p, double ids_a,
                                  double ids_b);

}  // namespace ajscc
