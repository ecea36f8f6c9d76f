#include <ajscc/device.hpp>

#include <stdexcept>

namespace ajscc {

void validate(const MosfetParams& p) {
    if (!(p.kprime > 0.0)) {
        throw std::invalid_argument("MosfetParams: kprime must be > 0");
    }
    if (!(p.vth > 0.0)) {
        throw std::invalid_argument("MosfetParams: vth must be > 0");
    }
    if (!(p.lambda >= 0.0)) {
        throw std::invalid_argument("MosfetParams: lambda must be >= 0");
    }
}

namespace {

// 0.5*kprime*(vgs-vth)^2, the vds-independent part of the current.
double pinch_off_current(const MosfetParams& p, double vgs) {
    if (!(vgs > p.vth)) {
        throw std::domain_error("device off: vgs <= vth");
    }
    const double vov = vgs - p.vth;
    return 0.5 * p.kprime * vov * vov;
}

}  // namespace

double ids_forward(const MosfetParams& p, double vgs, double vds) {
    return pinch_off_current(p, vgs) * (1.0 + p.lambda * vds);
}

double invert_vds(const MosfetParams& p, double vgs, double ids) {
    const double k = pinch_off_current(p, vgs);
    if (p.lambda == 0.0) {
        throw std::domain_error("invert_vds: undefined for lambda == 0");
    }
    return (ids / k - 1.0) / p.lambda;
}

double curve_slope_exact(const MosfetParams& p, double vgs) {
    return p.lambda * pinch_off_current(p, vgs);
}

double approx_slope_from_currents(const MosfetParams& p, double ids_a,
                                  double ids_b) {
    return p.lambda * 0.5 * (ids_a + ids_b);
}

}  // namespace ajscc
