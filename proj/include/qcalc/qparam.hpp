#pragma once

#include <cmath>

#include "qcalc/errors.hpp"

namespace qcalc {

// The deformation parameter q, restricted to real q in (0,1). Values within
// 1e-12 of 1 are rejected so that 1-q never underflows in the kernels.
class QParam {
public:
    explicit QParam(double q) : q_(q) {
        if (!(q > 0.0) || !(q < 1.0) || !((1.0 - q) > 1e-12)) {
            throw DomainError("QParam: q must satisfy 0 < q < 1 - 1e-12");
        }
    }

    double value() const { return q_; }
    double one_minus() const { return 1.0 - q_; }

    // Radius of convergence of the e_q / sin_q / cos_q series.
    double series_radius() const { return 1.0 / (1.0 - q_); }

private:
    double q_;
};

// 1 - q^t without cancellation for q near 1 (t real, any sign).
inline double one_minus_qpow(double q, double t) {
    return -std::expm1(t * std::log(q));
}

} // namespace qcalc
