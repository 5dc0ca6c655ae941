#pragma once

#include <string>
#include <vector>

#include "qcalc/types.hpp"

namespace qcalc {

// Result record of one identity sweep: worst residual over the sampled
// arguments, the argument that attained it, and the pass verdict
// (pass <=> max_abs_residual <= tolerance, and any pole-skip budget held).
struct IdentityReport {
    std::string identity_id;
    double q = 0.0;
    int samples = 0;                  // evaluated sample count (>= 1)
    double max_abs_residual = 0.0;
    std::vector<Complex> argmax_input; // one entry per argument (x) or (x, y)
    double tolerance = 0.0;
    bool pass = false;
    int skipped = 0;                  // pole-skipped points (not serialized)
};

} // namespace qcalc
