#pragma once

#include "lced/rational.hpp"

namespace lced {

// Constants fixed by multi-seed calibration campaigns (seeds 1,2,3,7,13,42)
// with at least 2x headroom over the measured maxima; every campaign reports
// the implied per-instance constants next to these values.

/// paths >= n * (d / (c*s))^(s/2); measured implied max 0.41.
Rat counting_calibration();

/// alpha <= c * s * n^(2/s); measured ratio max 0.14.
Rat arboricity_calibration();

/// union sparsity <= c * s * |A|^(2/s) * max step sparsity; measured 0.21.
Rat union_calibration();

/// decomposition slack <= c * s * |A|^(2/s); measured 0.10.
Rat slack_calibration();

}  // namespace lced
