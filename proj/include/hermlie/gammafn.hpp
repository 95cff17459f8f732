#pragma once

namespace hermlie {

/// Gamma via the Lanczos sum (g = 7, 9 terms), reflection for x < 1/2.
/// About 15 significant digits on the ranges used here.  Callers detect
/// poles on exact arguments before evaluating; this never checks.
double lanczos_gamma(double x);

}  // namespace hermlie
