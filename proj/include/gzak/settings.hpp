#pragma once

namespace gzak {

/// Numerical thresholds shared by the fiberwise analyses.
struct Settings {
  /// Rank cutoff relative to the largest fiber singular value; also the
  /// support threshold and the Parseval tolerance.
  double tolerance = 1e-10;
  /// Linear independence: smallest Gram eigenvalue must exceed riesz_ratio * largest.
  double riesz_ratio = 1e-9;
  /// Membership accepts residual <= membership_ratio * max(1, norm).
  double membership_ratio = 1e-9;
  unsigned threads = 1;
};

}  // namespace gzak
