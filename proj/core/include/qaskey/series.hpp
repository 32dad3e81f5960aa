#pragma once

#include <complex>

namespace qaskey {

/// Outcome of an infinite summation, product or quadrature.
///
/// `tail_bound` is an absolute estimate of the neglected part; `converged`
/// reports whether the stopping rule was met before the term cap.
template <class T>
struct SeriesResult {
  T value{};
  int n_used = 0;
  double tail_bound = 0.0;
  bool converged = true;
};

}  // namespace qaskey
