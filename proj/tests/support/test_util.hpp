#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "qaskey/log_complex.hpp"

namespace qaskey::test {

inline double rel_err(cplx got, cplx want) {
  const double s = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / s;
}

inline double rel_err(double got, double want) { return rel_err(cplx{got}, cplx{want}); }

}  // namespace qaskey::test

// Relative closeness with the offending values in the failure message.
#define CHECK_REL(got, want, tol)                                                  \
  do {                                                                             \
    const auto qa_got_ = (got);                                                    \
    const auto qa_want_ = (want);                                                  \
    INFO("got " << qa_got_ << ", want " << qa_want_);                              \
    CHECK(::qaskey::test::rel_err(qa_got_, qa_want_) <= (tol));                    \
  } while (0)
