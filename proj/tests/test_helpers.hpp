#pragma once

#include <cmath>
#include <numbers>

#include "absphase/numerics.hpp"

namespace test_helpers {

inline constexpr double kPi = std::numbers::pi;

inline double max_abs(const absphase::ComplexMatrix& m) {
    return m.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const absphase::ComplexMatrix& a, const absphase::ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace test_helpers
