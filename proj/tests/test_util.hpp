#pragma once

#include <algorithm>
#include <cmath>

// |got - want| relative to the larger magnitude; safe at zero.
inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max({std::abs(got), std::abs(want), 1e-300});
}
