#pragma once

#include <array>

namespace llf {

/// 3x3 smoothing kernel built as outer([1,2,1],[1,2,1]) / 2^shift.
/// shift = 4 gives the unit-sum binomial kernel
/// [[1/16,1/8,1/16],[1/8,1/4,1/8],[1/16,1/8,1/16]] whose middle column is
/// twice the first and whose third column equals the first; that relation is
/// what the streaming shift-add engine exploits.
struct Kernel3 {
  int shift = 4;
  std::array<std::array<double, 3>, 3> weights{};

  explicit Kernel3(int shift_exponent = 4);
};

}  // namespace llf
