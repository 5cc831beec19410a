#pragma once

#include <cstdint>
#include <vector>

#include "llf/kernel.hpp"
#include "llf/plane.hpp"

namespace llf {

/// Exact real-valued 3x3 convolution with clamp-to-edge borders.
/// out(x,y) = sum over (i,j) of k(i,j) * p(clamp(x+i-1), clamp(y+j-1)).
Plane conv3_ref(const Plane& p, const Kernel3& k);

/// Shift-and-accumulate unit: (a >> s) + (b >> (s-1)) + (c >> s) with
/// truncating (floor) arithmetic shifts. This is one vertical [1,2,1]/2^s
/// tap column of the streaming engine; each truncation loses strictly less
/// than one LSB, so the unit is within 3 LSB of the exact weighted sum.
int32_t sau(int32_t a, int32_t b, int32_t c, int s);

/// Bit-exact model of the streaming shift-add convolution engine.
/// Columns enter left to right with clamp padding on all sides; every cycle
/// the fresh column goes through the SAU array, the previous result is
/// doubled, and the one before that is halved back; the three stage vectors
/// summed give one output column. Output dims equal input dims. The result
/// is within 12 LSB of the exact convolution and exact when all samples are
/// multiples of 2^s.
PlaneQ conv3_shift_add(const PlaneQ& p, int s = 4);

/// Snapshot of the three pipeline stages after one column has been fed.
/// stage2 is always an exact doubling of the previous stage1 and stage3
/// recovers the stage1 value from two cycles earlier exactly (stage2 is
/// even, so the halving shift drops no bits).
struct ColumnPipelineState {
  std::vector<int32_t> stage1;
  std::vector<int32_t> stage2;
  std::vector<int32_t> stage3;
  int fill_count = 0;  // cycles since the first column entered
};

/// Cycle-by-cycle trace of the engine on a clamp-padded column stream.
/// The trace has width + 2 entries; from fill_count >= 2 onward,
/// stage1 + stage2 + stage3 equals output column fill_count - 2 of
/// conv3_shift_add.
std::vector<ColumnPipelineState> pipeline_trace(const PlaneQ& p, int s = 4);

}  // namespace llf
