#include "llf/convolution.hpp"

#include <cmath>

#include "llf/errors.hpp"

namespace llf {

Kernel3::Kernel3(int shift_exponent) : shift(shift_exponent) {
  if (shift < 2) throw ValidationError("kernel shift exponent must be at least 2");
  const double base[3] = {1.0, 2.0, 1.0};
  const double scale = std::ldexp(1.0, -shift);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      weights[r][c] = base[r] * base[c] * scale;
    }
  }
}

Plane conv3_ref(const Plane& p, const Kernel3& k) {
  Plane out(p.width, p.height);
  for (int y = 0; y < p.height; ++y) {
    for (int x = 0; x < p.width; ++x) {
      double acc = 0.0;
      for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
          acc += k.weights[j][i] * p.at_clamped(x + i - 1, y + j - 1);
        }
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

int32_t sau(int32_t a, int32_t b, int32_t c, int s) {
  return (a >> s) + (b >> (s - 1)) + (c >> s);
}

namespace {

// Stage-1 column for padded column index u in [-1, width]: vertical SAU over
// the clamped triple around each row.
void stage1_column(const PlaneQ& p, int u, int s, std::vector<int32_t>& out) {
  const int x = u < 0 ? 0 : (u >= p.width ? p.width - 1 : u);
  for (int y = 0; y < p.height; ++y) {
    out[y] = sau(p.at_clamped(x, y - 1), p.at(x, y), p.at_clamped(x, y + 1), s);
  }
}

}  // namespace

PlaneQ conv3_shift_add(const PlaneQ& p, int s) {
  if (s < 2) throw ValidationError("shift-add convolution needs shift >= 2");
  PlaneQ out(p.width, p.height);
  const int h = p.height;
  // Rolling window of the three stage-1 columns around the output column.
  std::vector<int32_t> left(h), center(h), right(h);
  stage1_column(p, -1, s, left);
  stage1_column(p, 0, s, center);
  for (int x = 0; x < p.width; ++x) {
    stage1_column(p, x + 1, s, right);
    for (int y = 0; y < h; ++y) {
      out.at(x, y) = right[y] + (center[y] << 1) + left[y];
    }
    std::swap(left, center);
    std::swap(center, right);
  }
  return out;
}

std::vector<ColumnPipelineState> pipeline_trace(const PlaneQ& p, int s) {
  if (s < 2) throw ValidationError("shift-add convolution needs shift >= 2");
  const int h = p.height;
  std::vector<ColumnPipelineState> trace;
  trace.reserve(p.width + 2);
  std::vector<int32_t> fresh(h, 0);
  std::vector<int32_t> prev_stage1(h, 0);
  std::vector<int32_t> prev_stage2(h, 0);
  for (int cycle = 0; cycle < p.width + 2; ++cycle) {
    ColumnPipelineState st;
    st.fill_count = cycle;
    stage1_column(p, cycle - 1, s, fresh);
    st.stage1 = fresh;
    st.stage2.resize(h);
    st.stage3.resize(h);
    for (int y = 0; y < h; ++y) {
      st.stage2[y] = prev_stage1[y] << 1;
      st.stage3[y] = prev_stage2[y] >> 1;  // exact: stage2 values are even
    }
    prev_stage1 = st.stage1;
    prev_stage2 = st.stage2;
    trace.push_back(std::move(st));
  }
  return trace;
}

}  // namespace llf
