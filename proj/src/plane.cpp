#include "llf/plane.hpp"

#include <cmath>

#include "llf/errors.hpp"

namespace llf {

Plane::Plane(int w, int h, double fill) : width(w), height(h) {
  if (w < 1 || h < 1) throw ValidationError("plane dimensions must be at least 1x1");
  samples.assign(static_cast<size_t>(w) * h, fill);
}

PlaneQ::PlaneQ(int w, int h, int32_t fill) : width(w), height(h) {
  if (w < 1 || h < 1) throw ValidationError("plane dimensions must be at least 1x1");
  samples.assign(static_cast<size_t>(w) * h, fill);
}

PlaneQ quantize(const Plane& p) {
  PlaneQ q(p.width, p.height);
  for (size_t i = 0; i < p.samples.size(); ++i) {
    q.samples[i] = static_cast<int32_t>(std::llround(p.samples[i] * PlaneQ::one));
  }
  return q;
}

Plane dequantize(const PlaneQ& q) {
  Plane p(q.width, q.height);
  const double scale = 1.0 / PlaneQ::one;
  for (size_t i = 0; i < q.samples.size(); ++i) {
    p.samples[i] = q.samples[i] * scale;
  }
  return p;
}

}  // namespace llf
