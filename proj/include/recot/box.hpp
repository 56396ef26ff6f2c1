#pragma once

#include <algorithm>
#include <array>

namespace recot {

// Axis-aligned box in normalized (cx, cy, w, h) form.
struct Box {
  double cx = 0.5;
  double cy = 0.5;
  double w = 0.0;
  double h = 0.0;

  static Box from_corners(double x0, double y0, double x1, double y1) {
    return {(x0 + x1) / 2, (y0 + y1) / 2, x1 - x0, y1 - y0};
  }
  std::array<double, 4> corners() const {
    return {cx - w / 2, cy - h / 2, cx + w / 2, cy + h / 2};
  }
  double area() const { return w * h; }
  // Positive extent and fully inside the unit square.
  bool valid() const {
    const auto c = corners();
    return w > 0 && h > 0 && c[0] >= -1e-12 && c[1] >= -1e-12 && c[2] <= 1 + 1e-12 && c[3] <= 1 + 1e-12;
  }
  bool operator==(const Box&) const = default;
};

// Generic over the scalar so the loss can push dual numbers through it.
template <typename S>
S giou_generic(const S a[4], const S b[4]) {
  using std::max;
  using std::min;
  const S ax0 = a[0] - a[2] / 2, ay0 = a[1] - a[3] / 2, ax1 = a[0] + a[2] / 2, ay1 = a[1] + a[3] / 2;
  const S bx0 = b[0] - b[2] / 2, by0 = b[1] - b[3] / 2, bx1 = b[0] + b[2] / 2, by1 = b[1] + b[3] / 2;
  const S iw = max(S(0), min(ax1, bx1) - max(ax0, bx0));
  const S ih = max(S(0), min(ay1, by1) - max(ay0, by0));
  const S inter = iw * ih;
  const S uni = a[2] * a[3] + b[2] * b[3] - inter;
  const S hull = (max(ax1, bx1) - min(ax0, bx0)) * (max(ay1, by1) - min(ay0, by0));
  return inter / uni - (hull - uni) / hull;
}

inline double iou(const Box& a, const Box& b) {
  const auto p = a.corners(), q = b.corners();
  const double iw = std::max(0.0, std::min(p[2], q[2]) - std::max(p[0], q[0]));
  const double ih = std::max(0.0, std::min(p[3], q[3]) - std::max(p[1], q[1]));
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  return uni > 0 ? inter / uni : 0.0;
}

inline double giou(const Box& a, const Box& b) {
  const double p[4] = {a.cx, a.cy, a.w, a.h};
  const double q[4] = {b.cx, b.cy, b.w, b.h};
  return giou_generic(p, q);
}

}  // namespace recot
