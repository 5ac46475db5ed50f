// Central differences with optional Richardson extrapolation.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "holo/types.hpp"

namespace holo {

using ScalarField = std::function<double(const std::vector<double>&)>;
using DomainPredicate = std::function<bool(const std::vector<double>&)>;

inline double default_step(double coord) {
  return 1e-5 * std::max(1.0, std::abs(coord));
}

inline std::vector<double> shifted(const std::vector<double>& x, int dir, double h) {
  std::vector<double> y = x;
  y[dir] += h;
  return y;
}

inline void require_stencil(const DomainPredicate& dom, const std::vector<double>& x,
                            int dir, double h) {
  if (!dom) return;
  if (!dom(shifted(x, dir, h)) || !dom(shifted(x, dir, -h)))
    throw DomainError("central_difference: stencil point leaves the domain");
}

inline double central_difference(const ScalarField& f, const std::vector<double>& x,
                                 int dir, double h,
                                 const DomainPredicate& dom = nullptr) {
  require_stencil(dom, x, dir, h);
  return (f(shifted(x, dir, h)) - f(shifted(x, dir, -h))) / (2.0 * h);
}

// One halving step: (4 D(h/2) - D(h)) / 3.
inline double central_difference_richardson(const ScalarField& f,
                                            const std::vector<double>& x, int dir,
                                            double h,
                                            const DomainPredicate& dom = nullptr) {
  const double d1 = central_difference(f, x, dir, h, dom);
  const double d2 = central_difference(f, x, dir, h / 2.0, dom);
  return (4.0 * d2 - d1) / 3.0;
}

// Nested second difference d_a d_b f.
inline double second_difference(const ScalarField& f, const std::vector<double>& x,
                                int a, int b, double ha, double hb,
                                const DomainPredicate& dom = nullptr) {
  ScalarField inner = [&](const std::vector<double>& y) {
    return central_difference(f, y, b, hb, dom);
  };
  return central_difference(inner, x, a, ha, dom);
}

// Nested third difference d_a d_b d_c f. Step sizes should be coarser than
// first-derivative steps to keep round-off in check.
inline double third_difference(const ScalarField& f, const std::vector<double>& x,
                               int a, int b, int c, double ha, double hb, double hc,
                               const DomainPredicate& dom = nullptr) {
  ScalarField inner = [&](const std::vector<double>& y) {
    return second_difference(f, y, b, c, hb, hc, dom);
  };
  return central_difference(inner, x, a, ha, dom);
}

// Richardson-extrapolated third difference; scaling all three steps together
// cancels the leading O(h^2) truncation term.
inline double third_difference_richardson(const ScalarField& f,
                                          const std::vector<double>& x, int a, int b,
                                          int c, double ha, double hb, double hc,
                                          const DomainPredicate& dom = nullptr) {
  const double d1 = third_difference(f, x, a, b, c, ha, hb, hc, dom);
  const double d2 = third_difference(f, x, a, b, c, ha / 2.0, hb / 2.0, hc / 2.0, dom);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace holo
