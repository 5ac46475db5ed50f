// Forward-mode dual numbers, nestable for higher derivatives.
#pragma once

#include <array>
#include <cmath>
#include <type_traits>

namespace holo {

// Jet<S, N> carries a value and N partial derivatives with entries of type S.
// Nesting (S itself a Jet) yields exact higher-order derivatives.
template <class S, int N>
struct Jet {
  S v{};
  std::array<S, N> d{};

  Jet() = default;
  Jet(double x) requires(!std::is_same_v<S, double>) : v(x) {}  // constant lift
  Jet(const S& value) : v(value) {}

  static Jet variable(double x, int dir) {
    Jet j(x);
    j.d[dir] = S(1.0);
    return j;
  }

  Jet& operator+=(const Jet& o) {
    v += o.v;
    for (int i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    for (int i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
};

inline double scalar_value(double x) { return x; }
template <class S, int N>
double scalar_value(const Jet<S, N>& j) {
  return scalar_value(j.v);
}

template <class S, int N>
Jet<S, N> operator-(const Jet<S, N>& a) {
  Jet<S, N> r;
  r.v = -a.v;
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  return r;
}

template <class S, int N>
Jet<S, N> operator+(const Jet<S, N>& a, const Jet<S, N>& b) {
  Jet<S, N> r;
  r.v = a.v + b.v;
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}
template <class S, int N>
Jet<S, N> operator+(const Jet<S, N>& a, double b) {
  Jet<S, N> r = a;
  r.v = a.v + b;
  return r;
}
template <class S, int N>
Jet<S, N> operator+(double a, const Jet<S, N>& b) {
  return b + a;
}

template <class S, int N>
Jet<S, N> operator-(const Jet<S, N>& a, const Jet<S, N>& b) {
  Jet<S, N> r;
  r.v = a.v - b.v;
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}
template <class S, int N>
Jet<S, N> operator-(const Jet<S, N>& a, double b) {
  Jet<S, N> r = a;
  r.v = a.v - b;
  return r;
}
template <class S, int N>
Jet<S, N> operator-(double a, const Jet<S, N>& b) {
  Jet<S, N> r = -b;
  r.v = a - b.v;
  return r;
}

template <class S, int N>
Jet<S, N> operator*(const Jet<S, N>& a, const Jet<S, N>& b) {
  Jet<S, N> r;
  r.v = a.v * b.v;
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
template <class S, int N>
Jet<S, N> operator*(const Jet<S, N>& a, double b) {
  Jet<S, N> r;
  r.v = a.v * b;
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b;
  return r;
}
template <class S, int N>
Jet<S, N> operator*(double a, const Jet<S, N>& b) {
  return b * a;
}

template <class S, int N>
Jet<S, N> operator/(const Jet<S, N>& a, const Jet<S, N>& b) {
  Jet<S, N> r;
  S inv = S(1.0) / b.v;
  r.v = a.v * inv;
  for (int i = 0; i < N; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) * inv;
  return r;
}
template <class S, int N>
Jet<S, N> operator/(const Jet<S, N>& a, double b) {
  return a * (1.0 / b);
}
template <class S, int N>
Jet<S, N> operator/(double a, const Jet<S, N>& b) {
  return Jet<S, N>(a) / b;
}

template <class S, int N>
Jet<S, N> log(const Jet<S, N>& a) {
  using std::log;
  Jet<S, N> r;
  r.v = log(a.v);
  S inv = S(1.0) / a.v;
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * inv;
  return r;
}

template <class S, int N>
Jet<S, N> sqrt(const Jet<S, N>& a) {
  using std::sqrt;
  Jet<S, N> r;
  r.v = sqrt(a.v);
  S half = S(0.5) / r.v;
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * half;
  return r;
}

template <class S, int N>
Jet<S, N> exp(const Jet<S, N>& a) {
  using std::exp;
  Jet<S, N> r;
  r.v = exp(a.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * r.v;
  return r;
}

// Fixed direction count covering every chart in play (largest base dim is 5).
inline constexpr int kJetDirs = 5;
using J1 = Jet<double, kJetDirs>;
using J2 = Jet<J1, kJetDirs>;
using J3 = Jet<J2, kJetDirs>;

inline J1 j1_variable(double x, int dir) { return J1::variable(x, dir); }

inline J2 j2_variable(double x, int dir) {
  J2 j;
  j.v = J1::variable(x, dir);
  j.d[dir] = J1(1.0);
  return j;
}

inline J3 j3_variable(double x, int dir) {
  J3 j;
  j.v = j2_variable(x, dir);
  j.d[dir] = J2(1.0);
  return j;
}

}  // namespace holo
