// Closed-form tensor component tables for the Fisher-Rao geometries.
// Generated by tools/gen_closed_forms.py; do not edit by hand.
#pragma once

#include <cmath>

namespace holo::closed {

using std::log;
using std::sqrt;
inline constexpr double pi_v = 3.14159265358979323846264338327950288;

template <class T>
inline void metric_bivariate(const T* x, T g[5][5]) {
  const T s1 = x[2];
  const T s2 = x[3];
  const T s12 = x[4];
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) g[a][b] = T(0);
  const T w0 = s1*s2;
  const T w1 = s12*s12;
  const T w2 = w0 - w1;
  const T w3 = 1.0/w2;
  const T w4 = -w3*s12;
  const T w5 = 1.0/(w2*w2);
  const T w6 = w5/2.0;
  const T w7 = w1*w6;
  const T w8 = w5*s12;
  const T w9 = -w8*s2;
  const T w10 = -w8*s1;
  g[0][0] = w3*s2;
  g[0][1] = w4;
  g[1][0] = w4;
  g[1][1] = w3*s1;
  g[2][2] = w6*s2*s2;
  g[2][3] = w7;
  g[2][4] = w9;
  g[3][2] = w7;
  g[3][3] = w6*s1*s1;
  g[3][4] = w10;
  g[4][2] = w9;
  g[4][3] = w10;
  g[4][4] = w5*(w0 + w1);
}

template <class T>
inline void christoffel_bivariate(const T* x, T G[5][5][5]) {
  const T s1 = x[2];
  const T s2 = x[3];
  const T s12 = x[4];
  for (int c = 0; c < 5; ++c)
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) G[c][a][b] = T(0);
  const T w0 = 1.0/(-s12*s12 + s1*s2);
  const T w1 = w0*s2;
  const T w2 = -w1/2.0;
  const T w3 = w0*s12;
  const T w4 = w3/2.0;
  const T w5 = w0*s1;
  const T w6 = -w5/2.0;
  const T w7 = -w1;
  const T w8 = -w5;
  G[0][0][2] = w2; G[0][2][0] = G[0][0][2];
  G[0][0][4] = w4; G[0][4][0] = G[0][0][4];
  G[0][1][2] = w4; G[0][2][1] = G[0][1][2];
  G[0][1][4] = w6; G[0][4][1] = G[0][1][4];
  G[1][0][3] = w4; G[1][3][0] = G[1][0][3];
  G[1][0][4] = w2; G[1][4][0] = G[1][0][4];
  G[1][1][3] = w6; G[1][3][1] = G[1][1][3];
  G[1][1][4] = w4; G[1][4][1] = G[1][1][4];
  G[2][0][0] = 1.0;
  G[2][2][2] = w7;
  G[2][2][4] = w3; G[2][4][2] = G[2][2][4];
  G[2][4][4] = w8;
  G[3][1][1] = 1.0;
  G[3][3][3] = w8;
  G[3][3][4] = w3; G[3][4][3] = G[3][3][4];
  G[3][4][4] = w7;
  G[4][0][1] = 1.0/2.0; G[4][1][0] = G[4][0][1];
  G[4][2][3] = w4; G[4][3][2] = G[4][2][3];
  G[4][2][4] = w2; G[4][4][2] = G[4][2][4];
  G[4][3][4] = w6; G[4][4][3] = G[4][3][4];
  G[4][4][4] = w3;
}

template <class T>
inline void riemann_bivariate(const T* x, T R[5][5][5][5]) {
  const T s1 = x[2];
  const T s2 = x[3];
  const T s12 = x[4];
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) R[a][b][c][d] = T(0);
  const T w0 = s1*s2;
  const T w1 = s12*s12;
  const T w2 = w0 - w1;
  const T w3 = 1.0/(4.0*w2*w2);
  const T w4 = w3*s12;
  const T w5 = -w3*s2;
  const T w6 = w3*s1;
  const T w7 = 1.0/(w2*w2*w2);
  const T w8 = w7/4.0;
  const T w9 = w1*w8;
  const T w10 = -w9*s2;
  const T w11 = s2*s2;
  const T w12 = w7/2.0;
  const T w13 = w12*s12;
  const T w14 = w11*w13;
  const T w15 = w11*w8;
  const T w16 = w15*s12;
  const T w17 = w8*s12;
  const T w18 = w0*w17;
  const T w19 = w8*(w0 + w1);
  const T w20 = -w19*s2;
  const T w21 = -w9*s1;
  const T w22 = w19*s12;
  const T w23 = w8*s12*s12*s12;
  const T w24 = s1*s1;
  const T w25 = w24*w8;
  const T w26 = w25*s12;
  const T w27 = w1*w12;
  const T w28 = -w27*s1;
  const T w29 = w8*(w0 + 3.0*w1);
  const T w30 = -w27*s2;
  const T w31 = -w19*s1;
  const T w32 = w17*(w1 + 3.0*w0);
  const T w33 = w13*w24;
  const T w34 = w17*s2;
  const T w35 = -w17*s1;
  const T w36 = w0*w8;
  R[0][1][0][1] = 1.0/(4.0*w2); R[1][0][0][1] = -R[0][1][0][1]; R[0][1][1][0] = -R[0][1][0][1]; R[1][0][1][0] = R[0][1][0][1];
  R[0][1][2][3] = w4; R[1][0][2][3] = -R[0][1][2][3]; R[0][1][3][2] = -R[0][1][2][3]; R[1][0][3][2] = R[0][1][2][3];
  R[0][1][2][4] = w5; R[1][0][2][4] = -R[0][1][2][4]; R[0][1][4][2] = -R[0][1][2][4]; R[1][0][4][2] = R[0][1][2][4];
  R[0][1][3][4] = w6; R[1][0][3][4] = -R[0][1][3][4]; R[0][1][4][3] = -R[0][1][3][4]; R[1][0][4][3] = R[0][1][3][4];
  R[0][2][0][2] = -w8*s2*s2*s2; R[2][0][0][2] = -R[0][2][0][2]; R[0][2][2][0] = -R[0][2][0][2]; R[2][0][2][0] = R[0][2][0][2];
  R[0][2][0][3] = w10; R[2][0][0][3] = -R[0][2][0][3]; R[0][2][3][0] = -R[0][2][0][3]; R[2][0][3][0] = R[0][2][0][3];
  R[0][2][0][4] = w14; R[2][0][0][4] = -R[0][2][0][4]; R[0][2][4][0] = -R[0][2][0][4]; R[2][0][4][0] = R[0][2][0][4];
  R[0][2][1][2] = w16; R[2][0][1][2] = -R[0][2][1][2]; R[0][2][2][1] = -R[0][2][1][2]; R[2][0][2][1] = R[0][2][1][2];
  R[0][2][1][3] = w18; R[2][0][1][3] = -R[0][2][1][3]; R[0][2][3][1] = -R[0][2][1][3]; R[2][0][3][1] = R[0][2][1][3];
  R[0][2][1][4] = w20; R[2][0][1][4] = -R[0][2][1][4]; R[0][2][4][1] = -R[0][2][1][4]; R[2][0][4][1] = R[0][2][1][4];
  R[0][3][0][2] = w10; R[3][0][0][2] = -R[0][3][0][2]; R[0][3][2][0] = -R[0][3][0][2]; R[3][0][2][0] = R[0][3][0][2];
  R[0][3][0][3] = w21; R[3][0][0][3] = -R[0][3][0][3]; R[0][3][3][0] = -R[0][3][0][3]; R[3][0][3][0] = R[0][3][0][3];
  R[0][3][0][4] = w22; R[3][0][0][4] = -R[0][3][0][4]; R[0][3][4][0] = -R[0][3][0][4]; R[3][0][4][0] = R[0][3][0][4];
  R[0][3][1][2] = w23; R[3][0][1][2] = -R[0][3][1][2]; R[0][3][2][1] = -R[0][3][1][2]; R[3][0][2][1] = R[0][3][1][2];
  R[0][3][1][3] = w26; R[3][0][1][3] = -R[0][3][1][3]; R[0][3][3][1] = -R[0][3][1][3]; R[3][0][3][1] = R[0][3][1][3];
  R[0][3][1][4] = w28; R[3][0][1][4] = -R[0][3][1][4]; R[0][3][4][1] = -R[0][3][1][4]; R[3][0][4][1] = R[0][3][1][4];
  R[0][4][0][2] = w14; R[4][0][0][2] = -R[0][4][0][2]; R[0][4][2][0] = -R[0][4][0][2]; R[4][0][2][0] = R[0][4][0][2];
  R[0][4][0][3] = w22; R[4][0][0][3] = -R[0][4][0][3]; R[0][4][3][0] = -R[0][4][0][3]; R[4][0][3][0] = R[0][4][0][3];
  R[0][4][0][4] = -w29*s2; R[4][0][0][4] = -R[0][4][0][4]; R[0][4][4][0] = -R[0][4][0][4]; R[4][0][4][0] = R[0][4][0][4];
  R[0][4][1][2] = w30; R[4][0][1][2] = -R[0][4][1][2]; R[0][4][2][1] = -R[0][4][1][2]; R[4][0][2][1] = R[0][4][1][2];
  R[0][4][1][3] = w31; R[4][0][1][3] = -R[0][4][1][3]; R[0][4][3][1] = -R[0][4][1][3]; R[4][0][3][1] = R[0][4][1][3];
  R[0][4][1][4] = w32; R[4][0][1][4] = -R[0][4][1][4]; R[0][4][4][1] = -R[0][4][1][4]; R[4][0][4][1] = R[0][4][1][4];
  R[1][2][0][2] = w16; R[2][1][0][2] = -R[1][2][0][2]; R[1][2][2][0] = -R[1][2][0][2]; R[2][1][2][0] = R[1][2][0][2];
  R[1][2][0][3] = w23; R[2][1][0][3] = -R[1][2][0][3]; R[1][2][3][0] = -R[1][2][0][3]; R[2][1][3][0] = R[1][2][0][3];
  R[1][2][0][4] = w30; R[2][1][0][4] = -R[1][2][0][4]; R[1][2][4][0] = -R[1][2][0][4]; R[2][1][4][0] = R[1][2][0][4];
  R[1][2][1][2] = w10; R[2][1][1][2] = -R[1][2][1][2]; R[1][2][2][1] = -R[1][2][1][2]; R[2][1][2][1] = R[1][2][1][2];
  R[1][2][1][3] = w21; R[2][1][1][3] = -R[1][2][1][3]; R[1][2][3][1] = -R[1][2][1][3]; R[2][1][3][1] = R[1][2][1][3];
  R[1][2][1][4] = w22; R[2][1][1][4] = -R[1][2][1][4]; R[1][2][4][1] = -R[1][2][1][4]; R[2][1][4][1] = R[1][2][1][4];
  R[1][3][0][2] = w18; R[3][1][0][2] = -R[1][3][0][2]; R[1][3][2][0] = -R[1][3][0][2]; R[3][1][2][0] = R[1][3][0][2];
  R[1][3][0][3] = w26; R[3][1][0][3] = -R[1][3][0][3]; R[1][3][3][0] = -R[1][3][0][3]; R[3][1][3][0] = R[1][3][0][3];
  R[1][3][0][4] = w31; R[3][1][0][4] = -R[1][3][0][4]; R[1][3][4][0] = -R[1][3][0][4]; R[3][1][4][0] = R[1][3][0][4];
  R[1][3][1][2] = w21; R[3][1][1][2] = -R[1][3][1][2]; R[1][3][2][1] = -R[1][3][1][2]; R[3][1][2][1] = R[1][3][1][2];
  R[1][3][1][3] = -w8*s1*s1*s1; R[3][1][1][3] = -R[1][3][1][3]; R[1][3][3][1] = -R[1][3][1][3]; R[3][1][3][1] = R[1][3][1][3];
  R[1][3][1][4] = w33; R[3][1][1][4] = -R[1][3][1][4]; R[1][3][4][1] = -R[1][3][1][4]; R[3][1][4][1] = R[1][3][1][4];
  R[1][4][0][2] = w20; R[4][1][0][2] = -R[1][4][0][2]; R[1][4][2][0] = -R[1][4][0][2]; R[4][1][2][0] = R[1][4][0][2];
  R[1][4][0][3] = w28; R[4][1][0][3] = -R[1][4][0][3]; R[1][4][3][0] = -R[1][4][0][3]; R[4][1][3][0] = R[1][4][0][3];
  R[1][4][0][4] = w32; R[4][1][0][4] = -R[1][4][0][4]; R[1][4][4][0] = -R[1][4][0][4]; R[4][1][4][0] = R[1][4][0][4];
  R[1][4][1][2] = w22; R[4][1][1][2] = -R[1][4][1][2]; R[1][4][2][1] = -R[1][4][1][2]; R[4][1][2][1] = R[1][4][1][2];
  R[1][4][1][3] = w33; R[4][1][1][3] = -R[1][4][1][3]; R[1][4][3][1] = -R[1][4][1][3]; R[4][1][3][1] = R[1][4][1][3];
  R[1][4][1][4] = -w29*s1; R[4][1][1][4] = -R[1][4][1][4]; R[1][4][4][1] = -R[1][4][1][4]; R[4][1][4][1] = R[1][4][1][4];
  R[2][3][0][1] = w4; R[3][2][0][1] = -R[2][3][0][1]; R[2][3][1][0] = -R[2][3][0][1]; R[3][2][1][0] = R[2][3][0][1];
  R[2][3][2][3] = -w9; R[3][2][2][3] = -R[2][3][2][3]; R[2][3][3][2] = -R[2][3][2][3]; R[3][2][3][2] = R[2][3][2][3];
  R[2][3][2][4] = w34; R[3][2][2][4] = -R[2][3][2][4]; R[2][3][4][2] = -R[2][3][2][4]; R[3][2][4][2] = R[2][3][2][4];
  R[2][3][3][4] = w35; R[3][2][3][4] = -R[2][3][3][4]; R[2][3][4][3] = -R[2][3][3][4]; R[3][2][4][3] = R[2][3][3][4];
  R[2][4][0][1] = w5; R[4][2][0][1] = -R[2][4][0][1]; R[2][4][1][0] = -R[2][4][0][1]; R[4][2][1][0] = R[2][4][0][1];
  R[2][4][2][3] = w34; R[4][2][2][3] = -R[2][4][2][3]; R[2][4][3][2] = -R[2][4][2][3]; R[4][2][3][2] = R[2][4][2][3];
  R[2][4][2][4] = -w15; R[4][2][2][4] = -R[2][4][2][4]; R[2][4][4][2] = -R[2][4][2][4]; R[4][2][4][2] = R[2][4][2][4];
  R[2][4][3][4] = w36; R[4][2][3][4] = -R[2][4][3][4]; R[2][4][4][3] = -R[2][4][3][4]; R[4][2][4][3] = R[2][4][3][4];
  R[3][4][0][1] = w6; R[4][3][0][1] = -R[3][4][0][1]; R[3][4][1][0] = -R[3][4][0][1]; R[4][3][1][0] = R[3][4][0][1];
  R[3][4][2][3] = w35; R[4][3][2][3] = -R[3][4][2][3]; R[3][4][3][2] = -R[3][4][2][3]; R[4][3][3][2] = R[3][4][2][3];
  R[3][4][2][4] = w36; R[4][3][2][4] = -R[3][4][2][4]; R[3][4][4][2] = -R[3][4][2][4]; R[4][3][4][2] = R[3][4][2][4];
  R[3][4][3][4] = -w25; R[4][3][3][4] = -R[3][4][3][4]; R[3][4][4][3] = -R[3][4][3][4]; R[4][3][4][3] = R[3][4][3][4];
}

template <class T>
inline void ricci_bivariate(const T* x, T g[5][5]) {
  const T s1 = x[2];
  const T s2 = x[3];
  const T s12 = x[4];
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) g[a][b] = T(0);
  const T w0 = s1*s2;
  const T w1 = s12*s12;
  const T w2 = w0 - w1;
  const T w3 = 1.0/(2.0*w2);
  const T w4 = w3*s12;
  const T w5 = 1.0/(w2*w2);
  const T w6 = w5/2.0;
  const T w7 = w5*(w0 - 3.0*w1)/4.0;
  const T w8 = w5*s12;
  const T w9 = w8*s2;
  const T w10 = w8*s1;
  g[0][0] = -w3*s2;
  g[0][1] = w4;
  g[1][0] = w4;
  g[1][1] = -w3*s1;
  g[2][2] = -w6*s2*s2;
  g[2][3] = w7;
  g[2][4] = w9;
  g[3][2] = w7;
  g[3][3] = -w6*s1*s1;
  g[3][4] = w10;
  g[4][2] = w9;
  g[4][3] = w10;
  g[4][4] = -w6*(w1 + 3.0*w0);
}

template <class T>
inline void metric_independence(const T* x, T g[4][4]) {
  const T t1 = x[0];
  const T t2 = x[1];
  const T t3 = x[2];
  const T t4 = x[3];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g[a][b] = T(0);
  const T w0 = t1/(2.0*t3*t3);
  const T w1 = t2/(2.0*t4*t4);
  g[0][0] = -1.0/(2.0*t3);
  g[0][2] = w0;
  g[1][1] = -1.0/(2.0*t4);
  g[1][3] = w1;
  g[2][0] = w0;
  g[2][2] = -(t1*t1 - t3)/(2.0*t3*t3*t3);
  g[3][1] = w1;
  g[3][3] = -(t2*t2 - t4)/(2.0*t4*t4*t4);
}

template <class T>
inline void christoffel_independence(const T* x, T G[4][4][4]) {
  const T t1 = x[0];
  const T t2 = x[1];
  const T t3 = x[2];
  const T t4 = x[3];
  for (int c = 0; c < 4; ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) G[c][a][b] = T(0);
  const T w0 = t1/(2.0*t3);
  const T w1 = 1.0/(t3*t3);
  const T w2 = t1*t1;
  const T w3 = t2/(2.0*t4);
  const T w4 = 1.0/(t4*t4);
  const T w5 = t2*t2;
  G[0][0][0] = w0;
  G[0][0][2] = -w1*(w2 + t3)/2.0; G[0][2][0] = G[0][0][2];
  G[0][2][2] = t1*t1*t1/(2.0*t3*t3*t3);
  G[1][1][1] = w3;
  G[1][1][3] = -w4*(w5 + t4)/2.0; G[1][3][1] = G[1][1][3];
  G[1][3][3] = t2*t2*t2/(2.0*t4*t4*t4);
  G[2][0][0] = 1.0/2.0;
  G[2][0][2] = -w0; G[2][2][0] = G[2][0][2];
  G[2][2][2] = w1*(w2 - 2.0*t3)/2.0;
  G[3][1][1] = 1.0/2.0;
  G[3][1][3] = -w3; G[3][3][1] = G[3][1][3];
  G[3][3][3] = w4*(w5 - 2.0*t4)/2.0;
}

template <class T>
inline void riemann_independence(const T* x, T R[4][4][4][4]) {
  const T t3 = x[2];
  const T t4 = x[3];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) R[a][b][c][d] = T(0);
  R[0][2][0][2] = 1.0/(8.0*t3*t3*t3); R[2][0][0][2] = -R[0][2][0][2]; R[0][2][2][0] = -R[0][2][0][2]; R[2][0][2][0] = R[0][2][0][2];
  R[1][3][1][3] = 1.0/(8.0*t4*t4*t4); R[3][1][1][3] = -R[1][3][1][3]; R[1][3][3][1] = -R[1][3][1][3]; R[3][1][3][1] = R[1][3][1][3];
}

template <class T>
inline void ricci_independence(const T* x, T g[4][4]) {
  const T t1 = x[0];
  const T t2 = x[1];
  const T t3 = x[2];
  const T t4 = x[3];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g[a][b] = T(0);
  const T w0 = -t1/(4.0*t3*t3);
  const T w1 = -t2/(4.0*t4*t4);
  g[0][0] = 1.0/(4.0*t3);
  g[0][2] = w0;
  g[1][1] = 1.0/(4.0*t4);
  g[1][3] = w1;
  g[2][0] = w0;
  g[2][2] = (t1*t1 - t3)/(4.0*t3*t3*t3);
  g[3][1] = w1;
  g[3][3] = (t2*t2 - t4)/(4.0*t4*t4*t4);
}

template <class T>
inline T potential_bivariate(const T* x) {
  const T t1 = x[0];
  const T t2 = x[1];
  const T t3 = x[2];
  const T t4 = x[3];
  const T t5 = x[4];
  const T w0 = 1.0/(-t4*t4 + 4.0*t3*t5);
  return -w0*(t3*t2*t2 + t5*t1*t1 - t1*t2*t4) + log(2.0*pi_v*sqrt(w0));
}

template <class T>
inline T potential_independence(const T* x) {
  const T t1 = x[0];
  const T t2 = x[1];
  const T t3 = x[2];
  const T t4 = x[3];
  const T w0 = 1.0/t3;
  const T w1 = 1.0/t4;
  return (2.0*log(w0*w1) + 4.0*log(pi_v) - w0*t1*t1 - w1*t2*t2)/4.0;
}

}  // namespace holo::closed
