#include "holo/fisher.hpp"

#include <cmath>

#include "holo/rng.hpp"

namespace holo {

ModelParams model_params(ManifoldId m, const Point& primary) {
  ModelParams mp;
  switch (m) {
    case ManifoldId::BivariateGaussian: {
      const auto& x = primary.coords;
      const double s1 = x[2], s2 = x[3], s12 = x[4];
      mp.mean[0] = x[0];
      mp.mean[1] = x[1];
      mp.chol[0][0] = std::sqrt(s1);
      mp.chol[1][0] = s12 / mp.chol[0][0];
      mp.chol[1][1] = std::sqrt(s2 - s12 * s12 / s1);
      mp.obs_dim = 2;
      break;
    }
    case ManifoldId::IndependenceSub: {
      const auto src = from_natural_coords(m, primary.coords);
      mp.mean[0] = src[0];
      mp.mean[1] = src[1];
      mp.chol[0][0] = std::sqrt(src[2]);
      mp.chol[1][1] = std::sqrt(src[3]);
      mp.obs_dim = 2;
      break;
    }
    case ManifoldId::UnivariateGaussian: {
      mp.mean[0] = primary.coords[0];
      mp.chol[0][0] = std::sqrt(primary.coords[1]);
      mp.obs_dim = 1;
      break;
    }
    case ManifoldId::ConeOverIndependence:
      throw ChartError("model_params: cone carries no statistical model");
  }
  return mp;
}

std::vector<double> score_vector(ManifoldId m, const Point& primary, const double* obs) {
  switch (m) {
    case ManifoldId::BivariateGaussian: {
      const auto& p = primary.coords;
      const double s1 = p[2], s2 = p[3], s12 = p[4];
      const double del = s1 * s2 - s12 * s12;
      // Sigma^{-1}
      const double i11 = s2 / del, i22 = s1 / del, i12 = -s12 / del;
      const double d0 = obs[0] - p[0], d1 = obs[1] - p[1];
      // q = Sigma^{-1} (x - mu)
      const double q0 = i11 * d0 + i12 * d1;
      const double q1 = i12 * d0 + i22 * d1;
      // dl/dSigma_A = -1/2 tr(Sigma^{-1} E_A) + 1/2 q^T E_A q
      std::vector<double> s(5);
      s[0] = q0;
      s[1] = q1;
      s[2] = -0.5 * i11 + 0.5 * q0 * q0;
      s[3] = -0.5 * i22 + 0.5 * q1 * q1;
      s[4] = -i12 + q0 * q1;
      return s;
    }
    case ManifoldId::IndependenceSub: {
      // exponential family: d_a l = F_a(x) - d_a phi
      std::vector<J1> tj(4);
      for (int i = 0; i < 4; ++i) tj[i] = j1_variable(primary.coords[i], i);
      const J1 phi = potential_components(m, tj);
      std::vector<double> s(4);
      const double F[4] = {obs[0], obs[1], obs[0] * obs[0], obs[1] * obs[1]};
      for (int a = 0; a < 4; ++a) s[a] = F[a] - phi.d[a];
      return s;
    }
    case ManifoldId::UnivariateGaussian: {
      const double mu = primary.coords[0], v = primary.coords[1];
      const double d = obs[0] - mu;
      return {d / v, -0.5 / v + 0.5 * d * d / (v * v)};
    }
    case ManifoldId::ConeOverIndependence:
      throw ChartError("score_vector: cone carries no statistical model");
  }
  return {};
}

namespace {

struct ChunkAccum {
  std::vector<double> sum;    // sum of s_a s_b
  std::vector<double> sumsq;  // sum of (s_a s_b)^2
  long long count = 0;
};

ChunkAccum run_chunk(ManifoldId m, const Point& primary, const ModelParams& mp,
                     long long n, std::uint64_t chunk_seed) {
  const int dim = manifold_dim(m);
  ChunkAccum acc;
  acc.sum.assign(dim * dim, 0.0);
  acc.sumsq.assign(dim * dim, 0.0);
  acc.count = n;
  SplitMix rng(chunk_seed);
  double obs[2] = {0, 0};
  for (long long i = 0; i < n; ++i) {
    double z0, z1;
    rng.normal_pair(z0, z1);
    obs[0] = mp.mean[0] + mp.chol[0][0] * z0;
    obs[1] = mp.mean[1] + mp.chol[1][0] * z0 + mp.chol[1][1] * z1;
    const auto s = score_vector(m, primary, obs);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        const double p = s[a] * s[b];
        acc.sum[a * dim + b] += p;
        acc.sumsq[a * dim + b] += p * p;
      }
  }
  return acc;
}

}  // namespace

FisherEstimate fisher_oracle_mc(ManifoldId m, const Point& p, long long n_samples,
                                std::uint64_t seed) {
  const Point primary = to_primary(p);
  const ModelParams mp = model_params(m, primary);
  const int dim = manifold_dim(m);
  constexpr int kChunks = 64;
  std::vector<ChunkAccum> chunks(kChunks);
  const long long base = n_samples / kChunks;

#pragma omp parallel for schedule(static)
  for (int c = 0; c < kChunks; ++c) {
    const long long n = base + (c == kChunks - 1 ? n_samples % kChunks : 0);
    chunks[c] = run_chunk(m, primary, mp, n, mix_seed(seed, c));
  }

  // fixed-order serial combine keeps the result thread-count independent
  std::vector<double> sum(dim * dim, 0.0), sumsq(dim * dim, 0.0);
  long long total = 0;
  for (const auto& c : chunks) {
    total += c.count;
    for (int i = 0; i < dim * dim; ++i) {
      sum[i] += c.sum[i];
      sumsq[i] += c.sumsq[i];
    }
  }

  FisherEstimate est;
  est.samples = total;
  est.value = Mat::Zero(dim, dim);
  est.std_error = Mat::Zero(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const int i = a * dim + b;
      const double mean = sum[i] / static_cast<double>(total);
      const double var = sumsq[i] / static_cast<double>(total) - mean * mean;
      est.value(a, b) = mean;
      est.std_error(a, b) = std::sqrt(std::max(var, 0.0) / static_cast<double>(total));
    }
  return est;
}

void gauss_hermite(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  Mat J = Mat::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double b = std::sqrt(k / 2.0);
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(J);
  nodes.resize(order);
  weights.resize(order);
  const double sqrt_pi = std::sqrt(closed::pi_v);
  for (int i = 0; i < order; ++i) {
    nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    weights[i] = sqrt_pi * v0 * v0;
  }
}

Mat fisher_oracle_gh(ManifoldId m, const Point& p, int order) {
  const Point primary = to_primary(p);
  const ModelParams mp = model_params(m, primary);
  const int dim = manifold_dim(m);
  std::vector<double> z, w;
  gauss_hermite(order, z, w);

  Mat out = Mat::Zero(dim, dim);
  const double sqrt2 = std::sqrt(2.0);
  double obs[2] = {0, 0};
  if (mp.obs_dim == 1) {
    const double norm = std::sqrt(closed::pi_v);
    for (int i = 0; i < order; ++i) {
      obs[0] = mp.mean[0] + sqrt2 * mp.chol[0][0] * z[i];
      const auto s = score_vector(m, primary, obs);
      const double wt = w[i] / norm;
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) out(a, b) += wt * s[a] * s[b];
    }
    return out;
  }
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      obs[0] = mp.mean[0] + sqrt2 * mp.chol[0][0] * z[i];
      obs[1] = mp.mean[1] + sqrt2 * (mp.chol[1][0] * z[i] + mp.chol[1][1] * z[j]);
      const auto s = score_vector(m, primary, obs);
      const double wt = w[i] * w[j] / closed::pi_v;
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) out(a, b) += wt * s[a] * s[b];
    }
  return out;
}

}  // namespace holo
