#include "acw/rl/nets.hpp"

#include <omp.h>

#include <cmath>
#include <cstring>

namespace acw::rl {

void orthogonal_init(std::vector<double>& w, int rows, int cols, double gain,
                     std::mt19937_64& rng) {
  // Gram-Schmidt on gaussian rows (transposed when rows < cols).
  std::normal_distribution<double> gauss(0.0, 1.0);
  int n = std::max(rows, cols), m = std::min(rows, cols);
  std::vector<double> a(static_cast<size_t>(n) * m);
  for (double& x : a) x = gauss(rng);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < j; ++k) {
      double dot = 0;
      for (int i = 0; i < n; ++i) dot += a[i * m + j] * a[i * m + k];
      for (int i = 0; i < n; ++i) a[i * m + j] -= dot * a[i * m + k];
    }
    double norm = 0;
    for (int i = 0; i < n; ++i) norm += a[i * m + j] * a[i * m + j];
    norm = std::sqrt(std::max(norm, 1e-300));
    for (int i = 0; i < n; ++i) a[i * m + j] /= norm;
  }
  w.assign(static_cast<size_t>(rows) * cols, 0.0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      double v = rows >= cols ? a[static_cast<size_t>(r) * m + c]
                              : a[static_cast<size_t>(c) * m + r];
      w[static_cast<size_t>(r) * cols + c] = gain * v;
    }
  }
}

Mlp::Mlp(int input, int hidden, int output, double output_gain, uint64_t seed)
    : in_(input), hid_(hidden), out_(output) {
  size_t n = 0;
  w1_ = n; n += static_cast<size_t>(hid_) * in_;
  b1_ = n; n += hid_;
  w2_ = n; n += static_cast<size_t>(hid_) * hid_;
  b2_ = n; n += hid_;
  w3_ = n; n += static_cast<size_t>(out_) * hid_;
  b3_ = n; n += out_;
  params_.assign(n, 0.0);
  grads_.assign(n, 0.0);

  std::mt19937_64 rng(seed);
  std::vector<double> w;
  double g = std::sqrt(2.0);
  orthogonal_init(w, hid_, in_, g, rng);
  std::memcpy(&params_[w1_], w.data(), w.size() * sizeof(double));
  orthogonal_init(w, hid_, hid_, g, rng);
  std::memcpy(&params_[w2_], w.data(), w.size() * sizeof(double));
  orthogonal_init(w, out_, hid_, output_gain, rng);
  std::memcpy(&params_[w3_], w.data(), w.size() * sizeof(double));
}

void Mlp::forward(const double* x, int batch, double* out, Cache* cache) const {
  const double* w1 = &params_[w1_];
  const double* b1 = &params_[b1_];
  const double* w2 = &params_[w2_];
  const double* b2 = &params_[b2_];
  const double* w3 = &params_[w3_];
  const double* b3 = &params_[b3_];
  std::vector<double> local_h1, local_h2;
  std::vector<double>& h1 = cache ? cache->h1 : local_h1;
  std::vector<double>& h2 = cache ? cache->h2 : local_h2;
  h1.assign(static_cast<size_t>(batch) * hid_, 0.0);
  h2.assign(static_cast<size_t>(batch) * hid_, 0.0);
  if (cache) cache->batch = batch;

#pragma omp parallel for schedule(static) if (batch > 1)
  for (int s = 0; s < batch; ++s) {
    const double* xs = x + static_cast<size_t>(s) * in_;
    double* h1s = &h1[static_cast<size_t>(s) * hid_];
    double* h2s = &h2[static_cast<size_t>(s) * hid_];
    for (int j = 0; j < hid_; ++j) {
      double acc = b1[j];
      const double* row = w1 + static_cast<size_t>(j) * in_;
      for (int i = 0; i < in_; ++i) acc += row[i] * xs[i];
      h1s[j] = std::tanh(acc);
    }
    for (int j = 0; j < hid_; ++j) {
      double acc = b2[j];
      const double* row = w2 + static_cast<size_t>(j) * hid_;
      for (int i = 0; i < hid_; ++i) acc += row[i] * h1s[i];
      h2s[j] = std::tanh(acc);
    }
    double* os = out + static_cast<size_t>(s) * out_;
    for (int j = 0; j < out_; ++j) {
      double acc = b3[j];
      const double* row = w3 + static_cast<size_t>(j) * hid_;
      for (int i = 0; i < hid_; ++i) acc += row[i] * h2s[i];
      os[j] = acc;
    }
  }
}

void Mlp::backward(const double* x, const Cache& cache, const double* dout) {
  int batch = cache.batch;
  const double* w2 = &params_[w2_];
  const double* w3 = &params_[w3_];

  // Per-sample hidden deltas; parameter gradients reduced across the batch.
  std::vector<double> d2(static_cast<size_t>(batch) * hid_, 0.0);
  std::vector<double> d1(static_cast<size_t>(batch) * hid_, 0.0);

#pragma omp parallel for schedule(static) if (batch > 1)
  for (int s = 0; s < batch; ++s) {
    const double* dos = dout + static_cast<size_t>(s) * out_;
    const double* h2s = &cache.h2[static_cast<size_t>(s) * hid_];
    const double* h1s = &cache.h1[static_cast<size_t>(s) * hid_];
    double* d2s = &d2[static_cast<size_t>(s) * hid_];
    double* d1s = &d1[static_cast<size_t>(s) * hid_];
    for (int i = 0; i < hid_; ++i) {
      double acc = 0;
      for (int j = 0; j < out_; ++j) acc += w3[static_cast<size_t>(j) * hid_ + i] * dos[j];
      d2s[i] = acc * (1.0 - h2s[i] * h2s[i]);
    }
    for (int i = 0; i < hid_; ++i) {
      double acc = 0;
      for (int j = 0; j < hid_; ++j) acc += w2[static_cast<size_t>(j) * hid_ + i] * d2s[j];
      d1s[i] = acc * (1.0 - h1s[i] * h1s[i]);
    }
  }

  double* gw1 = &grads_[w1_];
  double* gb1 = &grads_[b1_];
  double* gw2 = &grads_[w2_];
  double* gb2 = &grads_[b2_];
  double* gw3 = &grads_[w3_];
  double* gb3 = &grads_[b3_];
#pragma omp parallel
  {
#pragma omp for schedule(static) nowait
    for (int j = 0; j < out_; ++j) {
      double* row = gw3 + static_cast<size_t>(j) * hid_;
      double bacc = 0;
      for (int s = 0; s < batch; ++s) {
        double d = dout[static_cast<size_t>(s) * out_ + j];
        bacc += d;
        const double* h2s = &cache.h2[static_cast<size_t>(s) * hid_];
        for (int i = 0; i < hid_; ++i) row[i] += d * h2s[i];
      }
      gb3[j] += bacc;
    }
#pragma omp for schedule(static) nowait
    for (int j = 0; j < hid_; ++j) {
      double* row2 = gw2 + static_cast<size_t>(j) * hid_;
      double* row1 = gw1 + static_cast<size_t>(j) * in_;
      double b2acc = 0, b1acc = 0;
      for (int s = 0; s < batch; ++s) {
        double dj2 = d2[static_cast<size_t>(s) * hid_ + j];
        double dj1 = d1[static_cast<size_t>(s) * hid_ + j];
        b2acc += dj2;
        b1acc += dj1;
        const double* h1s = &cache.h1[static_cast<size_t>(s) * hid_];
        const double* xs = x + static_cast<size_t>(s) * in_;
        for (int i = 0; i < hid_; ++i) row2[i] += dj2 * h1s[i];
        for (int i = 0; i < in_; ++i) row1[i] += dj1 * xs[i];
      }
      gb2[j] += b2acc;
      gb1[j] += b1acc;
    }
  }
}

void Mlp::zero_grads() { std::fill(grads_.begin(), grads_.end(), 0.0); }

void Adam::step(std::vector<double>& params, const std::vector<double>& grads,
                double lr) {
  ++t_;
  constexpr double beta1 = 0.9, beta2 = 0.999;
  double c1 = 1.0 - std::pow(beta1, static_cast<double>(t_));
  double c2 = 1.0 - std::pow(beta2, static_cast<double>(t_));
#pragma omp parallel for schedule(static)
  for (size_t i = 0; i < params.size(); ++i) {
    m_[i] = beta1 * m_[i] + (1.0 - beta1) * grads[i];
    v_[i] = beta2 * v_[i] + (1.0 - beta2) * grads[i] * grads[i];
    params[i] -= lr * (m_[i] / c1) / (std::sqrt(v_[i] / c2) + eps_);
  }
}

}  // namespace acw::rl
