#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace acw::rl {

// Feedforward net: input -> tanh(hidden) -> tanh(hidden) -> linear(output).
// Parameters live in one flat buffer (checkpoint-friendly); backward
// accumulates into an equally shaped gradient buffer.
class Mlp {
 public:
  Mlp(int input, int hidden, int output, double output_gain, uint64_t seed);

  int input_dim() const { return in_; }
  int output_dim() const { return out_; }
  size_t param_count() const { return params_.size(); }
  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }
  std::vector<double>& grads() { return grads_; }

  struct Cache {
    int batch = 0;
    std::vector<double> h1;  // batch x hidden (post-tanh)
    std::vector<double> h2;
  };

  // out: batch x output. x: batch x input.
  void forward(const double* x, int batch, double* out, Cache* cache) const;
  // dout: batch x output; accumulates parameter gradients, requires the cache
  // of the matching forward call.
  void backward(const double* x, const Cache& cache, const double* dout);
  void zero_grads();

 private:
  int in_, hid_, out_;
  std::vector<double> params_;
  std::vector<double> grads_;

  // layout offsets into params_
  size_t w1_, b1_, w2_, b2_, w3_, b3_;
};

// First-order adaptive-moment optimizer over a flat parameter buffer.
class Adam {
 public:
  Adam(size_t n, double eps) : m_(n, 0.0), v_(n, 0.0), eps_(eps) {}

  void step(std::vector<double>& params, const std::vector<double>& grads,
            double lr);

 private:
  std::vector<double> m_, v_;
  double eps_;
  int64_t t_ = 0;
};

// Orthogonal init helper, exposed for tests.
void orthogonal_init(std::vector<double>& w, int rows, int cols, double gain,
                     std::mt19937_64& rng);

}  // namespace acw::rl
