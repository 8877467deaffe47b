#ifndef FDRA_QNET_HPP
#define FDRA_QNET_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "fdra/rng.hpp"

namespace fdra {

// Dense MLP with rectifier hidden layers and a linear output layer. Samples
// are matrix columns. Kept deliberately small: forward, cached forward,
// backward, flat parameter access.
template <typename Scalar>
class Mlp {
 public:
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Mlp() = default;

  explicit Mlp(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.size() < 2) throw std::invalid_argument("network needs >= 2 layers");
    for (size_t l = 0; l + 1 < sizes_.size(); ++l) {
      w.emplace_back(Mat::Zero(sizes_[l + 1], sizes_[l]));
      b.emplace_back(Vec::Zero(sizes_[l + 1]));
    }
  }

  // zero-mean Gaussian weights with std 1/sqrt(fan_in), zero biases
  static Mlp normal_init(std::vector<int> sizes, Rng& rng) {
    Mlp net(std::move(sizes));
    for (size_t l = 0; l < net.w.size(); ++l) {
      const Scalar std = Scalar(1) / std::sqrt(Scalar(net.sizes_[l]));
      for (Eigen::Index j = 0; j < net.w[l].cols(); ++j)
        for (Eigen::Index i = 0; i < net.w[l].rows(); ++i)
          net.w[l](i, j) = std * Scalar(rng.normal());
    }
    return net;
  }

  const std::vector<int>& layer_sizes() const { return sizes_; }
  int input_size() const { return sizes_.front(); }
  int output_size() const { return sizes_.back(); }
  size_t num_layers() const { return w.size(); }

  Mat forward(const Mat& x) const {
    Mat a = x;
    for (size_t l = 0; l < w.size(); ++l) {
      Mat z = (w[l] * a).colwise() + b[l];
      if (l + 1 < w.size()) z = z.cwiseMax(Scalar(0));
      a = std::move(z);
    }
    return a;
  }

  Vec forward(const Vec& x) const { return forward(Mat(x)); }

  // act[0] is the input; act[l+1] is layer l's output (post-rectifier for
  // hidden layers, raw for the last)
  struct Cache {
    std::vector<Mat> act;
  };

  const Mat& forward_cached(const Mat& x, Cache& cache) const {
    cache.act.assign(1, x);
    for (size_t l = 0; l < w.size(); ++l) {
      Mat z = (w[l] * cache.act.back()).colwise() + b[l];
      if (l + 1 < w.size()) z = z.cwiseMax(Scalar(0));
      cache.act.push_back(std::move(z));
    }
    return cache.act.back();
  }

  // d_out: dLoss/dOutput, one column per sample. Writes parameter gradients
  // into `grad` (same shape as this net, overwritten).
  void backward(const Cache& cache, const Mat& d_out, Mlp& grad) const {
    Mat delta = d_out;
    for (size_t li = w.size(); li-- > 0;) {
      grad.w[li].noalias() = delta * cache.act[li].transpose();
      grad.b[li] = delta.rowwise().sum();
      if (li > 0) {
        Mat prev = w[li].transpose() * delta;
        // rectifier gate: hidden activation stores max(z, 0)
        delta = prev.cwiseProduct(
            (cache.act[li].array() > Scalar(0)).template cast<Scalar>().matrix());
      }
    }
  }

  size_t param_count() const {
    size_t n = 0;
    for (size_t l = 0; l < w.size(); ++l)
      n += static_cast<size_t>(w[l].size()) + static_cast<size_t>(b[l].size());
    return n;
  }

  void set_zero() {
    for (auto& m : w) m.setZero();
    for (auto& v : b) v.setZero();
  }

  // flat layout: w0 (column-major), b0, w1, b1, ...
  std::vector<Scalar> to_flat() const {
    std::vector<Scalar> out;
    out.reserve(param_count());
    for (size_t l = 0; l < w.size(); ++l) {
      out.insert(out.end(), w[l].data(), w[l].data() + w[l].size());
      out.insert(out.end(), b[l].data(), b[l].data() + b[l].size());
    }
    return out;
  }

  void from_flat(const std::vector<Scalar>& flat) {
    if (flat.size() != param_count()) throw std::invalid_argument("flat size mismatch");
    size_t pos = 0;
    for (size_t l = 0; l < w.size(); ++l) {
      std::copy_n(flat.begin() + pos, w[l].size(), w[l].data());
      pos += w[l].size();
      std::copy_n(flat.begin() + pos, b[l].size(), b[l].data());
      pos += b[l].size();
    }
  }

  std::vector<Mat> w;
  std::vector<Vec> b;

 private:
  std::vector<int> sizes_;
};

template <typename Scalar>
class Adam {
 public:
  Adam(const Mlp<Scalar>& shape, double lr, double beta1 = 0.9, double beta2 = 0.999,
       double eps = 1e-8)
      : m_(shape.layer_sizes()), v_(shape.layer_sizes()), lr_(lr), beta1_(beta1),
        beta2_(beta2), eps_(eps) {}

  void step(Mlp<Scalar>& net, const Mlp<Scalar>& grad) {
    ++t_;
    const Scalar b1 = Scalar(beta1_), b2 = Scalar(beta2_);
    const Scalar bc1 = Scalar(1) - Scalar(std::pow(beta1_, t_));
    const Scalar bc2 = Scalar(1) - Scalar(std::pow(beta2_, t_));
    const Scalar lr = Scalar(lr_), eps = Scalar(eps_);
    for (size_t l = 0; l < net.w.size(); ++l) {
      m_.w[l] = b1 * m_.w[l] + (Scalar(1) - b1) * grad.w[l];
      v_.w[l].array() = b2 * v_.w[l].array() + (Scalar(1) - b2) * grad.w[l].array().square();
      net.w[l].array() -=
          lr * (m_.w[l].array() / bc1) / ((v_.w[l].array() / bc2).sqrt() + eps);
      m_.b[l] = b1 * m_.b[l] + (Scalar(1) - b1) * grad.b[l];
      v_.b[l].array() = b2 * v_.b[l].array() + (Scalar(1) - b2) * grad.b[l].array().square();
      net.b[l].array() -=
          lr * (m_.b[l].array() / bc1) / ((v_.b[l].array() / bc2).sqrt() + eps);
    }
  }

  int64_t t() const { return t_; }

 private:
  Mlp<Scalar> m_, v_;
  double lr_, beta1_, beta2_, eps_;
  int64_t t_ = 0;
};

using QNetwork = Mlp<float>;

// Weight file: magic, little-endian u32 JSON header length, header, raw
// float32 parameters in flat layout. The header records layer sizes,
// activation, the se-table checksum and a config hash so a model cannot be
// silently applied to a mismatched setup.
struct QNetHeader {
  std::vector<int> layer_sizes;
  std::string activation = "relu";
  std::string dtype = "float32";
  std::string se_checksum;
  std::string config_hash;
  int action_half_width = 2;
};

void save_qnetwork(const std::string& path, const QNetwork& net, const QNetHeader& header);
QNetwork load_qnetwork(const std::string& path, QNetHeader* header_out = nullptr);

}  // namespace fdra

#endif
