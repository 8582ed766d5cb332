#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "jacpoly/poly.hpp"

namespace jacpoly {

// Power series in an auxiliary variable t, cut after t^order. Coefficients
// must provide +, -, * and is_zero(); a default-constructed value is zero.
template <class Coeff>
class BasicTruncSeries {
 public:
  BasicTruncSeries() = default;
  explicit BasicTruncSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
  }
  BasicTruncSeries(std::vector<Coeff> coeffs, int order) : coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  // Exact coefficient of t^k; asking beyond the order is an error.
  const Coeff& operator[](int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("series index beyond truncation");
    return coeffs_[static_cast<std::size_t>(k)];
  }
  Coeff& at(int k) {
    if (k < 0 || k > order()) throw std::out_of_range("series index beyond truncation");
    return coeffs_[static_cast<std::size_t>(k)];
  }

  BasicTruncSeries truncated(int order) const {
    std::vector<Coeff> c(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), order + 1));
    return BasicTruncSeries(std::move(c), std::min(order, this->order()));
  }

  friend BasicTruncSeries operator+(const BasicTruncSeries& a, const BasicTruncSeries& b) {
    int t = std::min(a.order(), b.order());
    BasicTruncSeries out(t);
    for (int k = 0; k <= t; ++k) out.at(k) = a[k] + b[k];
    return out;
  }
  friend BasicTruncSeries operator-(const BasicTruncSeries& a, const BasicTruncSeries& b) {
    int t = std::min(a.order(), b.order());
    BasicTruncSeries out(t);
    for (int k = 0; k <= t; ++k) out.at(k) = a[k] - b[k];
    return out;
  }
  friend BasicTruncSeries operator*(const BasicTruncSeries& a, const BasicTruncSeries& b) {
    int t = std::min(a.order(), b.order());
    BasicTruncSeries out(t);
    for (int i = 0; i <= t; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= t; ++j) {
        if (b[j].is_zero()) continue;
        out.at(i + j) = out[i + j] + a[i] * b[j];
      }
    }
    return out;
  }

  bool operator==(const BasicTruncSeries& o) const {
    int t = std::min(order(), o.order());
    for (int k = 0; k <= t; ++k)
      if (!((*this)[k] == o[k])) return false;
    return true;
  }

 private:
  std::vector<Coeff> coeffs_;
};

using TruncSeries = BasicTruncSeries<PuiseuxPoly>;

}  // namespace jacpoly
