#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace zeno {

/// Neumaier-compensated accumulator. Addition order is part of the contract:
/// summing the same values in the same order is bit-reproducible.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Mean of a sequence, accumulated in fixed chunks so the reduction order
/// never depends on thread count.
inline double compensated_mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  constexpr std::size_t chunk = 4096;
  KahanSum total;
  for (std::size_t base = 0; base < values.size(); base += chunk) {
    KahanSum part;
    std::size_t end = std::min(values.size(), base + chunk);
    for (std::size_t i = base; i < end; ++i) part.add(values[i]);
    total.add(part.value());
  }
  return total.value() / static_cast<double>(values.size());
}

}  // namespace zeno
