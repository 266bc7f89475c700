#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace citeheat {

// Neumaier-compensated running sum. Results depend only on the order of
// add() calls, so fixed iteration order gives bit-identical totals.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

[[nodiscard]] inline double compensated_total(std::span<const double> values) noexcept {
  CompensatedSum s;
  for (double v : values) s.add(v);
  return s.value();
}

struct Moments {
  double mean = 0.0;
  double sd = 0.0;  // population standard deviation (divide by N)
};

// Two-pass mean and population SD. Empty input yields zeros.
[[nodiscard]] inline Moments population_moments(std::span<const double> values) noexcept {
  Moments m;
  if (values.empty()) return m;
  const double n = static_cast<double>(values.size());
  m.mean = compensated_total(values) / n;
  CompensatedSum sq;
  for (double v : values) {
    const double d = v - m.mean;
    sq.add(d * d);
  }
  m.sd = std::sqrt(sq.value() / n);
  return m;
}

}  // namespace citeheat
