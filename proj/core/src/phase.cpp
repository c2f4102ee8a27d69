#include "qgi/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgi/error.hpp"

namespace qgi {

namespace {

std::uint64_t mask_for(int log2_den) {
  return log2_den >= 64 ? ~0ULL : ((1ULL << log2_den) - 1ULL);
}

}  // namespace

void PhaseAngle::reduce() {
  num_ &= mask_for(log2_den_);
  if (num_ == 0) {
    log2_den_ = 0;
    return;
  }
  while (log2_den_ > 0 && (num_ & 1ULL) == 0) {
    num_ >>= 1;
    --log2_den_;
  }
}

PhaseAngle PhaseAngle::turns(std::int64_t numerator, int log2_den) {
  if (log2_den < 0 || log2_den > kMaxLog2Denominator) {
    throw InputError("phase denominator 2^" + std::to_string(log2_den) + " out of range");
  }
  // Two's complement wrap gives the correct residue modulo 2^log2_den.
  PhaseAngle a(static_cast<std::uint64_t>(numerator), log2_den);
  a.reduce();
  return a;
}

double PhaseAngle::radians() const {
  return 2.0 * std::numbers::pi * std::ldexp(static_cast<double>(num_), -log2_den_);
}

PhaseAngle PhaseAngle::operator-() const {
  PhaseAngle a((~num_ + 1ULL), log2_den_);
  a.reduce();
  return a;
}

PhaseAngle PhaseAngle::operator+(PhaseAngle other) const {
  const int d = std::max(log2_den_, other.log2_den_);
  const std::uint64_t a = num_ << (d - log2_den_);
  const std::uint64_t b = other.num_ << (d - other.log2_den_);
  PhaseAngle sum(a + b, d);
  sum.reduce();
  return sum;
}

PhaseAngle PhaseAngle::doubled(int k) const {
  if (k <= 0 || is_zero()) return *this;
  if (k >= log2_den_) return PhaseAngle{};
  PhaseAngle a(num_, log2_den_ - k);
  a.reduce();
  return a;
}

PhaseAngle PhaseAngle::from_radians(double radians, int max_log2_den, double tolerance) {
  double t = radians / (2.0 * std::numbers::pi);
  t -= std::floor(t);
  for (int d = 0; d <= max_log2_den; ++d) {
    const double scaled = std::ldexp(t, d);
    const double nearest = std::round(scaled);
    const double err = std::abs(scaled - nearest) * 2.0 * std::numbers::pi / std::ldexp(1.0, d);
    if (err <= tolerance) return turns(static_cast<std::int64_t>(nearest), d);
  }
  throw InputError("angle " + std::to_string(radians) + " is not a dyadic fraction of 2*pi");
}

std::string PhaseAngle::to_string() const {
  if (num_ == 0) return "0";
  // angle = pi * num / 2^(d-1)
  const int d = log2_den_ - 1;
  std::string s = num_ == 1 ? "pi" : std::to_string(num_) + "*pi";
  if (d > 0) s += "/" + std::to_string(1ULL << d);
  return s;
}

}  // namespace qgi
