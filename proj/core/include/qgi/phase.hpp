#pragma once

#include <cstdint>
#include <string>

namespace qgi {

/// Phase angle stored exactly as a dyadic fraction of a full turn:
/// angle = 2*pi * numerator / 2^log2_denominator, normalised to [0, 2*pi).
///
/// Every angle the QPE construction needs (2*pi/2^t, its doublings and the
/// inverse-QFT rotations -pi/2^k) is dyadic, so fusion and negation stay exact.
class PhaseAngle {
 public:
  static constexpr int kMaxLog2Denominator = 62;

  constexpr PhaseAngle() = default;

  /// 2*pi * numerator / 2^log2_den, reduced and wrapped into one turn.
  static PhaseAngle turns(std::int64_t numerator, int log2_den);
  /// 2*pi / 2^log2_den.
  static PhaseAngle unit(int log2_den) { return turns(1, log2_den); }

  std::uint64_t numerator() const noexcept { return num_; }
  int log2_denominator() const noexcept { return log2_den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  double radians() const;

  PhaseAngle operator-() const;
  PhaseAngle operator+(PhaseAngle other) const;
  /// Angle times 2^k modulo one turn.
  PhaseAngle doubled(int k) const;

  friend bool operator==(PhaseAngle, PhaseAngle) = default;

  /// Nearest dyadic angle to `radians` with denominator at most 2^max_log2_den;
  /// throws InputError if none lies within `tolerance` radians.
  static PhaseAngle from_radians(double radians, int max_log2_den = 40,
                                 double tolerance = 1e-9);

  /// Human readable form such as "pi/4" or "7*pi/4".
  std::string to_string() const;

 private:
  constexpr PhaseAngle(std::uint64_t num, int log2_den) : num_(num), log2_den_(log2_den) {}
  void reduce();

  std::uint64_t num_ = 0;  // < 2^log2_den_
  int log2_den_ = 0;
};

}  // namespace qgi
