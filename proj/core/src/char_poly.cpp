#include <limits>
#include <string>
#include <vector>

#include "qgi/error.hpp"
#include "qgi/invariant.hpp"

namespace qgi {

namespace {

__extension__ typedef __int128 Wide;

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw CapError("characteristic polynomial overflowed 128 bits");
  return r;
}

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapError("characteristic polynomial overflowed 128 bits");
  return r;
}

}  // namespace

CharPoly char_poly(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCharPolyVertices) {
    throw CapError("char_poly limited to n <= " + std::to_string(kMaxCharPolyVertices));
  }
  const auto un = static_cast<std::size_t>(n);
  // Faddeev-LeVerrier: M_1 = I, c_k = -tr(A M_k) / k, M_{k+1} = A M_k + c_k I.
  std::vector<Wide> mk(un * un, 0);
  for (std::size_t i = 0; i < un; ++i) mk[i * un + i] = 1;
  std::vector<Wide> amk(un * un, 0);
  std::vector<Wide> coeffs(un + 1, 0);
  coeffs[0] = 1;

  for (int k = 1; k <= n; ++k) {
    // (A M)[i][j] = sum over neighbours l of i of M[l][j]; A is 0/1.
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = 0; j < un; ++j) {
        Wide acc = 0;
        for (std::uint32_t rest = g.row(static_cast<int>(i)); rest != 0; rest &= rest - 1) {
          acc = checked_add(acc, mk[static_cast<std::size_t>(__builtin_ctz(rest)) * un + j]);
        }
        amk[i * un + j] = acc;
      }
    }
    Wide trace = 0;
    for (std::size_t i = 0; i < un; ++i) trace = checked_add(trace, amk[i * un + i]);
    if (trace % k != 0) {
      throw InternalError("Faddeev-LeVerrier trace not divisible by " + std::to_string(k));
    }
    const Wide c = checked_mul(-1, trace / k);
    coeffs[static_cast<std::size_t>(k)] = c;
    mk = amk;
    for (std::size_t i = 0; i < un; ++i) mk[i * un + i] = checked_add(mk[i * un + i], c);
  }

  CharPoly out;
  out.coeffs.reserve(un + 1);
  for (Wide c : coeffs) {
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min()) {
      throw CapError("characteristic polynomial coefficient exceeds 64 bits");
    }
    out.coeffs.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

std::string CharPoly::to_string() const {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::string s;
  for (int k = 0; k <= n; ++k) {
    const std::int64_t c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const int power = n - k;
    const std::int64_t mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || power == 0) s += std::to_string(mag);
    if (power >= 1) s += "x";
    if (power >= 2) s += "^" + std::to_string(power);
  }
  return s.empty() ? "0" : s;
}

}  // namespace qgi
