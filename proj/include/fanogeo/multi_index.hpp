// SPDX-License-Identifier: MIT
#pragma once

#include <span>

namespace fanogeo {

/// Integer power b^e for small nonnegative arguments.
inline long long ipow(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Flat row-major index of mixed-radix digits (first digit most significant).
inline long long flat_from_digits(std::span<const int> digits, int base) {
  long long r = 0;
  for (int d : digits) r = r * base + d;
  return r;
}

/// Inverse of flat_from_digits; out.size() determines the digit count.
inline void digits_from_flat(long long flat, int base, std::span<int> out) {
  for (int i = int(out.size()) - 1; i >= 0; --i) {
    out[i] = int(flat % base);
    flat /= base;
  }
}

}  // namespace fanogeo
