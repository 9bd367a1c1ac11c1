#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ksphere {

/// Exact complex number (re + i·im) / 2^shift with integer re, im.
///
/// Values are kept in canonical form: either shift == 0, or at least one of
/// re/im is odd. Canonical form makes structural equality coincide with
/// numerical equality. All arithmetic is overflow-checked; an overflow throws
/// OverflowError instead of wrapping.
class DyadicGaussian {
 public:
  static constexpr int kMaxShift = 62;

  constexpr DyadicGaussian() = default;
  // Implicit so that integer literals can be used in matrix initializers.
  DyadicGaussian(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  DyadicGaussian(std::int64_t re, std::int64_t im, int shift = 0);

  static DyadicGaussian imag_unit() { return {0, 1}; }

  std::int64_t re_num() const { return re_; }
  std::int64_t im_num() const { return im_; }
  int shift() const { return shift_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_canonical() const;

  DyadicGaussian conj() const;
  DyadicGaussian times_i() const;
  // Exact division by 2^k.
  DyadicGaussian div_pow2(int k = 1) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  DyadicGaussian operator-() const;
  DyadicGaussian& operator+=(const DyadicGaussian& rhs);
  DyadicGaussian& operator-=(const DyadicGaussian& rhs);
  DyadicGaussian& operator*=(const DyadicGaussian& rhs);

  friend DyadicGaussian operator+(DyadicGaussian a, const DyadicGaussian& b) { return a += b; }
  friend DyadicGaussian operator-(DyadicGaussian a, const DyadicGaussian& b) { return a -= b; }
  friend DyadicGaussian operator*(DyadicGaussian a, const DyadicGaussian& b) { return a *= b; }
  friend bool operator==(const DyadicGaussian&, const DyadicGaussian&) = default;

 private:
  void canonicalize();

  std::int64_t re_ = 0;
  std::int64_t im_ = 0;
  int shift_ = 0;
};

inline const DyadicGaussian kImag{0, 1};

// Idempotent; exposed for property tests and for decoding non-canonical input.
DyadicGaussian canonical(std::int64_t re, std::int64_t im, int shift);

std::ostream& operator<<(std::ostream& os, const DyadicGaussian& z);

}  // namespace ksphere
