#include "ksphere/dyadic.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "ksphere/errors.hpp"

namespace ksphere {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("dyadic: integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("dyadic: integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("dyadic: integer overflow in multiplication");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

std::int64_t scale_pow2(std::int64_t a, int k) {
  if (k == 0 || a == 0) return a;
  if (k >= 63) throw OverflowError("dyadic: shift alignment overflow");
  return checked_mul(a, std::int64_t{1} << k);
}

std::string gaussian_string(std::int64_t re, std::int64_t im) {
  std::ostringstream os;
  if (im == 0) {
    os << re;
    return os.str();
  }
  if (re != 0) os << re << (im > 0 ? "+" : "-");
  else if (im < 0) os << "-";
  const std::int64_t mag = im < 0 ? -im : im;
  if (mag != 1) os << mag;
  os << "i";
  return os.str();
}

}  // namespace

DyadicGaussian::DyadicGaussian(std::int64_t re, std::int64_t im, int shift)
    : re_(re), im_(im), shift_(shift) {
  if (shift < 0) throw DomainError("dyadic: negative shift");
  canonicalize();
}

void DyadicGaussian::canonicalize() {
  if (re_ == 0 && im_ == 0) {
    shift_ = 0;
    return;
  }
  while (shift_ > 0 && re_ % 2 == 0 && im_ % 2 == 0) {
    re_ /= 2;
    im_ /= 2;
    --shift_;
  }
  if (shift_ > kMaxShift) throw OverflowError("dyadic: denominator exceeds 2^62");
}

bool DyadicGaussian::is_canonical() const {
  if (re_ == 0 && im_ == 0) return shift_ == 0;
  return shift_ == 0 || re_ % 2 != 0 || im_ % 2 != 0;
}

DyadicGaussian DyadicGaussian::conj() const {
  DyadicGaussian r = *this;
  r.im_ = checked_neg(im_);
  return r;
}

DyadicGaussian DyadicGaussian::times_i() const {
  DyadicGaussian r = *this;
  r.re_ = checked_neg(im_);
  r.im_ = re_;
  return r;
}

DyadicGaussian DyadicGaussian::div_pow2(int k) const {
  if (k < 0) throw DomainError("dyadic: negative power in div_pow2");
  return DyadicGaussian(re_, im_, shift_ + k);
}

std::complex<double> DyadicGaussian::to_complex() const {
  return {std::ldexp(static_cast<double>(re_), -shift_), std::ldexp(static_cast<double>(im_), -shift_)};
}

std::string DyadicGaussian::to_string() const {
  std::string core = gaussian_string(re_, im_);
  if (shift_ == 0) return core;
  const bool compound = re_ != 0 && im_ != 0;
  std::ostringstream os;
  if (compound) os << "(" << core << ")";
  else os << core;
  os << "/" << (std::int64_t{1} << shift_);
  return os.str();
}

DyadicGaussian DyadicGaussian::operator-() const {
  DyadicGaussian r = *this;
  r.re_ = checked_neg(re_);
  r.im_ = checked_neg(im_);
  return r;
}

DyadicGaussian& DyadicGaussian::operator+=(const DyadicGaussian& rhs) {
  const int s = std::max(shift_, rhs.shift_);
  re_ = checked_add(scale_pow2(re_, s - shift_), scale_pow2(rhs.re_, s - rhs.shift_));
  im_ = checked_add(scale_pow2(im_, s - shift_), scale_pow2(rhs.im_, s - rhs.shift_));
  shift_ = s;
  canonicalize();
  return *this;
}

DyadicGaussian& DyadicGaussian::operator-=(const DyadicGaussian& rhs) { return *this += -rhs; }

DyadicGaussian& DyadicGaussian::operator*=(const DyadicGaussian& rhs) {
  const std::int64_t re = checked_sub(checked_mul(re_, rhs.re_), checked_mul(im_, rhs.im_));
  const std::int64_t im = checked_add(checked_mul(re_, rhs.im_), checked_mul(im_, rhs.re_));
  re_ = re;
  im_ = im;
  shift_ += rhs.shift_;
  canonicalize();
  return *this;
}

DyadicGaussian canonical(std::int64_t re, std::int64_t im, int shift) { return DyadicGaussian(re, im, shift); }

std::ostream& operator<<(std::ostream& os, const DyadicGaussian& z) { return os << z.to_string(); }

}  // namespace ksphere
