#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "ksphere/dyadic.hpp"

namespace ksphere {

/// Dense square matrix over dyadic Gaussian rationals. Row-major, value
/// semantic. There is deliberately no inverse: unitarity is always decided by
/// A·A* == I.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t n);
  ExactMatrix(std::initializer_list<std::initializer_list<DyadicGaussian>> rows);
  static ExactMatrix from_rows(const std::vector<std::vector<DyadicGaussian>>& rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t n) { return ExactMatrix(n); }

  std::size_t size() const { return n_; }

  const DyadicGaussian& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  DyadicGaussian& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  bool is_zero() const;
  bool is_identity() const;
  bool is_real() const;

  std::string to_string() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<DyadicGaussian> data_;
};

ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix sub(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix neg(const ExactMatrix& a);
ExactMatrix scale(const ExactMatrix& a, const DyadicGaussian& c);
ExactMatrix transpose(const ExactMatrix& a);
ExactMatrix conj(const ExactMatrix& a);
ExactMatrix adjoint(const ExactMatrix& a);
ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
// [[a, b], [c, d]] from four equally sized blocks.
ExactMatrix block2x2(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& d);

// A·B + B·A
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b);
bool is_self_adjoint(const ExactMatrix& a);
bool is_unitary(const ExactMatrix& a);

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mul(a, b); }
inline ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) { return add(a, b); }
inline ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return sub(a, b); }
inline ExactMatrix operator-(const ExactMatrix& a) { return neg(a); }
inline ExactMatrix operator*(const DyadicGaussian& c, const ExactMatrix& a) { return scale(a, c); }

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

}  // namespace ksphere
