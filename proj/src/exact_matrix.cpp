#include "ksphere/exact_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ksphere/errors.hpp"

namespace ksphere {
namespace {

void require_same_size(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.size() != b.size()) {
    std::ostringstream os;
    os << op << ": size mismatch " << a.size() << " vs " << b.size();
    throw DimensionError(os.str());
  }
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t n) : n_(n), data_(n * n) {
  if (n == 0) throw DimensionError("ExactMatrix: size must be positive");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<DyadicGaussian>> rows)
    : ExactMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionError("ExactMatrix: rows must form a square matrix");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    ++i;
  }
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<DyadicGaussian>>& rows) {
  ExactMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionError("ExactMatrix: rows must form a square matrix");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const DyadicGaussian& z) { return z.is_zero(); });
}

bool ExactMatrix::is_identity() const { return *this == identity(n_); }

bool ExactMatrix::is_real() const {
  return std::all_of(data_.begin(), data_.end(), [](const DyadicGaussian& z) { return z.im_num() == 0; });
}

std::string ExactMatrix::to_string() const {
  std::vector<std::string> cells(data_.size());
  std::size_t width = 1;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    cells[k] = data_[k].to_string();
    width = std::max(width, cells[k].size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < n_; ++j) {
      const std::string& c = cells[i * n_ + j];
      os << " " << std::string(width - c.size(), ' ') << c;
    }
    os << " ]\n";
  }
  return os.str();
}

// Zero entries of `a` are skipped: the Clifford matrices here are monomial,
// which turns the cubic product into roughly n^2 work.
ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_size(a, b, "mul");
  const std::size_t n = a.size();
  ExactMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const DyadicGaussian& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const DyadicGaussian& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_size(a, b, "add");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) += b(i, j);
  return c;
}

ExactMatrix sub(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_size(a, b, "sub");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) -= b(i, j);
  return c;
}

ExactMatrix neg(const ExactMatrix& a) {
  ExactMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = -a(i, j);
  return c;
}

ExactMatrix scale(const ExactMatrix& a, const DyadicGaussian& s) {
  ExactMatrix c(a.size());
  if (s.is_zero()) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) * s;
  return c;
}

ExactMatrix transpose(const ExactMatrix& a) {
  ExactMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(j, i) = a(i, j);
  return c;
}

ExactMatrix conj(const ExactMatrix& a) {
  ExactMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j).conj();
  return c;
}

ExactMatrix adjoint(const ExactMatrix& a) {
  ExactMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(j, i) = a(i, j).conj();
  return c;
}

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t na = a.size();
  ExactMatrix c(na + b.size());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c(na + i, na + j) = b(i, j);
  return c;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  ExactMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    }
  return c;
}

ExactMatrix block2x2(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& d) {
  require_same_size(a, b, "block2x2");
  require_same_size(a, c, "block2x2");
  require_same_size(a, d, "block2x2");
  const std::size_t n = a.size();
  ExactMatrix m(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i, n + j) = b(i, j);
      m(n + i, j) = c(i, j);
      m(n + i, n + j) = d(i, j);
    }
  return m;
}

ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) { return mul(a, b) + mul(b, a); }

bool is_self_adjoint(const ExactMatrix& a) { return adjoint(a) == a; }

bool is_unitary(const ExactMatrix& a) { return mul(a, adjoint(a)).is_identity(); }

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) { return os << m.to_string(); }

}  // namespace ksphere
