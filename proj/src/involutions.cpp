#include "ksphere/involutions.hpp"

#include "ksphere/errors.hpp"

namespace ksphere {

std::string_view to_string(Involution kind) { return kind == Involution::Tr ? "Tr" : "sharp-Tr"; }

ExactMatrix sharp2(const ExactMatrix& a) {
  if (a.size() != 2) throw DimensionError("sharp2: expects a 2x2 matrix");
  return ExactMatrix{{a(1, 1), -a(0, 1)}, {-a(1, 0), a(0, 0)}};
}

ExactMatrix sharp_tr(const ExactMatrix& a) {
  if (a.size() % 2 != 0) throw DimensionError("sharp_tr: matrix size must be even");
  const std::size_t m = a.size() / 2;
  ExactMatrix r(a.size());
  for (std::size_t bi = 0; bi < m; ++bi) {
    for (std::size_t bj = 0; bj < m; ++bj) {
      // source block (bj, bi) = [[p, q], [s, t]]
      const std::size_t r0 = 2 * bj;
      const std::size_t c0 = 2 * bi;
      const DyadicGaussian& p = a(r0, c0);
      const DyadicGaussian& q = a(r0, c0 + 1);
      const DyadicGaussian& s = a(r0 + 1, c0);
      const DyadicGaussian& t = a(r0 + 1, c0 + 1);
      r(2 * bi, 2 * bj) = t;
      r(2 * bi, 2 * bj + 1) = -q;
      r(2 * bi + 1, 2 * bj) = -s;
      r(2 * bi + 1, 2 * bj + 1) = p;
    }
  }
  return r;
}

ExactMatrix apply(Involution kind, const ExactMatrix& a) {
  return kind == Involution::Tr ? transpose(a) : sharp_tr(a);
}

ExactMatrix w_matrix(std::size_t m) {
  if (m == 0) throw DomainError("w_matrix: m must be positive");
  ExactMatrix w(2 * m);
  for (std::size_t b = 0; b < m; ++b) {
    w(2 * b, 2 * b + 1) = 1;
    w(2 * b + 1, 2 * b) = -1;
  }
  return w;
}

ExactMatrix picture_convert(const ExactMatrix& u, PictureDirection direction) {
  if (u.size() % 2 != 0) throw DimensionError("picture_convert: size must be even");
  if (!is_unitary(u)) throw ContractError("picture_convert: input is not unitary");
  const ExactMatrix w = w_matrix(u.size() / 2);
  return direction == PictureDirection::ToSharpPicture ? mul(u, w) : mul(u, neg(w));
}

}  // namespace ksphere
