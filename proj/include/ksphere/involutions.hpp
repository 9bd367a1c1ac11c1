#pragma once

#include <cstddef>
#include <string_view>

#include "ksphere/exact_matrix.hpp"

namespace ksphere {

enum class Involution { Tr, SharpTr };

std::string_view to_string(Involution kind);

/// Quaternionic involution on 2×2 matrices: [[a, b], [c, d]] ↦ [[d, -b], [-c, a]].
ExactMatrix sharp2(const ExactMatrix& a);

/// ♯⊗Tr on a 2m×2m matrix viewed as an m×m grid of 2×2 blocks: block (i, j)
/// of the result is sharp2 of block (j, i) of the input.
ExactMatrix sharp_tr(const ExactMatrix& a);

ExactMatrix apply(Involution kind, const ExactMatrix& a);

/// I_m ⊗ w with w = [[0, 1], [-1, 0]], laid out under the same 2×2 block
/// convention as sharp_tr.
ExactMatrix w_matrix(std::size_t m);

enum class PictureDirection {
  ToSharpPicture,  // u ↦ u·W
  ToTrPicture,     // v ↦ v·(-W)
};

/// Converts between the transpose and the quaternionic unitary pictures of
/// the two degrees that admit both. Throws ContractError on non-unitary input
/// and DimensionError on odd size. The two directions are mutually inverse.
ExactMatrix picture_convert(const ExactMatrix& u, PictureDirection direction);

}  // namespace ksphere
