#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphca/error.hpp"
#include "graphca/field.hpp"
#include "graphca/symbol_matrix.hpp"

namespace graphca {

/// Strength-2, index-1 orthogonal array OA(s, g): an s x g^2 matrix over
/// Z_g in which every two rows contain each ordered symbol pair exactly once.
struct OrthogonalArray {
  std::size_t symbols = 0;
  SymbolMatrix matrix;

  std::size_t rows() const noexcept { return matrix.rows(); }
};

/// True iff rows r1 and r2 contain every ordered pair exactly once.
inline bool rows_orthogonal(const SymbolMatrix& m, std::size_t r1, std::size_t r2, std::size_t g) {
  if (m.cols() != g * g) return false;
  std::vector<char> seen(g * g, 0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Symbol a = m.at(r1, c), b = m.at(r2, c);
    if (a >= g || b >= g) return false;
    char& slot = seen[a * g + b];
    if (slot) return false;
    slot = 1;
  }
  return true;
}

inline bool is_orthogonal_array(const OrthogonalArray& oa) {
  for (std::size_t i = 0; i < oa.rows(); ++i)
    for (std::size_t j = i + 1; j < oa.rows(); ++j)
      if (!rows_orthogonal(oa.matrix, i, j, oa.symbols)) return false;
  return true;
}

/// OA(q+1, q) over GF(q). Column a*q+b carries the point (a,b); row m < q
/// holds a*m + b and the last row holds a.
inline OrthogonalArray oa_prime_power(std::uint32_t q) {
  const FiniteField field(q);
  OrthogonalArray oa{q, SymbolMatrix(q + 1, std::size_t{q} * q)};
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::size_t col = std::size_t{a} * q + b;
      for (std::uint32_t m = 0; m < q; ++m) oa.matrix.at(m, col) = field.add(field.mul(a, m), b);
      oa.matrix.at(q, col) = a;
    }
  if (!is_orthogonal_array(oa))
    fail(ErrorCode::ConstructionFailed, "OA(" + std::to_string(q + 1) + "," + std::to_string(q) +
                                            ") failed the exactly-once check");
  return oa;
}

/// Prime-power components of g, ascending.
inline std::vector<std::uint32_t> prime_power_components(std::uint32_t g) {
  std::vector<std::uint32_t> out;
  for (const auto& pp : factor_prime_powers(g)) out.push_back(pp.value());
  std::sort(out.begin(), out.end());
  return out;
}

/// Row count of the composite array: s = 1 + max(2, r) with r the smallest
/// prime-power component of g.
inline std::size_t bush_parameter(std::uint32_t g) {
  if (g < 2) fail(ErrorCode::InvalidAlphabet, "alphabet size must be at least 2");
  const auto comps = prime_power_components(g);
  return 1 + std::max<std::size_t>(2, comps.front());
}

/// OA(s, g) for arbitrary g >= 2 by composing prime-power arrays. Each
/// component array keeps its first s rows; a composite column is a tuple of
/// component columns and a composite symbol is the mixed-radix number whose
/// digits are the component symbols, smallest component most significant.
inline OrthogonalArray bush_oa(std::uint32_t g) {
  const std::size_t s = bush_parameter(g);
  const auto comps = prime_power_components(g);
  std::vector<OrthogonalArray> parts;
  for (auto q : comps) parts.push_back(oa_prime_power(q));

  const std::size_t cols = std::size_t{g} * g;
  OrthogonalArray oa{g, SymbolMatrix(s, cols)};
  for (std::size_t col = 0; col < cols; ++col) {
    // Split the composite column into component columns, last component
    // least significant.
    std::vector<std::size_t> part_col(comps.size());
    std::size_t rest = col;
    for (std::size_t i = comps.size(); i-- > 0;) {
      const std::size_t width = std::size_t{comps[i]} * comps[i];
      part_col[i] = rest % width;
      rest /= width;
    }
    for (std::size_t r = 0; r < s; ++r) {
      Symbol sym = 0;
      for (std::size_t i = 0; i < comps.size(); ++i)
        sym = sym * comps[i] + parts[i].matrix.at(r, part_col[i]);
      oa.matrix.at(r, col) = sym;
    }
  }
  if (!is_orthogonal_array(oa))
    fail(ErrorCode::ConstructionFailed,
         "composite OA(" + std::to_string(s) + "," + std::to_string(g) + ") failed the exactly-once check");
  return oa;
}

}  // namespace graphca
