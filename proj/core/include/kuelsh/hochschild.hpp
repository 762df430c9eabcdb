#pragma once

#include "kuelsh/algebra_table.hpp"
#include "kuelsh/linalg.hpp"

namespace kuelsh {

enum class HhMethod { relative, bar };

struct SparseMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> entries;
};

SparseMat compose(const Field& f, const SparseMat& a, const SparseMat& b);
bool is_zero(const SparseMat& m);
Matrix to_dense(const Field& f, const SparseMat& m);

/// Cochain complex of the bar resolution relative to the span of the vertex
/// idempotents: C^n = bimodule maps J^(tensor n over E) -> A, realized on
/// composable tuples of radical basis paths.  Computes the same cohomology
/// as the full bar complex because E is separable, at a fraction of the
/// size.
struct RelativeComplex {
  std::vector<std::size_t> cochain_dims;  // dims of C^0..C^3
  SparseMat d0, d1, d2;                   // differentials C^n -> C^(n+1)
};

RelativeComplex relative_complex(const AlgebraTable& t);

/// Dense matrix of the relative differential of degree n (0, 1 or 2).
Matrix hh_differential(const AlgebraTable& t, std::size_t n);

struct HhResult {
  std::size_t degree = 0;
  std::size_t dim = 0;
  HhMethod method = HhMethod::relative;
  std::vector<std::size_t> cochain_dims;
  std::size_t rank_prev = 0;  // rank of the incoming differential
  std::size_t ker_cur = 0;    // kernel dimension of the outgoing one
};

/// dim HH^degree for degree <= 2.  The bar method is the independent oracle
/// over the full (unreduced) bar complex; it is restricted to dim <= 16 and
/// table-backed fields (OracleTooLarge).
HhResult hh_dim(const AlgebraTable& t, std::size_t degree,
                HhMethod method = HhMethod::relative);

}  // namespace kuelsh
