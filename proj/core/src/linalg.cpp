#include "kuelsh/linalg.hpp"

#include <algorithm>

namespace kuelsh {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(*f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

Matrix Matrix::times(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    fail(errc::dimension_mismatch, "matrix product shape mismatch");
  Matrix out(*f_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        std::uint64_t b = rhs.at(k, j);
        if (b == 0) continue;
        out.set(i, j, f_->add(out.at(i, j), f_->mul(a, b)));
      }
    }
  }
  return out;
}

std::vector<std::size_t> Matrix::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != lead) {
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(a_[pivot * cols_ + c], a_[lead * cols_ + c]);
    }
    std::uint64_t inv = f_->inv(at(lead, col));
    if (inv != 1) {
      for (std::size_t c = col; c < cols_; ++c)
        set(lead, c, f_->mul(at(lead, c), inv));
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      std::uint64_t factor = at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols_; ++c)
        set(r, c, f_->sub(at(r, c), f_->mul(factor, at(lead, c))));
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref_in_place().size();
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint64_t v) { return v == 0; });
}

Matrix rref(const Matrix& m) {
  Matrix copy = m;
  copy.rref_in_place();
  return copy;
}

Subspace Subspace::row_space(Matrix rows) {
  std::size_t r = rows.rref_in_place().size();
  Matrix basis(rows.field(), r, rows.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < rows.cols(); ++c) basis.set(i, c, rows.at(i, c));
  return Subspace(std::move(basis));
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  return Subspace(Matrix(f, 0, ambient));
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  return Subspace(Matrix::identity(f, ambient));
}

std::vector<std::uint64_t> Subspace::reduce(std::span<const std::uint64_t> v) const {
  if (v.size() != ambient())
    fail(errc::dimension_mismatch, "vector length does not match ambient dimension");
  const Field& f = field();
  std::vector<std::uint64_t> out(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    // pivot column of row i is the first nonzero of a canonical basis row
    std::size_t pc = 0;
    while (basis_.at(i, pc) == 0) ++pc;
    std::uint64_t factor = out[pc];
    if (factor == 0) continue;
    for (std::size_t c = pc; c < out.size(); ++c)
      out[c] = f.sub(out[c], f.mul(factor, basis_.at(i, c)));
  }
  return out;
}

bool Subspace::contains(std::span<const std::uint64_t> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint64_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient())
    fail(errc::dimension_mismatch, "subspaces live in different ambient spaces");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots = r.rref_in_place();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::size_t nfree = m.cols() - pivots.size();
  Matrix basis(f, nfree, m.cols());
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis.set(row, c, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.set(row, pivots[i], f.neg(r.at(i, c)));
    ++row;
  }
  // canonicalize (the free-column basis is independent but not RREF)
  return Subspace::row_space(std::move(basis));
}

Subspace image(const Matrix& m) { return Subspace::row_space(m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !a.field().is(b.field()))
    fail(errc::dimension_mismatch, "subspace sum shape mismatch");
  Matrix stacked(a.field(), a.dim() + b.dim(), a.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t c = 0; c < a.ambient(); ++c)
      stacked.set(i, c, a.basis().at(i, c));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t c = 0; c < b.ambient(); ++c)
      stacked.set(a.dim() + i, c, b.basis().at(i, c));
  return Subspace::row_space(std::move(stacked));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !a.field().is(b.field()))
    fail(errc::dimension_mismatch, "subspace intersection shape mismatch");
  const Field& f = a.field();
  const std::size_t d = a.ambient();
  // Zassenhaus block matrix [[A, A], [B, 0]]
  Matrix block(f, a.dim() + b.dim(), 2 * d);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      block.set(i, c, a.basis().at(i, c));
      block.set(i, d + c, a.basis().at(i, c));
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t c = 0; c < d; ++c)
      block.set(a.dim() + i, c, b.basis().at(i, c));
  block.rref_in_place();

  // rows whose left half vanished have right halves spanning the intersection
  Matrix rows(f, block.rows(), d);
  std::size_t n = 0;
  for (std::size_t i = 0; i < block.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t c = 0; c < d && left_zero; ++c)
      left_zero = block.at(i, c) == 0;
    if (!left_zero) continue;
    bool right_zero = true;
    for (std::size_t c = 0; c < d; ++c) {
      rows.set(n, c, block.at(i, d + c));
      if (block.at(i, d + c) != 0) right_zero = false;
    }
    if (!right_zero) ++n;
  }
  Matrix trimmed(f, n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) trimmed.set(i, c, rows.at(i, c));
  return Subspace::row_space(std::move(trimmed));
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    fail(errc::dimension_mismatch, "subspace quotient shape mismatch");
  if (!a.contains(b))
    fail(errc::not_a_subspace, "quotient_dim requires b to be a subspace of a");
  return a.dim() - b.dim();
}

Subspace orthogonal_complement(const Subspace& m, const BilinearForm& form) {
  const Field& f = m.field();
  if (form.gram.rows() != m.ambient() || form.gram.cols() != m.ambient())
    fail(errc::dimension_mismatch, "Gram matrix does not match ambient space");
  if (!form.nondegenerate())
    fail(errc::degenerate_form, "orthogonal complement needs a nondegenerate form");
  // (x, m_i) = 0 for all i  <=>  (M G) x^T = 0
  Matrix mg = m.basis().times(form.gram);
  (void)f;
  return kernel(mg);
}

Subspace semilinear_kernel_iter(const Matrix& vectors, std::uint64_t n) {
  const Field& f = vectors.field();
  // ordinary solution space in the substituted coordinates d_i = c_i^(p^n)
  Subspace lin = kernel(vectors.transposed());
  if (n % f.k() == 0) return lin;
  Matrix rooted = lin.basis();
  for (std::size_t r = 0; r < rooted.rows(); ++r)
    for (std::size_t c = 0; c < rooted.cols(); ++c)
      rooted.set(r, c, f.frobenius_inverse(rooted.at(r, c), n));
  return Subspace::row_space(std::move(rooted));
}

Subspace semilinear_kernel(const Matrix& vectors, std::uint64_t twist) {
  const Field& f = vectors.field();
  if (twist == 0) fail(errc::bad_twist, "twist must be a power of the characteristic");
  std::uint64_t n = 0, t = twist;
  while (t > 1) {
    if (t % f.p() != 0)
      fail(errc::bad_twist, "twist " + std::to_string(twist) +
                                " is not a power of the characteristic");
    t /= f.p();
    ++n;
  }
  return semilinear_kernel_iter(vectors, n);
}

namespace {

// Row operation kernels for the byte-coded rank path.  Element codes are the
// packed digit encoding, so characteristic-2 addition is XOR.
void axpy_char2(std::uint8_t* dst, const std::uint8_t* src, std::size_t n,
                const std::uint16_t* mulrow) {
  if (mulrow == nullptr) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
  } else {
    for (std::size_t i = 0; i < n; ++i)
      dst[i] ^= static_cast<std::uint8_t>(mulrow[src[i]]);
  }
}

void axpy_char3(std::uint8_t* dst, const std::uint8_t* src, std::size_t n,
                bool negate) {
  if (!negate) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint8_t t = static_cast<std::uint8_t>(dst[i] + src[i]);
      dst[i] = t >= 3 ? static_cast<std::uint8_t>(t - 3) : t;
    }
  } else {  // dst += 2*src == dst - src
    for (std::size_t i = 0; i < n; ++i) {
      std::uint8_t t = static_cast<std::uint8_t>(dst[i] + 3 - src[i]);
      dst[i] = t >= 3 ? static_cast<std::uint8_t>(t - 3) : t;
    }
  }
}

}  // namespace

std::size_t rank_u8(const Field& f, std::size_t rows, std::size_t cols,
                    std::vector<std::uint8_t>& data) {
  if (f.size() > 256)
    fail(errc::size_overflow, "rank_u8 requires a field with at most 256 elements");
  const std::uint64_t q = f.size();
  const std::uint16_t* mul = f.mul_table();
  const std::uint16_t* add = f.add_table();

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && data[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(data.begin() + pivot * cols, data.begin() + (pivot + 1) * cols,
                       data.begin() + rank * cols);
    }
    std::uint8_t* prow = data.data() + rank * cols;
    std::uint64_t inv = f.inv(prow[col]);
    if (inv != 1) {
      const std::uint16_t* mulrow = mul + inv * q;
      for (std::size_t c = col; c < cols; ++c)
        prow[c] = static_cast<std::uint8_t>(mulrow[prow[c]]);
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint8_t* row = data.data() + r * cols;
      std::uint8_t factor = row[col];
      if (factor == 0) continue;
      std::size_t n = cols - col;
      if (f.p() == 2) {
        axpy_char2(row + col, prow + col, n, factor == 1 ? nullptr : mul + f.neg(factor) * q);
      } else if (f.p() == 3 && f.k() == 1) {
        axpy_char3(row + col, prow + col, n, factor == 1);
      } else {
        std::uint64_t neg = f.neg(factor);
        const std::uint16_t* mulrow = mul + neg * q;
        for (std::size_t c = col; c < cols; ++c)
          row[c] = static_cast<std::uint8_t>(add[row[c] * q + mulrow[prow[c]]]);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace kuelsh
