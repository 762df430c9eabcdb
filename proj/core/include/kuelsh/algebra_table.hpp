#pragma once

#include <optional>

#include "kuelsh/rewrite.hpp"

namespace kuelsh {

/// Sparse vector in algebra-basis coordinates: (basis index, coefficient).
using SparseVec = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

struct BasisPath {
  Mon mon;
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  std::uint32_t length = 0;
};

/// Monomial basis of irreducible paths plus exact structure constants: the
/// computational avatar of the bound quiver algebra.
class AlgebraTable {
 public:
  using Vec = std::vector<std::uint64_t>;

  const Field& field() const noexcept { return sys_.field(); }
  const Presentation& presentation() const noexcept { return sys_.presentation(); }
  const RewriteSystem& system() const noexcept { return sys_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<BasisPath>& basis() const noexcept { return basis_; }
  std::size_t num_vertices() const noexcept {
    return presentation().quiver.vertices.size();
  }

  /// Product of basis elements i and j, expressed in the basis.
  const SparseVec& mul(std::uint32_t i, std::uint32_t j) const {
    return mul_[i * dim() + j];
  }
  std::uint32_t idempotent(std::uint32_t vertex) const { return idem_[vertex]; }
  std::uint32_t arrow_element(std::uint32_t arrow) const { return arrow_elem_[arrow]; }
  std::optional<std::uint32_t> index_of(const Mon& m) const;

  Vec zero() const { return Vec(dim(), 0); }
  Vec unit() const;
  /// Coordinates of an arbitrary path polynomial (normal form applied).
  Vec coords(const PathPoly& p) const;
  Vec mul_vec(const Vec& a, const Vec& b) const;
  /// a^(p^n), by n-fold p-th powers.
  Vec pow_p(Vec a, std::size_t n) const;

  std::string element_name(std::uint32_t i) const;

 private:
  friend AlgebraTable build_table(const RewriteSystem& sys);
  explicit AlgebraTable(RewriteSystem sys) : sys_(std::move(sys)) {}

  RewriteSystem sys_;
  std::vector<BasisPath> basis_;
  std::map<Mon, std::uint32_t> index_;
  std::vector<SparseVec> mul_;
  std::vector<std::uint32_t> idem_;
  std::vector<std::uint32_t> arrow_elem_;
};

/// Builds the table from a confluent system and verifies the idempotent
/// decomposition and associativity (all triples when dim <= 64, otherwise
/// 10^5 seeded random triples).  Throws AssociativityFailure on any miss.
AlgebraTable build_table(const RewriteSystem& sys);

/// complete_auto + build_table.
AlgebraTable make_table(const Presentation& p);

struct CartanData {
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> counts;  // [source][target]
};

/// Cartan matrix C[i][j] = number of basis paths from vertex i to vertex j;
/// dim = sum of all entries.
CartanData dim_and_cartan(const AlgebraTable& t);

}  // namespace kuelsh
