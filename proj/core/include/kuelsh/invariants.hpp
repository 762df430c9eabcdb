#pragma once

#include <array>
#include <optional>

#include "kuelsh/algebra_table.hpp"
#include "kuelsh/linalg.hpp"

namespace kuelsh {

/// The center Z(A) = {x : xb = bx for all basis b}; contains the unit.
Subspace center(const AlgebraTable& t);

/// K(A): span of all commutators ab - ba, in canonical RREF.
Subspace commutator_subspace(const AlgebraTable& t);

/// The arrow ideal J(A) = span of the basis paths of positive length
/// (the Jacobson radical, since presentations are admissible).
Subspace radical(const AlgebraTable& t);

/// {x : xJ = 0 = Jx}.  Throws SocleMismatch when the left and right
/// annihilators of J differ (the input is then not selfinjective).
Subspace socle(const AlgebraTable& t);

/// A symmetrizing linear form and the bilinear form (a,b) = psi(ab) it
/// induces; construction validates centrality and nondegeneracy.
struct SymmetrizingForm {
  std::vector<std::uint64_t> psi;  // values on the monomial basis
  BilinearForm gram;
};

/// Validates psi: the Gram matrix must be symmetric (psi vanishes on K(A))
/// and invertible.  Throws NotCentralForm with a witness basis pair, or
/// DegenerateForm with a kernel vector.
SymmetrizingForm form_validate(const AlgebraTable& t,
                               std::vector<std::uint64_t> psi);

/// Searches the space of central forms for one with invertible Gram matrix:
/// a deterministic sweep in element-encoding order when there are at most
/// 2^16 candidates, otherwise seeded random sampling (1000 attempts).
/// Throws NotSymmetricAlgebra (exhaustive sweep empty-handed: definitive)
/// or SearchExhausted (sampling failed: inconclusive).
SymmetrizingForm form_search(const AlgebraTable& t, std::uint64_t seed = 0);

/// Evaluates `form` lines against the table: each assignment (path, v)
/// becomes the linear constraint psi(nf(path)) = v; basis monomials not
/// touched by any assignment are zero.  Throws NotCentralForm when the
/// constraints are inconsistent with the relations.
std::vector<std::uint64_t> materialize_form(const AlgebraTable& t,
                                            const std::vector<FormAssignment>& form);

/// Attached form if the presentation carries one, otherwise form_search.
SymmetrizingForm obtain_form(const AlgebraTable& t, std::uint64_t seed = 0);

/// T_n(A) = {x : x^(p^n) lands in K(A)}, via the twisted linear system on
/// basis powers reduced mod K(A).  T_0 = K(A).
Subspace t_space(const AlgebraTable& t, std::size_t n);

struct KuelshammerReport {
  std::vector<Subspace> ideals;      // T_0-perp = Z(A), T_1-perp, ...
  std::vector<std::size_t> dims;     // dims of the ideals
  std::vector<std::size_t> codims;   // successive codimensions
  std::size_t stable_index = 0;      // first n with ideal n = ideal n+1
};

/// The descending chain Z(A) = T_0(A)-perp >= T_1(A)-perp >= ... computed
/// through the first repeat (or n_max).  Verifies that each term is an
/// ideal of the center and that the chain descends.
KuelshammerReport kuelshammer_sequence(const AlgebraTable& t,
                                       const SymmetrizingForm& form,
                                       std::size_t n_max = 8);

/// The unique w with (w, x)^(p^n) = (z, x^(p^n)) for all x, solved against
/// the Gram matrix with x running over the whole algebra basis.  Requires
/// z central (NotCentralInput); asserts w central (XiNotCentral).
std::vector<std::uint64_t> xi_map(const AlgebraTable& t,
                                  const SymmetrizingForm& form, std::size_t n,
                                  std::span<const std::uint64_t> z);

struct Fingerprint {
  std::size_t num_simples = 0;
  std::size_t dim = 0;
  std::size_t dim_center = 0;
  std::size_t dim_commutator = 0;
  std::size_t dim_socle = 0;
  CartanData cartan;
  std::vector<std::size_t> kuelshammer_dims;
  std::vector<std::size_t> kuelshammer_codims;
  std::size_t stable_index = 0;
  std::optional<std::array<std::size_t, 3>> hh;  // HH^0..HH^2 dims
};

struct FingerprintOptions {
  bool with_hh = false;
  std::size_t n_max = 8;
  std::uint64_t seed = 0;
};

/// Aggregates the derived-equivalence invariants.  `form` may be null, in
/// which case the attached form is used or searched for.
Fingerprint fingerprint(const AlgebraTable& t, const SymmetrizingForm* form,
                        const FingerprintOptions& options = {});

}  // namespace kuelsh
