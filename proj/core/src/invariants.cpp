#include "kuelsh/invariants.hpp"

#include <algorithm>
#include <random>

#include "kuelsh/hochschild.hpp"

namespace kuelsh {

Subspace center(const AlgebraTable& t) {
  const std::size_t d = t.dim();
  const Field& f = t.field();
  // x is central iff [x, b_j] = 0 for all j: stack the commutator maps.
  Matrix stacked(f, d, d * d);
  for (std::uint32_t j = 0; j < d; ++j) {
    for (std::uint32_t i = 0; i < d; ++i) {
      for (const auto& [k, v] : t.mul(i, j))
        stacked.set(i, j * d + k, f.add(stacked.at(i, j * d + k), v));
      for (const auto& [k, v] : t.mul(j, i))
        stacked.set(i, j * d + k, f.sub(stacked.at(i, j * d + k), v));
    }
  }
  return kernel(stacked.transposed());
}

Subspace commutator_subspace(const AlgebraTable& t) {
  const std::size_t d = t.dim();
  const Field& f = t.field();
  Matrix rows(f, d * (d - 1) / 2, d);
  std::size_t r = 0;
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = i + 1; j < d; ++j) {
      for (const auto& [k, v] : t.mul(i, j)) rows.set(r, k, f.add(rows.at(r, k), v));
      for (const auto& [k, v] : t.mul(j, i)) rows.set(r, k, f.sub(rows.at(r, k), v));
      ++r;
    }
  }
  return Subspace::row_space(std::move(rows));
}

Subspace radical(const AlgebraTable& t) {
  Matrix rows(t.field(), t.dim() - t.num_vertices(), t.dim());
  std::size_t r = 0;
  for (std::uint32_t i = 0; i < t.dim(); ++i) {
    if (t.basis()[i].length == 0) continue;
    rows.set(r++, i, 1);
  }
  return Subspace::row_space(std::move(rows));
}

Subspace socle(const AlgebraTable& t) {
  const std::size_t d = t.dim();
  const Field& f = t.field();
  const std::size_t na = t.presentation().quiver.arrows.size();
  // x J = 0 iff x a = 0 for every arrow a; J x = 0 iff a x = 0 for every a.
  Matrix right(f, d, d * na), left(f, d, d * na);
  for (std::uint32_t a = 0; a < na; ++a) {
    std::uint32_t ai = t.arrow_element(a);
    for (std::uint32_t i = 0; i < d; ++i) {
      for (const auto& [k, v] : t.mul(i, ai)) right.set(i, a * d + k, v);
      for (const auto& [k, v] : t.mul(ai, i)) left.set(i, a * d + k, v);
    }
  }
  Subspace right_ann = kernel(right.transposed());
  Subspace left_ann = kernel(left.transposed());
  if (!(right_ann == left_ann))
    fail(errc::socle_mismatch,
         "left and right annihilators of the radical differ (dims " +
             std::to_string(left_ann.dim()) + " vs " +
             std::to_string(right_ann.dim()) +
             "); the algebra is not selfinjective");
  return right_ann;
}

namespace {

Matrix gram_matrix(const AlgebraTable& t, const std::vector<std::uint64_t>& psi) {
  const std::size_t d = t.dim();
  const Field& f = t.field();
  Matrix g(f, d, d);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) {
      std::uint64_t s = 0;
      for (const auto& [k, v] : t.mul(i, j)) s = f.add(s, f.mul(v, psi[k]));
      g.set(i, j, s);
    }
  return g;
}

}  // namespace

SymmetrizingForm form_validate(const AlgebraTable& t,
                               std::vector<std::uint64_t> psi) {
  const std::size_t d = t.dim();
  if (psi.size() != d)
    fail(errc::dimension_mismatch, "form vector length does not match dim");
  Matrix g = gram_matrix(t, psi);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = i + 1; j < d; ++j)
      if (g.at(i, j) != g.at(j, i))
        fail(errc::not_central_form,
             "psi(ab) != psi(ba) for the basis pair (" + t.element_name(i) +
                 ", " + t.element_name(j) + ")");
  if (g.rank() != d) {
    Subspace k = kernel(g);
    std::string witness;
    for (std::size_t c = 0; c < d && k.dim() > 0; ++c) {
      if (!witness.empty()) witness += ",";
      witness += t.field().format(k.basis().at(0, c));
    }
    fail(errc::degenerate_form,
         "the Gram matrix is singular; kernel vector (" + witness + ")");
  }
  return SymmetrizingForm{std::move(psi), BilinearForm{std::move(g)}};
}

std::vector<std::uint64_t> materialize_form(
    const AlgebraTable& t, const std::vector<FormAssignment>& form) {
  const std::size_t d = t.dim();
  const Field& f = t.field();
  // Each assignment is one linear constraint on psi; coordinates not
  // touched by any assignment stay zero, so solve the RREF system and read
  // off the pivot values.
  Matrix rows(f, form.size(), d + 1);
  for (std::size_t i = 0; i < form.size(); ++i) {
    AlgebraTable::Vec v = t.coords(t.system().from_expr(form[i].path));
    for (std::size_t c = 0; c < d; ++c) rows.set(i, c, v[c]);
    rows.set(i, d, form[i].value);
  }
  std::vector<std::size_t> pivots = rows.rref_in_place();
  std::vector<std::uint64_t> psi(d, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == d)
      fail(errc::not_central_form,
           "form assignments are inconsistent with the algebra relations");
    psi[pivots[i]] = rows.at(i, d);
  }
  return psi;
}

SymmetrizingForm obtain_form(const AlgebraTable& t, std::uint64_t seed) {
  if (!t.presentation().form.empty())
    return form_validate(t, materialize_form(t, t.presentation().form));
  return form_search(t, seed);
}

SymmetrizingForm form_search(const AlgebraTable& t, std::uint64_t seed) {
  const std::size_t d = t.dim();
  const Field& f = t.field();
  // Central forms are exactly the functionals vanishing on K(A).
  Subspace comm = commutator_subspace(t);
  Subspace central_forms = kernel(comm.basis());
  const std::size_t m = central_forms.dim();
  if (m == 0)
    fail(errc::not_symmetric_algebra, "no nonzero central forms exist");

  auto assemble = [&](const std::vector<std::uint64_t>& c) {
    std::vector<std::uint64_t> psi(d, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t col = 0; col < d; ++col)
        psi[col] = f.add(psi[col], f.mul(c[i], central_forms.basis().at(i, col)));
    }
    return psi;
  };
  auto invertible = [&](const std::vector<std::uint64_t>& psi) {
    return gram_matrix(t, psi).rank() == d;
  };

  // candidate count q^m, swept exhaustively when it fits in 2^16
  bool exhaustive = true;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total * f.size() > (std::uint64_t(1) << 16)) {
      exhaustive = false;
      break;
    }
    total *= f.size();
  }
  if (exhaustive) {
    std::vector<std::uint64_t> c(m, 0);
    for (std::uint64_t it = 1; it < total; ++it) {
      std::uint64_t v = it;
      for (std::size_t i = 0; i < m; ++i) {
        c[i] = v % f.size();
        v /= f.size();
      }
      std::vector<std::uint64_t> psi = assemble(c);
      if (invertible(psi)) return form_validate(t, std::move(psi));
    }
    fail(errc::not_symmetric_algebra,
         "exhaustive sweep over " + std::to_string(total) +
             " central forms found no nondegenerate one: the algebra is not "
             "symmetric over this field");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.size() - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::uint64_t> c(m);
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
      c[i] = dist(rng);
      nonzero = nonzero || c[i] != 0;
    }
    if (!nonzero) continue;
    std::vector<std::uint64_t> psi = assemble(c);
    if (invertible(psi)) return form_validate(t, std::move(psi));
  }
  fail(errc::search_exhausted,
       "1000 sampled central forms were all degenerate; inconclusive - "
       "consider a field extension");
}

Subspace t_space(const AlgebraTable& t, std::size_t n) {
  Subspace comm = commutator_subspace(t);
  if (n == 0) return comm;
  const std::size_t d = t.dim();
  const Field& f = t.field();

  // phi(b_i) = b_i^(p^n) reduced mod K(A); solve the twisted system and
  // rejoin K(A).
  Matrix phi(f, d, d);
  for (std::uint32_t i = 0; i < d; ++i) {
    AlgebraTable::Vec e = t.zero();
    e[i] = 1;
    AlgebraTable::Vec pw = t.pow_p(std::move(e), n);
    std::vector<std::uint64_t> red = comm.reduce(pw);
    for (std::size_t c = 0; c < d; ++c) phi.set(i, c, red[c]);
  }
  Subspace solutions = semilinear_kernel_iter(phi, n);
  return sum(comm, solutions);
}

KuelshammerReport kuelshammer_sequence(const AlgebraTable& t,
                                       const SymmetrizingForm& form,
                                       std::size_t n_max) {
  if (n_max < 1) fail(errc::dimension_mismatch, "n_max must be >= 1");
  KuelshammerReport report;
  Subspace z = center(t);

  for (std::size_t n = 0; n <= n_max; ++n) {
    Subspace tn = t_space(t, n);
    Subspace ideal = orthogonal_complement(tn, form.gram);
    if (n == 0 && !(ideal == z))
      fail(errc::chain_not_descending,
           "K(A)-perp differs from the center; the form is not symmetrizing");
    if (!report.ideals.empty() && !report.ideals.back().contains(ideal))
      fail(errc::chain_not_descending,
           "the ideal chain fails to descend at level " + std::to_string(n));
    // each term is an ideal of Z(A)
    for (std::size_t zi = 0; zi < z.dim(); ++zi) {
      AlgebraTable::Vec zv(z.basis().row(zi).begin(), z.basis().row(zi).end());
      for (std::size_t ii = 0; ii < ideal.dim(); ++ii) {
        AlgebraTable::Vec iv(ideal.basis().row(ii).begin(),
                             ideal.basis().row(ii).end());
        if (!ideal.contains(t.mul_vec(zv, iv)))
          fail(errc::not_an_ideal,
               "T_n-perp is not closed under the center at level " +
                   std::to_string(n));
      }
    }
    bool stable = !report.ideals.empty() && report.ideals.back() == ideal;
    report.ideals.push_back(std::move(ideal));
    report.dims.push_back(report.ideals.back().dim());
    if (stable) {
      report.stable_index = n - 1;
      break;
    }
    report.stable_index = n;
  }
  for (std::size_t i = 0; i + 1 < report.dims.size(); ++i)
    report.codims.push_back(report.dims[i] - report.dims[i + 1]);
  return report;
}

std::vector<std::uint64_t> xi_map(const AlgebraTable& t,
                                  const SymmetrizingForm& form, std::size_t n,
                                  std::span<const std::uint64_t> z) {
  const std::size_t d = t.dim();
  const Field& f = t.field();
  Subspace zc = center(t);
  if (!zc.contains(z))
    fail(errc::not_central_input, "xi input must be a central element");

  // r_j = root_n(psi(z * b_j^(p^n))); then w solves w G = r.
  AlgebraTable::Vec zv(z.begin(), z.end());
  std::vector<std::uint64_t> rhs(d, 0);
  for (std::uint32_t j = 0; j < d; ++j) {
    AlgebraTable::Vec e = t.zero();
    e[j] = 1;
    AlgebraTable::Vec pw = t.pow_p(std::move(e), n);
    AlgebraTable::Vec prod = t.mul_vec(zv, pw);
    std::uint64_t val = 0;
    for (std::size_t c = 0; c < d; ++c)
      val = f.add(val, f.mul(prod[c], form.psi[c]));
    rhs[j] = f.frobenius_inverse(val, n);
  }

  // w G = r  <=>  G^T w^T = r^T
  Matrix aug(f, d, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug.set(i, j, form.gram.at(j, i));
    aug.set(i, d, rhs[i]);
  }
  std::vector<std::size_t> pivots = aug.rref_in_place();
  std::vector<std::uint64_t> w(d, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == d)
      fail(errc::degenerate_form, "xi solve hit a singular Gram matrix");
    w[pivots[i]] = aug.at(i, d);
  }
  if (!zc.contains(w))
    fail(errc::xi_not_central,
         "the solved xi image is not central at level " + std::to_string(n));
  return w;
}

Fingerprint fingerprint(const AlgebraTable& t, const SymmetrizingForm* form,
                        const FingerprintOptions& options) {
  Fingerprint fp;
  fp.num_simples = t.num_vertices();
  fp.cartan = dim_and_cartan(t);
  fp.dim = fp.cartan.dim;
  fp.dim_center = center(t).dim();
  fp.dim_commutator = commutator_subspace(t).dim();
  fp.dim_socle = socle(t).dim();

  SymmetrizingForm local;
  if (form == nullptr) {
    local = obtain_form(t, options.seed);
    form = &local;
  }
  KuelshammerReport kr = kuelshammer_sequence(t, *form, options.n_max);
  fp.kuelshammer_dims = kr.dims;
  fp.kuelshammer_codims = kr.codims;
  fp.stable_index = kr.stable_index;

  if (options.with_hh) {
    std::array<std::size_t, 3> hh{};
    for (std::size_t deg = 0; deg <= 2; ++deg)
      hh[deg] = hh_dim(t, deg, HhMethod::relative).dim;
    if (hh[0] != fp.dim_center)
      fail(errc::chain_not_descending, "HH^0 disagrees with the center dimension");
    fp.hh = hh;
  }
  return fp;
}

}  // namespace kuelsh
