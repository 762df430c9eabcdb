#include "kuelsh/algebra_table.hpp"

#include <random>

namespace kuelsh {

std::optional<std::uint32_t> AlgebraTable::index_of(const Mon& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AlgebraTable::Vec AlgebraTable::unit() const {
  Vec u = zero();
  for (std::uint32_t i : idem_) u[i] = 1;
  return u;
}

AlgebraTable::Vec AlgebraTable::coords(const PathPoly& p) const {
  PathPoly nf = sys_.normal_form(p);
  Vec out = zero();
  const Field& f = field();
  for (const auto& [mon, c] : nf) {
    auto idx = index_.find(mon);
    if (idx == index_.end())
      fail(errc::associativity_failure,
           "normal form produced a monomial outside the basis");
    out[idx->second] = f.add(out[idx->second], c);
  }
  return out;
}

AlgebraTable::Vec AlgebraTable::mul_vec(const Vec& a, const Vec& b) const {
  const Field& f = field();
  Vec out = zero();
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      std::uint64_t c = f.mul(a[i], b[j]);
      for (const auto& [k, v] : mul(i, j)) out[k] = f.add(out[k], f.mul(c, v));
    }
  }
  return out;
}

AlgebraTable::Vec AlgebraTable::pow_p(Vec a, std::size_t n) const {
  const Field& f = field();
  for (std::size_t step = 0; step < n; ++step) {
    Vec r = unit();
    Vec base = std::move(a);
    std::uint64_t e = f.p();
    while (e) {
      if (e & 1) r = mul_vec(r, base);
      base = mul_vec(base, base);
      e >>= 1;
    }
    a = std::move(r);
  }
  return a;
}

std::string AlgebraTable::element_name(std::uint32_t i) const {
  const BasisPath& b = basis_[i];
  const Quiver& q = presentation().quiver;
  if (b.mon.trivial()) return "e_" + q.vertices[b.source];
  std::string out;
  for (std::size_t j = 0; j < b.mon.word.size(); ++j) {
    if (j) out += '.';
    out += q.arrows[static_cast<unsigned char>(b.mon.word[j])].name;
  }
  return out;
}

AlgebraTable build_table(const RewriteSystem& sys) {
  AlgebraTable t(sys);
  const Field& f = t.field();
  const Quiver& q = t.presentation().quiver;

  for (const Mon& m : t.sys_.irreducible()) {
    BasisPath b;
    b.mon = m;
    b.source = m.source;
    b.target = t.sys_.mon_target(m);
    b.length = static_cast<std::uint32_t>(m.word.size());
    t.index_.emplace(m, static_cast<std::uint32_t>(t.basis_.size()));
    t.basis_.push_back(std::move(b));
  }
  const std::size_t d = t.basis_.size();

  t.idem_.assign(q.vertices.size(), 0);
  for (std::uint32_t v = 0; v < q.vertices.size(); ++v) {
    auto it = t.index_.find(Mon{v, {}});
    if (it == t.index_.end())
      fail(errc::associativity_failure, "missing trivial path in the basis");
    t.idem_[v] = it->second;
  }
  t.arrow_elem_.assign(q.arrows.size(), 0);
  for (std::uint32_t a = 0; a < q.arrows.size(); ++a) {
    Mon m{q.arrows[a].source, Word(1, static_cast<char>(a))};
    auto it = t.index_.find(m);
    if (it == t.index_.end())
      fail(errc::associativity_failure, "missing arrow path in the basis");
    t.arrow_elem_[a] = it->second;
  }

  t.mul_.assign(d * d, {});
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      const BasisPath& bi = t.basis_[i];
      const BasisPath& bj = t.basis_[j];
      if (bi.target != bj.source) continue;  // product is zero
      if (bi.mon.trivial()) {
        t.mul_[i * d + j] = {{j, 1}};
        continue;
      }
      if (bj.mon.trivial()) {
        t.mul_[i * d + j] = {{i, 1}};
        continue;
      }
      PathPoly nf = t.sys_.normal_form_word(bi.source, bi.mon.word + bj.mon.word);
      SparseVec sv;
      for (const auto& [mon, c] : nf) {
        auto idx = t.index_.find(mon);
        if (idx == t.index_.end())
          fail(errc::associativity_failure,
               "normal form produced a monomial outside the basis");
        sv.emplace_back(idx->second, c);
      }
      std::sort(sv.begin(), sv.end());
      t.mul_[i * d + j] = std::move(sv);
    }
  }

  // orthogonal idempotents summing to 1
  for (std::uint32_t u = 0; u < q.vertices.size(); ++u) {
    for (std::uint32_t v = 0; v < q.vertices.size(); ++v) {
      const SparseVec& prod = t.mul(t.idem_[u], t.idem_[v]);
      bool ok = (u == v) ? (prod.size() == 1 && prod[0].first == t.idem_[u] &&
                            prod[0].second == 1)
                         : prod.empty();
      if (!ok)
        fail(errc::associativity_failure, "vertex idempotents are not orthogonal");
    }
  }

  // associativity: (bi bj) bk = bi (bj bk)
  auto assoc_check = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    AlgebraTable::Vec left(d, 0), right(d, 0);
    for (const auto& [l, c] : t.mul(i, j))
      for (const auto& [m, v] : t.mul(l, k))
        left[m] = f.add(left[m], f.mul(c, v));
    for (const auto& [l, c] : t.mul(j, k))
      for (const auto& [m, v] : t.mul(i, l))
        right[m] = f.add(right[m], f.mul(c, v));
    if (left != right)
      fail(errc::associativity_failure,
           "associativity fails on basis triple (" + t.element_name(i) + ", " +
               t.element_name(j) + ", " + t.element_name(k) + ")");
  };

  if (d <= 64) {
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j)
        for (std::uint32_t k = 0; k < d; ++k) assoc_check(i, j, k);
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(d - 1));
    for (int trial = 0; trial < 100000; ++trial)
      assoc_check(dist(rng), dist(rng), dist(rng));
  }

  return t;
}

AlgebraTable make_table(const Presentation& p) {
  return build_table(complete_auto(p));
}

CartanData dim_and_cartan(const AlgebraTable& t) {
  CartanData c;
  c.dim = t.dim();
  c.counts.assign(t.num_vertices(),
                  std::vector<std::size_t>(t.num_vertices(), 0));
  for (const BasisPath& b : t.basis()) ++c.counts[b.source][b.target];
  return c;
}

}  // namespace kuelsh
