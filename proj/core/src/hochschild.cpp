#include "kuelsh/hochschild.hpp"

#include <algorithm>
#include <map>

namespace kuelsh {

SparseMat compose(const Field& f, const SparseMat& a, const SparseMat& b) {
  if (a.cols != b.rows)
    fail(errc::dimension_mismatch, "sparse product shape mismatch");
  // group a's entries by column
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint64_t>>> acol;
  for (const auto& [r, c, v] : a.entries) acol[c].emplace_back(r, v);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> acc;
  for (const auto& [r, c, v] : b.entries) {
    auto it = acol.find(r);
    if (it == acol.end()) continue;
    for (const auto& [ar, av] : it->second) {
      std::uint64_t& slot = acc[{ar, c}];
      slot = f.add(slot, f.mul(av, v));
    }
  }
  SparseMat out{a.rows, b.cols, {}};
  for (const auto& [rc, v] : acc)
    if (v != 0) out.entries.emplace_back(rc.first, rc.second, v);
  return out;
}

bool is_zero(const SparseMat& m) { return m.entries.empty(); }

Matrix to_dense(const Field& f, const SparseMat& m) {
  Matrix out(f, m.rows, m.cols);
  for (const auto& [r, c, v] : m.entries)
    out.set(r, c, f.add(out.at(r, c), v));
  return out;
}

namespace {

// Indexing scaffold for the vertex-relative complex.
struct RelIndex {
  const AlgebraTable& t;
  std::vector<std::uint32_t> rad;            // radical basis (table indices)
  std::vector<std::int32_t> rad_pos;         // table index -> radical position
  std::vector<std::vector<std::vector<std::uint32_t>>> by_pair;  // [u][v] -> table idxs
  std::vector<std::int32_t> pair_pos;        // table index -> position in its pair list

  std::vector<std::uint32_t> c0;             // diagonal table indices
  std::vector<std::int32_t> c0_pos;

  // C^1 basis: (radical q, output b); offsets per q
  std::vector<std::size_t> c1_off;
  std::size_t c1_dim = 0;

  // C^2 basis: composable radical pairs with outputs
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // radical positions
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pair_index;
  std::vector<std::size_t> c2_off;
  std::size_t c2_dim = 0;

  // C^3 basis: composable radical triples with outputs
  std::vector<std::array<std::uint32_t, 3>> triples;
  std::map<std::array<std::uint32_t, 3>, std::uint32_t> triple_index;
  std::vector<std::size_t> c3_off;
  std::size_t c3_dim = 0;

  explicit RelIndex(const AlgebraTable& table) : t(table) {
    const std::size_t d = t.dim();
    const std::size_t nv = t.num_vertices();
    rad_pos.assign(d, -1);
    for (std::uint32_t i = 0; i < d; ++i) {
      if (t.basis()[i].length == 0) continue;
      rad_pos[i] = static_cast<std::int32_t>(rad.size());
      rad.push_back(i);
    }
    by_pair.assign(nv, std::vector<std::vector<std::uint32_t>>(nv));
    pair_pos.assign(d, -1);
    for (std::uint32_t i = 0; i < d; ++i) {
      auto& lst = by_pair[t.basis()[i].source][t.basis()[i].target];
      pair_pos[i] = static_cast<std::int32_t>(lst.size());
      lst.push_back(i);
    }
    c0_pos.assign(d, -1);
    for (std::uint32_t i = 0; i < d; ++i) {
      if (t.basis()[i].source != t.basis()[i].target) continue;
      c0_pos[i] = static_cast<std::int32_t>(c0.size());
      c0.push_back(i);
    }

    c1_off.resize(rad.size());
    for (std::size_t qi = 0; qi < rad.size(); ++qi) {
      c1_off[qi] = c1_dim;
      c1_dim += outputs(rad[qi], rad[qi]).size();
    }
    for (std::uint32_t a = 0; a < rad.size(); ++a) {
      for (std::uint32_t b = 0; b < rad.size(); ++b) {
        if (t.basis()[rad[a]].target != t.basis()[rad[b]].source) continue;
        pair_index[{a, b}] = static_cast<std::uint32_t>(pairs.size());
        pairs.emplace_back(a, b);
      }
    }
    c2_off.resize(pairs.size());
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      c2_off[pi] = c2_dim;
      c2_dim += outputs(rad[pairs[pi].first], rad[pairs[pi].second]).size();
    }
    for (std::uint32_t pi = 0; pi < pairs.size(); ++pi) {
      auto [a, b] = pairs[pi];
      for (std::uint32_t c = 0; c < rad.size(); ++c) {
        if (t.basis()[rad[b]].target != t.basis()[rad[c]].source) continue;
        triple_index[{a, b, c}] = static_cast<std::uint32_t>(triples.size());
        triples.push_back({a, b, c});
      }
    }
    c3_off.resize(triples.size());
    for (std::size_t ti = 0; ti < triples.size(); ++ti) {
      c3_off[ti] = c3_dim;
      c3_dim += outputs(rad[triples[ti][0]], rad[triples[ti][2]]).size();
    }
  }

  // basis elements parallel to the span first..last (source of a, target of b)
  const std::vector<std::uint32_t>& outputs(std::uint32_t first_tbl,
                                            std::uint32_t last_tbl) const {
    return by_pair[t.basis()[first_tbl].source][t.basis()[last_tbl].target];
  }

  std::size_t c1_index(std::uint32_t q /*radical pos*/, std::uint32_t b_tbl) const {
    return c1_off[q] + static_cast<std::size_t>(pair_pos[b_tbl]);
  }
  std::size_t c2_index(std::uint32_t pair_i, std::uint32_t b_tbl) const {
    return c2_off[pair_i] + static_cast<std::size_t>(pair_pos[b_tbl]);
  }
  std::size_t c3_index(std::uint32_t triple_i, std::uint32_t b_tbl) const {
    return c3_off[triple_i] + static_cast<std::size_t>(pair_pos[b_tbl]);
  }
};

void add_entry(const Field& f, SparseMat& m,
               std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>& acc,
               std::size_t r, std::size_t c, std::uint64_t v) {
  (void)m;
  if (v == 0) return;
  std::uint64_t& slot = acc[{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)}];
  slot = f.add(slot, v);
}

SparseMat flush(std::size_t rows, std::size_t cols,
                std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>& acc) {
  SparseMat m{rows, cols, {}};
  for (const auto& [rc, v] : acc)
    if (v != 0) m.entries.emplace_back(rc.first, rc.second, v);
  acc.clear();
  return m;
}

RelativeComplex build_relative(const AlgebraTable& t) {
  const Field& f = t.field();
  RelIndex ix(t);
  RelativeComplex cx;
  cx.cochain_dims = {ix.c0.size(), ix.c1_dim, ix.c2_dim, ix.c3_dim};

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> acc;

  // d0: (d0 a)(q) = q a - a q for diagonal a
  for (std::uint32_t col = 0; col < ix.c0.size(); ++col) {
    std::uint32_t a = ix.c0[col];
    for (std::uint32_t q = 0; q < ix.rad.size(); ++q) {
      std::uint32_t qt = ix.rad[q];
      for (const auto& [m, v] : t.mul(qt, a))
        add_entry(f, cx.d0, acc, ix.c1_index(q, m), col, v);
      for (const auto& [m, v] : t.mul(a, qt))
        add_entry(f, cx.d0, acc, ix.c1_index(q, m), col, f.neg(v));
    }
  }
  cx.d0 = flush(ix.c1_dim, ix.c0.size(), acc);

  // d1: (d1 f)(q1, q2) = q1 f(q2) - f(q1 q2) + f(q1) q2
  for (std::uint32_t q = 0; q < ix.rad.size(); ++q) {
    std::uint32_t qt = ix.rad[q];
    for (std::uint32_t b : ix.outputs(qt, qt)) {
      std::size_t col = ix.c1_index(q, b);
      // q1 f(q2) with q2 = q
      for (std::uint32_t q1 = 0; q1 < ix.rad.size(); ++q1) {
        auto it = ix.pair_index.find({q1, q});
        if (it == ix.pair_index.end()) continue;
        for (const auto& [m, v] : t.mul(ix.rad[q1], b))
          add_entry(f, cx.d1, acc, ix.c2_index(it->second, m), col, v);
      }
      // f(q1) q2 with q1 = q
      for (std::uint32_t q2 = 0; q2 < ix.rad.size(); ++q2) {
        auto it = ix.pair_index.find({q, q2});
        if (it == ix.pair_index.end()) continue;
        for (const auto& [m, v] : t.mul(b, ix.rad[q2]))
          add_entry(f, cx.d1, acc, ix.c2_index(it->second, m), col, v);
      }
      // -f(q1 q2) where nf(q1 q2) involves the radical basis element q
      for (std::uint32_t pi = 0; pi < ix.pairs.size(); ++pi) {
        auto [q1, q2] = ix.pairs[pi];
        for (const auto& [m, v] : t.mul(ix.rad[q1], ix.rad[q2])) {
          if (m != qt) continue;
          add_entry(f, cx.d1, acc, ix.c2_index(pi, b), col, f.neg(v));
        }
      }
    }
  }
  cx.d1 = flush(ix.c2_dim, ix.c1_dim, acc);

  // d2: (d2 g)(q1,q2,q3) = q1 g(q2,q3) - g(q1q2, q3) + g(q1, q2q3) - g(q1,q2) q3
  for (std::uint32_t pi = 0; pi < ix.pairs.size(); ++pi) {
    auto [r1, r2] = ix.pairs[pi];
    for (std::uint32_t b : ix.outputs(ix.rad[r1], ix.rad[r2])) {
      std::size_t col = ix.c2_index(pi, b);
      // q1 g(q2,q3) with (q2,q3) = (r1,r2)
      for (std::uint32_t q1 = 0; q1 < ix.rad.size(); ++q1) {
        auto it = ix.triple_index.find({q1, r1, r2});
        if (it == ix.triple_index.end()) continue;
        for (const auto& [m, v] : t.mul(ix.rad[q1], b))
          add_entry(f, cx.d2, acc, ix.c3_index(it->second, m), col, v);
      }
      // -g(q1 q2, q3) with q3 = r2 and nf(q1 q2) hitting r1
      for (std::uint32_t pj = 0; pj < ix.pairs.size(); ++pj) {
        auto [q1, q2] = ix.pairs[pj];
        auto it = ix.triple_index.find({q1, q2, r2});
        if (it == ix.triple_index.end()) continue;
        for (const auto& [m, v] : t.mul(ix.rad[q1], ix.rad[q2])) {
          if (m != ix.rad[r1]) continue;
          add_entry(f, cx.d2, acc, ix.c3_index(it->second, b), col, f.neg(v));
        }
      }
      // +g(q1, q2 q3) with q1 = r1 and nf(q2 q3) hitting r2
      for (std::uint32_t pj = 0; pj < ix.pairs.size(); ++pj) {
        auto [q2, q3] = ix.pairs[pj];
        auto it = ix.triple_index.find({r1, q2, q3});
        if (it == ix.triple_index.end()) continue;
        for (const auto& [m, v] : t.mul(ix.rad[q2], ix.rad[q3])) {
          if (m != ix.rad[r2]) continue;
          add_entry(f, cx.d2, acc, ix.c3_index(it->second, b), col, v);
        }
      }
      // -g(q1,q2) q3 with (q1,q2) = (r1,r2)
      for (std::uint32_t q3 = 0; q3 < ix.rad.size(); ++q3) {
        auto it = ix.triple_index.find({r1, r2, q3});
        if (it == ix.triple_index.end()) continue;
        for (const auto& [m, v] : t.mul(b, ix.rad[q3]))
          add_entry(f, cx.d2, acc, ix.c3_index(it->second, m), col, f.neg(v));
      }
    }
  }
  cx.d2 = flush(ix.c3_dim, ix.c2_dim, acc);
  return cx;
}

// ---- full bar complex oracle ----

struct BarOracle {
  const AlgebraTable& t;
  const Field& f;
  std::size_t d;
  // demult[k]: (i, j, c) with nf(b_i b_j) containing c * b_k
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>>> demult;

  explicit BarOracle(const AlgebraTable& table)
      : t(table), f(table.field()), d(table.dim()) {
    demult.resize(d);
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j)
        for (const auto& [k, v] : t.mul(i, j)) demult[k].emplace_back(i, j, v);
  }

  // rank of d0: A -> Hom(A, A), a -> (x -> xa - ax)
  std::size_t rank_d0() const {
    std::vector<std::uint8_t> rows(d * d * d, 0);
    for (std::uint32_t a = 0; a < d; ++a) {
      std::uint8_t* row = rows.data() + a * d * d;
      for (std::uint32_t x = 0; x < d; ++x) {
        for (const auto& [m, v] : t.mul(x, a))
          row[x * d + m] = static_cast<std::uint8_t>(f.add(row[x * d + m], v));
        for (const auto& [m, v] : t.mul(a, x))
          row[x * d + m] = static_cast<std::uint8_t>(f.sub(row[x * d + m], v));
      }
    }
    return rank_u8(f, d, d * d, rows);
  }

  // rank of d1: Hom(A,A) -> Hom(A t A, A)
  std::size_t rank_d1() const {
    const std::size_t cols = d * d * d;  // rows of the transposed layout: d^2 inputs
    std::vector<std::uint8_t> rows(d * d * cols, 0);
    for (std::uint32_t q = 0; q < d; ++q) {
      for (std::uint32_t b = 0; b < d; ++b) {
        std::uint8_t* row = rows.data() + (q * d + b) * cols;
        auto put = [&](std::size_t idx, std::uint64_t v) {
          row[idx] = static_cast<std::uint8_t>(f.add(row[idx], v));
        };
        // x f(y) with y = q
        for (std::uint32_t x = 0; x < d; ++x)
          for (const auto& [m, v] : t.mul(x, b)) put((x * d + q) * d + m, v);
        // f(x) y with x = q
        for (std::uint32_t y = 0; y < d; ++y)
          for (const auto& [m, v] : t.mul(b, y)) put((q * d + y) * d + m, v);
        // -f(xy) where nf(x y) involves q
        for (const auto& [x, y, c] : demult[q]) put((x * d + y) * d + b, f.neg(c));
      }
    }
    return rank_u8(f, d * d, cols, rows);
  }

  // rank of d2: Hom(A t A, A) -> Hom(A t A t A, A)
  std::size_t rank_d2() const {
    const std::size_t cols = d * d * d * d;
    std::vector<std::uint8_t> rows(d * d * d * cols, 0);
    for (std::uint32_t x = 0; x < d; ++x) {
      for (std::uint32_t y = 0; y < d; ++y) {
        for (std::uint32_t b = 0; b < d; ++b) {
          std::uint8_t* row = rows.data() + ((x * d + y) * d + b) * cols;
          auto put = [&](std::size_t idx, std::uint64_t v) {
            row[idx] = static_cast<std::uint8_t>(f.add(row[idx], v));
          };
          // u g(v,w) with (v,w) = (x,y)
          for (std::uint32_t u = 0; u < d; ++u)
            for (const auto& [m, v] : t.mul(u, b))
              put(((u * d + x) * d + y) * d + m, v);
          // -g(uv, w) with w = y, nf(u v) at x
          for (const auto& [u, v2, c] : demult[x])
            put(((u * d + v2) * d + y) * d + b, f.neg(c));
          // +g(u, vw) with u = x, nf(v w) at y
          for (const auto& [v2, w, c] : demult[y])
            put(((x * d + v2) * d + w) * d + b, c);
          // -g(u,v) w with (u,v) = (x,y)
          for (std::uint32_t w = 0; w < d; ++w)
            for (const auto& [m, v] : t.mul(b, w))
              put(((x * d + y) * d + w) * d + m, f.neg(v));
        }
      }
    }
    return rank_u8(f, d * d * d, cols, rows);
  }
};

}  // namespace

RelativeComplex relative_complex(const AlgebraTable& t) {
  return build_relative(t);
}

Matrix hh_differential(const AlgebraTable& t, std::size_t n) {
  if (n > 2) fail(errc::degree_unsupported, "differentials exist for degrees 0..2");
  RelativeComplex cx = build_relative(t);
  const SparseMat& m = n == 0 ? cx.d0 : n == 1 ? cx.d1 : cx.d2;
  return to_dense(t.field(), m);
}

HhResult hh_dim(const AlgebraTable& t, std::size_t degree, HhMethod method) {
  if (degree > 2)
    fail(errc::degree_unsupported,
         "Hochschild dimensions are computed for degrees 0..2 only");
  HhResult res;
  res.degree = degree;
  res.method = method;

  if (method == HhMethod::relative) {
    RelativeComplex cx = build_relative(t);
    const Field& f = t.field();
    // the complex property, asserted numerically
    if (!is_zero(compose(f, cx.d1, cx.d0)) || !is_zero(compose(f, cx.d2, cx.d1)))
      fail(errc::associativity_failure, "relative differentials do not compose to zero");
    res.cochain_dims.assign(cx.cochain_dims.begin(),
                            cx.cochain_dims.begin() + degree + 2);
    std::size_t rank0 = to_dense(f, cx.d0).rank();
    if (degree == 0) {
      res.rank_prev = 0;
      res.ker_cur = cx.cochain_dims[0] - rank0;
      res.dim = res.ker_cur;
      return res;
    }
    std::size_t rank1 = to_dense(f, cx.d1).rank();
    if (degree == 1) {
      res.rank_prev = rank0;
      res.ker_cur = cx.cochain_dims[1] - rank1;
      res.dim = res.ker_cur - rank0;
      return res;
    }
    std::size_t rank2 = to_dense(f, cx.d2).rank();
    res.rank_prev = rank1;
    res.ker_cur = cx.cochain_dims[2] - rank2;
    res.dim = res.ker_cur - rank1;
    return res;
  }

  // full bar complex oracle
  if (t.dim() > 16)
    fail(errc::oracle_too_large, "the bar oracle is limited to dim <= 16");
  if (!t.field().has_tables())
    fail(errc::oracle_too_large,
         "the bar oracle needs a table-backed field (size <= 256)");
  BarOracle bar(t);
  const std::size_t d = t.dim();
  res.cochain_dims.resize(degree + 2);
  for (std::size_t i = 0; i < degree + 2; ++i) {
    std::size_t v = 1;
    for (std::size_t j = 0; j <= i; ++j) v *= d;
    res.cochain_dims[i] = v;
  }
  std::size_t rank0 = bar.rank_d0();
  if (degree == 0) {
    res.rank_prev = 0;
    res.ker_cur = d - rank0;
    res.dim = res.ker_cur;
    return res;
  }
  std::size_t rank1 = bar.rank_d1();
  if (degree == 1) {
    res.rank_prev = rank0;
    res.ker_cur = d * d - rank1;
    res.dim = res.ker_cur - rank0;
    return res;
  }
  std::size_t rank2 = bar.rank_d2();
  res.rank_prev = rank1;
  res.ker_cur = d * d * d - rank2;
  res.dim = res.ker_cur - rank1;
  return res;
}

}  // namespace kuelsh
