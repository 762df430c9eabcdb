#include "kuelsh/rewrite.hpp"

#include <algorithm>
#include <cstring>
#include <deque>

namespace kuelsh {

MonomialOrder MonomialOrder::declaration_order(std::size_t arrows) {
  std::vector<std::uint32_t> rank(arrows);
  for (std::size_t i = 0; i < arrows; ++i) rank[i] = static_cast<std::uint32_t>(i);
  return MonomialOrder(std::move(rank));
}

namespace {

struct WordGreater {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const {
    return order->compare(a, b) > 0;
  }
};

// Working polynomial: nonempty words, leading term first.
using WPoly = std::map<Word, std::uint64_t, WordGreater>;

struct Completion {
  const Presentation& pres;
  const Field& f;
  MonomialOrder order;
  std::size_t bound;

  std::vector<RewriteRule> rules;
  std::vector<std::vector<std::uint32_t>> by_first;  // arrow -> rule indices
  bool index_dirty = true;

  Completion(const Presentation& p, const MonomialOrder& o, std::size_t b)
      : pres(p), f(*p.field), order(o), bound(b) {
    by_first.resize(p.quiver.arrows.size());
  }

  WPoly make_poly() const { return WPoly(WordGreater{&order}); }

  void rebuild_index() {
    for (auto& v : by_first) v.clear();
    for (std::uint32_t i = 0; i < rules.size(); ++i)
      by_first[static_cast<unsigned char>(rules[i].lhs[0])].push_back(i);
    index_dirty = false;
  }

  // Smallest-index rule matching at `pos`, preferring short or long lhs.
  int match_at(const Word& w, std::size_t pos, bool prefer_short) {
    if (index_dirty) rebuild_index();
    int best = -1;
    for (std::uint32_t i : by_first[static_cast<unsigned char>(w[pos])]) {
      const Word& lhs = rules[i].lhs;
      if (lhs.size() > w.size() - pos) continue;
      if (std::memcmp(lhs.data(), w.data() + pos, lhs.size()) != 0) continue;
      if (best < 0) {
        best = static_cast<int>(i);
      } else {
        std::size_t bl = rules[best].lhs.size(), nl = lhs.size();
        if (prefer_short ? nl < bl : nl > bl) best = static_cast<int>(i);
      }
    }
    return best;
  }

  // (rule, pos) of the occurrence chosen by the strategy, or rule = -1.
  std::pair<int, std::size_t> find_occurrence(const Word& w, ReduceStrategy s) {
    if (s == ReduceStrategy::leftmost_innermost) {
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        int r = match_at(w, pos, /*prefer_short=*/true);
        if (r >= 0) return {r, pos};
      }
    } else {
      for (std::size_t pos = w.size(); pos-- > 0;) {
        int r = match_at(w, pos, /*prefer_short=*/false);
        if (r >= 0) return {r, pos};
      }
    }
    return {-1, 0};
  }

  void add_term(WPoly& p, const Word& w, std::uint64_t c) const {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(w, c);
    if (!inserted) {
      it->second = f.add(it->second, c);
      if (it->second == 0) p.erase(it);
    }
  }

  WPoly reduce(WPoly p, ReduceStrategy s = ReduceStrategy::leftmost_innermost) {
    for (;;) {
      bool changed = false;
      for (auto it = p.begin(); it != p.end(); ++it) {
        auto [rule, pos] = find_occurrence(it->first, s);
        if (rule < 0) continue;
        Word w = it->first;
        std::uint64_t c = it->second;
        p.erase(it);
        const RewriteRule& r = rules[static_cast<std::size_t>(rule)];
        for (const auto& [rw, rc] : r.rhs) {
          Word nw = w.substr(0, pos) + rw + w.substr(pos + r.lhs.size());
          add_term(p, nw, f.mul(c, rc));
        }
        changed = true;
        break;
      }
      if (!changed) return p;
    }
  }

  WPoly rule_to_poly(const RewriteRule& r) const {
    WPoly p = make_poly();
    p.emplace(r.lhs, 1);
    for (const auto& [rw, rc] : r.rhs) add_term(p, rw, f.neg(rc));
    return p;
  }

  bool has_suffix_match(const Word& w) const {
    for (const RewriteRule& r : rules) {
      if (r.lhs.size() <= w.size() &&
          std::memcmp(r.lhs.data(), w.data() + (w.size() - r.lhs.size()),
                      r.lhs.size()) == 0)
        return true;
    }
    return false;
  }

  std::size_t count_irreducible_capped() const {
    std::size_t count = pres.quiver.vertices.size();
    std::vector<Word> frontier;
    for (std::uint32_t a = 0; a < pres.quiver.arrows.size(); ++a)
      frontier.push_back(Word(1, static_cast<char>(a)));
    const std::size_t cap = 100000;
    while (!frontier.empty() && count < cap) {
      count += frontier.size();
      std::vector<Word> next;
      for (const Word& w : frontier) {
        if (w.size() >= bound) return count;
        std::uint32_t t =
            pres.quiver.arrows[static_cast<unsigned char>(w.back())].target;
        for (std::uint32_t a = 0; a < pres.quiver.arrows.size(); ++a) {
          if (pres.quiver.arrows[a].source != t) continue;
          Word nw = w + static_cast<char>(a);
          if (!has_suffix_match(nw)) next.push_back(nw);
        }
      }
      frontier = std::move(next);
    }
    return count;
  }

  [[noreturn]] void bound_exceeded(const std::string& what) const {
    std::size_t n = count_irreducible_capped();
    fail(errc::bound_exceeded,
         what + " at bound " + std::to_string(bound) + "; " + std::to_string(n) +
             " irreducible paths seen so far (raise the bound)");
  }

  // S-polynomials of all proper overlaps between rules i and j.
  void enqueue_overlaps(std::deque<WPoly>& pending, std::uint32_t i,
                        std::uint32_t j) {
    const Word& u = rules[i].lhs;
    const Word& v = rules[j].lhs;
    std::size_t max_o = std::min(u.size(), v.size()) - 1;
    for (std::size_t o = 1; o <= max_o; ++o) {
      if (std::memcmp(u.data() + (u.size() - o), v.data(), o) != 0) continue;
      // w = u . v[o:] reduces via rule i at 0 and via rule j at |u|-o
      Word tail = v.substr(o);
      Word head = u.substr(0, u.size() - o);
      WPoly s = make_poly();
      for (const auto& [rw, rc] : rules[i].rhs) add_term(s, rw + tail, rc);
      for (const auto& [rw, rc] : rules[j].rhs) add_term(s, head + rw, f.neg(rc));
      if (!s.empty()) pending.push_back(std::move(s));
    }
  }

  // Inserts the reduced nonzero polynomial as a monic rule and restores the
  // interreduced state; displaced rules go back onto `pending`.
  void add_rule(WPoly poly, std::deque<WPoly>& pending) {
    auto lead = poly.begin();
    const Word lw = lead->first;
    if (lw.size() < 2)
      fail(errc::inconsistent_presentation,
           "a path of length < 2 reduced to a combination of smaller terms");
    if (lw.size() > bound) bound_exceeded("rewrite rule grew past the length guard");

    std::uint64_t inv = f.inv(lead->second);
    RewriteRule rule;
    rule.lhs = lw;
    for (auto it = std::next(poly.begin()); it != poly.end(); ++it)
      rule.rhs.emplace_back(it->first, f.neg(f.mul(it->second, inv)));

    std::vector<RewriteRule> kept;
    kept.reserve(rules.size() + 1);
    for (RewriteRule& r : rules) {
      if (r.lhs.find(lw) != Word::npos) {
        pending.push_back(rule_to_poly(r));
      } else {
        kept.push_back(std::move(r));
      }
    }
    kept.push_back(std::move(rule));
    rules = std::move(kept);
    index_dirty = true;

    // renormalize right-hand sides against the updated rule set
    for (std::size_t i = 0; i < rules.size(); ++i) {
      WPoly rhs = make_poly();
      for (const auto& [rw, rc] : rules[i].rhs) add_term(rhs, rw, rc);
      WPoly red = reduce(std::move(rhs));
      rules[i].rhs.assign(red.begin(), red.end());
    }

    std::uint32_t ni = static_cast<std::uint32_t>(rules.size() - 1);
    for (std::uint32_t i = 0; i < rules.size(); ++i) {
      enqueue_overlaps(pending, ni, i);
      if (i != ni) enqueue_overlaps(pending, i, ni);
    }
  }

  void run() {
    std::deque<WPoly> pending;
    for (const RelationPoly& rel : pres.relations) {
      WPoly p = make_poly();
      for (const RelTerm& t : rel.terms) {
        Word w;
        for (std::uint32_t a : t.path.arrows) w += static_cast<char>(a);
        add_term(p, w, t.coeff);
      }
      if (!p.empty()) pending.push_back(std::move(p));
    }

    std::size_t steps = 0;
    for (;;) {
      while (!pending.empty()) {
        if (++steps > 200000) bound_exceeded("completion step limit hit");
        WPoly p = reduce(std::move(pending.front()));
        pending.pop_front();
        if (p.empty()) continue;
        add_rule(std::move(p), pending);
      }
      // Local-confluence sweep: every overlap of the final rules must
      // vanish; the incremental bookkeeping above makes this a formality,
      // but it is what the diamond lemma actually needs.
      bool clean = true;
      for (std::uint32_t i = 0; i < rules.size() && clean; ++i) {
        for (std::uint32_t j = 0; j < rules.size() && clean; ++j) {
          std::deque<WPoly> check;
          enqueue_overlaps(check, i, j);
          for (WPoly& s : check) {
            if (!reduce(std::move(s)).empty()) {
              clean = false;
              enqueue_overlaps(pending, i, j);
              break;
            }
          }
        }
      }
      if (clean) break;
    }
  }

  std::vector<Mon> enumerate_basis() const {
    std::vector<Mon> basis;
    for (std::uint32_t v = 0; v < pres.quiver.vertices.size(); ++v)
      basis.push_back(Mon{v, {}});
    std::vector<Word> frontier;
    for (std::uint32_t a = 0; a < pres.quiver.arrows.size(); ++a)
      frontier.push_back(Word(1, static_cast<char>(a)));
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        if (w.size() >= bound)
          bound_exceeded("irreducible paths reached the length guard");
        basis.push_back(
            Mon{pres.quiver.arrows[static_cast<unsigned char>(w[0])].source, w});
        std::uint32_t t =
            pres.quiver.arrows[static_cast<unsigned char>(w.back())].target;
        for (std::uint32_t a = 0; a < pres.quiver.arrows.size(); ++a) {
          if (pres.quiver.arrows[a].source != t) continue;
          Word nw = w + static_cast<char>(a);
          if (!has_suffix_match(nw)) next.push_back(nw);
        }
      }
      frontier = std::move(next);
    }
    std::vector<Mon> sorted = basis;
    std::sort(sorted.begin(), sorted.end(), [&](const Mon& a, const Mon& b) {
      if (a.trivial() != b.trivial()) return a.trivial();
      if (a.trivial()) return a.source < b.source;
      int c = order.compare(a.word, b.word);
      if (c != 0) return c < 0;
      return a.source < b.source;
    });
    return sorted;
  }
};

}  // namespace

PathPoly RewriteSystem::from_expr(const PathExpr& path, std::uint64_t coeff) const {
  PathPoly p;
  if (coeff == 0) return p;
  Mon m;
  m.source = path.source;
  for (std::uint32_t a : path.arrows) m.word += static_cast<char>(a);
  p.emplace(std::move(m), coeff);
  return p;
}

PathPoly RewriteSystem::from_relation(const RelationPoly& rel) const {
  PathPoly p;
  for (const RelTerm& t : rel.terms) {
    Mon m;
    m.source = t.path.source;
    for (std::uint32_t a : t.path.arrows) m.word += static_cast<char>(a);
    auto [it, inserted] = p.emplace(std::move(m), t.coeff);
    if (!inserted) {
      it->second = field().add(it->second, t.coeff);
      if (it->second == 0) p.erase(it);
    }
  }
  return p;
}

PathPoly RewriteSystem::normal_form_word(std::uint32_t source, const Word& w,
                                         ReduceStrategy s) const {
  PathPoly in;
  in.emplace(Mon{source, w}, 1);
  return normal_form(in, s);
}

PathPoly RewriteSystem::normal_form(const PathPoly& x, ReduceStrategy s) const {
  Completion ctx(pres_, order_, SIZE_MAX);
  ctx.rules = rules_;

  PathPoly out;
  const Field& f = *pres_.field;
  auto accumulate = [&](const Mon& m, std::uint64_t c) {
    if (c == 0) return;
    auto [it, inserted] = out.emplace(m, c);
    if (!inserted) {
      it->second = f.add(it->second, c);
      if (it->second == 0) out.erase(it);
    }
  };

  for (const auto& [mon, coeff] : x) {
    if (mon.trivial()) {
      accumulate(mon, coeff);
      continue;
    }
    WPoly p = ctx.make_poly();
    ctx.add_term(p, mon.word, coeff);
    WPoly red = ctx.reduce(std::move(p), s);
    for (const auto& [w, c] : red) accumulate(Mon{word_source(w), w}, c);
  }
  return out;
}

RewriteSystem complete(const Presentation& p, const MonomialOrder& order,
                       std::size_t bound) {
  validate_presentation(p);
  if (p.quiver.arrows.size() > 200)
    fail(errc::size_overflow, "more than 200 arrows is unsupported");
  if (order.ranks().size() != p.quiver.arrows.size())
    fail(errc::dimension_mismatch, "order precedence does not cover the arrows");
  if (bound < 2) fail(errc::bound_exceeded, "completion bound must be >= 2");

  Completion ctx(p, order, bound);
  ctx.run();

  RewriteSystem sys(p, order);
  sys.rules_ = std::move(ctx.rules);
  std::sort(sys.rules_.begin(), sys.rules_.end(),
            [&](const RewriteRule& a, const RewriteRule& b) {
              return order.compare(a.lhs, b.lhs) < 0;
            });
  Completion basis_ctx(sys.pres_, order, bound);
  basis_ctx.rules = sys.rules_;
  sys.basis_ = basis_ctx.enumerate_basis();
  return sys;
}

RewriteSystem complete_auto(const Presentation& p) {
  MonomialOrder order = MonomialOrder::declaration_order(p.quiver.arrows.size());
  std::size_t bound = 32;
  for (;;) {
    try {
      return complete(p, order, bound);
    } catch (const error& e) {
      if (e.code() != errc::bound_exceeded || bound >= 256) throw;
      bound *= 2;
    }
  }
}

}  // namespace kuelsh
