#pragma once

#include <map>
#include <span>
#include <string>

#include "kuelsh/presentation.hpp"

namespace kuelsh {

/// A path written as raw arrow-id bytes; the empty word is a trivial path.
using Word = std::string;

/// Length-first, then lexicographic by arrow precedence.  Total on parallel
/// paths, multiplicative, well-founded.
class MonomialOrder {
 public:
  /// rank[arrow id] = precedence position; smaller rank = smaller arrow.
  explicit MonomialOrder(std::vector<std::uint32_t> rank) : rank_(std::move(rank)) {}
  /// Default order: precedence is the arrow declaration order.
  static MonomialOrder declaration_order(std::size_t arrows);

  int compare(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint32_t ra = rank_[static_cast<unsigned char>(a[i])];
      std::uint32_t rb = rank_[static_cast<unsigned char>(b[i])];
      if (ra != rb) return ra < rb ? -1 : 1;
    }
    return 0;
  }
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  const std::vector<std::uint32_t>& ranks() const noexcept { return rank_; }

 private:
  std::vector<std::uint32_t> rank_;
};

/// Monomial: a trivial path at `source`, or a nonempty word (whose source is
/// the source of its first arrow; `source` is kept in sync).
struct Mon {
  std::uint32_t source = 0;
  Word word;
  bool trivial() const noexcept { return word.empty(); }
  auto operator<=>(const Mon&) const = default;
};

/// Linear combination of monomials with nonzero coefficients.
using PathPoly = std::map<Mon, std::uint64_t>;

struct RewriteRule {
  Word lhs;  // length >= 2, strictly greater than every rhs word
  std::vector<std::pair<Word, std::uint64_t>> rhs;
};

enum class ReduceStrategy { leftmost_innermost, leftmost_outermost };

/// A confluent, interreduced path rewriting system for a finite-dimensional
/// bound quiver algebra, together with its irreducible-monomial basis.
class RewriteSystem {
 public:
  const Field& field() const noexcept { return *pres_.field; }
  const Presentation& presentation() const noexcept { return pres_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::span<const RewriteRule> rules() const noexcept { return rules_; }

  /// Irreducible monomials: trivial paths first (by vertex), then by order.
  const std::vector<Mon>& irreducible() const noexcept { return basis_; }

  std::uint32_t word_source(const Word& w) const {
    return pres_.quiver.arrows[static_cast<unsigned char>(w.front())].source;
  }
  std::uint32_t word_target(const Word& w) const {
    return pres_.quiver.arrows[static_cast<unsigned char>(w.back())].target;
  }
  std::uint32_t mon_target(const Mon& m) const {
    return m.trivial() ? m.source : word_target(m.word);
  }

  /// Unique irreducible representative; independent of the strategy.
  PathPoly normal_form(const PathPoly& x,
                       ReduceStrategy s = ReduceStrategy::leftmost_innermost) const;
  PathPoly normal_form_word(std::uint32_t source, const Word& w,
                            ReduceStrategy s = ReduceStrategy::leftmost_innermost) const;

  PathPoly from_expr(const PathExpr& path, std::uint64_t coeff = 1) const;
  PathPoly from_relation(const RelationPoly& rel) const;

 private:
  friend RewriteSystem complete(const Presentation&, const MonomialOrder&, std::size_t);
  RewriteSystem(Presentation p, MonomialOrder o)
      : pres_(std::move(p)), order_(std::move(o)) {}

  Presentation pres_;
  MonomialOrder order_;
  std::vector<RewriteRule> rules_;
  std::vector<Mon> basis_;
};

/// Knuth-Bendix/Buchberger completion on the path algebra.  All overlap
/// ambiguities are resolved; the guard `bound` rejects runs whose rules or
/// irreducible paths reach that length (BoundExceeded, message carries the
/// irreducible count seen so far).  Throws InconsistentPresentation if a
/// trivial path ever reduces to a combination of shorter terms.
RewriteSystem complete(const Presentation& p, const MonomialOrder& order,
                       std::size_t bound);

/// complete() with the default order, starting at bound 32 and doubling up
/// to 256 before giving up.
RewriteSystem complete_auto(const Presentation& p);

}  // namespace kuelsh
