#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kuelsh/field.hpp"

namespace kuelsh {

struct Quiver {
  struct Arrow {
    std::string name;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    bool operator==(const Arrow&) const = default;
  };

  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::optional<std::uint32_t> vertex_index(std::string_view name) const;
  std::optional<std::uint32_t> arrow_index(std::string_view name) const;
  bool operator==(const Quiver&) const = default;
};

/// A path: either the trivial path e_v (no arrows) or a sequence of arrow
/// ids composed left to right ("pq" traverses p, then q).
struct PathExpr {
  std::uint32_t source = 0;  // for the trivial path, the vertex itself
  std::vector<std::uint32_t> arrows;

  bool trivial() const noexcept { return arrows.empty(); }
  std::size_t length() const noexcept { return arrows.size(); }
  std::uint32_t target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrows[arrows.back()].target;
  }
  bool operator==(const PathExpr&) const = default;
};

struct RelTerm {
  std::uint64_t coeff = 1;
  PathExpr path;
  bool operator==(const RelTerm&) const = default;
};

/// A relation stored as a polynomial set to zero; all terms parallel and of
/// length >= 2 (admissibility).
struct RelationPoly {
  std::vector<RelTerm> terms;
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  bool operator==(const RelationPoly&) const = default;
};

/// One `form` line: the value of the symmetrizing linear form on a path.
/// A form is the list of such assignments; basis monomials not reached by
/// any assignment are implicitly zero.
struct FormAssignment {
  PathExpr path;
  std::uint64_t value = 0;
  bool operator==(const FormAssignment&) const = default;
};

struct Presentation {
  const Field* field = nullptr;
  Quiver quiver;
  std::vector<RelationPoly> relations;
  std::vector<std::pair<std::string, std::uint64_t>> params;
  std::vector<FormAssignment> form;  // empty = no form attached
  std::string name;                  // optional catalog name, for reports

  const std::uint64_t* param(std::string_view name) const;
  std::string path_string(const PathExpr& p) const;
  bool operator==(const Presentation& o) const {
    return field == o.field && quiver == o.quiver && relations == o.relations &&
           params == o.params && form == o.form;
  }
};

/// Parses the one-file-per-algebra DSL:
///
///   field p k
///   param name = <field expression>
///   vertices v1 v2 ...
///   arrow name: vi -> vj
///   rel <poly>            # +/- separated terms: [coeff *] a1.a2...
///   form <path> = <coeff> # path may be a vertex name (trivial path)
///
/// `#` starts a comment.  Errors carry line and column.
Presentation parse_presentation(std::string_view text);

/// Canonical DSL text; parse(format(p)) == p.
std::string format_presentation(const Presentation& p);

struct ValidationReport {
  std::size_t vertices = 0;
  std::size_t arrows = 0;
  std::size_t relations = 0;
  bool has_form = false;
};

/// Re-checks every structural invariant (idempotent); throws on violation.
ValidationReport validate_presentation(const Presentation& p);

}  // namespace kuelsh
