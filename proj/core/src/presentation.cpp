#include "kuelsh/presentation.hpp"

#include <algorithm>

namespace kuelsh {

std::optional<std::uint32_t> Quiver::vertex_index(std::string_view name) const {
  for (std::uint32_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> Quiver::arrow_index(std::string_view name) const {
  for (std::uint32_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

const std::uint64_t* Presentation::param(std::string_view name) const {
  for (const auto& [n, v] : params)
    if (n == name) return &v;
  return nullptr;
}

std::string Presentation::path_string(const PathExpr& p) const {
  if (p.trivial()) return quiver.vertices[p.source];
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '.';
    out += quiver.arrows[p.arrows[i]].name;
  }
  return out;
}

namespace {

void check_path(const Presentation& p, const PathExpr& path) {
  const Quiver& q = p.quiver;
  if (path.source >= q.vertices.size())
    fail(errc::unknown_vertex, "path source vertex out of range");
  if (!path.trivial() && q.arrows[path.arrows.front()].source != path.source)
    fail(errc::non_composable_path, "path source does not match first arrow");
  for (std::size_t i = 0; i < path.arrows.size(); ++i) {
    if (path.arrows[i] >= q.arrows.size())
      fail(errc::unknown_vertex, "path references an undeclared arrow");
    if (i + 1 < path.arrows.size()) {
      const auto& a = q.arrows[path.arrows[i]];
      const auto& b = q.arrows[path.arrows[i + 1]];
      if (a.target != b.source)
        fail(errc::non_composable_path,
             "arrows '" + a.name + "' and '" + b.name + "' do not compose");
    }
  }
}

}  // namespace

ValidationReport validate_presentation(const Presentation& p) {
  if (p.field == nullptr)
    fail(errc::syntax_error, "presentation has no field attached");
  const Quiver& q = p.quiver;
  if (q.vertices.empty())
    fail(errc::unknown_vertex, "quiver declares no vertices");

  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < q.vertices.size(); ++j)
      if (q.vertices[i] == q.vertices[j])
        fail(errc::syntax_error, "duplicate vertex name '" + q.vertices[i] + "'");
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& a = q.arrows[i];
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      fail(errc::unknown_vertex, "arrow '" + a.name + "' references an undeclared vertex");
    for (std::size_t j = i + 1; j < q.arrows.size(); ++j)
      if (q.arrows[j].name == a.name)
        fail(errc::syntax_error, "duplicate arrow name '" + a.name + "'");
    if (q.vertex_index(a.name))
      fail(errc::syntax_error, "name '" + a.name + "' is both a vertex and an arrow");
  }

  for (const RelationPoly& rel : p.relations) {
    if (rel.terms.empty())
      fail(errc::syntax_error, "empty relation polynomial");
    for (const RelTerm& t : rel.terms) {
      check_path(p, t.path);
      if (t.path.length() < 2)
        fail(errc::non_admissible_relation,
             "relation term '" + p.path_string(t.path) +
                 "' has length < 2; relations must lie in the square of the arrow ideal");
      if (t.path.source != rel.source || t.path.target(q) != rel.target)
        fail(errc::non_parallel_relation,
             "relation mixes terms with different endpoints");
      if (t.coeff == 0 || t.coeff >= p.field->size())
        fail(errc::bad_param, "relation coefficient out of field range");
    }
  }

  for (const FormAssignment& fa : p.form) {
    check_path(p, fa.path);
    if (fa.value >= p.field->size())
      fail(errc::bad_param, "form value out of field range");
  }

  for (std::size_t i = 0; i < p.params.size(); ++i) {
    if (p.params[i].second >= p.field->size())
      fail(errc::bad_param, "param value out of field range");
    for (std::size_t j = i + 1; j < p.params.size(); ++j)
      if (p.params[i].first == p.params[j].first)
        fail(errc::bad_param, "duplicate param '" + p.params[i].first + "'");
  }

  return ValidationReport{q.vertices.size(), q.arrows.size(), p.relations.size(),
                          !p.form.empty()};
}

std::string format_presentation(const Presentation& p) {
  std::string out;
  out += "field " + std::to_string(p.field->p()) + " " + std::to_string(p.field->k()) + "\n";
  for (const auto& [name, value] : p.params)
    out += "param " + name + " = " + p.field->format(value) + "\n";
  out += "vertices";
  for (const auto& v : p.quiver.vertices) out += " " + v;
  out += "\n";
  for (const auto& a : p.quiver.arrows)
    out += "arrow " + a.name + ": " + p.quiver.vertices[a.source] + " -> " +
           p.quiver.vertices[a.target] + "\n";
  for (const RelationPoly& rel : p.relations) {
    out += "rel ";
    for (std::size_t i = 0; i < rel.terms.size(); ++i) {
      const RelTerm& t = rel.terms[i];
      if (i) out += " + ";
      if (t.coeff != 1) out += "(" + p.field->format(t.coeff) + ")*";
      out += p.path_string(t.path);
    }
    out += "\n";
  }
  for (const FormAssignment& fa : p.form)
    out += "form " + p.path_string(fa.path) + " = " + p.field->format(fa.value) + "\n";
  return out;
}

}  // namespace kuelsh
