#include <cctype>
#include <string>
#include <vector>

#include "kuelsh/presentation.hpp"

namespace kuelsh {
namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct LineParser {
  std::string_view text;
  std::size_t line_no;
  std::size_t pos = 0;

  [[noreturn]] void err(errc code, const std::string& msg) const {
    fail(code, "line " + std::to_string(line_no) + ", column " +
                   std::to_string(pos + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w &&
        (pos + w.size() >= text.size() || !ident_char(text[pos + w.size()]))) {
      pos += w.size();
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    if (pos == start) err(errc::syntax_error, "expected an identifier");
    return std::string(text.substr(start, pos - start));
  }

  std::uint64_t integer() {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (v > (UINT64_MAX - 9) / 10) err(errc::syntax_error, "integer too large");
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    if (pos == start) err(errc::syntax_error, "expected an integer");
    return v;
  }

  std::string rest() {
    skip_ws();
    std::string out(text.substr(pos));
    pos = text.size();
    return out;
  }

  // Extracts a balanced parenthesized chunk, including the parentheses.
  std::string paren_chunk() {
    skip_ws();
    std::size_t start = pos;
    int depth = 0;
    do {
      if (pos >= text.size()) err(errc::syntax_error, "unbalanced parentheses");
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    } while (depth > 0);
    return std::string(text.substr(start, pos - start));
  }
};

struct PresentationParser {
  Presentation p;
  bool have_field = false;
  bool have_vertices = false;

  const std::uint64_t* lookup_param(std::string_view name) const {
    return p.param(name);
  }

  std::uint64_t eval_expr(LineParser& lp, const std::string& expr) {
    try {
      return parse_field_expr(*p.field, expr, [this](std::string_view n) {
        return lookup_param(n);
      });
    } catch (const error& e) {
      if (e.code() == errc::division_by_zero) throw;
      lp.err(e.code(), e.what());
    }
  }

  void require_field(LineParser& lp) {
    if (!have_field)
      lp.err(errc::syntax_error, "the 'field p k' line must come first");
  }

  PathExpr parse_path(LineParser& lp, const std::string& first_ident) {
    std::vector<std::string> names{first_ident};
    while (lp.eat('.')) names.push_back(lp.ident());

    if (names.size() == 1) {
      if (auto v = p.quiver.vertex_index(names[0])) {
        return PathExpr{*v, {}};
      }
    }
    PathExpr path;
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto a = p.quiver.arrow_index(names[i]);
      if (!a) lp.err(errc::unknown_vertex, "unknown arrow or vertex '" + names[i] + "'");
      if (i == 0) {
        path.source = p.quiver.arrows[*a].source;
      } else if (p.quiver.arrows[path.arrows.back()].target != p.quiver.arrows[*a].source) {
        lp.err(errc::non_composable_path,
               "arrows '" + names[i - 1] + "' and '" + names[i] + "' do not compose");
      }
      path.arrows.push_back(*a);
    }
    return path;
  }

  void parse_rel(LineParser& lp) {
    require_field(lp);
    RelationPoly rel;
    bool have_endpoints = false;
    std::uint64_t sign = 1;  // 1 or -1 as a field element factor
    if (lp.eat('-')) sign = p.field->neg(1);
    else (void)lp.eat('+');

    for (;;) {
      // one term: [coeff *] path
      std::uint64_t coeff = 1;
      char c = lp.peek();
      if (c == '(') {
        std::string chunk = lp.paren_chunk();
        coeff = eval_expr(lp, chunk);
        if (!lp.eat('*'))
          lp.err(errc::syntax_error, "expected '*' after coefficient");
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (!lp.at_end() && std::isdigit(static_cast<unsigned char>(lp.text[lp.pos])))
          digits += lp.text[lp.pos++];
        coeff = eval_expr(lp, digits);
        if (!lp.eat('*'))
          lp.err(errc::syntax_error, "expected '*' after coefficient");
      }

      std::string name = lp.ident();
      // An identifier followed by * or ^ is a coefficient expression
      // (a param or the generator g), not a path component.
      if (lp.peek() == '*' || lp.peek() == '^') {
        std::string expr = name;
        if (lp.peek() == '^') {
          lp.eat('^');
          expr += "^" + std::to_string(lp.integer());
        }
        coeff = p.field->mul(coeff, eval_expr(lp, expr));
        if (!lp.eat('*'))
          lp.err(errc::syntax_error, "expected '*' after coefficient");
        name = lp.ident();
      }
      PathExpr path = parse_path(lp, name);
      if (path.length() < 2)
        lp.err(errc::non_admissible_relation,
               "relation term '" + p.path_string(path) +
                   "' has length < 2; relations must lie in the square of the arrow ideal");

      std::uint64_t full = p.field->mul(sign, coeff);
      if (full != 0) {
        if (!have_endpoints) {
          rel.source = path.source;
          rel.target = path.target(p.quiver);
          have_endpoints = true;
        } else if (path.source != rel.source || path.target(p.quiver) != rel.target) {
          lp.err(errc::non_parallel_relation,
                 "relation mixes terms with different endpoints");
        }
        rel.terms.push_back(RelTerm{full, path});
      }

      if (lp.at_end()) break;
      if (lp.eat('+')) {
        sign = 1;
      } else if (lp.eat('-')) {
        sign = p.field->neg(1);
      } else {
        lp.err(errc::syntax_error, "expected '+', '-' or end of relation");
      }
    }
    if (!rel.terms.empty()) p.relations.push_back(std::move(rel));
  }

  void parse_line(std::string_view raw, std::size_t line_no) {
    // strip comments
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    LineParser lp{line, line_no};
    if (lp.at_end()) return;

    if (lp.eat_word("field")) {
      if (have_field) lp.err(errc::syntax_error, "duplicate 'field' line");
      std::uint64_t fp = lp.integer();
      std::uint64_t fk = lp.integer();
      if (!lp.at_end()) lp.err(errc::syntax_error, "trailing input after 'field p k'");
      p.field = &Field::get(fp, fk);
      have_field = true;
    } else if (lp.eat_word("param")) {
      require_field(lp);
      std::string name = lp.ident();
      if (!lp.eat('=')) lp.err(errc::syntax_error, "expected '=' in param line");
      std::uint64_t v = eval_expr(lp, lp.rest());
      if (p.param(name)) lp.err(errc::bad_param, "duplicate param '" + name + "'");
      p.params.emplace_back(name, v);
    } else if (lp.eat_word("vertices")) {
      require_field(lp);
      if (have_vertices) lp.err(errc::syntax_error, "duplicate 'vertices' line");
      while (!lp.at_end()) p.quiver.vertices.push_back(lp.ident());
      if (p.quiver.vertices.empty())
        lp.err(errc::unknown_vertex, "the 'vertices' line declares no vertices");
      have_vertices = true;
    } else if (lp.eat_word("arrow")) {
      require_field(lp);
      if (!have_vertices) lp.err(errc::syntax_error, "'arrow' before 'vertices'");
      std::string name = lp.ident();
      if (!lp.eat(':')) lp.err(errc::syntax_error, "expected ':' in arrow line");
      std::string src = lp.ident();
      if (!(lp.eat('-') && lp.eat('>')))
        lp.err(errc::syntax_error, "expected '->' in arrow line");
      std::string dst = lp.ident();
      if (!lp.at_end()) lp.err(errc::syntax_error, "trailing input after arrow line");
      auto si = p.quiver.vertex_index(src);
      auto ti = p.quiver.vertex_index(dst);
      if (!si) lp.err(errc::unknown_vertex, "unknown vertex '" + src + "'");
      if (!ti) lp.err(errc::unknown_vertex, "unknown vertex '" + dst + "'");
      if (p.quiver.arrow_index(name))
        lp.err(errc::syntax_error, "duplicate arrow name '" + name + "'");
      p.quiver.arrows.push_back(Quiver::Arrow{name, *si, *ti});
    } else if (lp.eat_word("rel")) {
      require_field(lp);
      if (!have_vertices) lp.err(errc::syntax_error, "'rel' before 'vertices'");
      parse_rel(lp);
    } else if (lp.eat_word("form")) {
      require_field(lp);
      if (!have_vertices) lp.err(errc::syntax_error, "'form' before 'vertices'");
      std::string name = lp.ident();
      PathExpr path = parse_path(lp, name);
      if (!lp.eat('=')) lp.err(errc::syntax_error, "expected '=' in form line");
      std::uint64_t v = eval_expr(lp, lp.rest());
      p.form.push_back(FormAssignment{path, v});
    } else {
      lp.err(errc::syntax_error, "unknown directive");
    }
  }
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  PresentationParser pp;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    pp.parse_line(text.substr(start, end - start), line_no);
    start = end + 1;
    ++line_no;
  }
  if (!pp.have_field)
    fail(errc::syntax_error, "missing 'field p k' line");
  validate_presentation(pp.p);
  return std::move(pp.p);
}

}  // namespace kuelsh
