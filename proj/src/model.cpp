#include "fintop/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fintop {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws_and_comments() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::syntax_error,
         "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
  std::string ident() {
    skip_ws_and_comments();
    if (eof()) error("expected an identifier");
    std::size_t start = pos;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                      peek() == '-'))
      advance();
    if (pos == start) error("expected an identifier");
    return std::string(text.substr(start, pos - start));
  }
  long long integer() {
    skip_ws_and_comments();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) error("expected a number");
    long long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000) error("number too large");
      advance();
    }
    return v;
  }
  bool try_consume(std::string_view tok) {
    skip_ws_and_comments();
    if (text.substr(pos, tok.size()) != tok) return false;
    for (std::size_t i = 0; i < tok.size(); ++i) advance();
    return true;
  }
  void consume(std::string_view tok) {
    if (!try_consume(tok)) error("expected '" + std::string(tok) + "'");
  }
  bool next_is(char c) {
    skip_ws_and_comments();
    return !eof() && peek() == c;
  }
};

}  // namespace

const NamedSpace* Model::find_space(const std::string& name) const {
  for (const auto& s : spaces)
    if (s.name == name) return &s;
  return nullptr;
}

const NamedMap* Model::find_map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m;
  return nullptr;
}

const NamedContext* Model::find_context(const std::string& name) const {
  for (const auto& c : contexts)
    if (c.name == name) return &c;
  return nullptr;
}

Model parse_model(std::string_view text) {
  Model model;
  Cursor cur{text};
  for (;;) {
    cur.skip_ws_and_comments();
    if (cur.eof()) break;
    int decl_line = cur.line;
    std::string kw = cur.ident();
    if (kw == "space") {
      std::string name = cur.ident();
      if (model.find_space(name))
        fail(Errc::syntax_error, "line " + std::to_string(decl_line) + ": duplicate space '" + name + "'");
      cur.consume("{");
      cur.consume("points");
      long long n = cur.integer();
      cur.consume(";");
      cur.consume("opens");
      std::vector<Mask> opens;
      while (cur.next_is('{')) {
        cur.consume("{");
        Mask m = 0;
        while (!cur.next_is('}')) {
          long long p = cur.integer();
          if (p < 0 || p >= 64)
            cur.error("point index out of range");
          m |= Mask(1) << p;
        }
        cur.consume("}");
        opens.push_back(m);
      }
      cur.consume("}");
      try {
        model.spaces.push_back({name, FinSpace::from_opens(int(n), opens)});
      } catch (const Error& e) {
        fail(e.code(), "line " + std::to_string(decl_line) + ", space '" + name + "': " + e.what());
      }
    } else if (kw == "map") {
      std::string name = cur.ident();
      if (model.find_map(name))
        fail(Errc::syntax_error, "line " + std::to_string(decl_line) + ": duplicate map '" + name + "'");
      cur.consume(":");
      std::string dom_name = cur.ident();
      cur.consume("->");
      std::string cod_name = cur.ident();
      const NamedSpace* dom = model.find_space(dom_name);
      const NamedSpace* cod = model.find_space(cod_name);
      if (!dom)
        fail(Errc::unknown_space, "line " + std::to_string(decl_line) + ": space '" + dom_name +
                                      "' is not declared");
      if (!cod)
        fail(Errc::unknown_space, "line " + std::to_string(decl_line) + ": space '" + cod_name +
                                      "' is not declared");
      cur.consume("{");
      std::vector<Pt> tab(std::size_t(dom->space.points()), -1);
      while (!cur.next_is('}')) {
        long long from = cur.integer();
        cur.consume("->");
        long long to = cur.integer();
        if (from < 0 || from >= dom->space.points()) cur.error("map source point out of range");
        if (to < 0 || to >= cod->space.points()) cur.error("map target point out of range");
        tab[std::size_t(from)] = Pt(to);
      }
      cur.consume("}");
      for (std::size_t i = 0; i < tab.size(); ++i)
        if (tab[i] < 0)
          fail(Errc::syntax_error, "line " + std::to_string(decl_line) + ": map '" + name +
                                       "' leaves point " + std::to_string(i) + " unassigned");
      try {
        model.maps.push_back({name, dom_name, cod_name, CMap(dom->space, cod->space, tab)});
      } catch (const Error& e) {
        fail(e.code(), "line " + std::to_string(decl_line) + ", map '" + name + "': " + e.what());
      }
    } else if (kw == "context") {
      std::string name = cur.ident();
      cur.consume("=");
      cur.consume("builtin");
      cur.consume("(");
      std::string which = cur.ident();
      std::string spec;
      Subcategory ctx = Subcategory::top();
      if (which == "hull") {
        cur.consume("(");
        std::string space_name = cur.ident();
        cur.consume(")");
        const NamedSpace* a = model.find_space(space_name);
        if (!a)
          fail(Errc::unknown_space, "line " + std::to_string(decl_line) + ": space '" + space_name +
                                        "' is not declared");
        ctx = Subcategory::hull_of(a->space);
        spec = "builtin(hull(" + space_name + "))";
      } else {
        try {
          ctx = builtin_context(which);
        } catch (const Error& e) {
          fail(e.code(), "line " + std::to_string(decl_line) + ": " + e.what());
        }
        spec = "builtin(" + which + ")";
      }
      cur.consume(")");
      model.contexts.push_back({name, spec, ctx});
    } else {
      fail(Errc::syntax_error, "line " + std::to_string(decl_line) +
                                   ": unknown declaration '" + kw + "'");
    }
  }
  return model;
}

std::string serialize_space(const std::string& name, const FinSpace& x) {
  std::ostringstream out;
  out << "space " << name << " { points " << x.points() << "; opens";
  for (Mask m : x.opens()) {
    out << " {";
    bool first = true;
    for (int i = 0; i < x.points(); ++i)
      if ((m >> i) & 1u) {
        out << (first ? "" : " ") << i;
        first = false;
      }
    out << "}";
  }
  out << " }";
  return out.str();
}

std::string serialize_map(const std::string& name, const std::string& dom, const std::string& cod,
                          const CMap& m) {
  std::ostringstream out;
  out << "map " << name << " : " << dom << " -> " << cod << " {";
  for (int p = 0; p < m.dom().points(); ++p) out << " " << p << "->" << m(p);
  out << " }";
  return out.str();
}

std::string serialize(const Model& m) {
  std::ostringstream out;
  for (const auto& s : m.spaces) out << serialize_space(s.name, s.space) << "\n";
  for (const auto& f : m.maps) out << serialize_map(f.name, f.dom, f.cod, f.map) << "\n";
  for (const auto& c : m.contexts) out << "context " << c.name << " = " << c.spec << "\n";
  return out.str();
}

bool model_equal(const Model& a, const Model& b) {
  if (a.spaces.size() != b.spaces.size() || a.maps.size() != b.maps.size() ||
      a.contexts.size() != b.contexts.size())
    return false;
  for (std::size_t i = 0; i < a.spaces.size(); ++i)
    if (a.spaces[i].name != b.spaces[i].name || !(a.spaces[i].space == b.spaces[i].space))
      return false;
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    const auto &x = a.maps[i], &y = b.maps[i];
    if (x.name != y.name || x.dom != y.dom || x.cod != y.cod || !(x.map == y.map)) return false;
  }
  for (std::size_t i = 0; i < a.contexts.size(); ++i)
    if (a.contexts[i].name != b.contexts[i].name || a.contexts[i].spec != b.contexts[i].spec)
      return false;
  return true;
}

std::string export_dot(const FinSpace& x, const std::string& name) {
  const int n = x.points();
  // collapse neighbourhood-equivalent points
  std::vector<int> cls(std::size_t(n), -1);
  std::vector<std::vector<int>> members;
  for (int p = 0; p < n; ++p) {
    for (std::size_t c = 0; c < members.size(); ++c)
      if (x.leq(p, members[c][0]) && x.leq(members[c][0], p)) {
        cls[std::size_t(p)] = int(c);
        members[c].push_back(p);
        break;
      }
    if (cls[std::size_t(p)] < 0) {
      cls[std::size_t(p)] = int(members.size());
      members.push_back({p});
    }
  }
  const int k = int(members.size());
  auto class_leq = [&](int a, int b) { return x.leq(members[std::size_t(a)][0], members[std::size_t(b)][0]); };
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (int c = 0; c < k; ++c) {
    out << "  \"" << members[std::size_t(c)][0] << "\" [label=\"";
    for (std::size_t i = 0; i < members[std::size_t(c)].size(); ++i)
      out << (i ? "," : "") << members[std::size_t(c)][i];
    out << "\"";
    if (members[std::size_t(c)].size() > 1) out << ", shape=box";  // collapsed cycle
    out << "];\n";
  }
  // Hasse covers of the induced partial order on classes
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b || !class_leq(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < k && covered; ++c)
        if (c != a && c != b && class_leq(a, c) && class_leq(c, b)) covered = false;
      if (covered)
        out << "  \"" << members[std::size_t(a)][0] << "\" -> \"" << members[std::size_t(b)][0]
            << "\";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace fintop
