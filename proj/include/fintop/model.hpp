#ifndef FINTOP_MODEL_HPP
#define FINTOP_MODEL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fintop/cat.hpp"
#include "fintop/space.hpp"

namespace fintop {

// Parsed workbench input. One declaration per line:
//   space NAME { points N; opens {i j ...} ... }
//   map NAME : DOM -> COD { i->j ... }
//   context NAME = builtin(IDENT)        IDENT: top top0 ind sob zerodim hull(SPACE)
// '#' starts a comment.
struct NamedSpace {
  std::string name;
  FinSpace space;
};

struct NamedMap {
  std::string name;
  std::string dom, cod;  // declared space names
  CMap map;
};

struct NamedContext {
  std::string name;
  std::string spec;  // e.g. "builtin(sob)" or "builtin(hull(S))"
  Subcategory ctx;
};

struct Model {
  std::vector<NamedSpace> spaces;
  std::vector<NamedMap> maps;
  std::vector<NamedContext> contexts;

  const NamedSpace* find_space(const std::string& name) const;
  const NamedMap* find_map(const std::string& name) const;
  const NamedContext* find_context(const std::string& name) const;
};

Model parse_model(std::string_view text);

std::string serialize(const Model& m);
std::string serialize_space(const std::string& name, const FinSpace& x);
std::string serialize_map(const std::string& name, const std::string& dom, const std::string& cod,
                          const CMap& m);

// structural equality; contexts compare by their builtin spec
bool model_equal(const Model& a, const Model& b);

// Hasse diagram of the specialization preorder in DOT form. Points that share
// a neighbourhood filter collapse into one boxed node listing the members.
std::string export_dot(const FinSpace& x, const std::string& name = "space");

}  // namespace fintop

#endif
