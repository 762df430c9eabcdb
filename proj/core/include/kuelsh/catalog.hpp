#pragma once

#include <map>
#include <string>
#include <vector>

#include "kuelsh/presentation.hpp"

namespace kuelsh {

/// Built-in bound quiver presentations: the derived normal forms of the
/// nondomestic symmetric algebras of polynomial growth, with symmetrizing
/// forms attached where a standard choice exists.
struct CatalogEntry {
  std::string name;
  const char* body;     // DSL lines after the generated field/param header
  bool needs_lambda;    // scalar parameter lambda in K \ {0, 1}
  std::uint64_t required_char;  // 0 = any characteristic
  const char* summary;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Instantiates a catalog presentation over `field` with the given scalar
/// bindings.  Throws UnknownName, CharacteristicMismatch, MissingParam,
/// ParamForbiddenValue, BadParam.
Presentation catalog_lookup(const std::string& name, const Field& field,
                            const std::map<std::string, std::uint64_t>& params);

}  // namespace kuelsh
