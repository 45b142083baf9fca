#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "coiso/deformation/deformation.hpp"
#include "coiso/presymplectic/presymplectic.hpp"

namespace coiso::cli {

inline constexpr const char* kFormat = "jacobi-structure/1";

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contents of a structure file. Either `catalog` or `J` defines the structure; a file holding
// only a `presymplectic` block has no structure.
struct StructureFile {
  std::string source;  // "components", a catalog name, or "none"
  std::optional<VData> V;
  std::optional<NormalMultiSection> section;
  std::optional<FormalSeries> series;
  std::optional<GaugeFamily> family;
  std::optional<PreSympData> presymplectic;
  int truncation = 4;
};

// JSON document:
//   {"format": "jacobi-structure/1",
//    "base": [names], "fiber": [names],
//    "J": {"X": {"a,b": expr}, "G": {"a": expr}}    or   "catalog": {"name": .., "n": ..},
//    "section": {fiber: expr}, "series": [{fiber: expr}, ..],
//    "family": {"time": name, "series": [..], "lambda": [expr, ..]},
//    "presymplectic": {"leaf": [..], "transverse": [..], "W": [[..]], "G": [[..]],
//                      "reference": [..], "K": 4}}
// Expressions are strings in the polynomial grammar or integers.
StructureFile parse_structure(const std::string& text);
StructureFile load_structure(const std::string& path);

}  // namespace coiso::cli
