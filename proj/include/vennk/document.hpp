#pragma once

// Text formats: `.family` documents holding a polygon family, and search
// configurations. The grammar is in docs/family-format.md.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vennk/arrangement.hpp"
#include "vennk/search.hpp"

namespace vennk {

struct SymmetryBlock {
  std::size_t generator = 0;  // index the listed polygon takes in the expanded family
  std::size_t order = 0;
  int digits = 12;

  friend bool operator==(const SymmetryBlock&, const SymmetryBlock&) = default;
};

struct FamilyDocument {
  int version = 1;
  std::size_t n = 0;
  std::vector<ConvexPolygon> polygons;  // as written; a single generator when `symmetry` is set
  std::optional<SymmetryBlock> symmetry;

  /// The n polygons the document describes, rotating the generator when a
  /// symmetry block is present.
  PolygonFamily family() const;

  static FamilyDocument parse(std::string_view text);
  std::string serialize() const;

  static FamilyDocument from_family(const PolygonFamily& family);
  static FamilyDocument symmetric(const ConvexPolygon& generator, std::size_t n, int digits);

  friend bool operator==(const FamilyDocument&, const FamilyDocument&) = default;
};

FamilyDocument load_family_file(const std::string& path);

SearchConfig parse_search_config(std::string_view text);
std::string serialize_search_config(const SearchConfig& config);

}  // namespace vennk
