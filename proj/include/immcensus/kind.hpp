#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace immcensus {

// Colour suffix: none (general immersions), b (bicolourable, colours
// identified), c (bicoloured, colourings counted as distinct).
enum class Colour { None, B, C };

// One of the 12 immersion types, e.g. UO or OUc.
struct Kind {
  bool circle_oriented = true;
  bool surface_oriented = true;
  Colour colour = Colour::None;

  std::string name() const;  // "OO", "UOb", ...
  auto operator<=>(const Kind&) const = default;
};

Kind parse_kind(std::string_view text);  // case-insensitive
std::vector<Kind> all_kinds();           // fixed order: OO UO OU UU, then b, then c

}  // namespace immcensus
