#pragma once

// Oriented chord diagrams on 2n points around a circle.  The coset x C'_rho
// is the set of ordered pairs (x(2a-1), x(2a)); it is stored per point p as
// c[p] = 2 * ((mate - p) mod 2n) + (p is the second end of its chord).
// Left multiplication by beta rotates the points, by sigma_r reflects them,
// and right multiplication by rho flips every chord.  Double cosets of the Z
// method are therefore orbits of chord codes under these moves.

#include <cstdint>
#include <functional>
#include <vector>

#include "immcensus/perm.hpp"

namespace immcensus {

enum class ChordSymmetry {
  Rotation,            // H = <beta>,            K = C'_rho
  RotationReflection,  // H = <beta, sigma_r>,   K = C'_rho
  RotationFlip,        // H = <beta>,            K = <C'_rho, rho>
  All,                 // both extended
};

struct ChordCode {
  int n = 0;
  std::vector<std::uint8_t> c;
  auto operator<=>(const ChordCode&) const = default;
};

std::uint64_t chord_count(int n);  // (2n)!/n!
ChordCode chord_from_x(const Perm& x);
Perm x_from_chord(const ChordCode& code);
ChordCode chord_from_z(const Perm& pi);
Perm z_from_chord(const ChordCode& code);
ChordCode chord_reflect(const ChordCode& code);
ChordCode chord_flip(const ChordCode& code);
// Least code in the orbit; stabilizer (if asked) is the number of group moves fixing it.
ChordCode chord_canonical(const ChordCode& code, ChordSymmetry sym, int* stabilizer = nullptr);
// Position of the code in lexicographic order among all oriented chord codes.
std::uint64_t chord_rank(const ChordCode& code);
ChordCode chord_unrank(int n, std::uint64_t rank);

// Calls fn(code, stabilizer) for every code in [begin, end) of the rank order
// that is least in its orbit.
void for_each_canonical_chord(int n, ChordSymmetry sym, std::uint64_t begin, std::uint64_t end,
                              const std::function<void(const std::uint8_t*, int)>& fn);

}  // namespace immcensus
