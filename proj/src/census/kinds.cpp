#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "immcensus/census.hpp"

namespace immcensus {

std::string Kind::name() const {
  std::string s;
  s += circle_oriented ? 'O' : 'U';
  s += surface_oriented ? 'O' : 'U';
  if (colour == Colour::B) s += 'b';
  if (colour == Colour::C) s += 'c';
  return s;
}

Kind parse_kind(std::string_view text) {
  std::string t;
  for (char ch : text) t += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (t.size() < 2 || t.size() > 3) throw InvalidInput("unknown kind '" + std::string(text) + "'");
  auto orient = [&](char c) {
    if (c == 'O') return true;
    if (c == 'U') return false;
    throw InvalidInput("unknown kind '" + std::string(text) + "'");
  };
  Kind k;
  k.circle_oriented = orient(t[0]);
  k.surface_oriented = orient(t[1]);
  if (t.size() == 3) {
    if (t[2] == 'B')
      k.colour = Colour::B;
    else if (t[2] == 'C')
      k.colour = Colour::C;
    else
      throw InvalidInput("unknown kind '" + std::string(text) + "'");
  }
  return k;
}

std::vector<Kind> all_kinds() {
  std::vector<Kind> out;
  for (Colour c : {Colour::None, Colour::B, Colour::C})
    for (auto [circle, surface] : {std::pair{true, true}, {false, true}, {true, false}, {false, false}})
      out.push_back({circle, surface, c});
  return out;
}

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<bool> filter_mask(const ClassSet& cs, const Filters& f) {
  std::vector<bool> keep(cs.classes.size(), true);
  if (!f.any()) return keep;
  for (std::size_t i = 0; i < cs.classes.size(); ++i) {
    const auto& c = cs.classes[i];
    if (f.kink_free && !filter_kink_free(c)) keep[i] = false;
    if (keep[i] && f.prime && !filter_prime(c).prime()) keep[i] = false;
  }
  return keep;
}

KindCatalog kind_catalog(const Kind& kind, int n, std::optional<int> genus, const Filters& f,
                         const CensusOptions& opt) {
  // base classes and the involutions whose quotient gives the kind
  Method base = Method::UCyclic;
  std::vector<Involution> quotient;
  if (kind.colour == Colour::None && !(genus && *genus == 0)) {
    base = Method::Z;
  } else if (kind.colour != Colour::C) {
    quotient.push_back(Involution::Swap);  // spherical general = bicolourable
  }
  if (!kind.circle_oriented) quotient.push_back(Involution::Reverse);
  if (!kind.surface_oriented) quotient.push_back(Involution::Mirror);

  KindCatalog cat;
  cat.kind = kind;
  cat.n = n;
  cat.base = cached_classes(base, n, genus, opt);
  const ClassSet& cs = *cat.base;
  auto keep = filter_mask(cs, f);
  DisjointSets ds(cs.classes.size());
  for (auto inv : quotient) {
    auto map = involution_map(cs, inv);
    for (std::uint32_t i = 0; i < map.size(); ++i) ds.unite(i, map[i]);
  }
  std::map<std::uint32_t, std::size_t> slot;
  for (std::uint32_t i = 0; i < cs.classes.size(); ++i) {
    if (!keep[i]) continue;
    auto root = ds.find(i);
    auto [it, fresh] = slot.emplace(root, cat.classes.size());
    if (fresh) cat.classes.push_back({cs.classes[i].genus, {}});
    cat.classes[it->second].members.push_back(i);
  }
  std::stable_sort(cat.classes.begin(), cat.classes.end(),
                   [](const KindClass& a, const KindClass& b) { return a.genus < b.genus; });
  return cat;
}

}  // namespace immcensus
