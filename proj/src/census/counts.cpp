#include <algorithm>
#include <map>
#include <sstream>

#include "immcensus/census.hpp"

namespace immcensus {

std::optional<BigCount> CountTable::get(const Kind& k, int n, int g) const {
  auto it = rows.find({k, n, g});
  if (it == rows.end()) return std::nullopt;
  return it->second;
}

void CountTable::set(const Kind& k, int n, int g, const BigCount& value) {
  auto [it, fresh] = rows.emplace(std::tuple{k, n, g}, value);
  if (!fresh && it->second != value)
    throw std::logic_error("conflicting counts for " + k.name() + " n=" + std::to_string(n) + " g=" +
                           std::to_string(g) + ": " + it->second.str() + " vs " + value.str());
}

std::string CountTable::to_csv() const {
  // rows in the fixed kind order, then n, then g
  std::vector<std::tuple<int, int, int, std::string, std::string>> lines;
  auto kinds = all_kinds();
  for (const auto& [key, value] : rows) {
    const auto& [k, n, g] = key;
    int order = static_cast<int>(std::find(kinds.begin(), kinds.end(), k) - kinds.begin());
    lines.emplace_back(order, n, g, k.name(), value.str());
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  out << "kind,n,g,count\n";
  for (const auto& [o, n, g, name, value] : lines) out << name << ',' << n << ',' << g << ',' << value << '\n';
  return out.str();
}

namespace {

Kind K(const char* name) { return parse_kind(name); }

// Kinds given by base, base/I, base/J, base/<I,J>.
std::optional<std::array<Kind, 4>> kinds_of(Method m, PairTag p, bool mod_swap) {
  if (mod_swap) {
    if (m == Method::UCyclic && p == PairTag::RM) return std::array{K("OOb"), K("UOb"), K("OUb"), K("UUb")};
    return std::nullopt;
  }
  switch (m) {
    case Method::UCyclic:
      if (p == PairTag::SR) return std::array{K("OOc"), K("OOb"), K("UOc"), K("UOb")};
      if (p == PairTag::SM) return std::array{K("OOc"), K("OOb"), K("OUc"), K("OUb")};
      return std::array{K("OOc"), K("UOc"), K("OUc"), K("UUc")};
    case Method::UDihedral:
    case Method::Y:
      if (p == PairTag::SM) return std::array{K("UOc"), K("UOb"), K("UUc"), K("UUb")};
      return std::nullopt;
    case Method::Z:
      if (p == PairTag::RM) return std::array{K("OO"), K("UO"), K("OU"), K("UU")};
      return std::nullopt;
    case Method::X: return std::nullopt;
  }
  return std::nullopt;
}

int max_genus(Method m, int n) { return m == Method::Z || m == Method::X ? (n + 1) / 2 : n / 2; }

}  // namespace

CountTable derive_counts(const std::vector<SymmetryProfile>& profiles, bool spherical_general) {
  CountTable t;
  for (const auto& p : profiles) {
    auto kinds = kinds_of(p.method, p.pair, p.mod_swap);
    if (!kinds)
      throw InvalidInput("no count system for method " + std::string(method_name(p.method)) + " with pair " +
                         std::string(pair_name(p.pair)));
    auto q = p.quotients();
    for (int i = 0; i < 4; ++i) {
      const Kind& k = (*kinds)[i];
      t.set(k, p.n, p.genus, q[i]);
      if (spherical_general && p.genus == 0 && k.colour == Colour::B)
        t.set(Kind{k.circle_oriented, k.surface_oriented, Colour::None}, p.n, p.genus, q[i]);
    }
  }
  return t;
}

StructureReport check_structure_theorems(const CountTable& table, const std::vector<SymmetryProfile>& profiles) {
  StructureReport rep;
  std::map<std::pair<int, int>, bool> cells;
  for (const auto& [key, v] : table.rows) cells[{std::get<1>(key), std::get<2>(key)}] = true;
  auto where = [](int n, int g) { return " at n=" + std::to_string(n) + " g=" + std::to_string(g); };
  for (const auto& [cell, unused] : cells) {
    auto [n, g] = cell;
    auto val = [&](const char* k) { return table.get(K(k), n, g); };
    auto check = [&](const char* a, const BigCount& factor, const char* b) {
      auto va = val(a), vb = val(b);
      if (!va || !vb) return;
      ++rep.checks;
      if (*va != factor * *vb)
        rep.violations.push_back(std::string(a) + " = " + va->str() + " != " + factor.str() + " * " + b + " = " +
                                 vb->str() + where(n, g));
    };
    check("OOc", 2, "OOb");
    if (n % 2 == 0) {
      check("UOc", 1, "OOb");
      check("OUc", 2, "OUb");
      check("UUc", 1, "OUb");
    } else {
      check("UOc", 2, "UOb");
      check("OUc", 1, "OOb");
      check("UUc", 1, "UOb");
    }
  }
  std::map<std::pair<int, int>, SymmetryProfile> ysm, zrm;
  for (const auto& p : profiles) {
    auto zero = [&](const char* what, std::uint64_t v) {
      ++rep.checks;
      if (v != 0)
        rep.violations.push_back(std::string(what) + "_" + std::string(pair_name(p.pair)) + " = " +
                                 std::to_string(v) + " for " + std::string(method_name(p.method)) +
                                 where(p.n, p.genus));
    };
    const bool odd = p.n % 2 == 1;
    if (p.method == Method::UCyclic && p.pair != PairTag::RM) {
      zero("x", p.x);
      zero("y", p.y);
      if (p.pair == PairTag::SR) zero(odd ? "v" : "z", odd ? p.v : p.z);
      if (p.pair == PairTag::SM) zero(odd ? "z" : "v", odd ? p.z : p.v);
    }
    if ((p.method == Method::UDihedral || p.method == Method::Y) && p.pair == PairTag::SM) {
      if (odd) {
        zero("x", p.x);
        zero("y", p.y);
        zero("z", p.z);
      }
      ysm[{p.n, p.genus}] = p;
    }
    if (p.method == Method::Z && p.pair == PairTag::RM) zrm[{p.n, p.genus}] = p;
  }
  for (const auto& [cell, p] : ysm) {
    if (cell.second % 2 == 1 && p.x + p.y + p.z == 0)
      rep.observations.push_back("x_sm = y_sm = z_sm = 0" + where(cell.first, cell.second));
    auto it = zrm.find(cell);
    if (cell.second == 0 && cell.first % 2 == 0 && it != zrm.end()) {
      auto a = std::tuple{p.x, p.y, p.z, p.v, p.w};
      auto b = std::tuple{it->second.x, it->second.y, it->second.z, it->second.v, it->second.w};
      rep.observations.push_back(std::string(a == b ? "(sm) and (rm) profiles coincide" : "(sm) and (rm) profiles differ") +
                                 where(cell.first, cell.second));
    }
  }
  return rep;
}

std::vector<std::uint64_t> long_curve_table(int n, unsigned jobs) {
  if (n < 1 || n > 9) throw OutOfEnvelope("long curve table supports 1 <= n <= 9");
  UGenerator gen(n);
  jobs = std::max(1u, jobs);
  std::vector<std::vector<std::uint64_t>> parts(jobs, std::vector<std::uint64_t>(static_cast<std::size_t>(n / 2 + 1)));
  run_sharded(gen.count(), jobs, [&](unsigned shard, std::uint64_t b, std::uint64_t e) {
    auto& h = parts[shard];
    gen.for_range(b, e, [&](const std::uint8_t* s) { ++h[static_cast<std::size_t>(y_genus_raw(s, n))]; });
  });
  std::vector<std::uint64_t> out(parts[0].size());
  for (const auto& h : parts)
    for (std::size_t g = 0; g < h.size(); ++g) out[g] += h[g];
  return out;
}

std::vector<SymmetryProfile> census_profiles(int n, std::optional<int> genus, const Filters& f, bool need_general,
                                             const CensusOptions& opt) {
  std::vector<SymmetryProfile> out;
  auto run = [&](Method m, std::initializer_list<PairTag> pairs, bool mod_swap = false) {
    auto cs = cached_classes(m, n, genus, opt);
    std::vector<bool> keep;
    if (f.any()) keep = filter_mask(*cs, f);
    for (auto pair : pairs) {
      auto prof = symmetry_profile(*cs, pair, f.any() ? &keep : nullptr, mod_swap);
      // genera without classes still get a (zero) row
      int lo = genus ? *genus : 0, hi = genus ? *genus : max_genus(m, n);
      for (int g = lo; g <= hi; ++g) {
        auto it = std::find_if(prof.begin(), prof.end(), [g](const SymmetryProfile& p) { return p.genus == g; });
        if (it != prof.end()) {
          out.push_back(*it);
        } else {
          SymmetryProfile z;
          z.method = m;
          z.pair = pair;
          z.n = n;
          z.genus = g;
          z.mod_swap = mod_swap;
          out.push_back(z);
        }
      }
    }
  };
  run(Method::UCyclic, {PairTag::SR, PairTag::SM});
  run(Method::UDihedral, {PairTag::SM});
  // spherical curves are bicolourable, so (rm) on swap orbits gives the general
  // profile without the Z sweep
  if (genus && *genus == 0) run(Method::UCyclic, {PairTag::RM}, true);
  if (need_general && !(genus && *genus == 0)) {
    int limit = envelope_limit(Method::Z, opt.allow_slow, genus.has_value());
    if (n > limit)
      throw OutOfEnvelope("general immersions at n=" + std::to_string(n) + " need the Z sweep, which supports n <= " +
                          std::to_string(limit));
    run(Method::Z, {PairTag::RM});
  }
  return out;
}

}  // namespace immcensus
