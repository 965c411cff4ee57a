#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "immcensus/census.hpp"
#include "immcensus/chords.hpp"
#include "immcensus/detail/ucanon.hpp"

namespace immcensus {

namespace {

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

void check_degree(const Perm& x, std::size_t m, const char* what) {
  if (x.degree() != m) throw InvalidInput(std::string(what) + ": wrong degree");
}

std::uint64_t u_key(const Perm& sigma, int n, bool dihedral) {
  detail::Small out{};
  detail::u_least(sigma.raw().data(), n, dihedral, out.data());
  return detail::rank_raw(out.data(), 2 * n);
}

bool y_one_component_raw(const std::uint8_t* s, int n) {
  // phi = rho~ rho with rho~ = s rho s^-1: phi(i) = s((s^-1(i ^ 1)) ^ 1)
  const int m = 2 * n;
  std::uint8_t inv[detail::kMaxDegree];
  for (int i = 0; i < m; ++i) inv[s[i]] = static_cast<std::uint8_t>(i);
  int len = 0;
  int x = 0;
  do {
    x = s[inv[x ^ 1] ^ 1];
    ++len;
  } while (x != 0);
  if (len != n) return false;
  // the second cycle must then hold the remaining n points
  int start = -1;
  std::uint64_t seen = 0;
  x = 0;
  do {
    seen |= 1ull << x;
    x = s[inv[x ^ 1] ^ 1];
  } while (x != 0);
  for (int i = 0; i < m; ++i)
    if (!(seen >> i & 1u)) {
      start = i;
      break;
    }
  len = 0;
  x = start;
  do {
    x = s[inv[x ^ 1] ^ 1];
    ++len;
  } while (x != start);
  return len == n;
}

struct UPair {
  std::vector<ImmersionClass> cyclic, dihedral;
};

void sort_classes(ClassSet& cs) {
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  order.reserve(cs.classes.size());
  for (std::size_t i = 0; i < cs.classes.size(); ++i) order.emplace_back(class_key(cs.method, cs.n, cs.classes[i].rep), i);
  std::sort(order.begin(), order.end());
  std::vector<ImmersionClass> sorted;
  sorted.reserve(order.size());
  cs.keys.clear();
  for (auto& [k, i] : order) {
    if (!cs.keys.empty() && cs.keys.back() == k) throw std::logic_error("duplicate class key");
    cs.keys.push_back(k);
    sorted.push_back(std::move(cs.classes[i]));
  }
  cs.classes = std::move(sorted);
}

// One pass over U gives both the Z_n- and the D_n-canonical classes.
UPair sweep_u(int n, std::optional<int> genus, const CensusOptions& opt, bool want_cyclic, bool want_dihedral) {
  UGenerator gen(n);
  const unsigned jobs = std::max(1u, opt.sweep.jobs);
  std::vector<UPair> parts(jobs);
  run_sharded(gen.count(), jobs, [&](unsigned shard, std::uint64_t b, std::uint64_t e) {
    auto& out = parts[shard];
    gen.for_range(b, e, [&](const std::uint8_t* s) {
      int st_c = 0, st_d = 0;
      bool c = want_cyclic && detail::u_is_least(s, n, false, &st_c);
      bool d = want_dihedral && detail::u_is_least(s, n, true, &st_d);
      if (!c && !d) return;
      int g = y_genus_raw(s, n);
      if (genus && g != *genus) return;
      Perm rep = Perm::from_zero_based(std::vector<std::uint8_t>(s, s + 2 * n));
      if (c)
        out.cyclic.push_back({Method::UCyclic, n, g, rep, static_cast<std::uint64_t>(n / st_c),
                              static_cast<std::uint64_t>(st_c)});
      if (d)
        out.dihedral.push_back({Method::UDihedral, n, g, rep, static_cast<std::uint64_t>(2 * n / st_d),
                                static_cast<std::uint64_t>(st_d)});
    });
  });
  UPair all;
  for (auto& p : parts) {
    for (auto& c : p.cyclic) all.cyclic.push_back(std::move(c));
    for (auto& c : p.dihedral) all.dihedral.push_back(std::move(c));
  }
  return all;
}

std::vector<ImmersionClass> sweep_x(int n, std::optional<int> genus, const CensusOptions& opt) {
  XPrimeGenerator gen(n);
  const std::uint64_t group = (1ull << (2 * n)) * factorial_u64(n);
  const unsigned jobs = std::max(1u, opt.sweep.jobs);
  std::vector<std::vector<ImmersionClass>> parts(jobs);
  run_sharded(gen.count(), jobs, [&](unsigned shard, std::uint64_t b, std::uint64_t e) {
    gen.for_range(b, e, [&](const std::uint8_t* tau) {
      int aut = 0;
      if (!x_is_canonical(tau, n, &aut)) return;
      XCode code{n, Perm::from_zero_based(std::vector<std::uint8_t>(tau, tau + 4 * n))};
      int g = *x_classify(code);
      if (genus && g != *genus) return;
      parts[shard].push_back({Method::X, n, g, std::move(code.tau), group / static_cast<std::uint64_t>(aut),
                              static_cast<std::uint64_t>(aut)});
    });
  });
  std::vector<ImmersionClass> all;
  for (auto& p : parts)
    for (auto& c : p) all.push_back(std::move(c));
  return all;
}

std::vector<ImmersionClass> sweep_z(int n, std::optional<int> genus, const CensusOptions& opt) {
  const std::uint64_t total = chord_count(n);
  const std::uint64_t group = factorial_u64(n);
  const unsigned jobs = std::max(1u, opt.sweep.jobs);
  std::vector<std::vector<ImmersionClass>> parts(jobs);
  run_sharded(total, jobs, [&](unsigned shard, std::uint64_t b, std::uint64_t e) {
    for_each_canonical_chord(n, ChordSymmetry::Rotation, b, e, [&](const std::uint8_t* c, int stab) {
      ChordCode code{n, std::vector<std::uint8_t>(c, c + 2 * n)};
      Perm pi = z_from_chord(code);
      int g = z_genus_raw(pi.raw().data(), n);
      if (genus && g != *genus) return;
      parts[shard].push_back({Method::Z, n, g, std::move(pi), group / static_cast<std::uint64_t>(stab),
                              static_cast<std::uint64_t>(stab)});
    });
  });
  std::vector<ImmersionClass> all;
  for (auto& p : parts)
    for (auto& c : p) all.push_back(std::move(c));
  return all;
}

// Direct sweep of Y' under C_rho (small n).
std::vector<ImmersionClass> sweep_y_direct(int n, std::optional<int> genus, const CensusOptions& opt) {
  const int m = 2 * n;
  GroupSpec g = make_group(GroupTag::CRho, n, false);
  Universe u;
  u.degree = static_cast<std::size_t>(m);
  u.index_count = factorial_u64(m);
  u.expected_size = static_cast<std::uint64_t>(y_prime_size(n));
  u.for_range = [m, n](std::uint64_t b, std::uint64_t e, const std::function<void(const Perm&)>& cb) {
    if (b >= e) return;
    Perm start = perm_unrank(b, static_cast<std::size_t>(m));
    std::vector<std::uint8_t> p(start.raw().begin(), start.raw().end());
    for (std::uint64_t i = b; i < e; ++i) {
      if (y_one_component_raw(p.data(), n)) cb(Perm::from_zero_based(p));
      std::next_permutation(p.begin(), p.end());
    }
  };
  std::vector<ImmersionClass> out;
  for (auto& s : transversal_sweep(u, g, opt.sweep)) {
    int gg = y_genus_raw(s.representative.raw().data(), n);
    if (genus && gg != *genus) continue;
    out.push_back({Method::Y, n, gg, s.representative, s.length, s.stabilizer_order});
  }
  return out;
}

constexpr int kYDirectLimit = 5;

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::X: return "X";
    case Method::Y: return "Y";
    case Method::UDihedral: return "U-dihedral";
    case Method::UCyclic: return "U-cyclic";
    case Method::Z: return "Z";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  std::string t;
  for (char ch : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "x") return Method::X;
  if (t == "y") return Method::Y;
  if (t == "u" || t == "u-dihedral" || t == "udihedral") return Method::UDihedral;
  if (t == "u-cyclic" || t == "ucyclic") return Method::UCyclic;
  if (t == "z") return Method::Z;
  throw InvalidInput("unknown method '" + std::string(text) + "' (expected x, y, u, u-cyclic or z)");
}

int envelope_limit(Method m, bool allow_slow, bool genus_filtered) {
  switch (m) {
    case Method::X: return allow_slow ? 5 : 4;
    case Method::Y:
    case Method::UDihedral:
    case Method::UCyclic: return (allow_slow || genus_filtered) ? 9 : 8;
    case Method::Z: return allow_slow ? 8 : 7;
  }
  return 0;
}

std::uint64_t class_key(Method m, int n, const Perm& x) {
  switch (m) {
    case Method::X: {
      check_degree(x, static_cast<std::size_t>(4 * n), "X class key");
      return perm_rank(x_canonical(XCode{n, x}).tau);
    }
    case Method::Y: {
      check_degree(x, static_cast<std::size_t>(2 * n), "Y class key");
      return u_key(gauge_y_to_u(YCode{n, x}).sigma(), n, true);
    }
    case Method::UDihedral:
    case Method::UCyclic: {
      check_degree(x, static_cast<std::size_t>(2 * n), "U class key");
      // membership in U: sigma rho sigma^-1 rho = alpha0
      if (compose(conjugate(rho0(n), x), rho0(n)) != alpha0(n)) throw InvalidInput("U class key: element not in U");
      return u_key(x, n, m == Method::UDihedral);
    }
    case Method::Z: {
      check_degree(x, static_cast<std::size_t>(2 * n), "Z class key");
      return chord_rank(chord_canonical(chord_from_z(x), ChordSymmetry::Rotation));
    }
  }
  return 0;
}

std::optional<std::size_t> ClassSet::find(std::uint64_t key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys.begin());
}

std::size_t ClassSet::index_of(const Perm& x) const {
  auto idx = find(class_key(method, n, x));
  if (!idx) throw std::logic_error("class of " + x.to_one_line_string() + " missing from the class set");
  return *idx;
}

std::uint64_t ClassSet::universe_size() const {
  std::uint64_t s = 0;
  for (const auto& c : classes) s += c.orbit_length;
  return s;
}

namespace {

ClassSet make_set(Method m, int n, std::optional<int> genus, std::vector<ImmersionClass> classes) {
  ClassSet cs;
  cs.method = m;
  cs.n = n;
  cs.genus = genus;
  cs.classes = std::move(classes);
  sort_classes(cs);
  return cs;
}

void check_envelope(Method m, int n, std::optional<int> genus, const CensusOptions& opt) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  int limit = envelope_limit(m, opt.allow_slow, genus.has_value());
  if (n > limit)
    throw OutOfEnvelope(std::string(method_name(m)) + " enumeration supports n <= " + std::to_string(limit) +
                        (opt.allow_slow ? "" : " (more with --allow-slow)"));
}

}  // namespace

ClassSet enumerate_classes(Method m, int n, std::optional<int> genus, const CensusOptions& opt) {
  check_envelope(m, n, genus, opt);
  switch (m) {
    case Method::X: return make_set(m, n, genus, sweep_x(n, genus, opt));
    case Method::Z: return make_set(m, n, genus, sweep_z(n, genus, opt));
    case Method::UCyclic: return make_set(m, n, genus, sweep_u(n, genus, opt, true, false).cyclic);
    case Method::UDihedral: return make_set(m, n, genus, sweep_u(n, genus, opt, false, true).dihedral);
    case Method::Y: {
      if (n <= kYDirectLimit) return make_set(m, n, genus, sweep_y_direct(n, genus, opt));
      // C_rho orbits on Y' meet U in single D_n orbits with equal stabilizers
      const std::uint64_t group = (1ull << n) * factorial_u64(n);
      auto d = sweep_u(n, genus, opt, false, true).dihedral;
      for (auto& c : d) {
        c.method = Method::Y;
        c.orbit_length = group / c.stabilizer_order;
      }
      return make_set(m, n, genus, std::move(d));
    }
  }
  throw std::logic_error("unknown method");
}

std::shared_ptr<const ClassSet> cached_classes(Method m, int n, std::optional<int> genus, const CensusOptions& opt) {
  using Key = std::tuple<Method, int, int>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const ClassSet>> cache;
  const Key key{m, n, genus ? *genus : -1};
  const Key full{m, n, -1};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    if (genus) {
      if (auto it = cache.find(full); it != cache.end()) {
        std::vector<ImmersionClass> keep;
        for (const auto& c : it->second->classes)
          if (c.genus == *genus) keep.push_back(c);
        auto cs = std::make_shared<const ClassSet>(make_set(m, n, genus, std::move(keep)));
        cache[key] = cs;
        return cs;
      }
    }
  }
  std::shared_ptr<const ClassSet> result;
  if (m == Method::UCyclic || m == Method::UDihedral) {
    check_envelope(m, n, genus, opt);
    auto both = sweep_u(n, genus, opt, true, true);
    auto cyc = std::make_shared<const ClassSet>(make_set(Method::UCyclic, n, genus, std::move(both.cyclic)));
    auto dih = std::make_shared<const ClassSet>(make_set(Method::UDihedral, n, genus, std::move(both.dihedral)));
    std::lock_guard lock(mu);
    cache[{Method::UCyclic, n, std::get<2>(key)}] = cyc;
    cache[{Method::UDihedral, n, std::get<2>(key)}] = dih;
    result = m == Method::UCyclic ? cyc : dih;
  } else {
    result = std::make_shared<const ClassSet>(enumerate_classes(m, n, genus, opt));
    std::lock_guard lock(mu);
    cache[key] = result;
  }
  return result;
}

}  // namespace immcensus
