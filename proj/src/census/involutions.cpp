#include <algorithm>
#include <cctype>

#include "immcensus/census.hpp"

namespace immcensus {

namespace {

int half_degree(const Perm& x) {
  if (x.degree() % 2 != 0 || x.degree() == 0) throw InvalidInput("involution: element of odd degree");
  return static_cast<int>(x.degree() / 2);
}

std::string_view involution_letter(Involution which) {
  switch (which) {
    case Involution::Swap: return "swap";
    case Involution::Mirror: return "mirror";
    case Involution::Reverse: return "reverse";
  }
  return "?";
}

std::vector<Involution> parse_involutions(std::string_view text) {
  std::string t;
  for (char ch : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  std::vector<Involution> out;
  auto word = [&](const std::string& w) {
    if (w == "swap" || w == "s") return out.push_back(Involution::Swap);
    if (w == "mirror" || w == "m") return out.push_back(Involution::Mirror);
    if (w == "reverse" || w == "reversal" || w == "r") return out.push_back(Involution::Reverse);
    // a run of letters such as "sm"
    if (!w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c == 's' || c == 'm' || c == 'r'; })) {
      for (char c : w)
        out.push_back(c == 's' ? Involution::Swap : c == 'm' ? Involution::Mirror : Involution::Reverse);
      return;
    }
    throw InvalidInput("unknown involution '" + w + "'");
  };
  std::string cur;
  for (char ch : t) {
    if (ch == ',' || ch == '+' || ch == ' ') {
      if (!cur.empty()) word(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) word(cur);
  if (out.empty()) throw InvalidInput("empty involution list");
  return out;
}

}  // namespace

bool involution_available(Method m, Involution which) {
  switch (m) {
    case Method::X: return false;
    case Method::Y:
    case Method::UDihedral: return which != Involution::Reverse;
    case Method::UCyclic: return true;
    case Method::Z: return which != Involution::Swap;
  }
  return false;
}

Perm apply_involution(Method m, Involution which, const Perm& x) {
  if (!involution_available(m, which))
    throw InvalidInput(std::string(involution_letter(which)) + " is not available for method " +
                       std::string(method_name(m)));
  const int n = half_degree(x);
  const Perm rho = rho0(n);
  switch (m) {
    case Method::Y:
    case Method::UDihedral:
      if (m == Method::Y || which == Involution::Mirror) {
        if (which == Involution::Swap) return compose(inverse(x), rho);
        return compose(x, rho);
      }
      [[fallthrough]];
    case Method::UCyclic: {
      if (which == Involution::Mirror) return compose(x, rho);
      if (which == Involution::Reverse) {
        Perm r = reversal_r(n);
        return compose(r, compose(x, r));
      }
      // swap stays inside U: beta^-1 rho sigma^-1 beta
      Perm b = beta_cycle(n);
      return compose(inverse(b), compose(rho, compose(inverse(x), b)));
    }
    case Method::Z:
      if (which == Involution::Reverse) return inverse(x);
      return compose(rho, compose(x, rho));
    case Method::X: break;
  }
  throw std::logic_error("unreachable involution case");
}

Perm apply_involution(Method m, std::string_view which, const Perm& x) {
  Perm y = x;
  for (auto inv : parse_involutions(which)) y = apply_involution(m, inv, y);
  return y;
}

std::vector<std::uint32_t> involution_map(const ClassSet& cs, Involution which) {
  auto& cache = *cs.involution_cache;
  const auto slot = static_cast<std::size_t>(which);
  {
    std::lock_guard lock(cache.mu);
    if (cache.maps[slot]) return *cache.maps[slot];
  }
  std::vector<std::uint32_t> out(cs.classes.size());
  for (std::size_t i = 0; i < cs.classes.size(); ++i) {
    Perm y = apply_involution(cs.method, which, cs.classes[i].rep);
    auto idx = cs.find(class_key(cs.method, cs.n, y));
    if (!idx) throw std::logic_error("involution image outside the class set (genus not preserved?)");
    out[i] = static_cast<std::uint32_t>(*idx);
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[out[i]] != i) throw std::logic_error("involution is not involutive on classes");
  std::lock_guard lock(cache.mu);
  cache.maps[slot] = std::make_shared<const std::vector<std::uint32_t>>(out);
  return out;
}

}  // namespace immcensus
