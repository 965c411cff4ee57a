#include "immcensus/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace immcensus {

namespace {

void check_bijection(const std::vector<std::uint8_t>& img) {
  std::vector<bool> seen(img.size(), false);
  for (auto v : img) {
    if (v >= img.size() || seen[v]) throw InvalidInput("not a bijection of {1..m}");
    seen[v] = true;
  }
}

void check_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw InvalidInput("degree mismatch");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view body) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw InvalidInput("bad integer '" + token + "'");
    }
    token.clear();
  };
  for (char ch : body) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      token.push_back(ch);
    } else {
      throw InvalidInput(std::string("unexpected character '") + ch + "' in permutation");
    }
  }
  flush();
  return out;
}

}  // namespace

Perm Perm::identity(std::size_t m) {
  if (m > 255) throw InvalidInput("degree above 255 unsupported");
  std::vector<std::uint8_t> img(m);
  for (std::size_t i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>(i);
  return Perm(std::move(img));
}

Perm Perm::from_one_line(std::span<const int> images) {
  if (images.size() > 255) throw InvalidInput("degree above 255 unsupported");
  std::vector<std::uint8_t> img(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > images.size()) throw InvalidInput("image out of range");
    img[i] = static_cast<std::uint8_t>(v - 1);
  }
  check_bijection(img);
  return Perm(std::move(img));
}

Perm Perm::from_one_line(std::initializer_list<int> images) {
  return from_one_line(std::span<const int>(images.begin(), images.size()));
}

Perm Perm::from_zero_based(std::vector<std::uint8_t> images) {
  check_bijection(images);
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  Perm p = identity(degree);
  std::vector<bool> used(degree, false);
  text = trim(text);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw InvalidInput("expected '(' in cycle notation");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw InvalidInput("unterminated cycle");
    auto cyc = parse_int_list(text.substr(pos + 1, close - pos - 1));
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k];
      int b = cyc[(k + 1) % cyc.size()];
      if (a < 1 || static_cast<std::size_t>(a) > degree) throw InvalidInput("cycle entry out of range");
      if (used[a - 1]) throw InvalidInput("label repeated across cycles");
      used[a - 1] = true;
      p.img_[a - 1] = static_cast<std::uint8_t>(b - 1);
    }
    pos = close + 1;
  }
  return p;
}

Perm Perm::parse(std::string_view text, std::optional<std::size_t> degree) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw InvalidInput("unterminated one-line form");
    auto vals = parse_int_list(text.substr(1, text.size() - 2));
    if (degree && *degree != vals.size()) throw InvalidInput("degree mismatch in one-line form");
    return from_one_line(vals);
  }
  if (!degree) throw InvalidInput("cycle notation needs an explicit degree");
  return from_cycles(text, *degree);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Perm::one_line() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

std::string Perm::to_one_line_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

std::string Perm::to_cycle_string() const {
  std::string s;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += ',';
      s += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw InvalidInput("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int CycleType::degree() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string CycleType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::size_t CycleTypeHash::operator()(const CycleType& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int p : t.parts()) h = (h ^ static_cast<std::size_t>(p)) * 1099511628211ull;
  return h;
}

Perm compose(const Perm& p, const Perm& q) {
  check_degree(p, q);
  std::vector<std::uint8_t> img(p.degree());
  auto a = p.raw();
  auto b = q.raw();
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a[b[i]];
  return Perm::from_zero_based(std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<std::uint8_t> img(p.degree());
  auto a = p.raw();
  for (std::size_t i = 0; i < img.size(); ++i) img[a[i]] = static_cast<std::uint8_t>(i);
  return Perm::from_zero_based(std::move(img));
}

Perm conjugate(const Perm& p, const Perm& g) {
  check_degree(p, g);
  // (g p g^-1)(g(i)) = g(p(i))
  std::vector<std::uint8_t> img(p.degree());
  auto a = p.raw();
  auto c = g.raw();
  for (std::size_t i = 0; i < img.size(); ++i) img[c[i]] = c[a[i]];
  return Perm::from_zero_based(std::move(img));
}

CycleAnalysis cycle_analysis(const Perm& p) {
  auto a = p.raw();
  std::vector<bool> seen(a.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  CycleAnalysis out;
  out.cycle_count = static_cast<int>(parts.size());
  out.type = CycleType(std::move(parts));
  return out;
}

int cycle_count(const Perm& p) {
  auto a = p.raw();
  std::vector<bool> seen(a.size(), false);
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = a[j]) seen[j] = true;
  }
  return c;
}

bool has_cycle_type(const Perm& p, const CycleType& t) { return cycle_analysis(p).type == t; }

std::uint64_t perm_rank(const Perm& p) {
  const std::size_t m = p.degree();
  if (m > 20) throw OutOfEnvelope("perm_rank supports degree <= 20");
  auto a = p.raw();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint32_t below = (1u << a[i]) - 1u;
    std::uint64_t smaller_unused = static_cast<std::uint64_t>(__builtin_popcount(below & ~used));
    rank = rank * (m - i) + smaller_unused;
    used |= 1u << a[i];
  }
  return rank;
}

Perm perm_unrank(std::uint64_t i, std::size_t m) {
  if (m > 20) throw OutOfEnvelope("perm_unrank supports degree <= 20");
  std::uint64_t total = 1;
  for (std::size_t k = 2; k <= m; ++k) total *= k;
  if (i >= total) throw std::out_of_range("rank out of range [0, m!)");
  std::vector<int> digits(m);
  for (std::size_t k = 1; k <= m; ++k) {
    digits[m - k] = static_cast<int>(i % k);
    i /= k;
  }
  std::vector<std::uint8_t> pool(m);
  for (std::size_t k = 0; k < m; ++k) pool[k] = static_cast<std::uint8_t>(k);
  std::vector<std::uint8_t> img(m);
  for (std::size_t k = 0; k < m; ++k) {
    img[k] = pool[static_cast<std::size_t>(digits[k])];
    pool.erase(pool.begin() + digits[k]);
  }
  return Perm::from_zero_based(std::move(img));
}

BigCount factorial(int m) {
  BigCount f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

BigCount z_lambda(const CycleType& t) {
  BigCount z = 1;
  const auto& parts = t.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int mult = static_cast<int>(j - i);
    for (int k = 0; k < mult; ++k) z *= parts[i];
    z *= factorial(mult);
    i = j;
  }
  return z;
}

BigCount class_size(const CycleType& t) { return factorial(t.degree()) / z_lambda(t); }

PackedKey pack_key(std::span<const std::uint8_t> zero_based) {
  if (zero_based.size() > 25) throw OutOfEnvelope("packed keys support degree <= 25");
  PackedKey k = 0;
  for (auto v : zero_based) k = (k << 5) | v;
  return k;
}

}  // namespace immcensus
