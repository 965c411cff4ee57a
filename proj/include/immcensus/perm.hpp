#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "immcensus/errors.hpp"

namespace immcensus {

using BigCount = boost::multiprecision::cpp_int;

// Permutation of {1..m} in one-line form.  Storage is 0-based; every
// public accessor speaks 1-based labels.
class Perm {
 public:
  Perm() = default;

  static Perm identity(std::size_t m);
  static Perm from_one_line(std::span<const int> images);
  static Perm from_one_line(std::initializer_list<int> images);
  // 0-based images; validated.
  static Perm from_zero_based(std::vector<std::uint8_t> images);
  // "(1,3,7,4)(2,5)"; singletons may be omitted, so the degree is explicit.
  static Perm from_cycles(std::string_view text, std::size_t degree);
  // Accepts either "[...]" or cycle notation (degree required for cycles).
  static Perm parse(std::string_view text, std::optional<std::size_t> degree = std::nullopt);

  std::size_t degree() const { return img_.size(); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }
  std::span<const std::uint8_t> raw() const { return img_; }
  bool is_identity() const;

  std::vector<int> one_line() const;
  std::string to_one_line_string() const;
  std::string to_cycle_string() const;

  // Lexicographic on one-line images, which is also perm_rank order.
  auto operator<=>(const Perm&) const = default;

 private:
  explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {}
  std::vector<std::uint8_t> img_;
};

// Integer partition, parts sorted descending.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const;
  std::size_t part_count() const { return parts_.size(); }
  std::string to_string() const;

  auto operator<=>(const CycleType&) const = default;

 private:
  std::vector<int> parts_;
};

struct CycleTypeHash {
  std::size_t operator()(const CycleType& t) const noexcept;
};

struct CycleAnalysis {
  CycleType type;
  int cycle_count = 0;
};

Perm compose(const Perm& p, const Perm& q);  // i -> p(q(i))
Perm inverse(const Perm& p);
Perm conjugate(const Perm& p, const Perm& g);  // g p g^-1
CycleAnalysis cycle_analysis(const Perm& p);
int cycle_count(const Perm& p);
bool has_cycle_type(const Perm& p, const CycleType& t);

// Lexicographic rank in [0, m!); m <= 20 so the rank fits 64 bits.
std::uint64_t perm_rank(const Perm& p);
Perm perm_unrank(std::uint64_t i, std::size_t m);

BigCount factorial(int m);
BigCount z_lambda(const CycleType& t);
BigCount class_size(const CycleType& t);

std::vector<CycleType> partitions_of(int m);

// Packs up to 25 images at 5 bits each; order-preserving for equal degree.
using PackedKey = unsigned __int128;
PackedKey pack_key(std::span<const std::uint8_t> zero_based);

}  // namespace immcensus
