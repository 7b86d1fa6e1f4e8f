#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace povote {

/// Largest universe the packed set representation supports.
inline constexpr int kMaxAlternatives = 64;

/// A set of alternative indices, packed into a 64-bit mask.
class AltSet {
 public:
  constexpr AltSet() = default;
  constexpr explicit AltSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr AltSet full(int m) {
    return AltSet(m >= kMaxAlternatives ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }
  static constexpr AltSet single(int a) { return AltSet(std::uint64_t{1} << a); }

  constexpr bool contains(int a) const { return (bits_ >> a) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr AltSet with(int a) const { return AltSet(bits_ | (std::uint64_t{1} << a)); }
  constexpr AltSet without(int a) const { return AltSet(bits_ & ~(std::uint64_t{1} << a)); }

  constexpr bool subset_of(AltSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(AltSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr AltSet operator&(AltSet a, AltSet b) { return AltSet(a.bits_ & b.bits_); }
  friend constexpr AltSet operator|(AltSet a, AltSet b) { return AltSet(a.bits_ | b.bits_); }
  /// Set difference.
  friend constexpr AltSet operator-(AltSet a, AltSet b) { return AltSet(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(AltSet a, AltSet b) = default;

  /// Member indices in ascending order.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
      out.push_back(std::countr_zero(rest));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace povote
