#pragma once

// Goods, item types, bundles, allocations and the exhaustive allocation
// enumerator shared by every other part of the workbench.
//
// There are always eight goods. A bundle is an 8-bit mask, so every set
// operation is a single integer instruction and bundles can index 256-entry
// lookup tables directly.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace efx {

inline constexpr int kGoods = 8;
inline constexpr int kAgents = 3;
inline constexpr int kBundles = 1 << kGoods;    // 256
inline constexpr int kAllocations = 6561;       // 3^8

using GoodId = std::uint8_t;

enum class ItemType : std::uint8_t { A = 0, B = 1, C = 2, X = 3, Y = 4 };
inline constexpr int kItemTypes = 5;
inline constexpr std::array<ItemType, kItemTypes> kAllItemTypes = {
    ItemType::A, ItemType::B, ItemType::C, ItemType::X, ItemType::Y};

/// Fixed partition A={0,3}, B={1,4}, C={2,5}, x=6, y=7.
constexpr ItemType type_of(GoodId g) {
  constexpr std::array<ItemType, kGoods> table = {
      ItemType::A, ItemType::B, ItemType::C, ItemType::A,
      ItemType::B, ItemType::C, ItemType::X, ItemType::Y};
  return table[g];
}

/// 'A', 'B', 'C', 'x' or 'y'.
char type_char(ItemType t);

class Bundle {
 public:
  constexpr Bundle() = default;
  constexpr explicit Bundle(std::uint8_t mask) : mask_(mask) {}
  constexpr Bundle(std::initializer_list<int> goods) {
    for (int g : goods) mask_ |= static_cast<std::uint8_t>(1u << g);
  }

  static constexpr Bundle empty() { return Bundle{}; }
  static constexpr Bundle all() { return Bundle(std::uint8_t{0xFF}); }
  static constexpr Bundle single(GoodId g) {
    return Bundle(static_cast<std::uint8_t>(1u << g));
  }

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr bool contains(GoodId g) const { return (mask_ >> g) & 1u; }
  constexpr bool is_subset_of(Bundle other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  constexpr Bundle with(GoodId g) const {
    return Bundle(static_cast<std::uint8_t>(mask_ | (1u << g)));
  }
  constexpr Bundle without(GoodId g) const {
    return Bundle(static_cast<std::uint8_t>(mask_ & ~(1u << g)));
  }

  constexpr Bundle operator|(Bundle o) const {
    return Bundle(static_cast<std::uint8_t>(mask_ | o.mask_));
  }
  constexpr Bundle operator&(Bundle o) const {
    return Bundle(static_cast<std::uint8_t>(mask_ & o.mask_));
  }
  constexpr Bundle operator-(Bundle o) const {
    return Bundle(static_cast<std::uint8_t>(mask_ & ~o.mask_));
  }
  constexpr Bundle complement() const {
    return Bundle(static_cast<std::uint8_t>(~mask_));
  }

  constexpr auto operator<=>(const Bundle&) const = default;

  /// Iterates member goods in ascending index order.
  class iterator {
   public:
    using value_type = GoodId;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint8_t rest) : rest_(rest) {}
    constexpr GoodId operator*() const {
      return static_cast<GoodId>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ = static_cast<std::uint8_t>(rest_ & (rest_ - 1));
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint8_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> goods() const;
  /// Goods as concatenated digits, e.g. "126"; "{}" for the empty bundle.
  std::string digits() const;

 private:
  std::uint8_t mask_ = 0;
};

/// The set of item types represented in a bundle (5-bit mask).
class TypeSupport {
 public:
  constexpr TypeSupport() = default;
  constexpr explicit TypeSupport(std::uint8_t bits) : bits_(bits) {}
  constexpr TypeSupport(std::initializer_list<ItemType> types) {
    for (ItemType t : types) bits_ |= static_cast<std::uint8_t>(1u << static_cast<int>(t));
  }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool contains(ItemType t) const {
    return (bits_ >> static_cast<int>(t)) & 1u;
  }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr TypeSupport operator|(TypeSupport o) const {
    return TypeSupport(static_cast<std::uint8_t>(bits_ | o.bits_));
  }
  constexpr auto operator<=>(const TypeSupport&) const = default;

  /// Type word in A,B,C,x,y order, e.g. "BCxy"; "∅" when empty.
  std::string word() const;

 private:
  std::uint8_t bits_ = 0;
};

inline constexpr int kTypeSupports = 1 << kItemTypes;  // 32

TypeSupport support_of(Bundle s);

/// A bijection on the eight goods.
class GoodPermutation {
 public:
  GoodPermutation();  // identity
  /// Throws std::invalid_argument unless `image` is a bijection on 0..7.
  explicit GoodPermutation(const std::array<GoodId, kGoods>& image);

  /// sigma = (0 1 2)(3 4 5), fixing 6 and 7.
  static GoodPermutation sigma();

  GoodId operator()(GoodId g) const { return image_[g]; }
  Bundle operator()(Bundle s) const { return Bundle(bundle_image_[s.mask()]); }

  const std::array<GoodId, kGoods>& image() const { return image_; }

  /// (this ∘ other)(g) = this(other(g)).
  GoodPermutation compose(const GoodPermutation& other) const;
  GoodPermutation inverse() const;
  GoodPermutation power(int k) const;
  bool is_identity() const;
  /// Smallest k >= 1 with p^k = identity.
  int order() const;

  bool operator==(const GoodPermutation& o) const { return image_ == o.image_; }

 private:
  void build_bundle_table();

  std::array<GoodId, kGoods> image_{};
  std::array<std::uint8_t, kBundles> bundle_image_{};
};

Bundle apply_permutation(const GoodPermutation& p, Bundle s);

struct SizePattern {
  int sizes[kAgents] = {0, 0, 0};
  auto operator<=>(const SizePattern&) const = default;
  /// "2,3,3"
  std::string key() const;
};

/// Ordered triple (X0, X1, X2) of bundles.
class Allocation {
 public:
  constexpr Allocation() = default;
  constexpr Allocation(Bundle x0, Bundle x1, Bundle x2) : bundles_{x0, x1, x2} {}

  constexpr Bundle operator[](int i) const { return bundles_[static_cast<std::size_t>(i)]; }
  constexpr const std::array<Bundle, kAgents>& bundles() const { return bundles_; }

  /// Pairwise disjoint and covering all eight goods.
  bool is_valid() const;
  SizePattern sizes() const;
  /// b0 | b1 << 8 | b2 << 16, the layout the scan kernels consume.
  constexpr std::uint32_t packed() const {
    return std::uint32_t{bundles_[0].mask()} | (std::uint32_t{bundles_[1].mask()} << 8) |
           (std::uint32_t{bundles_[2].mask()} << 16);
  }
  std::vector<std::vector<int>> as_lists() const;
  /// "(4567 | 13 | 02)"
  std::string to_string() const;

  constexpr auto operator<=>(const Allocation&) const = default;

 private:
  std::array<Bundle, kAgents> bundles_{};
};

/// X^p = (p(X1), p(X2), p(X0)); with the default permutation this is X^σ.
Allocation rotate_allocation(const Allocation& x,
                             const GoodPermutation& p = GoodPermutation::sigma());

/// Good g goes to the bundle named by base-3 digit g of the counter.
Allocation allocation_from_counter(int counter);
int counter_of(const Allocation& x);

/// All 6561 complete allocations in counter order.
class AllocationRange {
 public:
  class iterator {
   public:
    using value_type = Allocation;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(int counter) : counter_(counter) {}
    Allocation operator*() const { return allocation_from_counter(counter_); }
    iterator& operator++() {
      ++counter_;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++counter_;
      return copy;
    }
    int counter() const { return counter_; }
    bool operator==(const iterator&) const = default;

   private:
    int counter_ = 0;
  };
  iterator begin() const { return iterator(0); }
  iterator end() const { return iterator(kAllocations); }
  static constexpr std::size_t size() { return kAllocations; }
};

inline AllocationRange enumerate_allocations() { return {}; }

/// Packed allocations for counters 0..6560, computed once.
const std::vector<std::uint32_t>& packed_allocations();

/// n! / (k0! k1! k2!)
std::uint64_t multinomial(const SizePattern& p);

}  // namespace efx
