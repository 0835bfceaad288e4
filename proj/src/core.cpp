#include "efx/core.hpp"

#include <stdexcept>

namespace efx {

char type_char(ItemType t) {
  switch (t) {
    case ItemType::A: return 'A';
    case ItemType::B: return 'B';
    case ItemType::C: return 'C';
    case ItemType::X: return 'x';
    case ItemType::Y: return 'y';
  }
  return '?';
}

std::vector<int> Bundle::goods() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (GoodId g : *this) out.push_back(g);
  return out;
}

std::string Bundle::digits() const {
  if (is_empty()) return "{}";
  std::string out;
  for (GoodId g : *this) out.push_back(static_cast<char>('0' + g));
  return out;
}

std::string TypeSupport::word() const {
  if (is_empty()) return "∅";
  std::string out;
  for (ItemType t : kAllItemTypes)
    if (contains(t)) out.push_back(type_char(t));
  return out;
}

TypeSupport support_of(Bundle s) {
  std::uint8_t bits = 0;
  for (GoodId g : s) bits |= static_cast<std::uint8_t>(1u << static_cast<int>(type_of(g)));
  return TypeSupport(bits);
}

GoodPermutation::GoodPermutation() {
  for (int g = 0; g < kGoods; ++g) image_[g] = static_cast<GoodId>(g);
  build_bundle_table();
}

GoodPermutation::GoodPermutation(const std::array<GoodId, kGoods>& image) : image_(image) {
  std::uint8_t seen = 0;
  for (GoodId g : image_) {
    if (g >= kGoods) throw std::invalid_argument("permutation image out of range");
    seen |= static_cast<std::uint8_t>(1u << g);
  }
  if (seen != 0xFF) throw std::invalid_argument("permutation is not a bijection");
  build_bundle_table();
}

GoodPermutation GoodPermutation::sigma() {
  return GoodPermutation({1, 2, 0, 4, 5, 3, 6, 7});
}

void GoodPermutation::build_bundle_table() {
  for (int m = 0; m < kBundles; ++m) {
    std::uint8_t out = 0;
    for (int g = 0; g < kGoods; ++g)
      if ((m >> g) & 1) out |= static_cast<std::uint8_t>(1u << image_[g]);
    bundle_image_[m] = out;
  }
}

GoodPermutation GoodPermutation::compose(const GoodPermutation& other) const {
  std::array<GoodId, kGoods> img{};
  for (int g = 0; g < kGoods; ++g) img[g] = image_[other.image_[g]];
  return GoodPermutation(img);
}

GoodPermutation GoodPermutation::inverse() const {
  std::array<GoodId, kGoods> img{};
  for (int g = 0; g < kGoods; ++g) img[image_[g]] = static_cast<GoodId>(g);
  return GoodPermutation(img);
}

GoodPermutation GoodPermutation::power(int k) const {
  if (k < 0) return inverse().power(-k);
  GoodPermutation out;
  for (int i = 0; i < k; ++i) out = compose(out);
  return out;
}

bool GoodPermutation::is_identity() const {
  for (int g = 0; g < kGoods; ++g)
    if (image_[g] != g) return false;
  return true;
}

int GoodPermutation::order() const {
  GoodPermutation p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = compose(p);
    ++k;
  }
  return k;
}

Bundle apply_permutation(const GoodPermutation& p, Bundle s) { return p(s); }

std::string SizePattern::key() const {
  return std::to_string(sizes[0]) + "," + std::to_string(sizes[1]) + "," +
         std::to_string(sizes[2]);
}

bool Allocation::is_valid() const {
  const auto a = bundles_[0].mask(), b = bundles_[1].mask(), c = bundles_[2].mask();
  return (a & b) == 0 && (a & c) == 0 && (b & c) == 0 && (a | b | c) == 0xFF;
}

SizePattern Allocation::sizes() const {
  return SizePattern{{bundles_[0].size(), bundles_[1].size(), bundles_[2].size()}};
}

std::vector<std::vector<int>> Allocation::as_lists() const {
  return {bundles_[0].goods(), bundles_[1].goods(), bundles_[2].goods()};
}

std::string Allocation::to_string() const {
  return "(" + bundles_[0].digits() + " | " + bundles_[1].digits() + " | " +
         bundles_[2].digits() + ")";
}

Allocation rotate_allocation(const Allocation& x, const GoodPermutation& p) {
  return Allocation(p(x[1]), p(x[2]), p(x[0]));
}

Allocation allocation_from_counter(int counter) {
  if (counter < 0 || counter >= kAllocations)
    throw std::out_of_range("allocation counter out of range");
  std::uint8_t m[kAgents] = {0, 0, 0};
  for (int g = 0; g < kGoods; ++g) {
    m[counter % 3] |= static_cast<std::uint8_t>(1u << g);
    counter /= 3;
  }
  return Allocation(Bundle(m[0]), Bundle(m[1]), Bundle(m[2]));
}

int counter_of(const Allocation& x) {
  int counter = 0;
  for (int g = kGoods - 1; g >= 0; --g) {
    int digit = 0;
    for (int i = 0; i < kAgents; ++i)
      if (x[i].contains(static_cast<GoodId>(g))) digit = i;
    counter = counter * 3 + digit;
  }
  return counter;
}

const std::vector<std::uint32_t>& packed_allocations() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<std::uint32_t> out;
    out.reserve(kAllocations);
    for (int c = 0; c < kAllocations; ++c) out.push_back(allocation_from_counter(c).packed());
    return out;
  }();
  return table;
}

std::uint64_t multinomial(const SizePattern& p) {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  const int n = p.sizes[0] + p.sizes[1] + p.sizes[2];
  return fact(n) / (fact(p.sizes[0]) * fact(p.sizes[1]) * fact(p.sizes[2]));
}

}  // namespace efx
