#pragma once

// Ordinal preferences: typed instance templates, memoized rank functions, the
// cyclic profile r_i(S) = r_0(p^i(S)), and the ordinal EFX predicates.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "efx/core.hpp"

namespace efx {

using Rank = std::uint8_t;
inline constexpr Rank kBuiltinTopRank = 7;
inline constexpr int kMaxTopRank = 7;

/// Thrown by pair-rank lookups for a cell with no realizable pair, e.g. (x,x).
class UndefinedPairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Template parse or validation failure; `location` is a JSON pointer or
/// "line L, column C" for syntax errors.
class TemplateError : public std::runtime_error {
 public:
  TemplateError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct TypeDecl {
  std::string name;
  std::vector<GoodId> goods;
  bool special = false;  // single good; no same-type pair
  bool operator==(const TypeDecl&) const = default;
};

/// A typed cyclic instance: every good has a type, pair ranks depend on the
/// two types, listed type-triples get the top rank, larger bundles take the
/// maximum over internal triples, and agent i sees bundles through p^i.
class InstanceTemplate {
 public:
  std::vector<TypeDecl> types;
  /// Symmetric; pair_ranks[a][b] is empty only for a special type's diagonal.
  std::vector<std::vector<std::optional<int>>> pair_ranks;
  /// Type-index triples, each sorted ascending.
  std::vector<std::array<int, 3>> exceptional;
  int top_rank = kBuiltinTopRank;
  GoodPermutation permutation;

  /// The built-in instance: A,B,C,x,y with the cyclic relabeling sigma.
  static InstanceTemplate builtin();

  int type_count() const { return static_cast<int>(types.size()); }
  int type_index_of(GoodId g) const { return good_type_[g]; }
  int find_type(std::string_view name) const;  // -1 when absent

  /// Pair rank between two distinct goods' types. Throws UndefinedPairError
  /// for an undefined cell.
  int pair_rank(int type_a, int type_b) const;
  bool is_exceptional_triple(Bundle s) const;

  /// Checks partition, symmetry, ranges and the permutation; rebuilds the
  /// good -> type map. Throws TemplateError.
  void validate();

  bool operator==(const InstanceTemplate& o) const;

 private:
  std::array<int, kGoods> good_type_{};
};

class RankFunction {
 public:
  RankFunction() = default;
  RankFunction(int agent, const std::array<Rank, kBundles>& table)
      : agent_(agent), table_(table) {}

  int agent() const { return agent_; }
  Rank operator()(Bundle s) const { return table_[s.mask()]; }
  const std::array<Rank, kBundles>& table() const { return table_; }

 private:
  int agent_ = 0;
  std::array<Rank, kBundles> table_{};
};

/// Three rank functions r_i(S) = r_0(p^i(S)) memoized over all 256 bundles.
class OrdinalProfile {
 public:
  explicit OrdinalProfile(InstanceTemplate instance);

  static const OrdinalProfile& builtin();

  const InstanceTemplate& instance() const { return instance_; }
  const GoodPermutation& relabeling() const { return instance_.permutation; }
  const RankFunction& rank(int agent) const { return ranks_[static_cast<std::size_t>(agent)]; }
  Rank operator()(int agent, Bundle s) const { return ranks_[static_cast<std::size_t>(agent)](s); }
  int top_rank() const { return instance_.top_rank; }

  /// Bitmask over the instance's type indices present in `s`.
  std::uint32_t support_key(Bundle s) const;

 private:
  InstanceTemplate instance_;
  std::array<RankFunction, kAgents> ranks_;
};

// Built-in instance shorthands.
int base_pair_rank(ItemType a, ItemType b);
/// One good from A∪{x}, one from B, one from C.
bool is_exceptional(Bundle s);
Rank rank0(Bundle s);
Rank rank_for_agent(int agent, Bundle s);

struct EnvyTriple {
  int i = 0;
  int j = 0;
  GoodId g = 0;
  auto operator<=>(const EnvyTriple&) const = default;
};

/// r_i(X_i) >= r_i(X_j \ {g}) for every j and g in X_j.
bool efx_feasible(int agent, const Allocation& x, const OrdinalProfile& p);
bool is_efx(const Allocation& x, const OrdinalProfile& p);
/// Lexicographically first (i, j, g) with r_i(X_j \ {g}) > r_i(X_i).
std::optional<EnvyTriple> strong_envy_witness(const Allocation& x, const OrdinalProfile& p);

/// max over (i, j, g in X_j) of max(0, r_i(X_j \ {g}) - r_i(X_i)).
int rank_deficit(const Allocation& x, const OrdinalProfile& p);

// Template documents (JSON).
InstanceTemplate parse_template(std::string_view text);
InstanceTemplate load_template_file(const std::string& path);
std::string serialize_template(const InstanceTemplate& t);

struct LoadedTemplate {
  InstanceTemplate instance;
  OrdinalProfile profile;
};
LoadedTemplate load_template(std::string_view text);

}  // namespace efx
