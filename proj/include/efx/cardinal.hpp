#pragma once

// Exact cardinal realizations of the ordinal profile.
//
// Subadditive: v_i(S) = 0 for S empty, else λ^(7 - r_i(S)) with λ = 2^(-1/6).
// Coverage:    u_i(S) = Σ w_R · [S ∩ R ≠ ∅] over eleven weighted atoms.
//
// No verdict here ever touches floating point. λ-powers are compared through
// integer sixth powers, and sums of λ-powers live in Q(λ) with λ^6 = 1/2.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "efx/core.hpp"
#include "efx/ordinal.hpp"

namespace efx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Zero, or λ^e with integer e >= 0.
class LevelValue {
 public:
  constexpr LevelValue() = default;  // zero
  static constexpr LevelValue zero() { return LevelValue(-1); }
  static LevelValue lambda_power(int exponent);

  constexpr bool is_zero() const { return exponent_ < 0; }
  /// Only meaningful when !is_zero().
  constexpr int exponent() const { return exponent_; }

  /// Zero < λ^e for every e, and λ^a < λ^b iff a > b.
  friend constexpr std::strong_ordering operator<=>(LevelValue a, LevelValue b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
    return b.exponent_ <=> a.exponent_;
  }
  friend constexpr bool operator==(LevelValue a, LevelValue b) = default;

  /// Integer key with the same order as the values: 0 for zero, 64 - e
  /// otherwise. Requires e < 64.
  constexpr std::uint32_t order_key() const {
    return is_zero() ? 0u : static_cast<std::uint32_t>(kMaxKeyedExponent + 1 - exponent_);
  }
  static constexpr int kMaxKeyedExponent = 63;

  /// "0", "1" or "lambda^e".
  std::string to_string() const;
  /// Display only.
  double approx() const;

 private:
  constexpr explicit LevelValue(int exponent) : exponent_(exponent) {}
  int exponent_ = -1;
};

/// The approximation factor α of α-EFX: a rational p/q or a power λ^t.
class ApproxFactor {
 public:
  /// 0 < p/q <= 1; throws std::invalid_argument otherwise.
  static ApproxFactor rational(const BigInt& p, const BigInt& q);
  /// t >= 0; throws std::invalid_argument otherwise.
  static ApproxFactor lambda_power(const Rational& t);
  /// Accepts "p/q", decimals such as "0.95", "1", and "lambda^t" with t in
  /// the same rational forms. Throws std::invalid_argument on bad syntax or
  /// an out-of-range value.
  static ApproxFactor parse(std::string_view spec);

  bool is_rational() const { return kind_ == Kind::rational; }
  /// The rational value when is_rational(), otherwise the exponent t.
  const Rational& value() const { return value_; }

  /// Exact test of α > λ.
  bool exceeds_lambda() const;
  /// Display only.
  double approx() const;
  std::string to_string() const;

  bool operator==(const ApproxFactor& o) const { return kind_ == o.kind_ && value_ == o.value_; }

 private:
  enum class Kind { rational, lambda_power };
  ApproxFactor(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}
  Kind kind_;
  Rational value_;
};

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& r);

/// Exact verdict of a >= α·b.
bool compare_scaled(LevelValue a, const ApproxFactor& alpha, LevelValue b);

/// c0 + c1 λ + ... + c5 λ^5 with rational coefficients, reduced by λ^6 = 1/2.
class AlgebraicValue {
 public:
  AlgebraicValue() = default;
  static AlgebraicValue from_level(LevelValue v);
  static AlgebraicValue from_rational(const Rational& r);

  const std::array<Rational, 6>& coefficients() const { return coeffs_; }

  AlgebraicValue& operator+=(const AlgebraicValue& o);
  AlgebraicValue& operator-=(const AlgebraicValue& o);
  friend AlgebraicValue operator+(AlgebraicValue a, const AlgebraicValue& b) { return a += b; }
  friend AlgebraicValue operator-(AlgebraicValue a, const AlgebraicValue& b) { return a -= b; }
  bool operator==(const AlgebraicValue&) const = default;

  bool is_zero() const;
  /// -1, 0 or +1, decided by interval refinement around λ.
  int sign() const;
  std::string to_string() const;

 private:
  std::array<Rational, 6> coeffs_{};
};

/// Sign of Σ xs − y as an ordering.
std::strong_ordering level_sum_compare(std::span<const LevelValue> xs, LevelValue y);

/// The λ-power valuation realized from an ordinal profile.
class SubadditiveProfile {
 public:
  explicit SubadditiveProfile(const OrdinalProfile& ordinal);
  static const SubadditiveProfile& builtin();

  const OrdinalProfile& ordinal() const { return ordinal_; }
  LevelValue operator()(int agent, Bundle s) const {
    return values_[static_cast<std::size_t>(agent)][s.mask()];
  }

 private:
  OrdinalProfile ordinal_;
  std::vector<std::array<LevelValue, kBundles>> values_;
};

LevelValue subadditive_value(int agent, Bundle s, const OrdinalProfile& p);

struct CoverageAtom {
  Bundle covered;
  std::uint32_t weight = 0;
  bool operator==(const CoverageAtom&) const = default;
};

/// The eleven atoms of u_0.
const std::vector<CoverageAtom>& builtin_coverage_atoms();

/// Weighted coverage function Σ w·[S ∩ R ≠ ∅].
class CoverageValuation {
 public:
  CoverageValuation(int agent, std::vector<CoverageAtom> atoms);

  int agent() const { return agent_; }
  const std::vector<CoverageAtom>& atoms() const { return atoms_; }
  std::uint32_t operator()(Bundle s) const { return table_[s.mask()]; }
  std::uint32_t total_weight() const;
  /// Direct atom sum, bypassing the table.
  std::uint32_t evaluate(Bundle s) const;

 private:
  int agent_;
  std::vector<CoverageAtom> atoms_;
  std::array<std::uint32_t, kBundles> table_{};
};

/// Agent i holds the base atoms mapped through p^(-i), so u_i(S) = u_0(p^i(S)).
class CoverageProfile {
 public:
  CoverageProfile(const OrdinalProfile& ordinal, const std::vector<CoverageAtom>& base_atoms);
  static const CoverageProfile& builtin();

  const OrdinalProfile& ordinal() const { return ordinal_; }
  const CoverageValuation& valuation(int agent) const {
    return valuations_[static_cast<std::size_t>(agent)];
  }
  std::uint32_t operator()(int agent, Bundle s) const {
    return valuations_[static_cast<std::size_t>(agent)](s);
  }

 private:
  OrdinalProfile ordinal_;
  std::vector<CoverageValuation> valuations_;
};

std::uint32_t coverage_value(int agent, Bundle s);

class SupportCollapseError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SupportRow {
  TypeSupport support;
  Rank rank = 0;
  std::uint32_t value = 0;
  int bundles = 0;  // number of bundles with this support
};

/// One row per type support, in support-bit order. Every bundle with the
/// support is evaluated; throws SupportCollapseError if r_0 or u_0 differ
/// within a class.
std::array<SupportRow, kTypeSupports> support_value_table();

/// Largest n with n / 10^digits <= λ^e, i.e. λ^e rounded toward zero.
BigInt lambda_power_floor_decimal(const Rational& exponent, int digits);
/// "0.8908987181" for λ^1 at 10 digits, rounded toward zero.
std::string lambda_power_decimal(const Rational& exponent, int digits = 10);

}  // namespace efx
