#include "efx/cardinal.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace efx {

namespace {

BigInt pow_int(BigInt base, unsigned exp) {
  BigInt out = 1;
  while (exp) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1u;
  }
  return out;
}

Rational pow_rat(const Rational& base, unsigned exp) {
  Rational out = 1;
  for (unsigned k = 0; k < exp; ++k) out *= base;
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// LevelValue

LevelValue LevelValue::lambda_power(int exponent) {
  if (exponent < 0 || exponent > kMaxKeyedExponent)
    throw std::invalid_argument("lambda exponent out of range");
  return LevelValue(exponent);
}

std::string LevelValue::to_string() const {
  if (is_zero()) return "0";
  if (exponent_ == 0) return "1";
  return "lambda^" + std::to_string(exponent_);
}

double LevelValue::approx() const {
  return is_zero() ? 0.0 : std::pow(2.0, -exponent_ / 6.0);
}

// ---------------------------------------------------------------------------
// Rationals and ApproxFactor

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = trim(text.substr(0, slash));
    const auto den = trim(text.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    const BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(BigInt(std::string(num)), d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    const BigInt scale = pow_int(10, static_cast<unsigned>(frac.size()));
    return Rational(BigInt(std::string(whole)) * scale + BigInt(std::string(frac)), scale);
  }
  if (!all_digits(text)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  return Rational(BigInt(std::string(text)));
}

std::string rational_to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ApproxFactor ApproxFactor::rational(const BigInt& p, const BigInt& q) {
  if (q <= 0 || p <= 0 || p > q)
    throw std::invalid_argument("alpha must lie in (0, 1]");
  return ApproxFactor(Kind::rational, Rational(p, q));
}

ApproxFactor ApproxFactor::lambda_power(const Rational& t) {
  if (t < 0) throw std::invalid_argument("lambda exponent must be non-negative");
  return ApproxFactor(Kind::lambda_power, t);
}

ApproxFactor ApproxFactor::parse(std::string_view spec) {
  spec = trim(spec);
  constexpr std::string_view prefix = "lambda";
  if (spec.substr(0, prefix.size()) == prefix) {
    auto rest = trim(spec.substr(prefix.size()));
    if (rest.empty()) return lambda_power(1);
    if (rest.front() != '^') throw std::invalid_argument("expected 'lambda^t'");
    rest.remove_prefix(1);
    rest = trim(rest);
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    return lambda_power(parse_rational(rest));
  }
  const Rational r = parse_rational(spec);
  return rational(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

bool ApproxFactor::exceeds_lambda() const {
  if (kind_ == Kind::lambda_power) return value_ < 1;
  // p/q > 2^(-1/6)  <=>  2 p^6 > q^6
  const BigInt p = boost::multiprecision::numerator(value_);
  const BigInt q = boost::multiprecision::denominator(value_);
  return 2 * pow_int(p, 6) > pow_int(q, 6);
}

double ApproxFactor::approx() const {
  const double v = value_.convert_to<double>();
  return kind_ == Kind::rational ? v : std::pow(2.0, -v / 6.0);
}

std::string ApproxFactor::to_string() const {
  if (kind_ == Kind::rational) return rational_to_string(value_);
  const std::string t = rational_to_string(value_);
  return t.find('/') == std::string::npos ? "lambda^" + t : "lambda^(" + t + ")";
}

bool compare_scaled(LevelValue a, const ApproxFactor& alpha, LevelValue b) {
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  // a = λ^p, b = λ^q; a >= α b  <=>  λ^(p-q) >= α.
  const int k = a.exponent() - b.exponent();
  if (!alpha.is_rational()) return Rational(k) <= alpha.value();
  const BigInt n = boost::multiprecision::numerator(alpha.value());
  const BigInt d = boost::multiprecision::denominator(alpha.value());
  // λ^k = 2^(-k/6); raise both sides to the sixth power.
  if (k >= 0) return pow_int(d, 6) >= pow_int(n, 6) * pow_int(2, static_cast<unsigned>(k));
  return pow_int(2, static_cast<unsigned>(-k)) * pow_int(d, 6) >= pow_int(n, 6);
}

// ---------------------------------------------------------------------------
// AlgebraicValue

AlgebraicValue AlgebraicValue::from_level(LevelValue v) {
  AlgebraicValue out;
  if (v.is_zero()) return out;
  const int e = v.exponent();
  out.coeffs_[static_cast<std::size_t>(e % 6)] = Rational(1, BigInt(1) << (e / 6));
  return out;
}

AlgebraicValue AlgebraicValue::from_rational(const Rational& r) {
  AlgebraicValue out;
  out.coeffs_[0] = r;
  return out;
}

AlgebraicValue& AlgebraicValue::operator+=(const AlgebraicValue& o) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

AlgebraicValue& AlgebraicValue::operator-=(const AlgebraicValue& o) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

bool AlgebraicValue::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

int AlgebraicValue::sign() const {
  // x^6 - 1/2 is irreducible over Q, so a nonzero polynomial of degree < 6
  // cannot vanish at λ and bisection terminates.
  if (is_zero()) return 0;
  Rational lo(89, 100);
  Rational hi(BigInt(8909830057LL), BigInt(10000000000LL));
  const Rational half(1, 2);
  for (;;) {
    Rational lower = 0, upper = 0;
    Rational lo_pow = 1, hi_pow = 1;
    for (const auto& c : coeffs_) {
      if (c >= 0) {
        lower += c * lo_pow;
        upper += c * hi_pow;
      } else {
        lower += c * hi_pow;
        upper += c * lo_pow;
      }
      lo_pow *= lo;
      hi_pow *= hi;
    }
    if (lower > 0) return 1;
    if (upper < 0) return -1;
    const Rational mid = (lo + hi) / 2;
    if (pow_rat(mid, 6) < half) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

std::string AlgebraicValue::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += rational_to_string(coeffs_[k]);
    if (k == 1) out += "*lambda";
    if (k > 1) out += "*lambda^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::strong_ordering level_sum_compare(std::span<const LevelValue> xs, LevelValue y) {
  AlgebraicValue diff;
  for (LevelValue x : xs) diff += AlgebraicValue::from_level(x);
  diff -= AlgebraicValue::from_level(y);
  const int s = diff.sign();
  return s <=> 0;
}

// ---------------------------------------------------------------------------
// Subadditive realization

LevelValue subadditive_value(int agent, Bundle s, const OrdinalProfile& p) {
  if (s.is_empty()) return LevelValue::zero();
  return LevelValue::lambda_power(kBuiltinTopRank - p(agent, s));
}

SubadditiveProfile::SubadditiveProfile(const OrdinalProfile& ordinal)
    : ordinal_(ordinal), values_(kAgents) {
  for (int i = 0; i < kAgents; ++i)
    for (int m = 0; m < kBundles; ++m)
      values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] =
          subadditive_value(i, Bundle(static_cast<std::uint8_t>(m)), ordinal_);
}

const SubadditiveProfile& SubadditiveProfile::builtin() {
  static const SubadditiveProfile profile(OrdinalProfile::builtin());
  return profile;
}

// ---------------------------------------------------------------------------
// Coverage realization

const std::vector<CoverageAtom>& builtin_coverage_atoms() {
  static const std::vector<CoverageAtom> atoms = {
      {Bundle{1, 4}, 1},             // B
      {Bundle{2, 5}, 1},             // C
      {Bundle{0, 3, 6}, 3},          // A ∪ {x}
      {Bundle{1, 4, 7}, 3},          // B ∪ {y}
      {Bundle{2, 5, 7}, 3},          // C ∪ {y}
      {Bundle{0, 3, 1, 4}, 8},       // A ∪ B
      {Bundle{0, 3, 2, 5}, 8},       // A ∪ C
      {Bundle{1, 4, 6, 7}, 9},       // B ∪ {x, y}
      {Bundle{2, 5, 6, 7}, 9},       // C ∪ {x, y}
      {Bundle{0, 3, 1, 4, 7}, 2},    // A ∪ B ∪ {y}
      {Bundle{0, 3, 2, 5, 7}, 2},    // A ∪ C ∪ {y}
  };
  return atoms;
}

CoverageValuation::CoverageValuation(int agent, std::vector<CoverageAtom> atoms)
    : agent_(agent), atoms_(std::move(atoms)) {
  for (const auto& atom : atoms_)
    if (atom.weight == 0) throw std::invalid_argument("coverage weights must be positive");
  for (int m = 0; m < kBundles; ++m) table_[static_cast<std::size_t>(m)] = evaluate(Bundle(static_cast<std::uint8_t>(m)));
}

std::uint32_t CoverageValuation::total_weight() const {
  std::uint32_t total = 0;
  for (const auto& atom : atoms_) total += atom.weight;
  return total;
}

std::uint32_t CoverageValuation::evaluate(Bundle s) const {
  std::uint32_t total = 0;
  for (const auto& atom : atoms_)
    if (!(s & atom.covered).is_empty()) total += atom.weight;
  return total;
}

CoverageProfile::CoverageProfile(const OrdinalProfile& ordinal,
                                 const std::vector<CoverageAtom>& base_atoms)
    : ordinal_(ordinal) {
  for (int i = 0; i < kAgents; ++i) {
    const GoodPermutation back = ordinal_.relabeling().power(i).inverse();
    std::vector<CoverageAtom> atoms;
    atoms.reserve(base_atoms.size());
    for (const auto& atom : base_atoms) atoms.push_back({back(atom.covered), atom.weight});
    valuations_.emplace_back(i, std::move(atoms));
  }
}

const CoverageProfile& CoverageProfile::builtin() {
  static const CoverageProfile profile(OrdinalProfile::builtin(), builtin_coverage_atoms());
  return profile;
}

std::uint32_t coverage_value(int agent, Bundle s) { return CoverageProfile::builtin()(agent, s); }

std::array<SupportRow, kTypeSupports> support_value_table() {
  const auto& ranks = OrdinalProfile::builtin();
  const auto& cover = CoverageProfile::builtin();
  std::array<SupportRow, kTypeSupports> rows{};
  for (int bits = 0; bits < kTypeSupports; ++bits)
    rows[static_cast<std::size_t>(bits)].support = TypeSupport(static_cast<std::uint8_t>(bits));
  for (int m = 0; m < kBundles; ++m) {
    const Bundle s(static_cast<std::uint8_t>(m));
    auto& row = rows[support_of(s).bits()];
    const Rank r = ranks(0, s);
    const std::uint32_t u = cover(0, s);
    if (row.bundles == 0) {
      row.rank = r;
      row.value = u;
    } else if (row.rank != r || row.value != u) {
      throw SupportCollapseError("support " + row.support.word() + ": bundle " + s.digits() +
                                 " breaks support collapse");
    }
    ++row.bundles;
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Display decimals

BigInt lambda_power_floor_decimal(const Rational& exponent, int digits) {
  // n / 10^d <= 2^(-a/(6b))  <=>  n^(6b) * 2^a <= 10^(6bd)
  const BigInt a = boost::multiprecision::numerator(exponent);
  const BigInt b = boost::multiprecision::denominator(exponent);
  if (a < 0) throw std::invalid_argument("negative exponent");
  const unsigned root = static_cast<unsigned>(6 * b);
  const BigInt scale = pow_int(10, static_cast<unsigned>(digits));
  const BigInt bound = pow_int(scale, root);
  const BigInt two_a = BigInt(1) << static_cast<unsigned>(a);
  BigInt lo = 0, hi = scale;  // invariant: lo satisfies, hi + 1 does not
  while (lo < hi) {
    const BigInt mid = (lo + hi + 1) / 2;
    if (pow_int(mid, root) * two_a <= bound) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::string lambda_power_decimal(const Rational& exponent, int digits) {
  const BigInt n = lambda_power_floor_decimal(exponent, digits);
  std::string s = n.str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

}  // namespace efx
