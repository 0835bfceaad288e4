#pragma once

// Independent reference model of the built-in instance, written from the
// type table and the triple rule with std::set and no library code, so the
// tests can cross-check every memoized table and kernel output.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Set = std::set<int>;

inline char type(int g) { return "ABCABCxy"[g]; }

inline int pair_rank(int g, int h) {
  static const std::map<std::string, int> table = {
      {"AA", 1}, {"AB", 2}, {"AC", 2}, {"Ax", 4}, {"Ay", 6}, {"BB", 1}, {"BC", 5},
      {"Bx", 1}, {"By", 3}, {"CC", 1}, {"Cx", 1}, {"Cy", 3}, {"xy", 1}};
  static const std::string order = "ABCxy";
  char a = type(g), b = type(h);
  if (order.find(a) > order.find(b)) std::swap(a, b);
  return table.at(std::string{a, b});
}

inline bool exceptional(const Set& s) {
  if (s.size() != 3) return false;
  int ax = 0, b = 0, c = 0;
  for (int g : s) {
    const char t = type(g);
    ax += t == 'A' || t == 'x';
    b += t == 'B';
    c += t == 'C';
  }
  return ax == 1 && b == 1 && c == 1;
}

// Literal definition, no memoization: triples by rule, larger sets by the
// maximum over every internal triple.
inline int rank0(const Set& s) {
  const std::vector<int> v(s.begin(), s.end());
  if (v.empty()) return 0;
  if (v.size() == 1) return 1;
  if (v.size() == 2) return pair_rank(v[0], v[1]);
  if (v.size() == 3) {
    if (exceptional(s)) return 7;
    return std::max({pair_rank(v[0], v[1]), pair_rank(v[0], v[2]), pair_rank(v[1], v[2])});
  }
  int best = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (std::size_t k = j + 1; k < v.size(); ++k) best = std::max(best, rank0({v[i], v[j], v[k]}));
  return best;
}

inline int sigma(int g) {
  static const int image[8] = {1, 2, 0, 4, 5, 3, 6, 7};
  return image[g];
}

inline Set shift(const Set& s, int times) {
  Set out = s;
  for (int t = 0; t < times; ++t) {
    Set next;
    for (int g : out) next.insert(sigma(g));
    out = next;
  }
  return out;
}

inline int rank(int agent, const Set& s) { return rank0(shift(s, agent)); }

inline Set from_mask(int m) {
  Set s;
  for (int g = 0; g < 8; ++g)
    if (m >> g & 1) s.insert(g);
  return s;
}

inline int coverage0(const Set& s) {
  // (covered goods, weight): B, C, A+x, B+y, C+y, A+B, A+C, B+xy, C+xy, A+B+y, A+C+y
  static const std::vector<std::pair<Set, int>> atoms = {
      {{1, 4}, 1},          {{2, 5}, 1},          {{0, 3, 6}, 3},     {{1, 4, 7}, 3},
      {{2, 5, 7}, 3},       {{0, 3, 1, 4}, 8},    {{0, 3, 2, 5}, 8},  {{1, 4, 6, 7}, 9},
      {{2, 5, 6, 7}, 9},    {{0, 3, 1, 4, 7}, 2}, {{0, 3, 2, 5, 7}, 2}};
  int total = 0;
  for (const auto& [covered, weight] : atoms)
    for (int g : s)
      if (covered.count(g)) {
        total += weight;
        break;
      }
  return total;
}

inline int coverage(int agent, const Set& s) { return coverage0(shift(s, agent)); }

/// Allocation by base-3 digits: good g goes to agent (counter / 3^g) % 3.
inline std::array<Set, 3> allocation(int counter) {
  std::array<Set, 3> x;
  for (int g = 0; g < 8; ++g) {
    x[static_cast<std::size_t>(counter % 3)].insert(g);
    counter /= 3;
  }
  return x;
}

template <class Value>
bool feasible(int i, const std::array<Set, 3>& x, Value value) {
  for (int j = 0; j < 3; ++j)
    for (int g : x[static_cast<std::size_t>(j)]) {
      Set rest = x[static_cast<std::size_t>(j)];
      rest.erase(g);
      if (value(i, rest) > value(i, x[static_cast<std::size_t>(i)])) return false;
    }
  return true;
}

inline int deficit(const std::array<Set, 3>& x) {
  int worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int g : x[static_cast<std::size_t>(j)]) {
        Set rest = x[static_cast<std::size_t>(j)];
        rest.erase(g);
        worst = std::max(worst, rank(i, rest) - rank(i, x[static_cast<std::size_t>(i)]));
      }
  return worst;
}

}  // namespace oracle
