#ifndef MONFACES_BIGINT_HPP
#define MONFACES_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace monfaces {

/// Exact arbitrary-precision integer. Rewriting and lattice arithmetic can
/// grow entries past machine words, so everything integral uses this type.
using Int = boost::multiprecision::cpp_int;

using IntVec = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int vec_sum(const IntVec& a) {
  Int s = 0;
  for (const auto& x : a) s += x;
  return s;
}

/// gcd of all entries, nonnegative; 0 for the zero vector.
inline Int vec_gcd(const IntVec& a) {
  Int g = 0;
  for (const auto& x : a) g = gcd(g, x);
  return g;
}

inline bool is_zero_vec(const IntVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

/// Lexicographic comparison of integer vectors (equal lengths assumed).
inline int lex_cmp(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

/// Divide by the gcd of the entries. The zero vector is left alone; the
/// direction of the vector is preserved.
inline IntVec primitive(IntVec v) {
  Int g = vec_gcd(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Primitive representative with the first nonzero entry positive. Used for
/// vectors that only matter up to spanning a line.
inline IntVec primitive_line(IntVec v) {
  v = primitive(std::move(v));
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace monfaces

#endif
