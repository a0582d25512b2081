#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "thilb/errors.hpp"

namespace thilb {

// All arithmetic is exact. Exponents grow under completion and Buchberger,
// so every quantity is an arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign_int(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// gcd with nonnegative result
inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// floor division (true mathematical floor, for HNF-style reductions)
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline bool is_zero_vec(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline IntVec add_vec(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec sub_vec(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec neg_vec(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IntVec scale_vec(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int dot_vec(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// positive part: max(v, 0) componentwise
inline IntVec positive_part(const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] > 0 ? v[i] : Int(0);
  return r;
}

inline IntVec negative_part(const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] < 0 ? Int(-v[i]) : Int(0);
  return r;
}

inline bool leq_componentwise(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// conformal order: a is sign-compatible with b and no larger in any slot
inline bool conformally_divides(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && (b[i] < a[i])) return false;
    if (a[i] < 0 && (b[i] > a[i])) return false;
  }
  return true;
}

inline Int sum_vec(const IntVec& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

inline std::string vec_to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  s += ")";
  return s;
}

// 2d cross product a.x*b.y - a.y*b.x
inline Int cross2(const IntVec& a, const IntVec& b) {
  return a[0] * b[1] - a[1] * b[0];
}

// Angular sweep order on nonzero plane vectors: start at the positive
// x-axis and pass through the upper halfplane first. This order is fixed
// globally; every fan and chamber serialization uses it.
inline int sweep_half(const IntVec& v) {
  if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
  return 1;
}

inline bool sweep_less(const IntVec& a, const IntVec& b) {
  int ha = sweep_half(a), hb = sweep_half(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

inline bool same_ray(const IntVec& a, const IntVec& b) {
  return cross2(a, b) == 0 && sign_int(a[0]) == sign_int(b[0]) &&
         sign_int(a[1]) == sign_int(b[1]);
}

}  // namespace thilb
