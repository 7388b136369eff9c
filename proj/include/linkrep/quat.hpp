#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace linkrep {

using Rat = boost::rational<long long>;

// Reduce a rational angle (units of pi) into [0, 2).
Rat angle_mod2(Rat a);

enum class Axis : uint8_t { One, I, J, K };

// The quaternion group {+-1, +-i, +-j, +-k}.
struct Q8 {
  int sign = 1;  // +1 or -1
  Axis axis = Axis::One;

  bool operator==(const Q8&) const = default;
  bool traceless() const { return axis != Axis::One; }
  std::string to_string() const;
};

Q8 q8_mul(Q8 a, Q8 b);
Q8 q8_inv(Q8 a);
bool q8_commute(Q8 a, Q8 b);

inline Q8 q8_i() { return {1, Axis::I}; }
inline Q8 q8_j() { return {1, Axis::J}; }
inline Q8 q8_k() { return {1, Axis::K}; }
inline Q8 q8_one() { return {1, Axis::One}; }

// Exact unit quaternions of the binary dihedral group around the k-axis:
//   Reflection(a) = cos(a pi) i + sin(a pi) j     (always traceless)
//   Rotation(g)   = cos(g pi)   + sin(g pi) k     (traceless iff g in {1/2, 3/2})
// with the angle stored as a reduced rational in [0, 2), units of pi.
// Q8 embeds: i = R(0), j = R(1/2), k = T(1/2), -1 = T(1), so the same type
// verifies relations for both dihedral-valued and Q8-valued assignments.
struct DihedralQuat {
  bool reflection = false;
  Rat angle = Rat(0);

  static DihedralQuat Reflection(Rat a) { return {true, angle_mod2(a)}; }
  static DihedralQuat Rotation(Rat g) { return {false, angle_mod2(g)}; }
  static DihedralQuat from_q8(Q8 q);

  bool operator==(const DihedralQuat&) const = default;
  bool traceless() const {
    return reflection || angle == Rat(1, 2) || angle == Rat(3, 2);
  }
  bool is_q8() const;
  Q8 to_q8() const;  // throws if not one of the 8 elements
  std::string to_string() const;
};

DihedralQuat dihedral_mul(const DihedralQuat& a, const DihedralQuat& b);
DihedralQuat dihedral_inv(const DihedralQuat& a);
DihedralQuat dihedral_neg(const DihedralQuat& a);
bool dihedral_commute(const DihedralQuat& a, const DihedralQuat& b);
// a b a^-1; for traceless a this is independent of conjugating by a or a^-1.
DihedralQuat dihedral_conj(const DihedralQuat& a, const DihedralQuat& b);

}  // namespace linkrep
