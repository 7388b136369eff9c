#include "linkrep/quat.hpp"

namespace linkrep {

Rat angle_mod2(Rat a) {
  long long num = a.numerator(), den = a.denominator();  // den > 0
  long long m = 2 * den;
  long long r = num % m;
  if (r < 0) r += m;
  return Rat(r, den);
}

std::string Q8::to_string() const {
  static const char* names[] = {"1", "i", "j", "k"};
  std::string s = names[(int)axis];
  return sign < 0 ? "-" + s : s;
}

Q8 q8_mul(Q8 a, Q8 b) {
  if (a.axis == Axis::One) return {a.sign * b.sign, b.axis};
  if (b.axis == Axis::One) return {a.sign * b.sign, a.axis};
  if (a.axis == b.axis) return {-a.sign * b.sign, Axis::One};
  // cyclic: i*j=k, j*k=i, k*i=j; reversed order picks up a minus
  auto cyc = [](Axis x, Axis y) {
    return ((int)x % 3) + 1 == (int)y;  // I->J, J->K, K->I
  };
  Axis third;
  if ((a.axis == Axis::I && b.axis == Axis::J) || (a.axis == Axis::J && b.axis == Axis::I))
    third = Axis::K;
  else if ((a.axis == Axis::J && b.axis == Axis::K) || (a.axis == Axis::K && b.axis == Axis::J))
    third = Axis::I;
  else
    third = Axis::J;
  int s = cyc(a.axis, b.axis) ? 1 : -1;
  return {a.sign * b.sign * s, third};
}

Q8 q8_inv(Q8 a) {
  if (a.axis == Axis::One) return a;
  return {-a.sign, a.axis};
}

bool q8_commute(Q8 a, Q8 b) {
  return a.axis == Axis::One || b.axis == Axis::One || a.axis == b.axis;
}

DihedralQuat DihedralQuat::from_q8(Q8 q) {
  Rat base;
  bool refl;
  switch (q.axis) {
    case Axis::One: refl = false; base = Rat(0); break;
    case Axis::I: refl = true; base = Rat(0); break;
    case Axis::J: refl = true; base = Rat(1, 2); break;
    default: refl = false; base = Rat(1, 2); break;  // K
  }
  if (q.sign < 0) base += Rat(1);  // -q = angle shifted by pi
  return {refl, angle_mod2(base)};
}

bool DihedralQuat::is_q8() const {
  Rat a = angle;
  return a == Rat(0) || a == Rat(1, 2) || a == Rat(1) || a == Rat(3, 2);
}

Q8 DihedralQuat::to_q8() const {
  if (!is_q8()) throw std::logic_error("not a Q8 element");
  int sign = (angle == Rat(0) || angle == Rat(1, 2)) ? 1 : -1;
  bool half = angle == Rat(1, 2) || angle == Rat(3, 2);
  if (reflection) return {sign, half ? Axis::J : Axis::I};
  return {sign, half ? Axis::K : Axis::One};
}

std::string DihedralQuat::to_string() const {
  std::string a = std::to_string(angle.numerator());
  if (angle.denominator() != 1) a += "/" + std::to_string(angle.denominator());
  return (reflection ? "R(" : "T(") + a + ")";
}

DihedralQuat dihedral_mul(const DihedralQuat& a, const DihedralQuat& b) {
  if (!a.reflection && !b.reflection)
    return DihedralQuat::Rotation(a.angle + b.angle);
  if (!a.reflection && b.reflection)  // T(g) R(a) = R(a+g)
    return DihedralQuat::Reflection(b.angle + a.angle);
  if (a.reflection && !b.reflection)  // R(a) T(g) = R(a-g)
    return DihedralQuat::Reflection(a.angle - b.angle);
  // R(a) R(b) = T(1 - (b - a))
  return DihedralQuat::Rotation(Rat(1) - (b.angle - a.angle));
}

DihedralQuat dihedral_inv(const DihedralQuat& a) {
  if (!a.reflection) return DihedralQuat::Rotation(-a.angle);
  // R(a)^2 = T(1) = -1, so R(a)^-1 = -R(a) = R(a+1)
  return DihedralQuat::Reflection(a.angle + Rat(1));
}

DihedralQuat dihedral_neg(const DihedralQuat& a) {
  return {a.reflection, angle_mod2(a.angle + Rat(1))};
}

bool dihedral_commute(const DihedralQuat& a, const DihedralQuat& b) {
  DihedralQuat ab = dihedral_mul(a, b), ba = dihedral_mul(b, a);
  return ab == ba;
}

DihedralQuat dihedral_conj(const DihedralQuat& a, const DihedralQuat& b) {
  return dihedral_mul(dihedral_mul(a, b), dihedral_inv(a));
}

}  // namespace linkrep
