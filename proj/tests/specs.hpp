#pragma once

#include "dsu2/algebra.hpp"

namespace testspecs {

using namespace dsu2;

inline Scalar R(long p, long q = 1) { return Scalar(Rational(p, q)); }
inline ExpPoly P(std::vector<Scalar> c) { return ExpPoly::polynomial(std::move(c)); }

inline AlgebraSpec make(const std::string& name, Scalar s, ExpPoly G, ExpPoly f, Mode mode = Mode::Exact) {
  AlgebraSpec a;
  a.name = name;
  a.s = s;
  a.G = G;
  a.f = f;
  a.mode = Mode::Exact;
  return mode == Mode::Exact ? a : a.promote(mode);
}

// s = 1, G = z + 1, f = -2z
inline AlgebraSpec su2() { return make("su2", R(1), P({R(1), R(1)}), P({R(0), R(-2)})); }
// s = -1, G = z + 1/2, f = -z/2
inline AlgebraSpec osp() { return make("osp", R(-1), P({R(1, 2), R(1)}), P({R(0), R(-1, 2)})); }
// s = 1, G = z/2 - 1, f = 2z(1 + z/2)
inline AlgebraSpec a21_half() { return make("a21", R(1), P({R(-1), R(1, 2)}), P({R(0), R(2), R(1)})); }
// s = 1, G = z + 2, f = -z^2
inline AlgebraSpec w3() { return make("w3", R(1), P({R(2), R(1)}), P({R(0), R(0), R(-1)})); }

}  // namespace testspecs
