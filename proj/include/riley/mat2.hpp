#pragma once

#include <array>

namespace riley {

/// 2x2 matrix over a commutative ring. Ring needs +, -, * and ==.
template <class Ring>
struct Mat2 {
  std::array<Ring, 4> e;  // row-major: (0,0) (0,1) (1,0) (1,1)

  Ring& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
  const Ring& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

  static Mat2 identity(const Ring& one, const Ring& zero) { return Mat2{{one, zero, zero, one}}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{{a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                 a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)}};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return Mat2{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
};

template <class Ring>
Ring trace(const Mat2<Ring>& m) {
  return m(0, 0) + m(1, 1);
}

template <class Ring>
Ring determinant(const Mat2<Ring>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

}  // namespace riley
