#ifndef MRR_VEC_H_
#define MRR_VEC_H_

#include <array>
#include <cmath>

namespace mrr {

using Real = double;

struct Vec3 {
  Real x = 0, y = 0, z = 0;

  constexpr Vec3() = default;
  constexpr Vec3(Real x_, Real y_, Real z_) : x(x_), y(y_), z(z_) {}
  static constexpr Vec3 Splat(Real v) { return {v, v, v}; }

  constexpr Real operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Real& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  Vec3& operator*=(Real s) {
    x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(const Vec3& a, Real s) { return {a.x * s, a.y * s, a.z * s}; }
  friend constexpr Vec3 operator*(Real s, const Vec3& a) { return a * s; }
  friend constexpr Vec3 operator/(const Vec3& a, Real s) { return {a.x / s, a.y / s, a.z / s}; }
  // Component-wise product (colors).
  friend constexpr Vec3 operator*(const Vec3& a, const Vec3& b) { return {a.x * b.x, a.y * b.y, a.z * b.z}; }
  friend constexpr bool operator==(const Vec3& a, const Vec3& b) = default;
};

constexpr Real Dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 Cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Real Length(const Vec3& v) { return std::sqrt(Dot(v, v)); }
inline Vec3 Normalize(const Vec3& v) { return v / Length(v); }
inline bool IsFinite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}
inline Vec3 Min(const Vec3& a, const Vec3& b) {
  return {std::fmin(a.x, b.x), std::fmin(a.y, b.y), std::fmin(a.z, b.z)};
}
inline Vec3 Max(const Vec3& a, const Vec3& b) {
  return {std::fmax(a.x, b.x), std::fmax(a.y, b.y), std::fmax(a.z, b.z)};
}
inline Vec3 Clamp01(const Vec3& v) {
  return Min(Max(v, Vec3::Splat(0)), Vec3::Splat(1));
}
inline Real MaxComponent(const Vec3& v) { return std::fmax(v.x, std::fmax(v.y, v.z)); }

// Row-major 4x4 matrix acting on column vectors.
class Mat4 {
 public:
  constexpr Mat4() = default;
  static Mat4 Identity();
  // Rows are the three basis vectors, translated so that `origin` maps to 0.
  static Mat4 FromBasis(const Vec3& row0, const Vec3& row1, const Vec3& row2,
                        const Vec3& origin);

  Real& at(int r, int c) { return m_[r * 4 + c]; }
  Real at(int r, int c) const { return m_[r * 4 + c]; }

  Vec3 TransformPoint(const Vec3& p) const;
  Real Determinant() const;
  // Throws InvariantError when the matrix is singular.
  Mat4 Inverse() const;

  friend Mat4 operator*(const Mat4& a, const Mat4& b);

 private:
  std::array<Real, 16> m_{};
};

}  // namespace mrr

#endif  // MRR_VEC_H_
