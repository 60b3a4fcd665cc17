#include "mrr/vec.h"

#include <utility>

#include "mrr/error.h"

namespace mrr {

Mat4 Mat4::Identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
  return m;
}

Mat4 Mat4::FromBasis(const Vec3& row0, const Vec3& row1, const Vec3& row2,
                     const Vec3& origin) {
  Mat4 m;
  const Vec3 rows[3] = {row0, row1, row2};
  for (int r = 0; r < 3; ++r) {
    m.at(r, 0) = rows[r].x;
    m.at(r, 1) = rows[r].y;
    m.at(r, 2) = rows[r].z;
    m.at(r, 3) = -Dot(rows[r], origin);
  }
  m.at(3, 3) = 1;
  return m;
}

Vec3 Mat4::TransformPoint(const Vec3& p) const {
  Real out[4];
  for (int r = 0; r < 4; ++r) {
    out[r] = at(r, 0) * p.x + at(r, 1) * p.y + at(r, 2) * p.z + at(r, 3);
  }
  return Vec3(out[0], out[1], out[2]) / out[3];
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Real s = 0;
      for (int k = 0; k < 4; ++k) s += a.at(r, k) * b.at(k, c);
      out.at(r, c) = s;
    }
  }
  return out;
}

namespace {

// Gauss-Jordan elimination with partial pivoting; returns the determinant
// and writes the inverse when non-singular.
Real Eliminate(const Mat4& in, Mat4* inverse) {
  Real a[4][8];
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      a[r][c] = in.at(r, c);
      a[r][c + 4] = r == c ? 1 : 0;
    }
  }
  Real det = 1;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < 8; ++c) std::swap(a[pivot][c], a[col][c]);
      det = -det;
    }
    const Real p = a[col][col];
    det *= p;
    for (int c = 0; c < 8; ++c) a[col][c] /= p;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const Real f = a[r][col];
      if (f == 0) continue;
      for (int c = 0; c < 8; ++c) a[r][c] -= f * a[col][c];
    }
  }
  if (inverse != nullptr) {
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) inverse->at(r, c) = a[r][c + 4];
    }
  }
  return det;
}

}  // namespace

Real Mat4::Determinant() const { return Eliminate(*this, nullptr); }

Mat4 Mat4::Inverse() const {
  Mat4 inv;
  const Real det = Eliminate(*this, &inv);
  Require(det != 0 && std::isfinite(det), "matrix is singular");
  return inv;
}

}  // namespace mrr
