#ifndef FMELL_LATTICE_HPP
#define FMELL_LATTICE_HPP

#include <optional>
#include <utility>

#include "fmell/integer.hpp"

namespace fmell {

/// Chern action of a relative transform on (rank, fibre degree), stored
/// row-major as
///
///     ( c  a )
///     ( d  b )
///
/// with cb - ad = 1 and a > 0. When a lambda constraint is attached the
/// lower-left entry must be divisible by it.
class FMMatrix {
 public:
  /// Validates and throws DomainError naming the failed clause.
  FMMatrix(Integer c, Integer a, Integer d, Integer b,
           std::optional<Integer> lambda = std::nullopt);

  explicit FMMatrix(const Matrix2Z& m, std::optional<Integer> lambda = std::nullopt);

  const Integer& c() const { return m_(0, 0); }
  const Integer& a() const { return m_(0, 1); }
  const Integer& d() const { return m_(1, 0); }
  const Integer& b() const { return m_(1, 1); }

  const Matrix2Z& matrix() const { return m_; }
  const std::optional<Integer>& lambda_constraint() const { return lambda_; }

  friend bool operator==(const FMMatrix& x, const FMMatrix& y) {
    return x.m_ == y.m_ && x.lambda_ == y.lambda_;
  }

 private:
  Matrix2Z m_;
  std::optional<Integer> lambda_;
};

/// Chern class (rank, degree) of an object on an elliptic curve.
struct CurveClass {
  Integer r;
  Integer d;

  Vector2Z vector() const { return Vector2Z(r, d); }
  static CurveClass from_vector(const Vector2Z& v) { return {v(0), v(1)}; }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// Neron-Severi data of an elliptic surface.
///
/// lambda() is derived from the Gram matrix as the gcd of the fibre degrees
/// of the basis vectors; it is never read from input.
class SurfaceGeometry {
 public:
  SurfaceGeometry(MatrixZ gram, VectorZ f, VectorZ K, Integer chi_o, Integer q);

  Eigen::Index rank() const { return gram_.rows(); }
  const MatrixZ& gram() const { return gram_; }
  const VectorZ& fibre() const { return f_; }
  const VectorZ& canonical() const { return K_; }
  const Integer& chi_o() const { return chi_o_; }
  const Integer& irregularity() const { return q_; }
  const Integer& lambda() const { return lambda_; }

  Integer pair(const VectorZ& u, const VectorZ& v) const { return pairing(gram_, u, v); }
  Integer fibre_degree(const VectorZ& v) const { return pair(v, f_); }

  /// Some lattice vector of fibre degree `degree`; requires lambda | degree.
  VectorZ vector_with_fibre_degree(const Integer& degree) const;

 private:
  MatrixZ gram_;
  VectorZ f_;
  VectorZ K_;
  Integer chi_o_;
  Integer q_;
  Integer lambda_;
};

/// Chern class (r, c1, c2) of an object on a surface.
struct SurfaceClass {
  Integer r;
  VectorZ c1;
  Integer c2;

  /// (c1.c1 - 2 c2) / 2, half-integral in general.
  Rational ch2(const SurfaceGeometry& g) const;

  friend bool operator==(const SurfaceClass& x, const SurfaceClass& y) {
    return x.r == y.r && x.c1 == y.c1 && x.c2 == y.c2;
  }
};

/// Throws DomainError when c1 has the wrong number of coordinates.
void check_class(const SurfaceGeometry& g, const SurfaceClass& x);

/// The unique (a, b) with b*r - a*d == 1 and 0 < a < r.
std::pair<Integer, Integer> find_ab(const Integer& r, const Integer& d);

/// (-b a; d -c), the action of the inverse transform; psi_matrix(m) * m == -I.
FMMatrix psi_matrix(const FMMatrix& m);

/// Representative of {(c + n*lambda*a, d + n*lambda*b)} with 0 <= c < lambda*a.
FMMatrix normalize_twist(const FMMatrix& m, const Integer& lambda);

/// r_x d_y - r_y d_x.
Integer euler_curve(const CurveClass& x, const CurveClass& y);

/// Riemann-Roch pairing chi(x, y) on a surface, assembled in exact rationals.
/// Throws DomainError if the result is not an integer.
Integer euler_surface(const SurfaceGeometry& g, const SurfaceClass& x,
                      const SurfaceClass& y);

/// Chern class of x tensored with a line bundle of class L.
SurfaceClass twist_class(const SurfaceGeometry& g, const SurfaceClass& x,
                         const VectorZ& L);

CurveClass transform_rd(const FMMatrix& m, const CurveClass& rd);

}  // namespace fmell

#endif  // FMELL_LATTICE_HPP
