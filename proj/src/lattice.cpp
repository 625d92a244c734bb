#include "fmell/lattice.hpp"

#include "fmell/errors.hpp"

namespace fmell {

namespace {

Matrix2Z make_matrix(Integer c, Integer a, Integer d, Integer b) {
  Matrix2Z m;
  m << std::move(c), std::move(a), std::move(d), std::move(b);
  return m;
}

}  // namespace

FMMatrix::FMMatrix(Integer c, Integer a, Integer d, Integer b,
                   std::optional<Integer> lambda)
    : FMMatrix(make_matrix(std::move(c), std::move(a), std::move(d), std::move(b)),
               std::move(lambda)) {}

FMMatrix::FMMatrix(const Matrix2Z& m, std::optional<Integer> lambda)
    : m_(m), lambda_(std::move(lambda)) {
  const Integer det = c() * b() - a() * d();
  if (det != 1) {
    throw DomainError("determinant cb - ad = 1",
                      "got cb - ad = " + to_string(det));
  }
  if (a() <= 0) {
    throw DomainError("a > 0", "got a = " + to_string(a()));
  }
  if (lambda_) {
    if (*lambda_ <= 0) {
      throw DomainError("lambda > 0", "got lambda = " + to_string(*lambda_));
    }
    if (d() % *lambda_ != 0) {
      throw DomainError("lambda divides d", "lambda = " + to_string(*lambda_) +
                                                " does not divide d = " + to_string(d()));
    }
  }
}

SurfaceGeometry::SurfaceGeometry(MatrixZ gram, VectorZ f, VectorZ K, Integer chi_o,
                                 Integer q)
    : gram_(std::move(gram)),
      f_(std::move(f)),
      K_(std::move(K)),
      chi_o_(std::move(chi_o)),
      q_(std::move(q)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols()) {
    throw DomainError("gram is square of size rank",
                      "got " + std::to_string(gram_.rows()) + "x" +
                          std::to_string(gram_.cols()));
  }
  if (gram_ != gram_.transpose()) {
    throw DomainError("gram is symmetric", "gram differs from its transpose");
  }
  if (f_.size() != gram_.rows() || K_.size() != gram_.rows()) {
    throw DomainError("f and K have rank coordinates",
                      "rank " + std::to_string(gram_.rows()) + ", |f| = " +
                          std::to_string(f_.size()) + ", |K| = " + std::to_string(K_.size()));
  }
  if (q_ < 0) {
    throw DomainError("q >= 0", "got q = " + to_string(q_));
  }
  const Integer ff = pair(f_, f_);
  if (ff != 0) {
    throw DomainError("f.f = 0", "got f.f = " + to_string(ff));
  }
  const Integer kf = pair(K_, f_);
  if (kf != 0) {
    throw DomainError("K.f = 0", "got K.f = " + to_string(kf));
  }
  const VectorZ row = gram_ * f_;
  lambda_ = 0;
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    lambda_ = gcd(lambda_, row(i));
  }
  if (lambda_ <= 0) {
    throw DomainError("lambdaX > 0", "every basis vector has fibre degree 0");
  }
}

VectorZ SurfaceGeometry::vector_with_fibre_degree(const Integer& degree) const {
  if (degree % lambda_ != 0) {
    throw DomainError("lambdaX divides the fibre degree",
                      "lambdaX = " + to_string(lambda_) + ", degree = " + to_string(degree));
  }
  // Fold the extended gcd over the fibre degrees of the basis.
  const VectorZ row = gram_ * f_;
  VectorZ coeffs = VectorZ::Zero(row.size());
  Integer g = 0;
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    Bezout e = extended_gcd(g, row(i));
    coeffs *= e.u;
    coeffs(i) += e.v;
    g = e.g;
  }
  return coeffs * Integer(degree / lambda_);
}

Rational SurfaceClass::ch2(const SurfaceGeometry& g) const {
  return Rational(g.pair(c1, c1) - 2 * c2, Integer(2));
}

void check_class(const SurfaceGeometry& g, const SurfaceClass& x) {
  if (x.c1.size() != g.rank()) {
    throw DomainError("c1 has rank coordinates",
                      "rank " + std::to_string(g.rank()) + ", |c1| = " +
                          std::to_string(x.c1.size()));
  }
}

std::pair<Integer, Integer> find_ab(const Integer& r, const Integer& d) {
  if (r <= 1) {
    throw DomainError("r > 1", "got r = " + to_string(r));
  }
  if (gcd(r, d) != 1) {
    throw DomainError("gcd(r,d) != 1", "gcd(" + to_string(r) + "," + to_string(d) +
                                           ") = " + to_string(gcd(r, d)));
  }
  // br - ad = 1  <=>  a = -d^{-1} (mod r); a != 0 because r > 1.
  Integer a = mod_floor(-inverse_mod(d, r), r);
  Integer b = (1 + a * d) / r;
  return {std::move(a), std::move(b)};
}

FMMatrix psi_matrix(const FMMatrix& m) {
  return FMMatrix(-m.b(), m.a(), m.d(), -m.c(), m.lambda_constraint());
}

FMMatrix normalize_twist(const FMMatrix& m, const Integer& lambda) {
  if (lambda <= 0) {
    throw DomainError("lambda > 0", "got lambda = " + to_string(lambda));
  }
  const Integer step = lambda * m.a();
  const Integer n = -floor_div(m.c(), step);
  return FMMatrix(m.c() + n * step, m.a(), m.d() + n * lambda * m.b(), m.b(),
                  m.lambda_constraint());
}

Integer euler_curve(const CurveClass& x, const CurveClass& y) {
  return x.r * y.d - y.r * x.d;
}

Integer euler_surface(const SurfaceGeometry& g, const SurfaceClass& x,
                      const SurfaceClass& y) {
  check_class(g, x);
  check_class(g, y);
  const VectorZ mixed = x.r * y.c1 - y.r * x.c1;
  const Rational value = Rational(x.r) * y.ch2(g) + Rational(y.r) * x.ch2(g) -
                         Rational(g.pair(x.c1, y.c1)) -
                         Rational(g.pair(mixed, g.canonical()), Integer(2)) +
                         Rational(x.r * y.r * g.chi_o());
  if (boost::multiprecision::denominator(value) != 1) {
    throw DomainError("integral Euler pairing",
                      "Riemann-Roch gives " + to_string(value) +
                          "; the geometry or classes are inconsistent");
  }
  return boost::multiprecision::numerator(value);
}

SurfaceClass twist_class(const SurfaceGeometry& g, const SurfaceClass& x,
                         const VectorZ& L) {
  check_class(g, x);
  if (L.size() != g.rank()) {
    throw DomainError("L has rank coordinates",
                      "rank " + std::to_string(g.rank()) + ", |L| = " +
                          std::to_string(L.size()));
  }
  SurfaceClass out;
  out.r = x.r;
  out.c1 = x.c1 + x.r * L;
  out.c2 = x.c2 + (x.r - 1) * g.pair(x.c1, L) + x.r * (x.r - 1) / 2 * g.pair(L, L);
  return out;
}

CurveClass transform_rd(const FMMatrix& m, const CurveClass& rd) {
  return CurveClass::from_vector(m.matrix() * rd.vector());
}

}  // namespace fmell
