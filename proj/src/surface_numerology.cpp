#include "fmell/surface_numerology.hpp"

#include <algorithm>

#include "fmell/errors.hpp"

namespace fmell {

ModuliProblem::ModuliProblem(SurfaceGeometry geometry, SurfaceClass cls)
    : geometry_(std::move(geometry)), cls_(std::move(cls)) {
  check_class(geometry_, cls_);
  if (cls_.r <= 1) {
    throw DomainError("r > 1", "got r = " + to_string(cls_.r));
  }
  const Integer d = fibre_degree();
  if (gcd(cls_.r, d) != 1) {
    throw DomainError("gcd(r, Lambda.f) = 1", "r = " + to_string(cls_.r) +
                                                  ", Lambda.f = " + to_string(d));
  }
}

Integer two_t(const Integer& r, const Integer& k, const Integer& lambda_sq,
              const Integer& chi_o) {
  Integer value = 2 * r * k - (r - 1) * lambda_sq - (r * r - 1) * chi_o;
  if (value % 2 != 0) {
    throw DomainError("2t is even",
                      "2rk - (r-1)Lambda^2 - (r^2-1)chi(O) = " + to_string(value));
  }
  return value;
}

ModuliReport moduli_correspondence(const ModuliProblem& p) {
  const SurfaceGeometry& g = p.geometry();
  const SurfaceClass& x = p.cls();
  const Integer d = p.fibre_degree();
  auto [a, b] = find_ab(x.r, d);
  const Integer t = two_t(x.r, x.c2, g.pair(x.c1, x.c1), g.chi_o()) / 2;

  // With c = r the inverse action sends (r, d) to (-1, 0): a WIT1 object whose
  // transform has rank 1 and fibre degree 0.
  FMMatrix m(x.r, a, d, b, g.lambda());
  const CurveClass image = transform_rd(psi_matrix(m), {x.r, d});
  if (image.r != -1 || image.d != 0) {
    throw DomainError("transform of (r, d) is (-1, 0)",
                      "got (" + to_string(image.r) + "," + to_string(image.d) + ")");
  }

  ModuliReport out{
      .r = x.r,
      .fibre_degree = d,
      .a = a,
      .b = b,
      .t = t,
      .dim = std::nullopt,
      .is_empty = t < 0,
      .iso_extends = x.r > a * t,
      .target_rank = -image.r,
      .target_c2 = t,
      .transform = m,
      .jx = {a, b, g.lambda()},
  };
  if (!out.is_empty) {
    out.dim = g.irregularity() + 2 * t;
  }
  return out;
}

FMMatrix complete_matrix(const Integer& a, const Integer& b, const Integer& lambda) {
  if (a <= 0) {
    throw DomainError("a > 0", "got a = " + to_string(a));
  }
  if (lambda <= 0) {
    throw DomainError("lambda > 0", "got lambda = " + to_string(lambda));
  }
  const Integer modulus = a * lambda;
  if (gcd(modulus, b) != 1) {
    throw DomainError("gcd(a*lambda, b) = 1",
                      "gcd(" + to_string(modulus) + "," + to_string(b) + ") = " +
                          to_string(gcd(modulus, b)));
  }
  // cb - a*lambda*e = 1 with d = lambda*e.
  const Integer c = inverse_mod(b, modulus);
  const Integer e = (c * b - 1) / modulus;
  return normalize_twist(FMMatrix(c, a, lambda * e, b, lambda), lambda);
}

std::string to_string(WitVerdictKind kind) {
  switch (kind) {
    case WitVerdictKind::wit1_certain:
      return "WIT1_certain";
    case WitVerdictKind::wit1_excluded:
      return "WIT1_excluded";
    case WitVerdictKind::wit0_excluded:
      return "WIT0_excluded";
    case WitVerdictKind::unknown:
      return "unknown";
  }
  return "unknown";
}

WitVerdict classify_wit_surface(const SurfaceGeometry& g, const FMMatrix& m,
                                const SurfaceClass& cls, const SheafFlags& flags) {
  check_class(g, cls);
  if (cls.r < 0) {
    throw DomainError("r >= 0", "got r = " + to_string(cls.r));
  }
  if (flags.torsion && flags.torsion_free) {
    throw DomainError("flags consistent", "a sheaf cannot be both torsion and torsion-free");
  }
  if (flags.torsion && cls.r != 0) {
    throw DomainError("torsion implies r = 0", "got r = " + to_string(cls.r));
  }
  if (flags.torsion_free && cls.r == 0) {
    throw DomainError("torsion-free implies r > 0", "got r = 0");
  }
  const Integer d = g.fibre_degree(cls.c1);

  if (flags.torsion_free) {
    // sign of mu - b/a = sign(a d - b r), r > 0 and a > 0
    const Integer gap = m.a() * d - m.b() * cls.r;
    if (gap < 0 && flags.generically_stable) {
      return {WitVerdictKind::wit1_certain, "generically_stable_slope_below_b_over_a"};
    }
    if (gap < 0) {
      return {WitVerdictKind::wit0_excluded, "slope_below_b_over_a"};
    }
    if (gap > 0) {
      return {WitVerdictKind::wit1_excluded, "slope_above_b_over_a"};
    }
    return {WitVerdictKind::unknown, "slope_equals_b_over_a"};
  }
  if (flags.torsion && d > 0) {
    // A WIT1 torsion sheaf must be a fibre sheaf.
    return {WitVerdictKind::wit1_excluded, "torsion_with_positive_fibre_degree"};
  }
  return {WitVerdictKind::unknown, "no_rule_applies"};
}

ElementaryModification elementary_modification(const ModuliProblem& p, const Integer& n) {
  if (n <= 0) {
    throw DomainError("n > 0", "got n = " + to_string(n));
  }
  const SurfaceGeometry& g = p.geometry();
  const SurfaceClass& x = p.cls();
  const Integer d = p.fibre_degree();
  const auto [a, b] = find_ab(x.r, d);

  SurfaceClass modified{
      x.r,
      x.c1 - (x.r * n * a) * g.fibre(),
      x.c2 + x.r * n * b - x.r * n * a * d,
  };
  const SurfaceClass back = twist_class(g, modified, (a * n) * g.fibre());
  const SurfaceClass expected{x.r, x.c1, x.c2 + n};
  return {ModuliProblem(g, std::move(modified)), back == expected};
}

IdealWit0Check ideal_wit0_check(const std::vector<Integer>& fibre_point_counts,
                                const Integer& r, const Integer& a) {
  if (a <= 0 || r <= a) {
    throw DomainError("r > a > 0", "got r = " + to_string(r) + ", a = " + to_string(a));
  }
  Integer max_count = 0;
  Integer t = 0;
  for (const Integer& s : fibre_point_counts) {
    if (s < 0) {
      throw DomainError("point counts >= 0", "got " + to_string(s));
    }
    max_count = std::max(max_count, s);
    t += s;
  }
  return {a * max_count < r, max_count, t, r > a * t};
}

SurfaceGeometry synthetic_geometry(const Integer& lambda, const Integer& chi_o,
                                   const Integer& q) {
  MatrixZ gram(2, 2);
  gram << -lambda * chi_o, lambda, lambda, 0;
  VectorZ f(2);
  f << 0, 1;
  VectorZ K(2);
  K << 0, chi_o - 2;
  return SurfaceGeometry(std::move(gram), std::move(f), std::move(K), chi_o, q);
}

ExampleResult generate_example(const Integer& a, const Integer& b, const Integer& t,
                               const SurfaceGeometry& g) {
  if (a <= 0) {
    throw DomainError("a > 0", "got a = " + to_string(a));
  }
  if (t < 0) {
    throw DomainError("t >= 0", "got t = " + to_string(t));
  }
  const Integer modulus = a * g.lambda();
  if (gcd(modulus, b) != 1) {
    throw DomainError("gcd(a*lambda, b) = 1",
                      "gcd(" + to_string(modulus) + "," + to_string(b) + ") = " +
                          to_string(gcd(modulus, b)));
  }

  // r > a keeps (a, b) the pair find_ab returns; r > a t gives the isomorphism.
  const Integer lower = std::max(a * t, a) + 1;
  const Integer residue = inverse_mod(b, modulus);
  Integer r = residue;
  if (r < lower) {
    r += modulus * floor_div(lower - r + modulus - 1, modulus);
  }
  const Integer d = (b * r - 1) / a;

  const VectorZ base = g.vector_with_fibre_degree(d);
  const Integer base_sq = g.pair(base, base);
  const Integer rhs = 2 * t + (r * r - 1) * g.chi_o();

  // 2rk = rhs + (r-1)(base_sq + 2dn), solved for n modulo 2r.
  const Integer coeff = 2 * d * (r - 1);
  const Integer target = -(rhs + (r - 1) * base_sq);
  const Integer m2r = 2 * r;
  const Integer common = gcd(coeff, m2r);
  if (mod_floor(target, common) != 0) {
    return ExampleObstruction{
        r, d,
        "no k solves 2rk - (r-1)Lambda^2 = " + to_string(rhs) +
            " for Lambda^2 in " + to_string(base_sq) + " + " + to_string(2 * d) +
            "Z: the congruence " + to_string(coeff) + "*n = " + to_string(target) +
            " (mod " + to_string(m2r) + ") has no solution"};
  }
  const Integer period = m2r / common;
  const Integer n0 = mod_floor((target / common) * inverse_mod(coeff / common, period), period);

  // Admissible Lambda^2 values form base_sq + 2d*n0 + (2d*period)Z; take the
  // one of least absolute value, preferring the nonnegative one on a tie.
  const Integer step = abs(2 * d * period);
  const Integer rem = mod_floor(base_sq + 2 * d * n0, step);
  const Integer lambda_sq = rem <= step - rem ? rem : rem - step;
  const Integer n = (lambda_sq - base_sq) / (2 * d);
  VectorZ lambda_vec = base + n * g.fibre();
  const Integer k = (rhs + (r - 1) * lambda_sq) / m2r;

  ModuliProblem problem(g, SurfaceClass{r, lambda_vec, k});
  return ExampleWitness{r, d, std::move(lambda_vec), lambda_sq, k, std::move(problem)};
}

ExampleResult generate_example(const Integer& a, const Integer& b, const Integer& lambda,
                               const Integer& t, const Integer& chi_o) {
  if (lambda <= 0) {
    throw DomainError("lambda > 0", "got lambda = " + to_string(lambda));
  }
  return generate_example(a, b, t, synthetic_geometry(lambda, chi_o));
}

}  // namespace fmell
