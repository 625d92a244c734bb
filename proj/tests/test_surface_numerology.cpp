#include <functional>
#include <random>

#include "doctest.h"
#include "fmell/errors.hpp"
#include "fmell/geometry_file.hpp"
#include "fmell/surface_numerology.hpp"
#include "oracles.hpp"

using namespace fmell;

namespace {

VectorZ vec(std::initializer_list<long> xs) {
  VectorZ v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

std::string clause_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.clause();
  }
  return "";
}

// Rational-surface lattice with the wrong chi(O): classes of odd fibre degree
// have odd square, and with chi(O) = 2 the even-rank numerology cannot close.
SurfaceGeometry odd_parity_geometry() {
  MatrixZ gram(2, 2);
  gram << -1, 1, 1, 0;
  return SurfaceGeometry(gram, vec({0, 1}), vec({0, -1}), 2, 0);
}

ModuliProblem random_problem(std::mt19937_64& rng, const SurfaceGeometry& g) {
  std::uniform_int_distribution<long> ur(2, 9), u(-7, 7);
  while (true) {
    const Integer r = ur(rng);
    const VectorZ lam = vec({u(rng), u(rng)});
    const Integer k = u(rng);
    if (gcd(r, g.fibre_degree(lam)) == 1) return ModuliProblem(g, {r, lam, k});
  }
}

}  // namespace

TEST_CASE("ModuliProblem validation") {
  const SurfaceGeometry g = load_geometry("preset:rational");
  CHECK(clause_of([&] { ModuliProblem(g, {1, vec({1, 0}), 0}); }) == "r > 1");
  CHECK(clause_of([&] { ModuliProblem(g, {2, vec({2, 0}), 0}); }) == "gcd(r, Lambda.f) = 1");
  CHECK_THROWS_AS(ModuliProblem(g, {2, vec({1}), 0}), DomainError);
}

TEST_CASE("moduli_correspondence examples") {
  const SurfaceGeometry g = load_geometry("preset:rational");
  // Lambda = sigma + f: Lambda.f = 1, Lambda^2 = 1.
  const VectorZ lam = vec({1, 1});
  REQUIRE(g.fibre_degree(lam) == 1);
  REQUIRE(g.pair(lam, lam) == 1);

  const ModuliReport rep = moduli_correspondence(ModuliProblem(g, {2, lam, 1}));
  CHECK(rep.a == 1);
  CHECK(rep.b == 1);
  CHECK(rep.t == 0);
  CHECK(rep.dim == Integer(0));
  CHECK_FALSE(rep.is_empty);
  CHECK(rep.iso_extends);
  CHECK(rep.target_rank == 1);
  CHECK(rep.target_c2 == 0);
  CHECK(rep.jx.lambda_y == 1);

  const ModuliReport empty = moduli_correspondence(ModuliProblem(g, {2, lam, 0}));
  CHECK(empty.t == -2);
  CHECK(empty.is_empty);
  CHECK_FALSE(empty.dim.has_value());
}

TEST_CASE("two_t rejects odd values") {
  CHECK(two_t(2, 1, 1, 1) == 0);
  CHECK(clause_of([] { two_t(2, 0, 1, 2); }) == "2t is even");
  const SurfaceGeometry g = odd_parity_geometry();
  CHECK(clause_of([&] { moduli_correspondence(ModuliProblem(g, {2, vec({1, 0}), 0})); }) ==
        "2t is even");
}

TEST_CASE("moduli_correspondence properties") {
  std::mt19937_64 rng(31);
  for (const char* name : {"preset:rational", "preset:k3-bisection"}) {
    const SurfaceGeometry g = load_geometry(name);
    for (int i = 0; i < 300; ++i) {
      const ModuliProblem p = random_problem(rng, g);
      const ModuliReport rep = moduli_correspondence(p);
      const SurfaceClass& x = p.cls();
      CHECK(rep.b * x.r - rep.a * rep.fibre_degree == 1);
      CHECK(rep.a > 0);
      CHECK(rep.a < x.r);
      if (x.r == 2) CHECK(rep.a == 1);
      // The transform preserves chi(E, E); on the other side it is chi((1,0,t),(1,0,t)).
      CHECK(euler_surface(g, x, x) == g.chi_o() - 2 * rep.t);
      CHECK(rep.is_empty == (rep.t < 0));
      if (!rep.is_empty) CHECK(*rep.dim == g.irregularity() + 2 * rep.t);
      CHECK(rep.iso_extends == (x.r > rep.a * rep.t));
      CHECK(transform_rd(psi_matrix(rep.transform), {x.r, rep.fibre_degree}) == CurveClass{-1, 0});
      CHECK(rep.transform.d() % g.lambda() == 0);
    }
  }
}

TEST_CASE("complete_matrix examples") {
  // (1 1; 0 1) normalizes to (0 1; -1 1).
  CHECK(complete_matrix(1, 1, 1).matrix() == normalize_twist(FMMatrix(1, 1, 0, 1), 1).matrix());
  CHECK(complete_matrix(1, 1, 1).matrix() == FMMatrix(0, 1, -1, 1).matrix());
  CHECK(complete_matrix(2, 1, 2).matrix() == FMMatrix(1, 2, 0, 1).matrix());
  CHECK(complete_matrix(3, 2, 1).matrix() ==
        normalize_twist(FMMatrix(2, 3, 1, 2), 1).matrix());
}

TEST_CASE("complete_matrix rejects bad input") {
  CHECK(clause_of([] { complete_matrix(0, 1, 1); }) == "a > 0");
  CHECK(clause_of([] { complete_matrix(2, 1, 0); }) == "lambda > 0");
  CHECK(clause_of([] { complete_matrix(2, 4, 1); }) == "gcd(a*lambda, b) = 1");
  CHECK(clause_of([] { complete_matrix(1, 2, 2); }) == "gcd(a*lambda, b) = 1");
}

TEST_CASE("complete_matrix matches a search") {
  for (long lambda = 1; lambda <= 3; ++lambda) {
    for (long a = 1; a <= 6; ++a) {
      for (long b = -9; b <= 9; ++b) {
        if (gcd(Integer(a * lambda), Integer(b)) != 1) continue;
        const FMMatrix m = complete_matrix(a, b, lambda);
        int hits = 0;
        for (long c = 0; c < lambda * a; ++c) {
          for (long e = -60; e <= 60; ++e) {
            if (c * b - a * lambda * e == 1) {
              ++hits;
              CHECK(m.c() == c);
              CHECK(m.d() == lambda * e);
            }
          }
        }
        CHECK(hits == 1);
        CHECK(m.a() == a);
        CHECK(m.b() == b);
      }
    }
  }
}

TEST_CASE("classify_wit_surface examples") {
  const SurfaceGeometry g = load_geometry("preset:rational");
  const FMMatrix m(0, 1, -1, 1);  // b/a = 1
  const SheafFlags stable_tf{.torsion_free = true, .generically_stable = true};
  const WitVerdict v = classify_wit_surface(g, m, {2, vec({1, 0}), 0}, stable_tf);
  CHECK(v.kind == WitVerdictKind::wit1_certain);
  CHECK(v.reason == "generically_stable_slope_below_b_over_a");

  const SheafFlags torsion{.torsion = true};
  const WitVerdict tv = classify_wit_surface(g, m, {0, vec({2, 0}), 0}, torsion);
  CHECK(tv.kind == WitVerdictKind::wit1_excluded);
  CHECK(to_string(tv.kind) == "WIT1_excluded");

  const SheafFlags tf{.torsion_free = true};
  CHECK(classify_wit_surface(g, m, {2, vec({1, 0}), 0}, tf).kind == WitVerdictKind::wit0_excluded);
  CHECK(classify_wit_surface(g, m, {1, vec({2, 0}), 0}, tf).kind == WitVerdictKind::wit1_excluded);
  CHECK(classify_wit_surface(g, m, {1, vec({1, 0}), 0}, tf).kind == WitVerdictKind::unknown);
  CHECK(classify_wit_surface(g, m, {0, vec({0, 3}), 0}, torsion).reason == "no_rule_applies");
}

TEST_CASE("classify_wit_surface rejects inconsistent input") {
  const SurfaceGeometry g = load_geometry("preset:rational");
  const FMMatrix m(0, 1, -1, 1);
  CHECK(clause_of([&] { classify_wit_surface(g, m, {-1, vec({0, 0}), 0}, {}); }) == "r >= 0");
  CHECK_THROWS_AS(classify_wit_surface(g, m, {0, vec({1, 0}), 0},
                                       {.torsion_free = true, .torsion = true}),
                  DomainError);
  CHECK_THROWS_AS(classify_wit_surface(g, m, {2, vec({1, 0}), 0}, {.torsion = true}), DomainError);
  CHECK_THROWS_AS(classify_wit_surface(g, m, {0, vec({1, 0}), 0}, {.torsion_free = true}),
                  DomainError);
}

TEST_CASE("moduli problem classes are certainly WIT1") {
  std::mt19937_64 rng(32);
  const SheafFlags flags{.torsion_free = true, .generically_stable = true};
  for (const char* name : {"preset:rational", "preset:k3-bisection"}) {
    const SurfaceGeometry g = load_geometry(name);
    for (int i = 0; i < 200; ++i) {
      const ModuliProblem p = random_problem(rng, g);
      const ModuliReport rep = moduli_correspondence(p);
      CHECK(classify_wit_surface(g, rep.transform, p.cls(), flags).kind ==
            WitVerdictKind::wit1_certain);
    }
  }
}

TEST_CASE("elementary_modification examples") {
  const SurfaceGeometry g = load_geometry("preset:rational");
  // r = 3, d = 2: a = 1, b = 1.
  const VectorZ lam3 = vec({2, 1});
  const ElementaryModification e3 = elementary_modification(ModuliProblem(g, {3, lam3, 7}), 1);
  CHECK(e3.twisted_problem.cls() == SurfaceClass{3, lam3 - 3 * g.fibre(), 4});
  CHECK(e3.consistency);

  // r = 2, d = 1, n = 2: (2, Lambda - 4f, k).
  const VectorZ lam2 = vec({1, 0});
  const ElementaryModification e2 = elementary_modification(ModuliProblem(g, {2, lam2, 5}), 2);
  CHECK(e2.twisted_problem.cls() == SurfaceClass{2, lam2 - 4 * g.fibre(), 5});
  CHECK(e2.consistency);

  CHECK(clause_of([&] { elementary_modification(ModuliProblem(g, {2, lam2, 5}), 0); }) == "n > 0");
}

TEST_CASE("elementary_modification is consistent on random problems") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> un(1, 6);
  for (const char* name : {"preset:rational", "preset:k3-bisection"}) {
    const SurfaceGeometry g = load_geometry(name);
    for (int i = 0; i < 200; ++i) {
      const ModuliProblem p = random_problem(rng, g);
      const Integer n = un(rng);
      const ElementaryModification e = elementary_modification(p, n);
      CHECK(e.consistency);
      // Same fibre degree, so the twisted problem has the same (a, b).
      const ModuliReport before = moduli_correspondence(p);
      const ModuliReport after = moduli_correspondence(e.twisted_problem);
      CHECK(after.a == before.a);
      CHECK(after.b == before.b);
    }
  }
}

TEST_CASE("ideal_wit0_check examples") {
  const IdealWit0Check ones = ideal_wit0_check({1, 1, 1}, 2, 1);
  CHECK(ones.wit0_if_distinct);
  CHECK(ones.t == 3);
  CHECK(ideal_wit0_check({1, 1, 1}, 4, 1).whole_hilbert_scheme);
  CHECK_FALSE(ideal_wit0_check({1, 1, 1}, 3, 1).whole_hilbert_scheme);
  const IdealWit0Check bunched = ideal_wit0_check({2, 1}, 2, 1);
  CHECK_FALSE(bunched.wit0_if_distinct);
  CHECK(bunched.max_count == 2);
  CHECK(ideal_wit0_check({}, 2, 1).wit0_if_distinct);
  CHECK(clause_of([] { ideal_wit0_check({1}, 2, 2); }) == "r > a > 0");
  CHECK(clause_of([] { ideal_wit0_check({-1}, 3, 1); }) == "point counts >= 0");
}

TEST_CASE("generate_example examples") {
  const ExampleResult one = generate_example(1, 1, 1, 1, 1);
  REQUIRE(std::holds_alternative<ExampleWitness>(one));
  const auto& w1 = std::get<ExampleWitness>(one);
  CHECK(w1.r == 2);
  CHECK(w1.d == 1);
  CHECK(w1.lambda_sq == -1);
  CHECK(w1.k == 1);

  const ExampleResult zero = generate_example(1, 1, 1, 0, 1);
  REQUIRE(std::holds_alternative<ExampleWitness>(zero));
  const auto& w0 = std::get<ExampleWitness>(zero);
  CHECK(w0.r == 2);
  CHECK(4 * w0.k - w0.lambda_sq == 3);
  CHECK(w0.lambda_sq == 1);
  CHECK(w0.k == 1);
}

TEST_CASE("generate_example reports an obstruction") {
  const ExampleResult res = generate_example(1, 1, 0, odd_parity_geometry());
  REQUIRE(std::holds_alternative<ExampleObstruction>(res));
  CHECK(std::get<ExampleObstruction>(res).r == 2);
  CHECK(std::get<ExampleObstruction>(res).d == 1);
  CHECK_FALSE(std::get<ExampleObstruction>(res).reason.empty());
}

TEST_CASE("generate_example rejects bad input") {
  CHECK(clause_of([] { generate_example(0, 1, 1, 1, 1); }) == "a > 0");
  CHECK(clause_of([] { generate_example(1, 1, 1, -1, 1); }) == "t >= 0");
  CHECK(clause_of([] { generate_example(2, 4, 1, 1, 1); }) == "gcd(a*lambda, b) = 1");
  CHECK(clause_of([] { generate_example(1, 1, 0, 1, 1); }) == "lambda > 0");
}

TEST_CASE("generate_example is minimal and round-trips") {
  for (long lambda = 1; lambda <= 2; ++lambda) {
    for (long chi = 0; chi <= 2; ++chi) {
      const SurfaceGeometry g = synthetic_geometry(lambda, chi);
      for (long a = 1; a <= 3; ++a) {
        for (long b = -5; b <= 5; ++b) {
          if (gcd(Integer(a * lambda), Integer(b)) != 1) continue;
          for (long t = 0; t <= 4; ++t) {
            const ExampleResult res = generate_example(a, b, t, g);
            // Smallest r > a t with a*lambda | b r - 1 and find_ab giving a.
            long r = 2;
            while (!(r > a * t && (b * r - 1) % (a * lambda) == 0 && a < r)) ++r;
            const long d = (b * r - 1) / a;
            // Least |Lambda^2| over Lambda = base + n f with 2r | rhs + (r-1) Lambda^2.
            const Integer rhs = 2 * t + Integer(r * r - 1) * chi;
            const VectorZ base = g.vector_with_fibre_degree(d);
            std::optional<Integer> best;
            for (long n = -400; n <= 400; ++n) {
              const VectorZ lam = base + Integer(n) * g.fibre();
              const Integer sq = g.pair(lam, lam);
              if ((rhs + (r - 1) * sq) % (2 * r) != 0) continue;
              if (!best || abs(sq) < abs(*best) || (abs(sq) == abs(*best) && sq > *best)) best = sq;
            }
            if (!best) {
              REQUIRE(std::holds_alternative<ExampleObstruction>(res));
              CHECK(std::get<ExampleObstruction>(res).r == r);
              continue;
            }
            REQUIRE(std::holds_alternative<ExampleWitness>(res));
            const auto& w = std::get<ExampleWitness>(res);
            CHECK(w.r == r);
            CHECK(w.d == d);
            CHECK(w.lambda_sq == *best);
            CHECK(g.pair(w.lambda_vec, w.lambda_vec) == w.lambda_sq);
            CHECK(g.fibre_degree(w.lambda_vec) == d);
            const ModuliReport rep = moduli_correspondence(w.problem);
            CHECK(rep.a == a);
            CHECK(rep.b == b);
            CHECK(rep.t == t);
            CHECK(rep.iso_extends);
          }
        }
      }
    }
  }
}

TEST_CASE("synthetic_geometry shape") {
  const SurfaceGeometry g = synthetic_geometry(2, 1);
  CHECK(g.lambda() == 2);
  CHECK(g.chi_o() == 1);
  const SurfaceGeometry r = synthetic_geometry(1, 1);
  CHECK(r.gram() == load_geometry("preset:rational").gram());
  CHECK(r.canonical() == load_geometry("preset:rational").canonical());
}
