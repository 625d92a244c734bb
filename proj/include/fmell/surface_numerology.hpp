#ifndef FMELL_SURFACE_NUMEROLOGY_HPP
#define FMELL_SURFACE_NUMEROLOGY_HPP

// Class-level computations for moduli of stable sheaves on an elliptic
// surface X and their transforms to Y = J_X(a, b).

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fmell/integer.hpp"
#include "fmell/lattice.hpp"

namespace fmell {

/// Chern data (r, Lambda, k) on a geometry, with r > 1 coprime to Lambda.f.
class ModuliProblem {
 public:
  ModuliProblem(SurfaceGeometry geometry, SurfaceClass cls);

  const SurfaceGeometry& geometry() const { return geometry_; }
  const SurfaceClass& cls() const { return cls_; }
  Integer fibre_degree() const { return geometry_.fibre_degree(cls_.c1); }

 private:
  SurfaceGeometry geometry_;
  SurfaceClass cls_;
};

/// J_X(a, b) is carried only through these numbers.
struct JxDescriptor {
  Integer a;
  Integer b;
  Integer lambda_y;  ///< equals lambda_X
};

struct ModuliReport {
  Integer r;
  Integer fibre_degree;
  Integer a;
  Integer b;
  Integer t;
  std::optional<Integer> dim;  ///< q + 2t; absent when the space is empty
  bool is_empty = false;
  bool iso_extends = false;
  /// (1, 0, t) on Y: rank, fibre degree of c1 (zero after twisting), c2.
  Integer target_rank;
  Integer target_c2;
  FMMatrix transform;  ///< (r a; d b)
  JxDescriptor jx;
  /// dim Pic0(J_X(a,b)) is taken to be q(X).
  bool assumes_equal_irregularity = true;
};

/// Integer 2t from r, k, Lambda^2 and chi(O_X); throws DomainError when odd.
Integer two_t(const Integer& r, const Integer& k, const Integer& lambda_sq,
              const Integer& chi_o);

ModuliReport moduli_correspondence(const ModuliProblem& p);

/// (c a; d b) in SL2(Z) with lambda | d, normalized so 0 <= c < lambda*a.
FMMatrix complete_matrix(const Integer& a, const Integer& b, const Integer& lambda);

enum class WitVerdictKind { wit1_certain, wit1_excluded, wit0_excluded, unknown };

struct WitVerdict {
  WitVerdictKind kind;
  std::string reason;
};

struct SheafFlags {
  bool torsion_free = false;
  bool generically_stable = false;  ///< stable on the general fibre
  bool torsion = false;
};

std::string to_string(WitVerdictKind kind);

/// Verdict on the WIT index under the inverse transform Psi of m, from the
/// rank and fibre degree alone. Never certifies WIT0.
WitVerdict classify_wit_surface(const SurfaceGeometry& g, const FMMatrix& m,
                                const SurfaceClass& cls, const SheafFlags& flags);

struct ElementaryModification {
  ModuliProblem twisted_problem;
  bool consistency;
};

/// The class reached by n rounds of elementary modification along r*n points,
/// and whether twisting it by O(a n f) returns (r, Lambda, k + n).
ElementaryModification elementary_modification(const ModuliProblem& p, const Integer& n);

struct IdealWit0Check {
  bool wit0_if_distinct;  ///< a * max(counts) < r
  Integer max_count;
  Integer t;
  bool whole_hilbert_scheme;  ///< r > a t
};

IdealWit0Check ideal_wit0_check(const std::vector<Integer>& fibre_point_counts,
                                const Integer& r, const Integer& a);

struct ExampleWitness {
  Integer r;
  Integer d;
  VectorZ lambda_vec;
  Integer lambda_sq;
  Integer k;
  ModuliProblem problem;
};

struct ExampleObstruction {
  Integer r;
  Integer d;
  std::string reason;
};

using ExampleResult = std::variant<ExampleWitness, ExampleObstruction>;

/// Basis (D, f) with D.f = lambda, D.D = -lambda*chi, f.f = 0 and
/// K = (chi - 2) f: for lambda = 1 the profile of a section over P^1.
SurfaceGeometry synthetic_geometry(const Integer& lambda, const Integer& chi_o,
                                   const Integer& q = 0);

/// Smallest r > max(a t, a) with b r = 1 mod a*lambda, then (Lambda, k) with
/// Lambda moved along f to minimize |Lambda^2|.
ExampleResult generate_example(const Integer& a, const Integer& b, const Integer& t,
                               const SurfaceGeometry& g);

ExampleResult generate_example(const Integer& a, const Integer& b, const Integer& lambda,
                               const Integer& t, const Integer& chi_o);

}  // namespace fmell

#endif  // FMELL_SURFACE_NUMEROLOGY_HPP
