#ifndef FMELL_CURVE_CATEGORY_HPP
#define FMELL_CURVE_CATEGORY_HPP

// Dimension counting for formal direct sums of stable sheaves on an elliptic
// curve, and the action of an SL2(Z) transform on them.
//
// An atom is a stable bundle (r > 0, gcd(r, d) = 1) or the skyscraper of a
// point, class (0, 1). The label stands for the point of the moduli space the
// atom sits at; two atoms of the same class are isomorphic iff their labels
// agree. Non-split extensions are outside the model: a torsion sheaf of
// length n must be entered as n skyscrapers.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "fmell/integer.hpp"
#include "fmell/lattice.hpp"

namespace fmell {

class StableAtom {
 public:
  /// Throws DomainError unless the class is primitive with r > 0, or (0, 1).
  StableAtom(CurveClass cls, std::string label = {});
  StableAtom(const Integer& r, const Integer& d, std::string label = {})
      : StableAtom(CurveClass{r, d}, std::move(label)) {}

  const CurveClass& cls() const { return cls_; }
  const Integer& rank() const { return cls_.r; }
  const Integer& degree() const { return cls_.d; }
  const std::string& label() const { return label_; }
  bool is_skyscraper() const { return cls_.r == 0; }

  friend bool operator==(const StableAtom& x, const StableAtom& y) {
    return x.cls_ == y.cls_ && x.label_ == y.label_;
  }
  friend std::strong_ordering operator<=>(const StableAtom& x, const StableAtom& y);

 private:
  CurveClass cls_;
  std::string label_;
};

/// Ext^i dimensions indexed by i; zero entries are never stored.
using ExtProfile = std::map<std::int64_t, Integer>;

/// A finite Z-graded direct sum of atoms: the atom A with multiplicity n in
/// degree p contributes A[-p]^n. A sheaf lives in degree 0 only.
class GradedObject {
 public:
  using Piece = std::map<StableAtom, Integer>;

  GradedObject() = default;

  /// Adds `count` copies of `atom` in cohomological degree `degree`.
  GradedObject& add(const StableAtom& atom, std::int64_t degree = 0, const Integer& count = 1);

  bool empty() const { return pieces_.empty(); }
  bool is_sheaf() const { return pieces_.empty() || (pieces_.size() == 1 && pieces_.begin()->first == 0); }

  /// Every degree raised by `k`.
  GradedObject shifted(std::int64_t k) const;

  const std::map<std::int64_t, Piece>& pieces() const { return pieces_; }

  friend bool operator==(const GradedObject&, const GradedObject&) = default;

 private:
  std::map<std::int64_t, Piece> pieces_;
};

struct HomExt {
  Integer hom;
  Integer ext1;
  friend bool operator==(const HomExt&, const HomExt&) = default;
};

/// dim Hom(x, y) and dim Ext^1(x, y).
HomExt hom_ext_atoms(const StableAtom& x, const StableAtom& y);

/// Graded Hom dimensions: entry i is dim Hom_D(x, y[i]).
ExtProfile hom_ext_objects(const GradedObject& x, const GradedObject& y);

/// 0 if the transform of x is a sheaf in degree 0, 1 if it sits in degree 1.
int wit_index(const FMMatrix& m, const StableAtom& x);

/// The transformed sheaf of a single atom (always an atom) and its WIT index.
std::pair<StableAtom, int> transform_atom(const FMMatrix& m, const StableAtom& x);

/// Image of x under the transform with Chern action m. Labels are preserved.
GradedObject fm_transform(const FMMatrix& m, const GradedObject& x);

struct WitDecomposition {
  GradedObject wit0;  ///< subobject A
  GradedObject wit1;  ///< quotient B
};

/// Splits a sheaf into its WIT0 and WIT1 parts. Throws DomainError if x is
/// not concentrated in degree 0.
WitDecomposition wit_decompose(const FMMatrix& m, const GradedObject& x);

/// Checks Ext^i(x, y) == Ext^{i + wx - wy}(x^, y^) for every i.
bool parseval_check(const FMMatrix& m, const StableAtom& x, const StableAtom& y);

}  // namespace fmell

#endif  // FMELL_CURVE_CATEGORY_HPP
