#include "fmell/curve_category.hpp"

#include <tuple>

#include "fmell/errors.hpp"

namespace fmell {

StableAtom::StableAtom(CurveClass cls, std::string label)
    : cls_(std::move(cls)), label_(std::move(label)) {
  const bool skyscraper = cls_.r == 0 && cls_.d == 1;
  const bool bundle = cls_.r > 0 && gcd(cls_.r, cls_.d) == 1;
  if (!skyscraper && !bundle) {
    throw DomainError("stable atom: r > 0 with gcd(r,d) = 1, or (r,d) = (0,1)",
                      "got (" + to_string(cls_.r) + "," + to_string(cls_.d) + ")");
  }
}

std::strong_ordering operator<=>(const StableAtom& x, const StableAtom& y) {
  if (x.cls_.r != y.cls_.r) {
    return x.cls_.r < y.cls_.r ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (x.cls_.d != y.cls_.d) {
    return x.cls_.d < y.cls_.d ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return x.label_ <=> y.label_;
}

GradedObject& GradedObject::add(const StableAtom& atom, std::int64_t degree,
                                const Integer& count) {
  if (count < 0) {
    throw DomainError("multiplicity >= 0", "got " + to_string(count));
  }
  if (count == 0) {
    return *this;
  }
  pieces_[degree][atom] += count;
  return *this;
}

GradedObject GradedObject::shifted(std::int64_t k) const {
  GradedObject out;
  for (const auto& [degree, piece] : pieces_) {
    out.pieces_.emplace(degree + k, piece);
  }
  return out;
}

HomExt hom_ext_atoms(const StableAtom& x, const StableAtom& y) {
  if (x.cls() == y.cls()) {
    // Simple, and Serre duality on a genus-1 curve gives Ext^1(x, x) = Hom(x, x).
    if (x.label() == y.label()) {
      return {1, 1};
    }
    return {0, 0};
  }
  // With skyscraper slope +infinity, slope(x) < slope(y) iff chi(x, y) > 0.
  const Integer chi = euler_curve(x.cls(), y.cls());
  if (chi > 0) {
    return {chi, 0};
  }
  return {0, -chi};
}

ExtProfile hom_ext_objects(const GradedObject& x, const GradedObject& y) {
  // Hom(A[-p], B[-q][i]) = Ext^{i+p-q}(A, B).
  ExtProfile out;
  for (const auto& [p, xs] : x.pieces()) {
    for (const auto& [q, ys] : y.pieces()) {
      for (const auto& [a, na] : xs) {
        for (const auto& [b, nb] : ys) {
          const HomExt he = hom_ext_atoms(a, b);
          const Integer weight = na * nb;
          if (he.hom != 0) {
            out[q - p] += weight * he.hom;
          }
          if (he.ext1 != 0) {
            out[1 + q - p] += weight * he.ext1;
          }
        }
      }
    }
  }
  return out;
}

int wit_index(const FMMatrix& m, const StableAtom& x) {
  // r' = 0 only for the class (a, -c), which goes to (0, -1): a WIT1 transform
  // of class (0, 1), since torsion sheaves have positive degree.
  const Integer r_image = m.c() * x.rank() + m.a() * x.degree();
  return r_image > 0 ? 0 : 1;
}

std::pair<StableAtom, int> transform_atom(const FMMatrix& m, const StableAtom& x) {
  const int index = wit_index(m, x);
  CurveClass image = transform_rd(m, x.cls());
  if (index == 1) {
    image.r = -image.r;
    image.d = -image.d;
  }
  return {StableAtom(std::move(image), x.label()), index};
}

GradedObject fm_transform(const FMMatrix& m, const GradedObject& x) {
  GradedObject out;
  for (const auto& [degree, piece] : x.pieces()) {
    for (const auto& [atom, count] : piece) {
      auto [image, index] = transform_atom(m, atom);
      out.add(image, degree + index, count);
    }
  }
  return out;
}

WitDecomposition wit_decompose(const FMMatrix& m, const GradedObject& x) {
  if (!x.is_sheaf()) {
    throw DomainError("object concentrated in degree 0",
                      "WIT decomposition applies to sheaves only");
  }
  WitDecomposition out;
  if (x.empty()) {
    return out;
  }
  for (const auto& [atom, count] : x.pieces().at(0)) {
    (wit_index(m, atom) == 0 ? out.wit0 : out.wit1).add(atom, 0, count);
  }
  return out;
}

bool parseval_check(const FMMatrix& m, const StableAtom& x, const StableAtom& y) {
  const auto [xt, wx] = transform_atom(m, x);
  const auto [yt, wy] = transform_atom(m, y);
  const HomExt before = hom_ext_atoms(x, y);
  const HomExt after = hom_ext_atoms(xt, yt);

  auto at = [](const HomExt& he, int i) -> Integer {
    if (i == 0) return he.hom;
    if (i == 1) return he.ext1;
    return 0;
  };
  // Ext^i vanishes outside [0, 1] on a curve, so indices -1..2 cover every
  // nonzero term on either side.
  for (int i = -1; i <= 2; ++i) {
    if (at(before, i) != at(after, i + wx - wy)) {
      return false;
    }
  }
  return true;
}

}  // namespace fmell
