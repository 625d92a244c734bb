#ifndef FMELL_LITERAL_HPP
#define FMELL_LITERAL_HPP

// Text forms used on the command line.
//
//   object  := '0' | term ('+' term)*
//   term    := [count '*'] '(' int ',' int [',' label] ')' ['[' int ']']
//   matrix  := int ',' int ',' int ',' int          -- row-major c,a,d,b
//   vector  := int (',' int)*
//   class   := int ';' vector ';' int              -- r;c1;c2
//
// count >= 1, an omitted degree is 0, labels are [A-Za-z0-9_]+. '0' is the
// zero object. Whitespace between tokens is ignored.

#include <optional>
#include <string>
#include <string_view>

#include "fmell/curve_category.hpp"
#include "fmell/integer.hpp"
#include "fmell/lattice.hpp"

namespace fmell {

Integer parse_integer(std::string_view text);

GradedObject parse_object(std::string_view text);
std::string render_object(const GradedObject& x);

/// A literal that denotes exactly one atom in degree 0 with multiplicity 1.
StableAtom parse_atom(std::string_view text);
std::string render_atom(const StableAtom& x);

FMMatrix parse_matrix(std::string_view text, std::optional<Integer> lambda = std::nullopt);
std::string render_matrix(const FMMatrix& m);

VectorZ parse_vector(std::string_view text);
std::string render_vector(const VectorZ& v);

SurfaceClass parse_surface_class(std::string_view text);
std::string render_surface_class(const SurfaceClass& x);

/// "{i:dim,...}" in increasing i.
std::string render_profile(const ExtProfile& p);

}  // namespace fmell

#endif  // FMELL_LITERAL_HPP
