#ifndef FMELL_GEOMETRY_FILE_HPP
#define FMELL_GEOMETRY_FILE_HPP

// Geometry files are a TOML subset: `key = value` lines, '#' comments, values
// are integers or (nested) arrays of integers; arrays may span lines.
//
//   rank = 2
//   gram = [[-1, 1], [1, 0]]
//   f    = [0, 1]
//   K    = [0, -1]
//   chiO = 1
//   q    = 0
//
// lambdaX is derived from gram and f and is rejected if present.

#include <string>
#include <string_view>
#include <vector>

#include "fmell/lattice.hpp"

namespace fmell {

SurfaceGeometry parse_geometry(std::string_view text);

SurfaceGeometry read_geometry_file(const std::string& path);

/// Names accepted by load_geometry as "preset:<name>".
std::vector<std::string> geometry_preset_names();

/// File text of a bundled preset; throws DomainError for unknown names.
std::string_view geometry_preset_text(std::string_view name);

/// "preset:<name>" or a file path.
SurfaceGeometry load_geometry(const std::string& source);

}  // namespace fmell

#endif  // FMELL_GEOMETRY_FILE_HPP
