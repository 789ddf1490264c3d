#pragma once

// Data files compiled into the library (fixture algebras, SL4 block tables).

#include <string>
#include <vector>

#include "qhrigid/representation.hpp"

namespace qhr {

const std::string& bundled_file(const std::string& name);
std::vector<std::string> bundled_files();

/// Builds the algebra in a .alg file; a name that is not an existing file but
/// matches a bundled file ("sl2block.alg" or "sl2block") loads the bundled copy.
AlgebraSpec load_algebra_spec(const std::string& path_or_name);
/// A non-zero `characteristic` replaces the field of the file.
AlgebraPtr load_algebra(const std::string& path_or_name, unsigned long characteristic = 0);

}  // namespace qhr
