#pragma once

#include <string>
#include <string_view>

#include "sqcheck/emodule.hpp"

namespace sqcheck {

// JSON dump of a module:
//   {"label": str, "max_degree": D,
//    "degrees": [{"degree": d, "dim": k, "labels": [str...]}...],
//    "q0": [[d, row, col]...], "q1": [[d, row, col]...]}
// Triples list the nonzero entries of the action matrices, sorted.
std::string dump_module_json(const EModule& m, int indent = -1);

// Inverse of dump_module_json. The result carries labels but no monomial
// basis. Throws DomainError on malformed input.
EModule load_module_json(std::string_view text);

} // namespace sqcheck
