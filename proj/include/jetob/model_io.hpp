#pragma once

// Line-oriented model files:
//
//   # comment
//   dga <label>
//   manifold-dim <N>            (optional; must equal the top degree)
//   oriented yes|no             (optional)
//   provenance <free text>      (optional)
//   generator <name> <degree>   (odd degree; declaration order = basis order)
//   d <name> = <expression>     (generators without a d line are closed)

#include <string>
#include <string_view>
#include <vector>

#include "jetob/algebra.hpp"

namespace jetob {

struct ParseOptions {
    int max_generators = kMaxGeneratorsDefault;
};

/// Parses and validates. Errors carry the 1-based line number.
ModelPtr parse_model(std::string_view text, const ParseOptions& options = {});
ModelPtr load_model_file(const std::string& path, const ParseOptions& options = {});

std::string format_model(const DgaModel& model);

/// kodaira-thurston, torus-2, torus-3, torus-4, torus-6.
ModelPtr builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

/// Structural equality, metadata included.
bool same_model(const DgaModel& a, const DgaModel& b);

} // namespace jetob
