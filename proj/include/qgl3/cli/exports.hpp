// Canonical JSON and LaTeX serializations of the exchange matrix, the two
// monodromy families, the central words, and the central log series.  All
// exports run over the symbolic scalar field.
#pragma once

#include "qgl3/loop/ktfactors.hpp"

#include <cstddef>
#include <string>

namespace qgl3 {

enum class ExportFormat { json, latex };

// Serializes one named object:
//   "R"          exchange-matrix components for the given grading
//   "M"          source monodromy with its central prefactor, entry by entry
//   "Mbar"       flipped monodromy with its central prefactor, entry by entry
//   "casimir:k"  k-th central word, k in 1..3, as a tagged word list
//   "F-series"   central log series coefficients up to the given order
// rep_name ("fund" or "tensor:n", n <= 3) selects the representation for
// M/Mbar; the abstract targets ignore it.  Throws std::invalid_argument on an
// unknown target or representation.
std::string export_target(const std::string& what, const std::string& rep_name,
                          const GradingSpec& s, std::size_t order, ExportFormat format);

}  // namespace qgl3
