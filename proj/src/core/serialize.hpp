#pragma once

#include <string>
#include <string_view>

#include "core/series.hpp"
#include "core/stat_matrix.hpp"

namespace pavcf {

/// Matrix document: {"rows": R, "cols": K, "entries": [[i, j, value], ...]}
/// with 1-based indices. Zero values are dropped; duplicate cells rejected.
stat_matrix matrix_from_json(std::string_view text);
std::string matrix_to_json(const stat_matrix& m);

/// Series document: a list with one element per grade,
///   {"grade": d, "terms": [{"exponents": {"q2": 1, ...}, "coefficient": "42"}, ...]}
/// Terms follow the canonical term order; only nonzero exponents appear;
/// coefficients are decimal strings (they are arbitrary-precision integers).
std::string series_to_json(const graded_series& s);

} // namespace pavcf
