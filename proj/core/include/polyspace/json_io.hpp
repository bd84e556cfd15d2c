#pragma once

#include <string>

#include "polyspace/polygon.hpp"
#include "polyspace/quotient.hpp"
#include "polyspace/verify.hpp"

namespace polyspace::io {

/// Polygon document:
/// {"edge_lengths": [l_1,...,l_n], "ambient_dim": d, "vertices": [[x,...], ...]}
/// with n-1 vertex arrays of length d. Numbers round-trip IEEE-754 doubles.
std::string to_json(const Polygon& p);
Polygon polygon_from_json(const std::string& text);

/// ModuliPoint document:
/// {"edge_lengths": [...], "ambient_dim": d, "rank": k,
///  "orientation": 1|-1|null, "gram": [[...], ...]}
std::string to_json(const quotient::ModuliPoint& mp);
quotient::ModuliPoint moduli_point_from_json(const std::string& text);

/// ExperimentReport as a single JSON object. `include_elapsed` = false
/// drops the elapsed_ms field for byte-exact reproducibility checks.
std::string to_json(const verify::ExperimentReport& report, bool include_elapsed = true);

/// One CSV summary row for a report (no header):
/// name,ell,d,trials,failures,seed,elapsed_ms,pass
std::string to_csv_row(const verify::ExperimentReport& report);
const char* csv_header();

}  // namespace polyspace::io
