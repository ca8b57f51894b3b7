#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "tenfold/classifier.hpp"
#include "tenfold/ensembles.hpp"

namespace tenfold {

inline constexpr int schema_version = 1;

// Shortest round-trip decimal formatting of a double.
std::string format_double(double v);

// Matrix as a flat row-major array of [re, im] pairs.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, Eigen::Index rows,
                        Eigen::Index cols);

// Matrix as nested rows of [re, im] pairs (self-describing shape).
nlohmann::json matrix_to_json_rows(const Matrix& m);
Matrix matrix_from_json_rows(const nlohmann::json& j);

// SymmetryData schema:
// { "dim": int, "g0_generators": [matrix], "t": {"w": matrix} | null,
//   "c": {"w": matrix} | null, "chirality": matrix | null, "nambu": bool }
nlohmann::json symmetry_data_to_json(const SymmetryData& data);
SymmetryData symmetry_data_from_json(const nlohmann::json& j);

// CSV "i,j,re,im" with one entry per line; exact decimal round-trip.
void write_matrix_csv(std::ostream& os, const Matrix& m);
Matrix read_matrix_csv(std::istream& is);

nlohmann::json classify_report_to_json(const ClassifyReport& report);

}  // namespace tenfold
