#pragma once

#include <filesystem>
#include <string>

#include "latmat/cone.hpp"
#include "latmat/structure.hpp"

namespace latmat {

// Matrix files: {"ring": "int|rat|quad2", "n": <size>, "rows": [[entry
// strings]]}. Entries use the element encodings: integers in decimal,
// rationals "p/q" (q omitted when 1), Z[sqrt(2)] elements "a+b*s2",
// fractions with a "/denominator" suffix.
std::string mat_to_json(const Mat& m);
Mat mat_from_json(const std::string& text);            // ParseError with location

// Cone files wrap the generator matrix under "cone_A"; parsing also
// validates the cone.
std::string cone_to_json(const ConeA& cone);
ConeA cone_from_json(const std::string& text);

// Structure data files: {"ring", "n", "H", "D", "Q"} with row arrays.
std::string structure_to_json(const StructureData& s);
StructureData structure_from_json(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

Mat load_mat(const std::filesystem::path& path);
ConeA load_cone(const std::filesystem::path& path);
StructureData load_structure(const std::filesystem::path& path);

}  // namespace latmat
