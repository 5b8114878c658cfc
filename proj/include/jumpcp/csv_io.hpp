#pragma once

#include <iosfwd>
#include <string>

#include "jumpcp/increments.hpp"

namespace jumpcp {

// Writes the path as CSV with header "t,x", one row per grid point,
// full-precision doubles.
void write_path_csv(std::ostream& os, const SamplePath& path);
void write_path_csv(const std::string& filename, const SamplePath& path);

// Parses a "t,x" CSV into a SamplePath. The time column must be strictly
// increasing and equally spaced to 1e-9 relative; malformed rows, NaN values
// and irregular grids raise DataError.
SamplePath ingest_csv(std::istream& is);
SamplePath ingest_csv(const std::string& filename);

} // namespace jumpcp
