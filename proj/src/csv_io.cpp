#include "jumpcp/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace jumpcp {

void write_path_csv(std::ostream& os, const SamplePath& path) {
    os << "t,x\n";
    char buf[64];
    for (std::size_t i = 0; i < path.values.size(); ++i) {
        double t = static_cast<double>(i) * path.delta_n;
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", t, path.values[i]);
        os << buf;
    }
}

void write_path_csv(const std::string& filename, const SamplePath& path) {
    std::ofstream os(filename);
    if (!os) throw DataError("cannot open for writing: " + filename);
    write_path_csv(os, path);
}

SamplePath ingest_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw DataError("csv: empty file");
    // Tolerate an optional BOM and surrounding spaces in the header.
    if (line.size() >= 3 && line.compare(0, 3, "\xef\xbb\xbf") == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,x") throw DataError("csv: expected header 't,x', got '" + line + "'");

    std::vector<double> ts, xs;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const char* s = line.c_str();
        char* end = nullptr;
        double t = std::strtod(s, &end);
        if (end == s || *end != ',')
            throw DataError("csv: malformed row at line " + std::to_string(lineno));
        const char* s2 = end + 1;
        double x = std::strtod(s2, &end);
        if (end == s2 || *end != '\0')
            throw DataError("csv: malformed row at line " + std::to_string(lineno));
        if (std::isnan(t) || std::isnan(x))
            throw DataError("csv: NaN value at line " + std::to_string(lineno));
        ts.push_back(t);
        xs.push_back(x);
    }
    if (ts.size() < 2) throw DataError("csv: need at least two observations");

    double delta = ts[1] - ts[0];
    if (!(delta > 0.0)) throw DataError("csv: time column must be strictly increasing");
    double scale = std::max(std::abs(ts.back()), delta);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double expected = ts[0] + static_cast<double>(i) * delta;
        if (std::abs(ts[i] - expected) > 1e-9 * scale)
            throw DataError("csv: irregular time grid at line " + std::to_string(i + 2));
        if (i > 0 && !(ts[i] > ts[i - 1]))
            throw DataError("csv: duplicated or decreasing timestamp at line " +
                            std::to_string(i + 2));
    }

    SamplePath path;
    path.delta_n = delta;
    path.values = std::move(xs);
    path.config_hash = fnv1a(path.values.data(), path.values.size() * sizeof(double));
    return path;
}

SamplePath ingest_csv(const std::string& filename) {
    std::ifstream is(filename);
    if (!is) throw DataError("cannot open: " + filename);
    return ingest_csv(is);
}

} // namespace jumpcp
