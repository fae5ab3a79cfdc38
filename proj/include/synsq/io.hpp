#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "synsq/reconstruct.hpp"
#include "synsq/signal.hpp"
#include "synsq/squeeze.hpp"
#include "synsq/testsignals.hpp"

namespace synsq {

// Two numeric columns (time, value). Blank lines and lines starting with '#'
// are skipped; the first remaining line may be a header. Throws ParseError.
struct SeriesTable {
    std::vector<double> times;
    std::vector<double> values;
};

SeriesTable parse_series_csv(std::istream& in);
SeriesTable read_series_csv(const std::string& path);

struct LoadedSeries {
    UniformSeries series;
    // True when the timestamps were irregular and went through the spline.
    bool resampled = false;
};

// Uniform timestamps (every step within 1e-6 of the mean step) are taken as
// they are; anything else is resampled with a not-a-knot spline at the mean
// step.
LoadedSeries to_uniform(const SeriesTable& table);
LoadedSeries load_series(const std::string& path);

void write_series_csv(std::ostream& out, const UniformSeries& series, const std::string& value_name = "value");
void write_series_csv(std::ostream& out, const NonuniformSeries& series, const std::string& value_name = "value");

// t, then value_k, if_k, amplitude_k for every component. `note` lines are
// written first as '#' comments.
void write_truth_csv(std::ostream& out, const std::vector<double>& times,
                     const std::vector<ComponentTruth>& components, const std::string& note = "");

// |T| with the times in the first row and the bin frequencies in the first
// column.
void write_sst_csv(std::ostream& out, const SstPlane& sst);

// Binary 8-bit grey map of 20 log10 |T|: the top `dynamic_range_db` below the
// peak map linearly onto 1..255, anything lower (and exact zeros) onto 0.
// Row 0 of the image is the highest frequency.
void write_pgm(std::ostream& out, const SstPlane& sst, double dynamic_range_db = 80.0);

// Lossless plane file: a text header of key=value lines followed by the
// complex coefficients as little-endian doubles.
void write_sst_plane(std::ostream& out, const SstPlane& sst);
SstPlane read_sst_plane(std::istream& in);

// time, frequency of the ridge bin.
void write_ridge_csv(std::ostream& out, const SstPlane& sst, const Ridge& ridge);

}  // namespace synsq
