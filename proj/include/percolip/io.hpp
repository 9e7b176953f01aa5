#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "percolip/point_cloud.hpp"

namespace percolip {

// Shortest decimal that round-trips the value; infinities serialize as
// "inf"/"-inf" so CSV files are platform-stable.
std::string format_double(double v);
double parse_double(const std::string& token);

// Flat CSV, one point per row, header x1..xd.
void write_cloud_csv(std::ostream& os, const PointCloud& cloud);
void write_cloud_csv_file(const std::string& path, const PointCloud& cloud);
// Returns (dim, coords); accepts files with or without the header row.
std::pair<int, std::vector<double>> read_points_csv(std::istream& is);
std::pair<int, std::vector<double>> read_points_csv_file(const std::string& path);

// JSON envelope {dim, domain:{lo,hi}, seed, points:[[...]]}.
std::string cloud_to_json(const PointCloud& cloud);
PointCloud cloud_from_json(const std::string& text);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace percolip
