#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "edmc/types.hpp"

namespace edmc {

/// Shortest decimal form that round-trips the double exactly.
std::string format_double(double v);

/// Writes content to a temporary file in the target directory, then renames
/// it into place; a failed write never leaves a partial output behind.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// Matrix file: a "# edmc-matrix v1, n=<n>" comment line, then n dense CSV
// rows; an empty cell is a missing entry.
void save_matrix(const std::filesystem::path& path, const SquaredDistanceMatrix& d);
SquaredDistanceMatrix load_matrix(const std::filesystem::path& path);

struct LabeledPoints {
  PointConfiguration points;
  std::vector<std::string> labels;        // empty when no label column
  std::vector<std::string> column_names;  // feature columns only
};

// Points file: header row, numeric feature columns, optional trailing
// non-numeric label column.
void save_points(const std::filesystem::path& path, const PointConfiguration& x,
                 const std::vector<std::string>& labels = {},
                 const std::vector<std::string>& column_names = {});
LabeledPoints load_points(const std::filesystem::path& path);

// Tree file: "i,j,weight" header, one edge per row, 1-based vertex indices.
void save_tree(const std::filesystem::path& path, const SpanningTree& t);
SpanningTree load_tree(const std::filesystem::path& path);

}  // namespace edmc
