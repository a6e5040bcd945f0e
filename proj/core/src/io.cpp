#include "edmc/io.hpp"

#include <atomic>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace edmc {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  for (auto& cell : cells) {
    const auto begin = cell.find_first_not_of(" \t");
    const auto end = cell.find_last_not_of(" \t");
    cell = begin == std::string::npos ? "" : cell.substr(begin, end - begin + 1);
  }
  return cells;
}

bool parse_double(const std::string& cell, double& out) {
  const char* first = cell.data();
  const char* last = first + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

double parse_cell_or_throw(const std::string& cell, int row, int col,
                           const char* what) {
  double v = 0.0;
  if (!parse_double(cell, v))
    throw std::runtime_error(std::string(what) + ": non-numeric value '" + cell +
                             "' at row " + std::to_string(row) + ", column " +
                             std::to_string(col));
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  static std::atomic<unsigned> counter{0};
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  fs::path tmp = dir / (path.filename().string() + ".tmp" +
                        std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignore;
      fs::remove(tmp, ignore);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw std::runtime_error("cannot move output into place at " + path.string());
  }
}

void save_matrix(const std::filesystem::path& path, const SquaredDistanceMatrix& d) {
  const int n = d.order();
  std::ostringstream out;
  out << "# edmc-matrix v1, n=" << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ',';
      const double v = d(i, j);
      if (!is_missing(v)) out << format_double(v);
    }
    out << "\n";
  }
  atomic_write(path, out.str());
}

SquaredDistanceMatrix load_matrix(const std::filesystem::path& path) {
  const std::vector<std::string> lines = split_lines(read_file(path));
  if (lines.empty()) throw std::runtime_error("matrix file is empty: " + path.string());
  const std::string& header = lines[0];
  int n = -1;
  if (header.rfind("# edmc-matrix v1", 0) == 0) {
    const auto pos = header.find("n=");
    if (pos != std::string::npos) n = std::atoi(header.c_str() + pos + 2);
  }
  if (n <= 0)
    throw std::runtime_error("matrix file must start with '# edmc-matrix v1, n=<n>'");
  if (static_cast<int>(lines.size()) != n + 1)
    throw std::runtime_error("matrix file declares n=" + std::to_string(n) +
                             " but has " + std::to_string(lines.size() - 1) +
                             " data rows");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const std::vector<std::string> cells = split_cells(lines[i + 1]);
    if (static_cast<int>(cells.size()) != n)
      throw std::runtime_error("matrix row " + std::to_string(i + 1) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(n));
    for (int j = 0; j < n; ++j)
      m(i, j) = cells[j].empty()
                    ? missing_value()
                    : parse_cell_or_throw(cells[j], i + 1, j + 1, "matrix file");
  }
  return SquaredDistanceMatrix(std::move(m));
}

void save_points(const std::filesystem::path& path, const PointConfiguration& x,
                 const std::vector<std::string>& labels,
                 const std::vector<std::string>& column_names) {
  const int n = x.count(), p = x.dim();
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("save_points: one label per point required");
  if (!column_names.empty() && static_cast<int>(column_names.size()) != p)
    throw std::invalid_argument("save_points: one name per column required");
  std::ostringstream out;
  for (int k = 0; k < p; ++k) {
    if (k) out << ',';
    if (column_names.empty())
      out << 'c' << (k + 1);
    else
      out << column_names[k];
  }
  if (!labels.empty()) out << ",label";
  out << "\n";
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < p; ++k) {
      if (k) out << ',';
      out << format_double(x(i, k));
    }
    if (!labels.empty()) out << ',' << labels[i];
    out << "\n";
  }
  atomic_write(path, out.str());
}

LabeledPoints load_points(const std::filesystem::path& path) {
  const std::vector<std::string> lines = split_lines(read_file(path));
  if (lines.empty())
    throw std::runtime_error("points file is empty: " + path.string());
  const std::vector<std::string> header = split_cells(lines[0]);
  const int columns = static_cast<int>(header.size());
  const int rows = static_cast<int>(lines.size()) - 1;
  if (rows < 1) throw std::runtime_error("points file has no data rows");

  std::vector<std::vector<std::string>> cells(rows);
  for (int i = 0; i < rows; ++i) {
    cells[i] = split_cells(lines[i + 1]);
    if (static_cast<int>(cells[i].size()) != columns)
      throw std::runtime_error("points file row " + std::to_string(i + 1) +
                               " has " + std::to_string(cells[i].size()) +
                               " cells, expected " + std::to_string(columns));
  }

  // The trailing column is a label column when any of its cells fails to
  // parse as a number.
  bool last_is_label = false;
  for (int i = 0; i < rows && !last_is_label; ++i) {
    double v;
    if (!parse_double(cells[i][columns - 1], v)) last_is_label = true;
  }
  const int features = columns - (last_is_label ? 1 : 0);
  if (features < 1)
    throw std::runtime_error("points file has no numeric feature columns");

  LabeledPoints out{PointConfiguration(Matrix(1, 1)), {}, {}};
  Matrix m(rows, features);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < features; ++k)
      m(i, k) = parse_cell_or_throw(cells[i][k], i + 1, k + 1, "points file");
  out.points = PointConfiguration(std::move(m));
  if (last_is_label) {
    out.labels.reserve(rows);
    for (int i = 0; i < rows; ++i) out.labels.push_back(cells[i][columns - 1]);
  }
  out.column_names.assign(header.begin(), header.begin() + features);
  return out;
}

void save_tree(const std::filesystem::path& path, const SpanningTree& t) {
  std::ostringstream out;
  out << "i,j,weight\n";
  for (const auto& e : t.edges())
    out << (e.i + 1) << ',' << (e.j + 1) << ',' << format_double(e.weight) << "\n";
  atomic_write(path, out.str());
}

SpanningTree load_tree(const std::filesystem::path& path) {
  const std::vector<std::string> lines = split_lines(read_file(path));
  if (lines.empty() || split_cells(lines[0]) != std::vector<std::string>{"i", "j", "weight"})
    throw std::runtime_error("tree file must start with an 'i,j,weight' header");
  std::vector<TreeEdge> edges;
  int max_vertex = 0;
  for (size_t r = 1; r < lines.size(); ++r) {
    const std::vector<std::string> cells = split_cells(lines[r]);
    if (cells.size() != 3)
      throw std::runtime_error("tree file row " + std::to_string(r) +
                               " must have 3 cells");
    TreeEdge e;
    e.i = static_cast<int>(parse_cell_or_throw(cells[0], r, 1, "tree file")) - 1;
    e.j = static_cast<int>(parse_cell_or_throw(cells[1], r, 2, "tree file")) - 1;
    e.weight = parse_cell_or_throw(cells[2], r, 3, "tree file");
    max_vertex = std::max({max_vertex, e.i, e.j});
    edges.push_back(e);
  }
  return SpanningTree(max_vertex + 1, std::move(edges));
}

}  // namespace edmc
