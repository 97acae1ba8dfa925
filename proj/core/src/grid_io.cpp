#include "tfbjn/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "tfbjn/errors.hpp"

namespace tfbjn {

void save_grid_csv(const Grid2D& g, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  char buf[192];
  std::snprintf(buf, sizeof buf, "# rows=%zu cols=%zu\n", g.rows(), g.cols());
  f << buf;
  std::snprintf(buf, sizeof buf, "# axis1 start=%.17g step=%.17g unit=%s\n", g.axis1().start,
                g.axis1().step, g.axis1().unit.c_str());
  f << buf;
  std::snprintf(buf, sizeof buf, "# axis2 start=%.17g step=%.17g unit=%s\n", g.axis2().start,
                g.axis2().step, g.axis2().unit.c_str());
  f << buf;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const cplx* row = g.row(i);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g\n", i, j, row[j].real(), row[j].imag());
      f << buf;
    }
  }
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

Grid2D load_grid_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path.string());
  std::string line;
  std::size_t lineno = 0;

  auto next = [&](const char* what) {
    if (!std::getline(f, line)) throw FormatError(std::string("missing ") + what, lineno + 1);
    ++lineno;
  };

  next("dims header");
  std::size_t rows, cols;
  if (std::sscanf(line.c_str(), "# rows=%zu cols=%zu", &rows, &cols) != 2)
    throw FormatError("bad dims header", lineno);

  Axis ax[2];
  for (int a = 0; a < 2; ++a) {
    next("axis header");
    char unit[32] = {0};
    char tag[8] = {0};
    int got = std::sscanf(line.c_str(), "# %7s start=%lg step=%lg unit=%31s", tag, &ax[a].start,
                          &ax[a].step, unit);
    if (got < 3) throw FormatError("bad axis header", lineno);
    ax[a].unit = unit;
  }

  Grid2D g(rows, cols, ax[0], ax[1]);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      next("grid row");
      std::size_t ri, rj;
      double re, im;
      if (std::sscanf(line.c_str(), "%zu,%zu,%lg,%lg", &ri, &rj, &re, &im) != 4 || ri != i ||
          rj != j)
        throw FormatError("bad grid row '" + line + "'", lineno);
      g(i, j) = {re, im};
    }
  }
  return g;
}

std::pair<double, double> real_range(const Grid2D& g) {
  double lo = g.values().front().real(), hi = lo;
  for (const auto& v : g.values()) {
    lo = std::min(lo, v.real());
    hi = std::max(hi, v.real());
  }
  return {lo, hi};
}

std::pair<double, double> save_grid_pgm16(const Grid2D& g, const std::filesystem::path& path) {
  auto [lo, hi] = real_range(g);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << "P5\n" << g.cols() << " " << g.rows() << "\n65535\n";
  const double span = hi - lo;
  std::vector<unsigned char> rowbuf(2 * g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const cplx* row = g.row(i);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      unsigned v = 0;
      if (span > 0.0) {
        double t = (row[j].real() - lo) / span;
        v = static_cast<unsigned>(std::lround(t * 65535.0));
        if (v > 65535) v = 65535;
      }
      rowbuf[2 * j] = static_cast<unsigned char>(v >> 8);  // big-endian per PGM
      rowbuf[2 * j + 1] = static_cast<unsigned char>(v & 0xff);
    }
    f.write(reinterpret_cast<const char*>(rowbuf.data()), static_cast<std::streamsize>(rowbuf.size()));
  }
  if (!f) throw std::runtime_error("write failed: " + path.string());
  return {lo, hi};
}

}  // namespace tfbjn
