#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "zolo/errors.hpp"
#include "zolo/matrix.hpp"
#include "zolo/rng.hpp"
#include "zolo/version.hpp"

// CSV output: RFC-4180-style rows, '.' decimal point, scientific notation with
// 17 significant digits so every double round-trips losslessly.  Every file
// starts with one comment line recording version, seed, bound variant, and the
// RNG, followed by a header row.  Identical seed and config must reproduce the
// bytes exactly.

namespace zolo {

inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_int(long long v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", v);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(const std::string& path, std::uint64_t seed, const std::string& variant)
        : f_(path) {
        if (!f_) throw data_error("cannot open CSV for writing: " + path);
        f_ << "# zolo " << version_string << ", seed=" << seed << ", variant=" << variant
           << ", rng=" << Rng::algorithm_name << "\n";
    }

    void header(const std::vector<std::string>& names) { row(names); }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) f_ << ',';
            f_ << cells[i];
        }
        f_ << '\n';
    }

private:
    std::ofstream f_;
};

// Matrix CSV: "# zolomat <rows> <cols>" then one CSV row per matrix row.
inline void save_matrix_csv(const DenseMatrix& A, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw data_error("cannot open for writing: " + path);
    f << "# zolomat " << A.rows() << ' ' << A.cols() << '\n';
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) {
            if (j) f << ',';
            f << csv_num(A(i, j));
        }
        f << '\n';
    }
}

inline DenseMatrix load_matrix_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw data_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(f, line)) throw data_error("empty matrix CSV: " + path);
    int rows = 0, cols = 0;
    if (std::sscanf(line.c_str(), "# zolomat %d %d", &rows, &cols) != 2)
        throw data_error("matrix CSV missing '# zolomat rows cols' line: " + path);
    if (rows < 0 || cols < 0) throw data_error("bad dimensions in " + path);
    DenseMatrix A(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!std::getline(f, line)) throw data_error("truncated matrix CSV: " + path);
        const char* p = line.c_str();
        for (int j = 0; j < cols; ++j) {
            char* end = nullptr;
            A(i, j) = std::strtod(p, &end);
            if (end == p) throw data_error("bad number in matrix CSV: " + path);
            p = end;
            if (*p == ',') ++p;
        }
    }
    return A;
}

} // namespace zolo
