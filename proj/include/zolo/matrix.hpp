#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "zolo/errors.hpp"

namespace zolo {

// Dense real matrix, column-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
        if (rows < 0 || cols < 0) throw data_error("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * rows_ + i]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * rows_ + i]; }

    double* col(int j) { return data_.data() + static_cast<std::size_t>(j) * rows_; }
    const double* col(int j) const { return data_.data() + static_cast<std::size_t>(j) * rows_; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : data_) s += v * v;
        return std::sqrt(s);
    }

    // FNV-1a over dims and entry bytes; identifies a matrix in reports.
    std::uint64_t checksum() const {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](const void* p, std::size_t n) {
            const unsigned char* b = static_cast<const unsigned char*>(p);
            for (std::size_t i = 0; i < n; ++i) {
                h ^= b[i];
                h *= 1099511628211ULL;
            }
        };
        std::int64_t r = rows_, c = cols_;
        mix(&r, sizeof r);
        mix(&c, sizeof c);
        mix(data_.data(), data_.size() * sizeof(double));
        return h;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

inline DenseMatrix operator-(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw data_error("matrix subtraction: dimension mismatch");
    DenseMatrix C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.data().size(); ++i) C.data()[i] = A.data()[i] - B.data()[i];
    return C;
}

// C = A^T B
inline DenseMatrix matmul_tn(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.rows() != B.rows()) throw data_error("matmul_tn: dimension mismatch");
    DenseMatrix C(A.cols(), B.cols());
    for (int j = 0; j < B.cols(); ++j) {
        const double* bj = B.col(j);
        for (int i = 0; i < A.cols(); ++i) {
            const double* ai = A.col(i);
            double s = 0.0;
            for (int r = 0; r < A.rows(); ++r) s += ai[r] * bj[r];
            C(i, j) = s;
        }
    }
    return C;
}

// C = A B
inline DenseMatrix matmul_nn(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.cols() != B.rows()) throw data_error("matmul_nn: dimension mismatch");
    DenseMatrix C(A.rows(), B.cols());
    for (int j = 0; j < B.cols(); ++j) {
        double* cj = C.col(j);
        for (int k = 0; k < A.cols(); ++k) {
            double bkj = B(k, j);
            if (bkj == 0.0) continue;
            const double* ak = A.col(k);
            for (int r = 0; r < A.rows(); ++r) cj[r] += ak[r] * bkj;
        }
    }
    return C;
}

// --- I/O -------------------------------------------------------------------
//
// Binary format: 8-byte magic "ZOLOMAT1", int64 rows, int64 cols,
// rows*cols doubles in row-major order, native little-endian.

inline constexpr char matrix_magic[8] = {'Z', 'O', 'L', 'O', 'M', 'A', 'T', '1'};

inline void save_matrix_binary(const DenseMatrix& A, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw data_error("cannot open for writing: " + path);
    f.write(matrix_magic, 8);
    std::int64_t r = A.rows(), c = A.cols();
    f.write(reinterpret_cast<const char*>(&r), 8);
    f.write(reinterpret_cast<const char*>(&c), 8);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            double v = A(i, j);
            f.write(reinterpret_cast<const char*>(&v), 8);
        }
    if (!f) throw data_error("write failed: " + path);
}

inline DenseMatrix load_matrix_binary(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw data_error("cannot open for reading: " + path);
    char magic[8];
    f.read(magic, 8);
    if (!f || std::memcmp(magic, matrix_magic, 8) != 0)
        throw data_error("bad matrix file magic: " + path);
    std::int64_t r = 0, c = 0;
    f.read(reinterpret_cast<char*>(&r), 8);
    f.read(reinterpret_cast<char*>(&c), 8);
    if (!f || r < 0 || c < 0 || r > (1 << 22) || c > (1 << 22))
        throw data_error("bad matrix dimensions in " + path);
    DenseMatrix A(static_cast<int>(r), static_cast<int>(c));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            double v;
            f.read(reinterpret_cast<char*>(&v), 8);
            A(i, j) = v;
        }
    if (!f) throw data_error("truncated matrix file: " + path);
    return A;
}

} // namespace zolo
