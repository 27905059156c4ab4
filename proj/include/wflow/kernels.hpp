#pragma once

// Dense row-major matrix and the small set of hot kernels used by the
// transport solvers (matrix-vector products, row/column log-sum-exp sweeps,
// elementwise kernel assembly). Every kernel exists twice: a serial
// reference in kernels::serial and an OpenMP version in kernels::omp.
// Both orders of summation are identical per output element (threads own
// whole rows/columns), so the two backends produce bit-identical results
// and the choice never affects program output.

#include <cstddef>
#include <string>
#include <vector>

namespace wflow {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }
  double* row(std::size_t i) { return data.data() + i * cols; }
};

enum class Backend { Serial, OpenMP };

namespace kernels {

Backend backend();
void set_backend(Backend b);
std::string backend_name();

// y[i] = sum_j A(i,j) * x[j]
void matvec(const Matrix& A, const std::vector<double>& x, std::vector<double>& y);
// y[j] = sum_i A(i,j) * x[i]
void matvec_transpose(const Matrix& A, const std::vector<double>& x, std::vector<double>& y);

// out[i] = log sum_j exp((q[j] - C(i,j)) / eps)   (row sweep)
void lse_rows(const Matrix& C, const std::vector<double>& q, double eps,
              std::vector<double>& out);
// out[j] = log sum_i exp((q[i] - C(i,j)) / eps)   (column sweep)
void lse_cols(const Matrix& C, const std::vector<double>& q, double eps,
              std::vector<double>& out);

// K(i,j) = exp(-C(i,j) / eps)
void exp_scale(const Matrix& C, double eps, Matrix& K);

namespace serial {
void matvec(const Matrix& A, const std::vector<double>& x, std::vector<double>& y);
void matvec_transpose(const Matrix& A, const std::vector<double>& x, std::vector<double>& y);
void lse_rows(const Matrix& C, const std::vector<double>& q, double eps, std::vector<double>& out);
void lse_cols(const Matrix& C, const std::vector<double>& q, double eps, std::vector<double>& out);
void exp_scale(const Matrix& C, double eps, Matrix& K);
}  // namespace serial

namespace omp {
void matvec(const Matrix& A, const std::vector<double>& x, std::vector<double>& y);
void matvec_transpose(const Matrix& A, const std::vector<double>& x, std::vector<double>& y);
void lse_rows(const Matrix& C, const std::vector<double>& q, double eps, std::vector<double>& out);
void lse_cols(const Matrix& C, const std::vector<double>& q, double eps, std::vector<double>& out);
void exp_scale(const Matrix& C, double eps, Matrix& K);
}  // namespace omp

}  // namespace kernels
}  // namespace wflow
