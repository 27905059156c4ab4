#include "wflow/kernels.hpp"

#include <atomic>
#include <cmath>
#include <limits>

namespace wflow::kernels {

namespace {
std::atomic<Backend> g_backend{Backend::OpenMP};
}

Backend backend() { return g_backend.load(std::memory_order_relaxed); }
void set_backend(Backend b) { g_backend.store(b, std::memory_order_relaxed); }
std::string backend_name() { return backend() == Backend::Serial ? "serial" : "openmp"; }

namespace serial {

void matvec(const Matrix& A, const std::vector<double>& x, std::vector<double>& y) {
  y.resize(A.rows);
  for (std::size_t i = 0; i < A.rows; ++i) {
    const double* a = A.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < A.cols; ++j) s += a[j] * x[j];
    y[i] = s;
  }
}

void matvec_transpose(const Matrix& A, const std::vector<double>& x, std::vector<double>& y) {
  y.resize(A.cols);
  // column-owned loop keeps the per-element summation order fixed
  for (std::size_t j = 0; j < A.cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows; ++i) s += A(i, j) * x[i];
    y[j] = s;
  }
}

void lse_rows(const Matrix& C, const std::vector<double>& q, double eps, std::vector<double>& out) {
  out.resize(C.rows);
  for (std::size_t i = 0; i < C.rows; ++i) {
    const double* c = C.row(i);
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < C.cols; ++j) m = std::max(m, (q[j] - c[j]) / eps);
    double s = 0.0;
    for (std::size_t j = 0; j < C.cols; ++j) s += std::exp((q[j] - c[j]) / eps - m);
    out[i] = m + std::log(s);
  }
}

void lse_cols(const Matrix& C, const std::vector<double>& q, double eps, std::vector<double>& out) {
  out.resize(C.cols);
  for (std::size_t j = 0; j < C.cols; ++j) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < C.rows; ++i) m = std::max(m, (q[i] - C(i, j)) / eps);
    double s = 0.0;
    for (std::size_t i = 0; i < C.rows; ++i) s += std::exp((q[i] - C(i, j)) / eps - m);
    out[j] = m + std::log(s);
  }
}

void exp_scale(const Matrix& C, double eps, Matrix& K) {
  K.rows = C.rows;
  K.cols = C.cols;
  K.data.resize(C.data.size());
  for (std::size_t k = 0; k < C.data.size(); ++k) K.data[k] = std::exp(-C.data[k] / eps);
}

}  // namespace serial

namespace omp {

void matvec(const Matrix& A, const std::vector<double>& x, std::vector<double>& y) {
  y.resize(A.rows);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(A.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double* a = A.row(static_cast<std::size_t>(i));
    double s = 0.0;
    for (std::size_t j = 0; j < A.cols; ++j) s += a[j] * x[j];
    y[static_cast<std::size_t>(i)] = s;
  }
}

void matvec_transpose(const Matrix& A, const std::vector<double>& x, std::vector<double>& y) {
  y.resize(A.cols);
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(A.cols);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows; ++i) s += A(i, static_cast<std::size_t>(j)) * x[i];
    y[static_cast<std::size_t>(j)] = s;
  }
}

void lse_rows(const Matrix& C, const std::vector<double>& q, double eps, std::vector<double>& out) {
  out.resize(C.rows);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(C.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double* c = C.row(static_cast<std::size_t>(i));
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < C.cols; ++j) m = std::max(m, (q[j] - c[j]) / eps);
    double s = 0.0;
    for (std::size_t j = 0; j < C.cols; ++j) s += std::exp((q[j] - c[j]) / eps - m);
    out[static_cast<std::size_t>(i)] = m + std::log(s);
  }
}

void lse_cols(const Matrix& C, const std::vector<double>& q, double eps, std::vector<double>& out) {
  out.resize(C.cols);
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(C.cols);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < C.rows; ++i)
      mx = std::max(mx, (q[i] - C(i, static_cast<std::size_t>(j))) / eps);
    double s = 0.0;
    for (std::size_t i = 0; i < C.rows; ++i)
      s += std::exp((q[i] - C(i, static_cast<std::size_t>(j))) / eps - mx);
    out[static_cast<std::size_t>(j)] = mx + std::log(s);
  }
}

void exp_scale(const Matrix& C, double eps, Matrix& K) {
  K.rows = C.rows;
  K.cols = C.cols;
  K.data.resize(C.data.size());
  const std::ptrdiff_t sz = static_cast<std::ptrdiff_t>(C.data.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < sz; ++k)
    K.data[static_cast<std::size_t>(k)] = std::exp(-C.data[static_cast<std::size_t>(k)] / eps);
}

}  // namespace omp

void matvec(const Matrix& A, const std::vector<double>& x, std::vector<double>& y) {
  backend() == Backend::Serial ? serial::matvec(A, x, y) : omp::matvec(A, x, y);
}
void matvec_transpose(const Matrix& A, const std::vector<double>& x, std::vector<double>& y) {
  backend() == Backend::Serial ? serial::matvec_transpose(A, x, y)
                               : omp::matvec_transpose(A, x, y);
}
void lse_rows(const Matrix& C, const std::vector<double>& q, double eps, std::vector<double>& out) {
  backend() == Backend::Serial ? serial::lse_rows(C, q, eps, out) : omp::lse_rows(C, q, eps, out);
}
void lse_cols(const Matrix& C, const std::vector<double>& q, double eps, std::vector<double>& out) {
  backend() == Backend::Serial ? serial::lse_cols(C, q, eps, out) : omp::lse_cols(C, q, eps, out);
}
void exp_scale(const Matrix& C, double eps, Matrix& K) {
  backend() == Backend::Serial ? serial::exp_scale(C, eps, K) : omp::exp_scale(C, eps, K);
}

}  // namespace wflow::kernels
