// SPDX-License-Identifier: MIT
#include "fanogeo/fano.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fanogeo/lie_basis.hpp"

namespace fanogeo {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kImagTol = 1e-12;
constexpr double kPsdTol = 1e-10;

void check_shape(const DensityMatrix& rho, const char* who) {
  if (rho.levels < 2) throw std::invalid_argument(std::string(who) + ": levels must be >= 2");
  if (rho.qudits < 1) throw std::invalid_argument(std::string(who) + ": qudits must be >= 1");
  const int d = rho.dim();
  if (rho.matrix.rows() != d || rho.matrix.cols() != d)
    throw std::invalid_argument(std::string(who) + ": matrix must be " + std::to_string(d) +
                                "x" + std::to_string(d));
}

void check_shape(const FanoTensor& t, const char* who) {
  if (t.levels < 2) throw std::invalid_argument(std::string(who) + ": levels must be >= 2");
  if (t.qudits < 1) throw std::invalid_argument(std::string(who) + ": qudits must be >= 1");
  if (std::ssize(t.data) != t.size())
    throw std::invalid_argument(std::string(who) + ": data must have " +
                                std::to_string(t.size()) + " entries");
}

/// Applies the square matrix w to one mode of a tensor with `modes` indices of
/// range w.rows(), stored flat in row-major order (mode 0 most significant).
void apply_mode(std::vector<cplx>& t, const Eigen::MatrixXcd& w, int modes, int mode) {
  const int b = int(w.rows());
  const long long stride = ipow(b, modes - 1 - mode);
  const long long block = stride * b;
  const long long total = ipow(b, modes);
  std::vector<cplx> v(b), r(b);
  for (long long base = 0; base < total; base += block) {
    for (long long suf = 0; suf < stride; ++suf) {
      for (int j = 0; j < b; ++j) v[size_t(j)] = t[size_t(base + j * stride + suf)];
      for (int i = 0; i < b; ++i) {
        cplx acc = 0.0;
        for (int j = 0; j < b; ++j) acc += w(i, j) * v[size_t(j)];
        r[size_t(i)] = acc;
      }
      for (int j = 0; j < b; ++j) t[size_t(base + j * stride + suf)] = r[size_t(j)];
    }
  }
}

/// Coefficient-side transform: row i, column (a,b) -> levels * (e^i)_{b,a}.
Eigen::MatrixXcd forward_mode_matrix(int levels) {
  const auto& e = basis_elements(levels);
  const int n = levels, b2 = n * n;
  Eigen::MatrixXcd w(b2, b2);
  for (int i = 0; i < b2; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) w(i, a * n + b) = double(n) * e[size_t(i)](b, a);
  return w;
}

/// Matrix-side transform: row (a,b), column i -> (e^i)_{a,b}.
Eigen::MatrixXcd inverse_mode_matrix(int levels) {
  const auto& e = basis_elements(levels);
  const int n = levels, b2 = n * n;
  Eigen::MatrixXcd v(b2, b2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < b2; ++i) v(a * n + b, i) = e[size_t(i)](a, b);
  return v;
}

}  // namespace

FanoTensor decompose(const DensityMatrix& rho) {
  check_shape(rho, "decompose");
  const double herm = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermTol)
    throw std::invalid_argument("decompose: matrix is not Hermitian (deviation " +
                                std::to_string(herm) + ")");
  const double tdev = std::abs(rho.matrix.trace() - cplx(1.0));
  if (tdev > kTraceTol)
    throw std::invalid_argument("decompose: trace differs from 1 by " + std::to_string(tdev));

  const int n = rho.levels, m = rho.qudits, b2 = n * n;
  // Pack rho into a tensor with one composite index (a_l, b_l) per subsystem,
  // then rotate every mode into the coefficient basis.
  std::vector<cplx> t(size_t(ipow(b2, m)));
  std::vector<int> ra(m), rb(m), comp(m);
  const int d = rho.dim();
  for (int r = 0; r < d; ++r) {
    digits_from_flat(r, n, ra);
    for (int c = 0; c < d; ++c) {
      digits_from_flat(c, n, rb);
      for (int l = 0; l < m; ++l) comp[size_t(l)] = ra[size_t(l)] * n + rb[size_t(l)];
      t[size_t(flat_from_digits(comp, b2))] = rho.matrix(r, c);
    }
  }
  const Eigen::MatrixXcd w = forward_mode_matrix(n);
  for (int l = 0; l < m; ++l) apply_mode(t, w, m, l);

  FanoTensor out{n, m, {}};
  out.data.resize(t.size());
  double max_imag = 0.0;
  for (size_t i = 0; i < t.size(); ++i) {
    max_imag = std::max(max_imag, std::abs(t[i].imag()));
    out.data[i] = t[i].real();
  }
  if (max_imag > kImagTol)
    throw std::invalid_argument("decompose: coefficients have imaginary part " +
                                std::to_string(max_imag));
  // tr(rho) passed the check above, so the leading coefficient is 1 up to
  // rounding; pin it exactly.
  out.data[0] = 1.0;
  return out;
}

DensityMatrix reconstruct(const FanoTensor& d) {
  check_shape(d, "reconstruct");
  if (std::abs(d.data[0] - 1.0) > kTraceTol)
    throw std::invalid_argument("reconstruct: leading coefficient must be 1, got " +
                                std::to_string(d.data[0]));

  const int n = d.levels, m = d.qudits, b2 = n * n;
  std::vector<cplx> t(d.data.begin(), d.data.end());
  const Eigen::MatrixXcd v = inverse_mode_matrix(n);
  for (int l = 0; l < m; ++l) apply_mode(t, v, m, l);

  DensityMatrix rho{n, m, {}};
  const int dim = rho.dim();
  rho.matrix.resize(dim, dim);
  std::vector<int> ra(m), rb(m), comp(m);
  for (int r = 0; r < dim; ++r) {
    digits_from_flat(r, n, ra);
    for (int c = 0; c < dim; ++c) {
      digits_from_flat(c, n, rb);
      for (int l = 0; l < m; ++l) comp[size_t(l)] = ra[size_t(l)] * n + rb[size_t(l)];
      rho.matrix(r, c) = t[size_t(flat_from_digits(comp, b2))];
    }
  }
  return rho;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  check_shape(rho, "partial_trace");
  const int m = rho.qudits, n = rho.levels;
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep list must be nonempty");
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= m)
      throw std::invalid_argument("partial_trace: subsystem index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep list must be strictly increasing");
  }
  std::vector<int> traced;
  for (int l = 0; l < m; ++l)
    if (std::find(keep.begin(), keep.end(), l) == keep.end()) traced.push_back(l);

  const int km = int(keep.size());
  DensityMatrix out{n, km, {}};
  const int kd = out.dim();
  out.matrix = Eigen::MatrixXcd::Zero(kd, kd);

  const long long tcount = ipow(n, int(traced.size()));
  std::vector<int> kr(km), kc(km), tv(traced.size());
  std::vector<int> full_r(m), full_c(m);
  for (int r = 0; r < kd; ++r) {
    digits_from_flat(r, n, kr);
    for (int c = 0; c < kd; ++c) {
      digits_from_flat(c, n, kc);
      cplx acc = 0.0;
      for (long long t = 0; t < tcount; ++t) {
        digits_from_flat(t, n, tv);
        for (int i = 0; i < km; ++i) {
          full_r[size_t(keep[size_t(i)])] = kr[size_t(i)];
          full_c[size_t(keep[size_t(i)])] = kc[size_t(i)];
        }
        for (size_t i = 0; i < traced.size(); ++i) {
          full_r[size_t(traced[i])] = tv[i];
          full_c[size_t(traced[i])] = tv[i];
        }
        acc += rho.matrix(flat_from_digits(full_r, n), flat_from_digits(full_c, n));
      }
      out.matrix(r, c) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

Eigen::VectorXd bloch_of(const DensityMatrix& rho) {
  check_shape(rho, "bloch_of");
  if (rho.qudits != 1) throw std::invalid_argument("bloch_of: expected a single-qudit state");
  const double herm = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermTol)
    throw std::invalid_argument("bloch_of: matrix is not Hermitian (deviation " +
                                std::to_string(herm) + ")");
  const auto& sigma = generators(rho.levels);
  Eigen::VectorXd a(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i) a[long(i)] = (rho.matrix * sigma[i]).trace().real();
  return a;
}

Eigen::VectorXd marginal_bloch(const FanoTensor& d, int subsystem) {
  check_shape(d, "marginal_bloch");
  if (subsystem < 0 || subsystem >= d.qudits)
    throw std::invalid_argument("marginal_bloch: subsystem index out of range");
  const int b2 = d.side();
  Eigen::VectorXd a(b2 - 1);
  std::vector<int> idx(size_t(d.qudits), 0);
  for (int i = 1; i < b2; ++i) {
    idx[size_t(subsystem)] = i;
    a[i - 1] = d(idx);
  }
  return a;
}

ValidationReport validate(const DensityMatrix& rho) {
  check_shape(rho, "validate");
  ValidationReport rep;
  rep.hermiticity_dev = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  rep.trace_dev = std::abs(rho.matrix.trace() - cplx(1.0));
  const Eigen::MatrixXcd herm = (rho.matrix + rho.matrix.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  rep.hermitian = rep.hermiticity_dev <= kHermTol;
  rep.unit_trace = rep.trace_dev <= kTraceTol;
  rep.positive_semidefinite = rep.min_eigenvalue >= -kPsdTol;
  rep.valid = rep.hermitian && rep.unit_trace && rep.positive_semidefinite;
  return rep;
}

}  // namespace fanogeo
