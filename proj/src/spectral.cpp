#include "sharpineq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "sharpineq/errors.hpp"
#include "sharpineq/extremal.hpp"
#include "sharpineq/numeric.hpp"

namespace sharp {

using cd = std::complex<double>;

Geometry Geometry::cylinder(double half_length, int y_modes) {
  if (!(half_length > 0.0)) throw DomainError("cylinder half-length must be positive");
  if (y_modes < 1) throw DomainError("cylinder needs at least one y-mode");
  return {GeometryKind::Cylinder, 0.0, half_length, y_modes};
}

std::string Geometry::name() const {
  switch (kind) {
    case GeometryKind::Circle: return "circle";
    case GeometryKind::Torus2: return "torus2";
    case GeometryKind::Cylinder: return "cylinder";
  }
  return "";
}

// ---------------------------------------------------------------------------
// MatrixPotential

namespace {

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<cd> flatten(const Eigen::MatrixXcd& v) {
  return std::vector<cd>(v.data(), v.data() + v.size());
}

}  // namespace

MatrixPotential::MatrixPotential(GeometryKind kind, int dimension, std::vector<int> shape,
                                 double half_length, std::vector<cd> samples)
    : kind_(kind), m_(dimension), shape_(std::move(shape)), half_length_(half_length),
      samples_(std::move(samples)) {
  if (m_ < 1) throw InputError("potential dimension must be positive");
  const std::size_t axes = kind_ == GeometryKind::Circle ? 1 : 2;
  if (shape_.size() != axes) throw InputError("potential grid has the wrong number of axes");
  for (int s : shape_)
    if (s < 2) throw InputError("potential grid needs at least 2 points per axis");
  if (kind_ == GeometryKind::Cylinder && !(half_length_ > 0.0))
    throw InputError("cylinder potential needs a positive half-length");
  if (long(samples_.size()) != point_count() * m_ * m_)
    throw InputError("potential sample count does not match grid and dimension");
  for (long i = 0; i < point_count(); ++i) {
    Eigen::Map<Eigen::MatrixXcd> v(samples_.data() + i * m_ * m_, m_, m_);
    const double scale = std::max(1.0, v.norm());
    if ((v - v.adjoint()).norm() > 1e-12 * scale) throw InputError("potential sample is not Hermitian");
    Eigen::MatrixXcd h = 0.5 * (v + v.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXd mu = es.eigenvalues();
    if (mu.minCoeff() < -1e-12 * scale) throw InputError("potential sample is not positive semidefinite");
    if (mu.minCoeff() < 0.0) {
      mu = mu.cwiseMax(0.0);
      h = es.eigenvectors() * mu.asDiagonal() * es.eigenvectors().adjoint();
    }
    v = h;
  }
}

MatrixPotential MatrixPotential::circle(int dimension, int points, const Sampler1& f) {
  std::vector<cd> s;
  s.reserve(std::size_t(points) * dimension * dimension);
  for (int p = 0; p < points; ++p) {
    const Eigen::MatrixXcd v = f(2.0 * kPi * p / points);
    if (v.rows() != dimension || v.cols() != dimension) throw InputError("sampler returned wrong size");
    for (auto z : flatten(v)) s.push_back(z);
  }
  return MatrixPotential(GeometryKind::Circle, dimension, {points}, 0.0, std::move(s));
}

MatrixPotential MatrixPotential::torus(int dimension, int px, int py, const Sampler2& f) {
  std::vector<cd> s;
  s.reserve(std::size_t(px) * py * dimension * dimension);
  for (int q = 0; q < py; ++q)
    for (int p = 0; p < px; ++p) {
      const Eigen::MatrixXcd v = f(2.0 * kPi * p / px, 2.0 * kPi * q / py);
      if (v.rows() != dimension || v.cols() != dimension) throw InputError("sampler returned wrong size");
      for (auto z : flatten(v)) s.push_back(z);
    }
  return MatrixPotential(GeometryKind::Torus2, dimension, {px, py}, 0.0, std::move(s));
}

MatrixPotential MatrixPotential::cylinder(int dimension, int px, int py, double half_length,
                                          const Sampler2& f) {
  std::vector<cd> s;
  s.reserve(std::size_t(px) * py * dimension * dimension);
  for (int q = 0; q < py; ++q)
    for (int p = 0; p < px; ++p) {
      const double y = -half_length + (q + 0.5) * 2.0 * half_length / py;
      const Eigen::MatrixXcd v = f(2.0 * kPi * p / px, y);
      if (v.rows() != dimension || v.cols() != dimension) throw InputError("sampler returned wrong size");
      for (auto z : flatten(v)) s.push_back(z);
    }
  return MatrixPotential(GeometryKind::Cylinder, dimension, {px, py}, half_length, std::move(s));
}

long MatrixPotential::point_count() const {
  long n = 1;
  for (int s : shape_) n *= s;
  return n;
}

double MatrixPotential::cell_area() const {
  double a = 2.0 * kPi / shape_[0];
  if (kind_ == GeometryKind::Torus2) a *= 2.0 * kPi / shape_[1];
  if (kind_ == GeometryKind::Cylinder) a *= 2.0 * half_length_ / shape_[1];
  return a;
}

double MatrixPotential::x_point(int i) const { return 2.0 * kPi * i / shape_[0]; }

double MatrixPotential::y_point(int j) const {
  if (kind_ == GeometryKind::Cylinder) return -half_length_ + (j + 0.5) * 2.0 * half_length_ / shape_[1];
  return 2.0 * kPi * j / shape_[1];
}

Eigen::MatrixXcd MatrixPotential::sample(long i) const {
  return Eigen::Map<const Eigen::MatrixXcd>(samples_.data() + i * m_ * m_, m_, m_);
}

double MatrixPotential::trace_power_integral(double p) const {
  CompensatedSum s;
  for (long i = 0; i < point_count(); ++i) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sample(i), Eigen::EigenvaluesOnly);
    for (int j = 0; j < m_; ++j) {
      const double mu = std::max(0.0, es.eigenvalues()[j]);
      if (mu > 0.0) s += std::pow(mu, p);
    }
  }
  return s.value() * cell_area();
}

// ---------------------------------------------------------------------------
// Assembly

namespace {

// vhat[k + K](j, j') = (1/P) sum_p V_{jj'}(x_p) e^{-i k x_p}, |k| <= K, for samples
// taken with the given stride/offset along one axis.
std::vector<Eigen::MatrixXcd> dft_axis(const std::vector<Eigen::MatrixXcd>& v, int kmax) {
  const int P = int(v.size());
  const int M = int(v[0].rows());
  std::vector<Eigen::MatrixXcd> out(2 * kmax + 1, Eigen::MatrixXcd::Zero(M, M));
  for (int k = -kmax; k <= kmax; ++k) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(M, M);
    for (int p = 0; p < P; ++p) {
      // reduce k p mod P before forming the phase
      const long kp = ((long(k) * p) % P + P) % P;
      acc += v[p] * std::polar(1.0, -2.0 * kPi * double(kp) / P);
    }
    out[k + kmax] = acc / double(P);
  }
  return out;
}

void check_size(long n) {
  if (n > kDenseLimit) {
    std::ostringstream os;
    os << "dense matrix of size " << n << " exceeds the limit " << kDenseLimit;
    throw InputError(os.str());
  }
}

Eigen::MatrixXcd assemble_circle(double alpha, int N, const MatrixPotential& V) {
  const int M = V.dimension(), P = V.shape()[0];
  std::vector<Eigen::MatrixXcd> rows(P);
  for (int p = 0; p < P; ++p) rows[p] = V.sample(p);
  const auto vh = dft_axis(rows, 2 * N);
  const long n = long(2 * N + 1) * M;
  check_size(n);
  Eigen::MatrixXcd H(n, n);
  for (int a = -N; a <= N; ++a)
    for (int b = -N; b <= N; ++b)
      H.block((a + N) * M, (b + N) * M, M, M) = -vh[a - b + 2 * N];
  for (int a = -N; a <= N; ++a)
    for (int j = 0; j < M; ++j) H((a + N) * M + j, (a + N) * M + j) += (a + alpha) * (a + alpha);
  return H;
}

Eigen::MatrixXcd assemble_torus(double a1, double a2, int N, const MatrixPotential& V) {
  const int M = V.dimension(), P1 = V.shape()[0], P2 = V.shape()[1];
  const int K = 2 * N;
  // x-transform for every y row, then y-transform
  std::vector<std::vector<Eigen::MatrixXcd>> xh(P2);
  for (int q = 0; q < P2; ++q) {
    std::vector<Eigen::MatrixXcd> row(P1);
    for (int p = 0; p < P1; ++p) row[p] = V.sample(long(q) * P1 + p);
    xh[q] = dft_axis(row, K);
  }
  std::vector<std::vector<Eigen::MatrixXcd>> vh(2 * K + 1);  // vh[k1][k2]
  for (int k1 = 0; k1 <= 2 * K; ++k1) {
    std::vector<Eigen::MatrixXcd> col(P2);
    for (int q = 0; q < P2; ++q) col[q] = xh[q][k1];
    vh[k1] = dft_axis(col, K);
  }
  const int W = 2 * N + 1;
  const long n = long(W) * W * M;
  check_size(n);
  Eigen::MatrixXcd H(n, n);
  auto idx = [&](int n1, int n2) { return (long(n1 + N) * W + (n2 + N)) * M; };
  for (int r1 = -N; r1 <= N; ++r1)
    for (int r2 = -N; r2 <= N; ++r2)
      for (int c1 = -N; c1 <= N; ++c1)
        for (int c2 = -N; c2 <= N; ++c2)
          H.block(idx(r1, r2), idx(c1, c2), M, M) = -vh[r1 - c1 + K][r2 - c2 + K];
  for (int r1 = -N; r1 <= N; ++r1)
    for (int r2 = -N; r2 <= N; ++r2)
      for (int j = 0; j < M; ++j)
        H(idx(r1, r2) + j, idx(r1, r2) + j) += (r1 + a1) * (r1 + a1) + (r2 + a2) * (r2 + a2);
  return H;
}

Eigen::MatrixXcd assemble_cylinder(double alpha, int N, int My, const MatrixPotential& V) {
  const int M = V.dimension(), P = V.shape()[0], Q = V.shape()[1];
  const double L = V.half_length();
  const int K = 2 * N;
  std::vector<std::vector<Eigen::MatrixXcd>> xh(Q);  // xh[q][k]
  for (int q = 0; q < Q; ++q) {
    std::vector<Eigen::MatrixXcd> row(P);
    for (int p = 0; p < P; ++p) row[p] = V.sample(long(q) * P + p);
    xh[q] = dft_axis(row, K);
  }
  // Dirichlet sine basis psi_m(y) = sin(m pi (y + L) / 2L) / sqrt(L)
  Eigen::MatrixXd psi(My, Q);
  const double h = 2.0 * L / Q;
  for (int m = 1; m <= My; ++m)
    for (int q = 0; q < Q; ++q)
      psi(m - 1, q) = std::sin(m * kPi * (V.y_point(q) + L) / (2.0 * L)) / std::sqrt(L);
  const long n = long(2 * N + 1) * My * M;
  check_size(n);
  // Y[k]((m,j),(m',j')) = h sum_q psi_m psi_m' xh[q][k](j,j')
  std::vector<Eigen::MatrixXcd> Y(2 * K + 1, Eigen::MatrixXcd::Zero(long(My) * M, long(My) * M));
  for (int k = 0; k <= 2 * K; ++k)
    for (int q = 0; q < Q; ++q) {
      const Eigen::MatrixXcd& v = xh[q][k];
      if (v.norm() == 0.0) continue;
      for (int m1 = 0; m1 < My; ++m1)
        for (int m2 = 0; m2 < My; ++m2)
          Y[k].block(long(m1) * M, long(m2) * M, M, M) += (h * psi(m1, q) * psi(m2, q)) * v;
    }
  const long B = long(My) * M;
  Eigen::MatrixXcd H(n, n);
  for (int a = -N; a <= N; ++a)
    for (int b = -N; b <= N; ++b) H.block((a + N) * B, (b + N) * B, B, B) = -Y[a - b + K];
  for (int a = -N; a <= N; ++a)
    for (int m = 1; m <= My; ++m) {
      const double ky = m * kPi / (2.0 * L);
      for (int j = 0; j < M; ++j) {
        const long i = (a + N) * B + long(m - 1) * M + j;
        H(i, i) += (a + alpha) * (a + alpha) + ky * ky;
      }
    }
  return H;
}

void check_geometry(const MatrixPotential& V, const Geometry& g) {
  if (V.kind() != g.kind) throw InputError("potential grid does not match the geometry");
}

Eigen::MatrixXcd assemble_matrix(double alpha, int N, const MatrixPotential& V, const Geometry& g) {
  check_geometry(V, g);
  switch (g.kind) {
    case GeometryKind::Circle: return assemble_circle(alpha, N, V);
    case GeometryKind::Torus2: return assemble_torus(alpha, g.second_flux, N, V);
    case GeometryKind::Cylinder: return assemble_cylinder(alpha, N, g.y_modes, V);
  }
  return {};
}

}  // namespace

GalerkinOperator assemble(Flux flux, int truncation, const MatrixPotential& V, const Geometry& g) {
  if (truncation < 8) throw InputError("Galerkin truncation must be >= 8");
  check_geometry(V, g);
  const int axes = g.kind == GeometryKind::Torus2 ? 2 : 1;
  for (int ax = 0; ax < axes; ++ax)
    if (!is_power_of_two(V.shape()[ax]) || V.shape()[ax] < 4 * truncation)
      throw InputError("potential grid must be a power of two >= 4N per periodic axis");
  if (g.kind == GeometryKind::Cylinder) {
    if (std::fabs(V.half_length() - g.half_length) > 1e-12 * g.half_length)
      throw InputError("potential window does not match the cylinder half-length");
    if (V.shape()[1] < 2 * g.y_modes) throw InputError("cylinder y-grid must have >= 2 points per y-mode");
    // support inside the window: boundary rows must vanish
    double peak = 0.0, edge = 0.0;
    const int P = V.shape()[0], Q = V.shape()[1];
    for (int q = 0; q < Q; ++q)
      for (int p = 0; p < P; ++p) {
        const double t = V.sample(long(q) * P + p).trace().real();
        peak = std::max(peak, t);
        if (q == 0 || q == Q - 1) edge = std::max(edge, t);
      }
    if (edge > 1e-10 * std::max(peak, 1e-300) && edge > 0.0)
      throw DomainError("cylinder potential is not supported inside the window");
  }
  return {flux.value(), truncation, g, V.dimension(), assemble_matrix(flux.value(), truncation, V, g)};
}

Eigen::MatrixXcd assemble_with_vector_potential(const std::vector<double>& a, int N,
                                                const MatrixPotential& V) {
  if (V.kind() != GeometryKind::Circle) throw InputError("vector potential assembly is circle-only");
  const int M = V.dimension(), P = V.shape()[0];
  if (int(a.size()) != P) throw InputError("vector potential samples must match the potential grid");
  std::vector<Eigen::MatrixXcd> rows(P), arow(P), a2row(P);
  for (int p = 0; p < P; ++p) {
    rows[p] = V.sample(p);
    arow[p] = Eigen::MatrixXcd::Constant(1, 1, a[p]);
    a2row[p] = Eigen::MatrixXcd::Constant(1, 1, a[p] * a[p]);
  }
  const auto vh = dft_axis(rows, 2 * N);
  const auto ah = dft_axis(arow, 2 * N);
  const auto a2h = dft_axis(a2row, 2 * N);
  const long n = long(2 * N + 1) * M;
  check_size(n);
  Eigen::MatrixXcd H(n, n);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(M, M);
  for (int r = -N; r <= N; ++r)
    for (int c = -N; c <= N; ++c) {
      const int k = r - c + 2 * N;
      cd kin = double(r + c) * ah[k](0, 0) + a2h[k](0, 0);
      if (r == c) kin += double(r) * double(c);
      H.block((r + N) * M, (c + N) * M, M, M) = kin * I - vh[k];
    }
  return H;
}

std::vector<double> negative_part(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()[i] < -1e-10) out.push_back(-es.eigenvalues()[i]);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

SpectrumResult compare(std::vector<double> fine, int N, const std::vector<double>& coarse, int Nc) {
  SpectrumResult r{std::move(fine), N, Nc, 0.0, true};
  if (Nc == 0) return r;
  const std::size_t n = std::max(r.negative_eigenvalues.size(), coarse.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < r.negative_eigenvalues.size() ? r.negative_eigenvalues[i] : 0.0;
    const double b = i < coarse.size() ? coarse[i] : 0.0;
    const double shift = std::fabs(a - b);
    r.max_relative_shift = std::max(r.max_relative_shift, shift / std::max(a, 1e-300));
    if (shift > 1e-6 * std::max(a, b) + 1e-10) r.converged = false;
  }
  return r;
}

}  // namespace

SpectrumResult negative_spectrum(const GalerkinOperator& op, const MatrixPotential& V) {
  std::vector<double> fine = negative_part(op.matrix);
  const int Nc = op.truncation / 2;
  if (Nc < 1) return compare(std::move(fine), op.truncation, {}, 0);
  const auto coarse = negative_part(assemble_matrix(op.flux, Nc, V, op.geometry));
  return compare(std::move(fine), op.truncation, coarse, Nc);
}

SpectrumResult negative_spectrum(Flux flux, int truncation, const MatrixPotential& V,
                                 const Geometry& g) {
  return negative_spectrum(assemble(flux, truncation, V, g), V);
}

// ---------------------------------------------------------------------------
// Lieb-Thirring bounds

namespace {

double riesz_sum(const SpectrumResult& s, double gamma) {
  CompensatedSum acc;
  for (double l : s.negative_eigenvalues) acc += std::pow(l, gamma);
  return acc.value();
}

LTBoundReport finish(std::string geom, double gamma, double lhs, double c, double integral,
                     std::string cname, bool converged, std::string note) {
  const double rhs = c * integral;
  const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? INFINITY : 0.0);
  return {std::move(geom), gamma, lhs, rhs, ratio, std::move(cname), c, converged,
          ratio <= 1.0 + 1e-9, std::move(note)};
}

}  // namespace

LTBoundReport lt_bound_circle(const SpectrumResult& s, const MatrixPotential& V, Flux flux,
                              double gamma) {
  if (V.kind() != GeometryKind::Circle) throw InputError("circle bound needs a circle potential");
  if (!(gamma >= 1.0)) throw DomainError("circle Lieb-Thirring bound needs gamma >= 1");
  const double K = k_magnetic_closed_form(flux);
  const double lhs = riesz_sum(s, gamma);
  if (gamma == 1.0)
    return finish("circle", gamma, lhs, 2.0 / (3.0 * std::sqrt(3.0)) * K, V.trace_power_integral(1.5),
                  "2/(3 sqrt3) K(alpha)", s.converged, "");
  return finish("circle", gamma, lhs, kPi / std::sqrt(3.0) * K * classical_lt_constant(gamma, 1),
                V.trace_power_integral(gamma + 0.5), "(pi/sqrt3) K(alpha) Lcl(gamma,1)", s.converged,
                "");
}

LTBoundReport lt_bound_product(const Geometry& g, Flux x_flux, const SpectrumResult& s,
                               const MatrixPotential& V, double gamma) {
  if (V.kind() != g.kind) throw InputError("potential grid does not match the geometry");
  const double K1 = k_magnetic_closed_form(x_flux);
  const double lhs = riesz_sum(s, gamma);
  if (g.kind == GeometryKind::Torus2) {
    if (gamma != 1.0) throw DomainError("torus bound is stated for gamma = 1");
    const double K2 = k_magnetic_closed_form(Flux(g.second_flux));
    return finish("torus2", gamma, lhs, kPi / 24.0 * K1 * K2, V.trace_power_integral(2.0),
                  "(pi/24) K(alpha1) K(alpha2)", s.converged, "");
  }
  if (g.kind == GeometryKind::Cylinder) {
    const std::string note = "consistency, monotone in L (Dirichlet truncation raises eigenvalues)";
    if (gamma == 0.5)
      return finish("cylinder", gamma, lhs, K1 / (3.0 * std::sqrt(3.0)), V.trace_power_integral(1.5),
                    "K(alpha)/(3 sqrt3)", s.converged, note);
    if (gamma == 1.0)
      return finish("cylinder", gamma, lhs, K1 / (8.0 * std::sqrt(3.0)), V.trace_power_integral(2.0),
                    "K(alpha)/(8 sqrt3)", s.converged, note);
    throw DomainError("cylinder bound is stated for gamma in {1/2, 1}");
  }
  throw DomainError("lt_bound_product needs a torus or cylinder geometry");
}

// ---------------------------------------------------------------------------
// Orthonormal families

VerificationReport orthonormal_trace_check(VectorFamily fam, const TraceMode& mode) {
  const int M = fam.dimension, K = fam.max_mode;
  const int cols = 2 * K + 1;
  const long len = long(M) * cols;
  const int count = int(fam.coefficients.size());
  if (count < 1) throw InputError("empty function family");
  Eigen::MatrixXcd A(len, count);
  for (int n = 0; n < count; ++n) {
    Eigen::MatrixXcd c = fam.coefficients[n];
    if (c.rows() != M || c.cols() != cols) throw InputError("family coefficient block has wrong shape");
    if (!mode.magnetic) c.col(K).setZero();  // zero mean per component
    A.col(n) = Eigen::Map<const Eigen::VectorXcd>(c.data(), len);
  }
  // modified Gram-Schmidt with rank detection
  for (int n = 0; n < count; ++n) {
    const double n0 = A.col(n).norm();
    for (int p = 0; p < n; ++p) A.col(n) -= A.col(p).dot(A.col(n)) * A.col(p);
    for (int p = 0; p < n; ++p) A.col(n) -= A.col(p).dot(A.col(n)) * A.col(p);
    const double nn = A.col(n).norm();
    if (!(nn > 1e-10 * n0) || n0 == 0.0) throw DomainError("function family is rank deficient");
    A.col(n) /= nn;
  }
  const double shift = mode.magnetic ? mode.flux : 0.0;
  const double expo = mode.magnetic ? 3.0 : 2.0 * mode.m + 1.0;
  // energy side
  CompensatedSum energy;
  for (int n = 0; n < count; ++n)
    for (int k = -K; k <= K; ++k) {
      const double w = std::fabs(k + shift);
      const double wp = mode.magnetic ? w * w : std::pow(w, 2.0 * mode.m);
      for (int j = 0; j < M; ++j) energy += wp * std::norm(A(long(k + K) * M + j, n));
    }
  const double c = mode.magnetic ? std::pow(k_magnetic_closed_form(Flux(mode.flux)), 2.0)
                                 : std::pow(sobolev_constant(DerivativeOrder(mode.m)), 2.0 * mode.m);
  // density side on a grid exact for integer exponents
  long P = 16;
  while (P < long(std::ceil(expo)) * 2 * K + 8) P *= 2;
  P *= 2;
  CompensatedSum lhs;
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  for (long p = 0; p < P; ++p) {
    const double x = 2.0 * kPi * p / P;
    Eigen::MatrixXcd phi(M, count);  // phi(j, n) without the common phase e^{i shift x}
    for (int n = 0; n < count; ++n)
      for (int j = 0; j < M; ++j) {
        cd s = 0.0;
        for (int k = -K; k <= K; ++k) s += A(long(k + K) * M + j, n) * std::polar(1.0, k * x);
        phi(j, n) = s * norm;
      }
    const Eigen::MatrixXcd U = phi * phi.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(U, Eigen::EigenvaluesOnly);
    for (int j = 0; j < M; ++j) {
      const double mu = std::max(0.0, es.eigenvalues()[j]);
      if (mu > 0.0) lhs += std::pow(mu, expo);
    }
  }
  const double l = lhs.value() * 2.0 * kPi / P;
  const double r = c * energy.value();
  VerificationReport rep{mode.magnetic ? "trace_magnetic" : "trace_sobolev", l, r, r - l,
                         margin_ok(r - l, r), {}};
  rep.params["functions"] = count;
  rep.params["dimension"] = M;
  rep.params[mode.magnetic ? "alpha" : "m"] = mode.magnetic ? mode.flux : mode.m;
  rep.params["constant"] = c;
  return rep;
}

VectorFamily random_vector_family(std::mt19937_64& rng, int count, int dimension, int max_mode) {
  std::normal_distribution<double> nd(0.0, 1.0);
  VectorFamily f{dimension, max_mode, {}};
  for (int n = 0; n < count; ++n) {
    Eigen::MatrixXcd c(dimension, 2 * max_mode + 1);
    for (int k = 0; k < c.cols(); ++k)
      for (int j = 0; j < dimension; ++j) {
        const double re = nd(rng), im = nd(rng);
        c(j, k) = cd(re, im);
      }
    f.coefficients.push_back(c);
  }
  return f;
}

}  // namespace sharp
