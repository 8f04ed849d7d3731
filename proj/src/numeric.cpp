#include "discknot/pipeline.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <sstream>

namespace discknot::pipeline {

namespace {

using Real = long double;
using Complex = std::complex<Real>;

struct NumPoly {
  std::vector<std::pair<std::pair<int, int>, Real>> terms;  // ((j, i), coeff)

  explicit NumPoly(const BiPoly& p) {
    for (const auto& [k, c] : p.terms()) terms.push_back({k, static_cast<Real>(c.get_d())});
  }

  Complex operator()(Complex x, Real t) const {
    Complex sum = 0;
    for (const auto& [k, c] : terms) sum += c * std::pow(x, k.first) * std::pow(t, Real(k.second));
    return sum;
  }
};

std::vector<Complex> face_roots(const UniPoly& phi) {
  const int n = phi.degree();
  const Real lead = static_cast<Real>(phi.leading_coeff().get_d());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -phi.coeff(i).get_d() / static_cast<double>(lead);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<Complex> roots;
  const UniPoly dphi = phi.derivative();
  auto eval = [](const UniPoly& p, Complex z) {
    Complex s = 0;
    for (const auto& [e, c] : p.terms()) s += static_cast<Real>(c.get_d()) * std::pow(z, e);
    return s;
  };
  for (int i = 0; i < n; ++i) {
    Complex z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int it = 0; it < 20; ++it) {
      const Complex d = eval(dphi, z);
      if (std::abs(d) == 0) break;
      z -= eval(phi, z) / d;
    }
    roots.push_back(z);
  }
  return roots;
}

double slope(const std::vector<Real>& xs, const std::vector<Real>& ys) {
  const auto n = static_cast<Real>(xs.size());
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return static_cast<double>((n * sxy - sx * sy) / (n * sxx - sx * sx));
}

}  // namespace

NumericDiagnostic numeric_validate(const Unfolding& u, const UBranch& b, double tolerance) {
  NumericDiagnostic diag;
  diag.u_exponent = b.leading_exponent;
  if (b.source.is_zero_branch) {
    diag.lambda = 0;
    diag.within_tolerance = b.source.x.is_exact_zero();
    if (!diag.within_tolerance) diag.failure = "zero branch carries a nonzero series";
    return diag;
  }
  diag.lambda = b.source.lambda();
  const BiPoly curve = build_curve(u);
  const int x_pow = ord(curve, Var::x).value();
  const BiPoly G = curve.divide_x_power(x_pow);
  const NumPoly g(G), gx(G.derivative(Var::x));
  const BiPoly P = u.P(), Q = u.Q();
  const NumPoly nP(P), nQ(Q), ndP(P.derivative(Var::x)), ndQ(Q.derivative(Var::x));
  const Real lambda = static_cast<Real>(diag.lambda.get_d());

  constexpr int kSamples = 31;
  std::vector<Real> log_t;
  for (int k = 0; k < kSamples; ++k) log_t.push_back(std::log(Real(10)) * (-3 - Real(3) * k / (kSamples - 1)));

  for (const Complex& root : face_roots(b.source.face.face_poly)) {
    NumericTrack track;
    std::ostringstream os;
    os.precision(6);
    os << root.real() << (root.imag() < 0 ? "" : "+") << root.imag() << "i";
    track.root = os.str();
    std::vector<Real> lx, lu;
    Complex x = root * std::pow(std::exp(log_t.front()), lambda);
    Real t_prev = std::exp(log_t.front());
    bool ok = true;
    for (Real lt : log_t) {
      const Real t = std::exp(lt);
      x *= std::pow(t / t_prev, lambda);
      t_prev = t;
      bool converged = false;
      for (int it = 0; it < 60; ++it) {
        const Complex d = gx(x, t);
        if (std::abs(d) == 0) break;
        const Complex step = g(x, t) / d;
        x -= step;
        if (std::abs(step) <= 1e-15L * std::abs(x)) {
          converged = true;
          break;
        }
      }
      if (!converged || std::abs(x) == 0) {
        ok = false;
        break;
      }
      const Complex uval = nQ(x, t) - Real(2) / Real(3) * nP(x, t) * ndQ(x, t) / ndP(x, t);
      lx.push_back(std::log(std::abs(x)));
      lu.push_back(std::log(std::abs(uval)));
    }
    if (!ok) {
      diag.failure = "Newton tracking did not converge from seed " + track.root;
      diag.tracks.push_back(track);
      continue;
    }
    track.x_slope = slope(log_t, lx);
    track.u_slope = slope(log_t, lu);
    const double ex = std::abs(track.x_slope - diag.lambda.get_d()) / diag.lambda.get_d();
    double eu = 0;
    if (diag.u_exponent) eu = std::abs(track.u_slope - diag.u_exponent->get_d()) / diag.u_exponent->get_d();
    diag.worst_x_error = std::max(diag.worst_x_error, ex);
    diag.worst_u_error = std::max(diag.worst_u_error, eu);
    track.ok = ex <= tolerance && eu <= tolerance;
    diag.tracks.push_back(track);
  }
  diag.within_tolerance = diag.failure.empty() && diag.worst_x_error <= tolerance && diag.worst_u_error <= tolerance;
  return diag;
}

}  // namespace discknot::pipeline
