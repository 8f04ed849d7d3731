#pragma once

// Discriminant curves of one-parameter unfoldings
//
//   f - u + t (p(x) y + q(x)),   f = y^3 - P0(x) y + Q0(x),
//
// i.e. P = P0 + t p, Q = Q0 + t q. Eliminating y from the critical equations
// gives the curve 3 Q'^2 - P P'^2 = 0 in (x, t); along each of its branches
// the critical value is u = -(2/3) (P / P') Q' + Q.

#include "discknot/branches.hpp"
#include "discknot/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace discknot::pipeline {

using puiseux::PuiseuxBranch;
using puiseux::PuiseuxSeries;

struct Unfolding {
  invariants::GermPQ base;
  UniPoly p;
  UniPoly q;
  Rat s;  // value substituted into P0, recorded for reports

  /// Throws std::invalid_argument when p = q = 0.
  Unfolding(invariants::GermPQ base, UniPoly p, UniPoly q, Rat s = 0);

  BiPoly P() const;
  BiPoly Q() const;
};

enum class Case : char { A = 'A', B = 'B', C = 'C' };

struct CaseLabel {
  Case kind;
  std::optional<int> e;    // 2nu - 1 = 3e (cases B, C)
  std::optional<int> rho;  // nu - 5 = 9 rho (case C)
};

/// Throws std::invalid_argument for nu < 1.
CaseLabel classify(int nu);

/// 3 Q'^2 - P P'^2. Throws std::domain_error if it vanishes identically.
BiPoly build_curve(const Unfolding& u);

/// The s-indexed family P0 = s x^m, Q0 = x^(nu+1), p = x, q as chosen below.
struct PerturbationFamily {
  int nu;
  int m;
  UniPoly p;
  UniPoly q;
  /// False when q = 0 was forced (negative control).
  bool q_modified;

  Unfolding at(const Rat& s) const;
};

/// Exponent k of q = x^k: the least k > (nu + 4) / 3 with 3 not dividing k.
/// Equals 3 rho + 4 in case C.
int symmetry_breaking_exponent(int nu);

/// Requires 2nu <= 3m - 2 and m <= nu (m = 1 allowed for nu = 1).
/// Cases B and C get q = x^k (k from symmetry_breaking_exponent) unless
/// modify_q is false; case A keeps q = 0. Throws std::invalid_argument.
PerturbationFamily select_perturbation(int nu, int m, bool modify_q = true);

/// Admissible m for the sweep: ceil((2nu + 2) / 3) <= m <= nu, or {1} for nu = 1.
std::vector<int> admissible_m(int nu);

struct PprimeCertificate {
  /// P'(x(t), t) has a nonzero series on every root of the face polynomial.
  bool nonzero = false;
  Rat leading_exponent;
  std::string leading_coeff;  // residue class as a polynomial in c
};

PprimeCertificate check_Pprime(const Unfolding& u, const PuiseuxBranch& b);

struct UBranch {
  PuiseuxBranch source;
  PuiseuxSeries u;
  std::optional<Rat> leading_exponent;  // empty when u = 0 exactly
  /// lcm of the reduced denominators of exponents carrying a nonzero term.
  Int denominator = 1;
  /// The denominator is final: it reached the ramification or u is exact.
  bool denominator_certified = false;
  /// Leading exponent, then every exponent where the denominator grows.
  std::vector<Rat> essential_exponents;
};

/// u(t) along b, known modulo t^target (or exactly). The branch is lifted as
/// far as needed. Zero divisors met on the way split the face ring; the
/// pieces are recombined by Chinese remaindering.
UBranch u_branch(const Unfolding& u, const BiPoly& curve, const PuiseuxBranch& b, const Rat& target);

enum class Verdict { Reduced, NonReduced, Inconclusive };
std::string to_string(Verdict v);

struct SeparationStep {
  Rat exponent;
  int dimension;  // distinct critical values seen through t^exponent
};

struct Reducedness {
  Verdict verdict = Verdict::Inconclusive;
  /// Per nonzero branch bundle: number of distinct u-series among its deg phi roots.
  std::vector<int> distinct_values;
  std::vector<std::vector<SeparationStep>> separation;
  int accounting_lhs = 0;  // 1 + sum conjugacy_size * denominator
  int mu = 0;
  std::string reason;
};

/// (i) distinct critical values on every root, (ii) 1 + sum d = mu.
Reducedness reducedness(const std::vector<UBranch>& ubranches, int mu);

struct AnalysisOptions {
  /// Extra precision past the leading u-exponent, in units of 1/ramification.
  int initial_extra = 4;
  int max_retries = 3;
};

struct DiscriminantReport {
  int nu = 0;
  int m = 0;
  Rat s;
  bool q_modified = false;
  std::string p;
  std::string q;
  invariants::InvariantPair invariants;
  CaseLabel case_label;
  BiPoly curve;
  puiseux::NewtonPolygon polygon;
  std::vector<puiseux::FaceData> faces;
  std::vector<PuiseuxBranch> branches;
  std::vector<PprimeCertificate> pprime;
  std::vector<UBranch> ubranches;
  Reducedness reducedness;
  int retries_used = 0;
  std::vector<std::string> notes;
};

/// Branches counted one per conjugate: the zero branch plus conjugacy_size
/// per face bundle.
int branch_count(const DiscriminantReport& r);

/// Full run for one member of a family. Never throws for NotEnoughPrecision:
/// the verdict becomes Inconclusive instead.
DiscriminantReport analyze(const PerturbationFamily& family, const Rat& s, const AnalysisOptions& opts = {});

/// Discrete branch data compared across s: branch count, lambdas, ramification,
/// conjugacy sizes, essential u-exponents and denominators.
struct BranchSignature {
  std::vector<std::string> items;
  friend bool operator==(const BranchSignature&, const BranchSignature&) = default;
};
BranchSignature signature(const DiscriminantReport& r);

struct Prop34Report {
  int nu = 0;
  int m = 0;
  std::vector<DiscriminantReport> runs;  // one per s sample, in input order
  bool mu_constant = false;
  bool reduced_and_constant = false;
  bool sigma_transition = false;
  bool inconclusive = false;
  bool passed() const { return mu_constant && reduced_and_constant && sigma_transition; }
};

/// Throws std::invalid_argument when (nu, m) violates the hypotheses.
Prop34Report verify_prop34(int nu, int m, const std::vector<Rat>& s_samples, bool modify_q = true,
                           const AnalysisOptions& opts = {});

struct NumericTrack {
  std::string root;  // complex seed, for reports
  double x_slope = 0;
  double u_slope = 0;
  bool ok = false;
};

struct NumericDiagnostic {
  Rat lambda;
  std::optional<Rat> u_exponent;
  std::vector<NumericTrack> tracks;
  double worst_x_error = 0;  // relative
  double worst_u_error = 0;
  bool within_tolerance = false;
  std::string failure;  // tracking problems, empty if none
};

/// Double-precision tracking of every root of the face polynomial from
/// t = 1e-3 down to 1e-6, with least-squares log-log slopes of |x| and |u|.
/// Diagnostic only.
NumericDiagnostic numeric_validate(const Unfolding& u, const UBranch& b, double tolerance = 0.02);

}  // namespace discknot::pipeline
