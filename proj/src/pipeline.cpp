#include "discknot/pipeline.hpp"

#include "discknot/parse.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace discknot::pipeline {

using namespace puiseux;

Unfolding::Unfolding(invariants::GermPQ base_, UniPoly p_, UniPoly q_, Rat s_)
    : base(std::move(base_)), p(std::move(p_)), q(std::move(q_)), s(std::move(s_)) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("unfolding needs p or q nonzero");
}

BiPoly Unfolding::P() const { return BiPoly(base.P()) + BiPoly::t() * BiPoly(p); }
BiPoly Unfolding::Q() const { return BiPoly(base.Q()) + BiPoly::t() * BiPoly(q); }

CaseLabel classify(int nu) {
  if (nu < 1) throw std::invalid_argument("classify: nu must be >= 1");
  const int n = 2 * nu - 1;
  if (n % 3 != 0) return {Case::A, std::nullopt, std::nullopt};
  if (n % 9 != 0) return {Case::B, n / 3, std::nullopt};
  return {Case::C, n / 3, (nu - 5) / 9};
}

BiPoly build_curve(const Unfolding& u) {
  const BiPoly P = u.P();
  const BiPoly dP = P.derivative(Var::x);
  const BiPoly dQ = u.Q().derivative(Var::x);
  BiPoly F = Rat(3) * dQ * dQ - P * dP * dP;
  if (F.is_zero()) throw std::domain_error("discriminant curve vanishes identically");
  return F;
}

Unfolding PerturbationFamily::at(const Rat& s) const {
  invariants::GermPQ base(UniPoly::monomial(s, m), UniPoly::monomial(1, nu + 1));
  return Unfolding(std::move(base), p, q, s);
}

int symmetry_breaking_exponent(int nu) {
  int k = (nu + 4) / 3 + 1;
  while (k % 3 == 0) ++k;
  return k;
}

std::vector<int> admissible_m(int nu) {
  if (nu == 1) return {1};
  std::vector<int> out;
  for (int m = (2 * nu + 4) / 3; m <= nu; ++m) out.push_back(m);
  return out;
}

PerturbationFamily select_perturbation(int nu, int m, bool modify_q) {
  if (nu < 1 || m < 1) throw std::invalid_argument("select_perturbation: nu and m must be positive");
  const bool boundary = nu == 1 && m == 1;
  if (!boundary && (2 * nu > 3 * m - 2 || m > nu))
    throw std::invalid_argument("select_perturbation: need 2nu <= 3m - 2 and m <= nu (nu = " + std::to_string(nu) +
                                ", m = " + std::to_string(m) + ")");
  PerturbationFamily fam{nu, m, UniPoly::variable(), UniPoly(), false};
  if (modify_q && classify(nu).kind != Case::A) {
    fam.q = UniPoly::monomial(1, symmetry_breaking_exponent(nu));
    fam.q_modified = true;
  }
  return fam;
}

namespace {

std::string class_text(const QuotientElem& e) { return discknot::to_string(e.value()); }

// Does the ideal generated by the coefficients of s equal the whole ring,
// i.e. is s nonzero at every root of phi?
bool nonzero_on_all_roots(const PuiseuxSeries& s) {
  UniPoly g = s.ring()->phi();
  for (const auto& kv : s.terms()) {
    g = gcd(g, kv.second.value());
    if (g.degree() == 0) return true;
  }
  return false;
}

PuiseuxSeries with_leading_term(const BiPoly& G, const PuiseuxSeries& x) {
  Rat cap = 2;
  if (auto v = x.valuation_or_precision()) cap += *v;
  for (int k = 0; k < 8; ++k, cap *= 2) {
    PuiseuxSeries s = substitute(G, x, cap);
    if (!s.terms().empty() || s.is_exact()) return s;
  }
  throw NotEnoughPrecision("no leading term within the probing range");
}

struct Expressions {
  BiPoly P, Q, dP, dQ;
  explicit Expressions(const Unfolding& u)
      : P(u.P()), Q(u.Q()), dP(P.derivative(Var::x)), dQ(Q.derivative(Var::x)) {}
};

// u = Q - (2/3) P Q' / P' along x, modulo t^target.
PuiseuxSeries critical_value(const Expressions& ex, const PuiseuxSeries& x, const Rat& target) {
  const PuiseuxSeries dP_probe = with_leading_term(ex.dP, x);
  if (dP_probe.is_exact_zero()) throw std::domain_error("P' vanishes identically along a branch");
  const Rat vdP = dP_probe.leading_exponent();
  const Rat cap_num = target + vdP;
  const PuiseuxSeries num = mul(substitute(ex.P, x, cap_num), substitute(ex.dQ, x, cap_num), cap_num);
  PuiseuxSeries quotient = PuiseuxSeries::zero(x.ring());
  if (!num.is_exact_zero()) {
    const Rat vnum = num.valuation_or_precision().value();
    if (vnum - vdP < target) {
      const PuiseuxSeries dP = substitute(ex.dP, x, Rat(target - vnum + 2 * vdP));
      quotient = mul(num, invert(dP, Rat(target - vnum)), target);
    } else {
      quotient = PuiseuxSeries::zero(x.ring(), target);
    }
  }
  return capped(substitute(ex.Q, x, target) - make_rat(2, 3) * quotient, target);
}

PuiseuxBranch restrict_branch(const PuiseuxBranch& b, const ModulusPtr& factor) {
  PuiseuxBranch r = b;
  r.x = reduce_to(b.x, factor);
  r.conjugacy_size = factor->degree() / b.ramification;
  return r;
}

PuiseuxSeries combine(const PuiseuxSeries& a, const PuiseuxSeries& b, const ModulusPtr& product) {
  std::set<Rat> exps;
  for (const auto& kv : a.terms()) exps.insert(kv.first);
  for (const auto& kv : b.terms()) exps.insert(kv.first);
  PuiseuxSeries::Terms t;
  for (const Rat& e : exps) t.emplace(e, crt(a.coeff(e), b.coeff(e), product));
  Order p = a.precision();
  if (b.precision()) p = p ? std::min(*p, *b.precision()) : b.precision();
  return PuiseuxSeries(product, std::move(t), p);
}

// Lifts the branch until u is known modulo t^target. Returns the lifted
// branch alongside u.
std::pair<PuiseuxBranch, PuiseuxSeries> lift_and_evaluate(const Expressions& ex, const BiPoly& curve,
                                                         const PuiseuxBranch& b, const Rat& target) {
  PuiseuxBranch cur = b;
  Rat pi = target;
  for (int round = 0; round < 12; ++round) {
    if (!cur.is_zero_branch) cur = refine(curve, cur, pi);
    try {
      PuiseuxSeries u = critical_value(ex, cur.x, target);
      if (u.is_exact() || *u.precision() >= target) return {cur, u};
      pi += target - *u.precision();
    } catch (const ZeroDivisorSplit& split) {
      ModulusPtr g = make_modulus(split.factor());
      ModulusPtr h = make_modulus(split.cofactor());
      auto [bg, ug] = lift_and_evaluate(ex, curve, restrict_branch(cur, g), target);
      auto [bh, uh] = lift_and_evaluate(ex, curve, restrict_branch(cur, h), target);
      // Keep the ring of the original branch; x is re-lifted from the better piece.
      PuiseuxBranch merged = cur;
      merged.x = combine(bg.x, bh.x, cur.ring());
      return {merged, combine(ug, uh, cur.ring())};
    }
  }
  throw NotEnoughPrecision("u(t) did not reach the requested precision");
}

void summarize(UBranch& ub) {
  ub.leading_exponent.reset();
  ub.essential_exponents.clear();
  ub.denominator = 1;
  for (const auto& [e, c] : ub.u.terms()) {
    if (!ub.leading_exponent) {
      ub.leading_exponent = e;
      ub.essential_exponents.push_back(e);
    }
    const Int d = lcm(ub.denominator, e.get_den());
    if (d != ub.denominator) {
      if (e != *ub.leading_exponent) ub.essential_exponents.push_back(e);
      ub.denominator = d;
    }
  }
  ub.denominator_certified = ub.u.is_exact() || ub.denominator == ub.source.ramification;
}

}  // namespace

PprimeCertificate check_Pprime(const Unfolding& u, const PuiseuxBranch& b) {
  const BiPoly dP = u.P().derivative(Var::x);
  PprimeCertificate cert;
  const PuiseuxSeries s = with_leading_term(dP, b.x);
  if (s.terms().empty()) return cert;
  cert.leading_exponent = s.leading_exponent();
  cert.leading_coeff = class_text(s.leading_coeff());
  cert.nonzero = nonzero_on_all_roots(s);
  return cert;
}

UBranch u_branch(const Unfolding& u, const BiPoly& curve, const PuiseuxBranch& b, const Rat& target) {
  const Expressions ex(u);
  auto [lifted, series] = lift_and_evaluate(ex, curve, b, target);
  UBranch ub{std::move(lifted), std::move(series), std::nullopt, 1, false, {}};
  summarize(ub);
  return ub;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Reduced: return "reduced";
    case Verdict::NonReduced: return "non-reduced";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Reducedness reducedness(const std::vector<UBranch>& ubranches, int mu) {
  Reducedness r;
  r.mu = mu;
  bool exact_failure = false;
  bool open = false;
  std::vector<std::string> reasons;
  std::vector<Rat> face_leads;

  for (const UBranch& ub : ubranches) {
    const PuiseuxBranch& b = ub.source;
    if (b.is_zero_branch) {
      r.accounting_lhs += b.multiplicity;
      if (b.multiplicity > 1) {
        exact_failure = true;
        reasons.push_back("x = 0 is a multiple branch");
      }
      if (!ub.u.is_exact_zero()) {
        open = true;
        reasons.push_back("critical value on x = 0 is not identically zero");
      }
      continue;
    }
    const ModulusPtr& ring = ub.u.ring();
    const int n = ring->degree();
    std::vector<QuotientElem> gens;
    std::vector<SeparationStep> steps;
    for (const auto& [e, c] : ub.u.terms()) {
      gens.push_back(c);
      steps.push_back({e, generated_subalgebra_dim(ring, gens)});
    }
    const int dim = steps.empty() ? 1 : steps.back().dimension;
    r.distinct_values.push_back(dim);
    r.separation.push_back(std::move(steps));
    r.accounting_lhs += b.conjugacy_size * static_cast<int>(ub.denominator.get_si());

    if (dim < n) {
      if (ub.u.is_exact()) {
        exact_failure = true;
        reasons.push_back("critical values coincide: " + std::to_string(dim) + " distinct of " + std::to_string(n));
      } else {
        open = true;
        reasons.push_back("critical values not yet separated at the current truncation");
      }
    }
    if (!nonzero_on_all_roots(ub.u)) {
      if (ub.u.is_exact()) {
        exact_failure = true;
        reasons.push_back("a critical value vanishes identically, meeting the branch x = 0");
      } else {
        open = true;
        reasons.push_back("some critical value not yet distinguished from 0");
      }
    }
    if (!ub.denominator_certified) {
      open = true;
      reasons.push_back("denominator not certified");
    }
    if (ub.leading_exponent) {
      if (std::find(face_leads.begin(), face_leads.end(), *ub.leading_exponent) != face_leads.end()) {
        open = true;
        reasons.push_back("two faces share a leading u-exponent; cross-face comparison is not implemented");
      }
      face_leads.push_back(*ub.leading_exponent);
    }
  }

  const bool accounting_ok = r.accounting_lhs == mu;
  if (exact_failure) {
    r.verdict = Verdict::NonReduced;
  } else if (open) {
    r.verdict = Verdict::Inconclusive;
  } else if (!accounting_ok) {
    r.verdict = Verdict::NonReduced;
    reasons.push_back("accounting 1 + sum d = " + std::to_string(r.accounting_lhs) + " differs from mu = " +
                      std::to_string(mu));
  } else {
    r.verdict = Verdict::Reduced;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < reasons.size(); ++i) os << (i ? "; " : "") << reasons[i];
  r.reason = os.str();
  return r;
}

int branch_count(const DiscriminantReport& r) {
  int n = 0;
  for (const auto& b : r.branches) n += b.is_zero_branch ? 1 : b.conjugacy_size;
  return n;
}

DiscriminantReport analyze(const PerturbationFamily& family, const Rat& s, const AnalysisOptions& opts) {
  DiscriminantReport rep;
  rep.nu = family.nu;
  rep.m = family.m;
  rep.s = s;
  rep.q_modified = family.q_modified;
  rep.p = discknot::to_string(family.p);
  rep.q = discknot::to_string(family.q);
  const Unfolding unf = family.at(s);
  rep.invariants = invariants::invariants(unf.base);
  rep.case_label = classify(family.nu);
  rep.curve = build_curve(unf);
  rep.polygon = newton_polygon(rep.curve);
  rep.faces = faces(rep.polygon, rep.curve);
  const int mu = 2 * family.nu;

  try {
    rep.branches = branches(rep.curve);
  } catch (const NonSquarefreeFace& e) {
    rep.reducedness.verdict = Verdict::Inconclusive;
    rep.reducedness.mu = mu;
    rep.reducedness.reason = e.what();
    rep.notes.push_back("refinement beyond squarefree faces is not implemented");
    return rep;
  }
  for (const PuiseuxBranch& b : rep.branches) rep.pprime.push_back(check_Pprime(unf, b));

  const Expressions ex(unf);
  std::vector<PuiseuxBranch> current = rep.branches;
  std::vector<Rat> leads(current.size());
  try {
    for (std::size_t k = 0; k < current.size(); ++k) {
      // Probe for the leading exponent of u.
      Rat probe = 1;
      for (int i = 0; i < 10; ++i, probe *= 2) {
        auto [b, u] = lift_and_evaluate(ex, rep.curve, current[k], probe);
        current[k] = b;
        if (!u.terms().empty() || u.is_exact()) {
          leads[k] = u.terms().empty() ? probe : u.leading_exponent();
          break;
        }
      }
    }
    int extra = opts.initial_extra;
    for (int attempt = 0; attempt <= opts.max_retries; ++attempt, extra *= 2) {
      rep.retries_used = attempt;
      rep.ubranches.clear();
      for (std::size_t k = 0; k < current.size(); ++k) {
        const Rat target = leads[k] + make_rat(extra, current[k].ramification);
        UBranch ub = u_branch(unf, rep.curve, current[k], target);
        current[k] = ub.source;
        rep.ubranches.push_back(std::move(ub));
      }
      rep.reducedness = reducedness(rep.ubranches, mu);
      if (rep.reducedness.verdict != Verdict::Inconclusive) break;
    }
  } catch (const NotEnoughPrecision& e) {
    rep.reducedness.verdict = Verdict::Inconclusive;
    rep.reducedness.mu = mu;
    rep.reducedness.reason = e.what();
  }
  return rep;
}

BranchSignature signature(const DiscriminantReport& r) {
  BranchSignature sig;
  sig.items.push_back("branches=" + std::to_string(r.branches.size()));
  for (const UBranch& ub : r.ubranches) {
    const PuiseuxBranch& b = ub.source;
    std::ostringstream os;
    if (b.is_zero_branch) {
      os << "zero mult=" << b.multiplicity;
    } else {
      os << "lambda=" << discknot::to_string(b.lambda()) << " q=" << b.ramification << " conj=" << b.conjugacy_size
         << " d=" << ub.denominator.get_str() << " essential=[";
      for (std::size_t i = 0; i < ub.essential_exponents.size(); ++i)
        os << (i ? "," : "") << discknot::to_string(ub.essential_exponents[i]);
      os << "]";
    }
    sig.items.push_back(os.str());
  }
  return sig;
}

Prop34Report verify_prop34(int nu, int m, const std::vector<Rat>& s_samples, bool modify_q,
                           const AnalysisOptions& opts) {
  const PerturbationFamily fam = select_perturbation(nu, m, modify_q);
  Prop34Report rep;
  rep.nu = nu;
  rep.m = m;
  for (const Rat& s : s_samples) rep.runs.push_back(analyze(fam, s, opts));
  rep.mu_constant = !rep.runs.empty();
  rep.reduced_and_constant = !rep.runs.empty();
  rep.sigma_transition = !rep.runs.empty();
  for (const DiscriminantReport& r : rep.runs) {
    if (r.invariants.mu != Valuation(2 * nu)) rep.mu_constant = false;
    if (r.reducedness.verdict != Verdict::Reduced) rep.reduced_and_constant = false;
    if (r.reducedness.verdict == Verdict::Inconclusive) rep.inconclusive = true;
    if (!(signature(r) == signature(rep.runs.front()))) rep.reduced_and_constant = false;
    const int expected_sigma = r.s == 0 ? nu : std::min(m, nu);
    if (r.invariants.sigma != Valuation(expected_sigma)) rep.sigma_transition = false;
  }
  return rep;
}

}  // namespace discknot::pipeline
