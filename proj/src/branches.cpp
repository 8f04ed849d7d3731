#include "discknot/branches.hpp"

#include <algorithm>
#include <sstream>

namespace discknot::puiseux {

NonSquarefreeFace::NonSquarefreeFace(FaceData face)
    : std::runtime_error("face polynomial is not squarefree: " + [&] {
        std::ostringstream os;
        os << face.face_poly;
        return os.str();
      }()),
      face_(std::move(face)) {}

std::vector<PuiseuxBranch> branches(const BiPoly& F) {
  const NewtonPolygon np = newton_polygon(F);
  std::vector<PuiseuxBranch> out;
  if (np.x_pow > 0) {
    PuiseuxBranch z{.is_zero_branch = true,
                    .multiplicity = np.x_pow,
                    .face = {},
                    .ramification = 1,
                    .conjugacy_size = 1,
                    .x = PuiseuxSeries::zero(make_modulus(UniPoly::variable(Var::c)))};
    out.push_back(std::move(z));
  }
  for (FaceData& f : faces(np, F)) {
    if (!gcd_sqfree(f.face_poly).is_squarefree) throw NonSquarefreeFace(f);
    ModulusPtr ring = make_modulus(f.face_poly);
    const int deg = f.degree();
    const int q = f.ramification;
    const Rat lambda = f.lambda;
    PuiseuxBranch b{.is_zero_branch = false,
                    .multiplicity = 1,
                    .face = std::move(f),
                    .ramification = q,
                    .conjugacy_size = deg / q,
                    .x = PuiseuxSeries(ring, {{lambda, QuotientElem::generator(ring)}}, Rat(lambda + make_rat(1, q)))};
    out.push_back(std::move(b));
  }
  return out;
}

PuiseuxBranch refine(const BiPoly& F, const PuiseuxBranch& b, const Rat& target) {
  if (b.is_zero_branch || b.x.is_exact()) return b;
  const int x_pow = ord(F, Var::x).value();
  const BiPoly G = F.divide_x_power(x_pow);
  const BiPoly Gx = G.derivative(Var::x);
  const Rat lambda = b.lambda();
  const Rat dweight = b.face.weight - lambda;  // valuation of G_x along the branch

  PuiseuxBranch out = b;
  while (!out.x.is_exact() && *out.x.precision() < target) {
    const Rat pi = *out.x.precision();
    const Rat next = std::min(Rat(2 * pi - lambda), target);
    const PuiseuxSeries xe = out.x.exact_part();
    const Rat cap = next + dweight;
    const PuiseuxSeries value = substitute(G, xe, cap);
    if (value.is_exact_zero()) {
      out.x = xe;
      break;
    }
    const PuiseuxSeries slope = substitute(Gx, xe, cap);
    const Order v = value.valuation_or_precision();
    const PuiseuxSeries correction = mul(value, invert(slope, Rat(next - *v)), next);
    out.x = (xe - correction).truncated(next);
  }
  return out;
}

}  // namespace discknot::puiseux
