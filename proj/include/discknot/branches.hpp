#pragma once

// Puiseux branches x(t) of F(x, t) = 0 through the origin.
//
// All branches on one face are carried together: the leading coefficient is
// the class of c in Q[c]/(phi), phi the face polynomial. A squarefree face
// polynomial makes every root simple, which is what lets refine() lift the
// leading term by Newton iteration.

#include "discknot/newton_polygon.hpp"
#include "discknot/series.hpp"

#include <stdexcept>
#include <vector>

namespace discknot::puiseux {

class NonSquarefreeFace : public std::runtime_error {
 public:
  explicit NonSquarefreeFace(FaceData face);
  const FaceData& face() const { return face_; }

 private:
  FaceData face_;
};

struct PuiseuxBranch {
  /// The branch x = 0, present when x divides F.
  bool is_zero_branch = false;
  /// x_pow for the zero branch, 1 otherwise.
  int multiplicity = 1;
  FaceData face;
  /// Denominator of lambda.
  int ramification = 1;
  /// Number of distinct branches bundled: deg phi / ramification.
  int conjugacy_size = 1;
  /// x(t), exact or with error O(t^precision).
  PuiseuxSeries x;

  const ModulusPtr& ring() const { return x.ring(); }
  Rat lambda() const { return face.lambda; }
};

/// Leading terms c t^lambda, one per face, preceded by the zero branch.
/// Throws NonSquarefreeFace.
std::vector<PuiseuxBranch> branches(const BiPoly& F);

/// Lifts a face branch until x is known modulo t^target (or exactly).
PuiseuxBranch refine(const BiPoly& F, const PuiseuxBranch& b, const Rat& target);

}  // namespace discknot::puiseux
