#include "discknot/newton_polygon.hpp"

#include <map>
#include <stdexcept>

namespace discknot::puiseux {

namespace {

// Cross product sign of (b - a) x (c - a) in the (j, i) plane.
Int cross(const SupportPoint& a, const SupportPoint& b, const SupportPoint& c) {
  return Int(b.first - a.first) * (c.second - a.second) - Int(b.second - a.second) * (c.first - a.first);
}

}  // namespace

NewtonPolygon newton_polygon(const BiPoly& F) {
  if (F.is_zero()) throw std::invalid_argument("newton_polygon of the zero polynomial");
  NewtonPolygon np;
  np.x_pow = ord(F, Var::x).value();
  for (const auto& kv : F.terms()) np.support.emplace(kv.first.first - np.x_pow, kv.first.second);

  // For each x-exponent only the lowest t-exponent can reach the hull.
  std::map<int, int> lowest;
  for (const auto& [j, i] : np.support) {
    auto [it, fresh] = lowest.emplace(j, i);
    if (!fresh) it->second = std::min(it->second, i);
  }
  // Start: least t-exponent, then least x-exponent. Points further right are
  // dominated for every positive slope.
  SupportPoint start{lowest.begin()->first, lowest.begin()->second};
  for (const auto& [j, i] : lowest)
    if (i < start.second) start = {j, i};

  std::vector<SupportPoint> chain;
  for (auto it = lowest.rbegin(); it != lowest.rend(); ++it) {
    if (it->first > start.first) continue;
    const SupportPoint p{it->first, it->second};
    // Walking toward smaller j, keep the lower hull strictly convex.
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) >= 0) chain.pop_back();
    chain.push_back(p);
  }
  np.hull_vertices = std::move(chain);
  return np;
}

std::vector<FaceData> faces(const NewtonPolygon& np, const BiPoly& F) {
  std::vector<FaceData> out;
  for (std::size_t k = 0; k + 1 < np.hull_vertices.size(); ++k) {
    FaceData f;
    f.from = np.hull_vertices[k];
    f.to = np.hull_vertices[k + 1];
    const auto [j1, i1] = f.from;
    const auto [j2, i2] = f.to;
    f.lambda = make_rat(i2 - i1, j1 - j2);
    f.ramification = static_cast<int>(f.lambda.get_den().get_si());
    f.weight = Rat(i1) + f.lambda * Rat(j1);
    UniPoly::Terms phi;
    for (const auto& [key, coeff] : F.terms()) {
      const int j = key.first - np.x_pow;
      const int i = key.second;
      if (j < j2 || j > j1) continue;
      if (Rat(i) + f.lambda * Rat(j) == f.weight) phi[j - j2] = coeff;
    }
    f.face_poly = UniPoly(Var::c, std::move(phi));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace discknot::puiseux
