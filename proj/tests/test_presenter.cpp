#include "discknot/presenter.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

using namespace discknot;
using namespace discknot::presenter;

namespace {

// Brute force over all assignments into S_n, no pruning.
long brute_hom_count(const GroupPresentation& p, int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  do perms.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  long total = 0;
  std::vector<std::size_t> pick(static_cast<std::size_t>(p.generators), 0);
  for (;;) {
    bool ok = true;
    for (const Relator& r : p.relators) {
      std::vector<int> pt = base;
      for (int i = 0; i < n; ++i) pt[static_cast<std::size_t>(i)] = i;
      for (int l : r.word()) {
        const auto& g = perms[pick[static_cast<std::size_t>(std::abs(l) - 1)]];
        for (int& v : pt) {
          if (l > 0) {
            v = g[static_cast<std::size_t>(v)];
          } else {
            v = static_cast<int>(std::find(g.begin(), g.end(), v) - g.begin());
          }
        }
      }
      for (int i = 0; i < n; ++i) ok = ok && pt[static_cast<std::size_t>(i)] == i;
    }
    total += ok;
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == perms.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return total;
}

}  // namespace

TEST_CASE("diagram shape") {
  for (int nu = 1; nu <= 12; ++nu) {
    const DynkinDiagram d = bp_diagram(nu);
    CHECK(d.vertices.size() == static_cast<std::size_t>(2 * nu));
    CHECK(d.edges.size() == static_cast<std::size_t>(4 * nu - 3));
    CHECK(std::is_sorted(d.vertices.begin(), d.vertices.end(),
                         [](Vertex a, Vertex b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); }));
  }
  const DynkinDiagram d = bp_diagram(2);
  CHECK(d.label(0) == "11");
  CHECK(d.label(3) == "22");
  CHECK(d.adjacent(0, 3));
  CHECK_FALSE(d.adjacent(1, 2));
  CHECK_THROWS_AS(bp_diagram(0), std::invalid_argument);
}

TEST_CASE("nu = 1 is the trefoil group") {
  const GroupPresentation p = presentation(bp_diagram(1));
  CHECK(export_presentation(p, "plain") == "<t1,t2 | t1 t2 t1 = t2 t1 t2>");
}

TEST_CASE("relator census") {
  for (int nu = 1; nu <= 10; ++nu) {
    const RelatorCensus c = census(presentation(bp_diagram(nu)));
    const int n = 2 * nu;
    CHECK(c.braid == 4 * nu - 3);
    CHECK(c.commute == n * (n - 1) / 2 - (4 * nu - 3));
    CHECK(c.triangle == 2 * (nu - 1));
    CHECK(c.other == 0);
  }
}

TEST_CASE("abelianization is Z") {
  for (int nu = 1; nu <= 10; ++nu) {
    const Abelianization a = abelianization(presentation(bp_diagram(nu)));
    CHECK(a.rank == 1);
    CHECK(a.torsion.empty());
  }
}

TEST_CASE("smith normal form on small groups") {
  GroupPresentation p{2, {{RelatorKind::Other, {1, 1, 2, 2, 2, 2}, {}}, {RelatorKind::Other, {1, 1, 1, 1, 1, 1}, {}}}};
  // rows (2,4) and (6,0): Z/2 x Z/12
  const Abelianization a = abelianization(p);
  CHECK(a.rank == 0);
  REQUIRE(a.torsion.size() == 2);
  CHECK(a.torsion[0] == 2);
  CHECK(a.torsion[1] == 12);
  CHECK(abelianization(GroupPresentation{3, {}}).rank == 3);
}

TEST_CASE("coset enumeration of cyclic and dihedral groups") {
  GroupPresentation c5{1, {{RelatorKind::Other, {1, 1, 1, 1, 1}, {}}}};
  CosetTable t = todd_coxeter(c5);
  CHECK(t.complete);
  CHECK(t.cosets == 5);
  CHECK(t.table.size() == 5);

  // S3 as <a, b | a^2, b^2, (ab)^3>
  GroupPresentation s3{2, {{RelatorKind::Other, {1, 1}, {}},
                           {RelatorKind::Other, {2, 2}, {}},
                           {RelatorKind::Other, {1, 2, 1, 2, 1, 2}, {}}}};
  CHECK(todd_coxeter(s3).cosets == 6);
  CHECK(todd_coxeter(s3, {}, {{1}}).cosets == 3);

  GroupPresentation free2{2, {}};
  const CosetTable capped = todd_coxeter(free2, {}, {}, 50);
  CHECK_FALSE(capped.complete);
  CHECK(capped.max_cosets_defined <= 50);

  CHECK_THROWS_AS(todd_coxeter(c5, {{2}}), std::invalid_argument);
  CHECK_THROWS_AS(todd_coxeter(c5, {}, {}, 0), std::invalid_argument);
}

TEST_CASE("squares quotients are the Weyl groups") {
  // A2, D4, E6
  const std::vector<std::pair<int, std::size_t>> expected{{1, 6}, {2, 192}, {3, 51840}};
  for (auto [nu, order] : expected) {
    CAPTURE(nu);
    const GroupPresentation p = presentation(bp_diagram(nu));
    const CosetTable t = todd_coxeter(p, squares(p));
    CHECK(t.complete);
    CHECK(t.cosets == order);
  }
}

TEST_CASE("dropping triangle relators does not shrink the quotient") {
  const GroupPresentation p2 = presentation(bp_diagram(2));
  const CosetTable t2 = todd_coxeter(p2, squares(p2));
  GroupPresentation loose = p2;
  std::vector<Word> extra = squares(loose);
  for (const Relator& r : p2.relators)
    if (r.kind == RelatorKind::Triangle) extra.push_back(r.word());
  std::erase_if(loose.relators, [](const Relator& r) { return r.kind == RelatorKind::Triangle; });
  // an affine Coxeter group, so the enumeration hits the cap
  const CosetTable tl = todd_coxeter(loose, squares(loose), {}, 20000);
  CHECK_FALSE(tl.complete);
  CHECK(tl.cosets > t2.cosets);
  const CosetTable back = todd_coxeter(loose, extra);
  CHECK(back.complete);
  CHECK(back.cosets == t2.cosets);
}

TEST_CASE("homomorphism counts") {
  GroupPresentation trivial{1, {{RelatorKind::Other, {1}, {}}}};
  CHECK(hom_count(trivial, 3) == 1);
  CHECK(hom_count(GroupPresentation{2, {}}, 2) == 4);
  for (int nu = 1; nu <= 2; ++nu) {
    const GroupPresentation p = presentation(bp_diagram(nu));
    for (int n = 2; n <= 3; ++n) CHECK(hom_count(p, n) == brute_hom_count(p, n));
  }
  // trefoil into S3: 6 with equal images, 6 onto distinct transpositions
  CHECK(hom_count(presentation(bp_diagram(1)), 3) == 12);
  CHECK_THROWS_AS(hom_count(trivial, 9), std::overflow_error);
}

TEST_CASE("export and import round trip") {
  for (int nu = 1; nu <= 4; ++nu) {
    const GroupPresentation p = presentation(bp_diagram(nu));
    for (const char* fmt : {"plain", "json", "gap"}) {
      CAPTURE(nu);
      CAPTURE(fmt);
      CHECK(import_presentation(export_presentation(p, fmt), fmt) == p);
    }
  }
  GroupPresentation with_empty{1, {{RelatorKind::Other, {1, 1, 1}, {}}}};
  CHECK(export_presentation(with_empty, "gap").find("One(F)") != std::string::npos);
  CHECK(import_presentation(export_presentation(with_empty, "gap"), "gap") == with_empty);
  CHECK(import_presentation(export_presentation(with_empty, "plain"), "plain") == with_empty);
  CHECK_THROWS_AS(export_presentation(with_empty, "xml"), std::invalid_argument);
  CHECK_THROWS_AS(import_presentation("<t1 | t2 = t1>", "plain"), std::invalid_argument);
}
