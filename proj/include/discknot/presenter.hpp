#pragma once

// The Brieskorn-Pham Dynkin diagram of y^3 + x^(nu+1) and the presentation
// of its discriminant knot group, with finite checks: abelianization, coset
// enumeration of quotients and homomorphism counts into symmetric groups.

#include "discknot/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace discknot::presenter {

struct Vertex {
  int row;  // 1 or 2
  int col;  // 1..nu
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct DynkinDiagram {
  int nu = 0;
  /// Lexicographic in (row, col); generator t_k is vertex k - 1.
  std::vector<Vertex> vertices;
  /// Index pairs (a, b) with a < b.
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int a, int b) const;
  std::string label(int v) const;  // "11", "12", ...
};

/// Rows, columns and the diagonals (1,j)-(2,j+1). Throws for nu < 1.
DynkinDiagram bp_diagram(int nu);

/// Letters are +k for t_k and -k for its inverse, k 1-based.
using Word = std::vector<int>;

Word inverse(const Word& w);

enum class RelatorKind { Commute, Braid, Triangle, Other };
std::string to_string(RelatorKind k);

struct Relator {
  RelatorKind kind = RelatorKind::Other;
  Word lhs;
  Word rhs;
  /// lhs * rhs^-1.
  Word word() const { return concat(lhs, inverse(rhs)); }
  static Word concat(Word a, const Word& b);
  friend bool operator==(const Relator&, const Relator&) = default;
};

struct GroupPresentation {
  int generators = 0;
  std::vector<Relator> relators;
  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Commute relators for non-adjacent pairs, braid relators for edges,
/// t_i t_k t_j t_i = t_j t_i t_k t_j for triangles i < j < k.
GroupPresentation presentation(const DynkinDiagram& d);

struct RelatorCensus {
  int commute = 0;
  int braid = 0;
  int triangle = 0;
  int other = 0;
};
RelatorCensus census(const GroupPresentation& p);

/// t_k^2 for every generator.
std::vector<Word> squares(const GroupPresentation& p);

struct Abelianization {
  int rank = 0;             // free part
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
};
/// Smith normal form of the exponent-sum matrix.
Abelianization abelianization(const GroupPresentation& p);

struct CosetTable {
  bool complete = false;
  /// Live cosets at the end; the quotient order when complete.
  std::size_t cosets = 0;
  std::size_t max_cosets_defined = 0;
  /// Columns: generator k at 2(k-1), its inverse at 2(k-1)+1. Coset 0 is
  /// the subgroup. Filled only when complete.
  std::vector<std::vector<int>> table;
};

/// HLT coset enumeration with lookahead. Throws std::invalid_argument for
/// letters outside the generator range or cap < 1.
CosetTable todd_coxeter(const GroupPresentation& p, const std::vector<Word>& extra_relators = {},
                        const std::vector<Word>& subgroup = {}, std::size_t coset_cap = 1'000'000);

/// Number of homomorphisms into S_n, by backtracking that checks each
/// relator as soon as its generators are assigned. Throws std::overflow_error
/// for n > 8.
Int hom_count(const GroupPresentation& p, int n, const std::vector<Word>& extra_relators = {});

/// Formats: "plain", "json", "gap". Throws std::invalid_argument otherwise.
std::string export_presentation(const GroupPresentation& p, std::string_view format);
GroupPresentation import_presentation(std::string_view text, std::string_view format);

}  // namespace discknot::presenter
