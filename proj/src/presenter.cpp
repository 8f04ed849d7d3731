#include "discknot/presenter.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace discknot::presenter {

bool DynkinDiagram::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

std::string DynkinDiagram::label(int v) const {
  return std::to_string(vertices.at(static_cast<std::size_t>(v)).row) +
         std::to_string(vertices.at(static_cast<std::size_t>(v)).col);
}

DynkinDiagram bp_diagram(int nu) {
  if (nu < 1) throw std::invalid_argument("bp_diagram: nu must be >= 1");
  DynkinDiagram d;
  d.nu = nu;
  for (int row = 1; row <= 2; ++row)
    for (int col = 1; col <= nu; ++col) d.vertices.push_back({row, col});
  auto index = [nu](int row, int col) { return (row - 1) * nu + (col - 1); };
  for (int row = 1; row <= 2; ++row)
    for (int col = 1; col < nu; ++col) d.edges.emplace_back(index(row, col), index(row, col + 1));
  for (int col = 1; col <= nu; ++col) d.edges.emplace_back(index(1, col), index(2, col));
  for (int col = 1; col < nu; ++col) d.edges.emplace_back(index(1, col), index(2, col + 1));
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

Word Relator::concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string to_string(RelatorKind k) {
  switch (k) {
    case RelatorKind::Commute: return "commute";
    case RelatorKind::Braid: return "braid";
    case RelatorKind::Triangle: return "triangle";
    case RelatorKind::Other: return "other";
  }
  return "other";
}

GroupPresentation presentation(const DynkinDiagram& d) {
  GroupPresentation p;
  const int n = static_cast<int>(d.vertices.size());
  p.generators = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int i = a + 1, j = b + 1;
      if (d.adjacent(a, b))
        p.relators.push_back({RelatorKind::Braid, {i, j, i}, {j, i, j}});
      else
        p.relators.push_back({RelatorKind::Commute, {i, j}, {j, i}});
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (d.adjacent(a, b) && d.adjacent(a, c) && d.adjacent(b, c)) {
          const int i = a + 1, j = b + 1, k = c + 1;
          p.relators.push_back({RelatorKind::Triangle, {i, k, j, i}, {j, i, k, j}});
        }
  return p;
}

RelatorCensus census(const GroupPresentation& p) {
  RelatorCensus c;
  for (const Relator& r : p.relators) {
    switch (r.kind) {
      case RelatorKind::Commute: ++c.commute; break;
      case RelatorKind::Braid: ++c.braid; break;
      case RelatorKind::Triangle: ++c.triangle; break;
      case RelatorKind::Other: ++c.other; break;
    }
  }
  return c;
}

std::vector<Word> squares(const GroupPresentation& p) {
  std::vector<Word> out;
  for (int k = 1; k <= p.generators; ++k) out.push_back({k, k});
  return out;
}

namespace {

void check_word(const Word& w, int generators) {
  for (int l : w)
    if (l == 0 || std::abs(l) > generators)
      throw std::invalid_argument("relator letter " + std::to_string(l) + " outside generator range");
}

}  // namespace

Abelianization abelianization(const GroupPresentation& p) {
  const std::size_t cols = static_cast<std::size_t>(p.generators);
  std::vector<std::vector<Int>> m;
  for (const Relator& r : p.relators) {
    check_word(r.word(), p.generators);
    std::vector<Int> row(cols, 0);
    for (int l : r.word()) row[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
    if (std::any_of(row.begin(), row.end(), [](const Int& v) { return v != 0; })) m.push_back(std::move(row));
  }
  // Smith normal form by alternating row and column reduction.
  std::vector<Int> diag;
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < m.size(); ++col) {
    // pick a pivot in the remaining submatrix
    auto find_pivot = [&]() -> std::pair<std::size_t, std::size_t> {
      std::pair<std::size_t, std::size_t> best{m.size(), cols};
      Int best_abs = 0;
      for (std::size_t r = top; r < m.size(); ++r)
        for (std::size_t c = top; c < cols; ++c)
          if (m[r][c] != 0 && (best_abs == 0 || abs(m[r][c]) < best_abs)) {
            best = {r, c};
            best_abs = abs(m[r][c]);
          }
      return best;
    };
    auto [pr, pc] = find_pivot();
    if (pr == m.size()) break;
    for (;;) {
      std::swap(m[top], m[pr]);
      for (auto& row : m) std::swap(row[top], row[pc]);
      bool clean = true;
      for (std::size_t r = top + 1; r < m.size(); ++r) {
        if (m[r][top] == 0) continue;
        const Int q = m[r][top] / m[top][top];
        for (std::size_t c = top; c < cols; ++c) m[r][c] -= q * m[top][c];
        if (m[r][top] != 0) clean = false;
      }
      for (std::size_t c = top + 1; c < cols; ++c) {
        if (m[top][c] == 0) continue;
        const Int q = m[top][c] / m[top][top];
        for (std::size_t r = top; r < m.size(); ++r) m[r][c] -= q * m[r][top];
        if (m[top][c] != 0) clean = false;
      }
      if (clean) {
        // divisibility: fold a non-multiple from the rest into the pivot row
        bool divides = true;
        for (std::size_t r = top + 1; r < m.size() && divides; ++r)
          for (std::size_t c = top + 1; c < cols; ++c)
            if (m[r][c] % m[top][top] != 0) {
              for (std::size_t k = top; k < cols; ++k) m[top][k] += m[r][k];
              divides = false;
              break;
            }
        if (divides) break;
      }
      std::tie(pr, pc) = find_pivot();
    }
    diag.push_back(abs(m[top][top]));
    ++top;
  }
  Abelianization a;
  a.rank = p.generators - static_cast<int>(diag.size());
  for (const Int& d : diag)
    if (d > 1) a.torsion.push_back(d);
  std::sort(a.torsion.begin(), a.torsion.end());
  return a;
}

namespace {

class Enumerator {
 public:
  Enumerator(int generators, std::vector<Word> relators, std::size_t cap)
      : cols_(2 * generators), relators_(std::move(relators)), cap_(cap) {
    new_coset();
  }

  bool run(const std::vector<Word>& subgroup) {
    for (const Word& w : subgroup) scan(0, to_cols(w), true);
    std::vector<std::vector<int>> rels;
    for (const Word& r : relators_) rels.push_back(to_cols(r));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& r : rels) {
        if (!live(c)) break;
        if (!scan(static_cast<int>(c), r, true)) return false;
      }
      for (int x = 0; x < cols_ && live(c); ++x)
        if (at(static_cast<int>(c), x) < 0 && !define(static_cast<int>(c), x, rels)) return false;
    }
    return true;
  }

  std::size_t live_count() const { return live_; }
  std::size_t max_defined() const { return parent_.size(); }

  std::vector<std::vector<int>> compact() const {
    std::vector<int> index(parent_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(c)) index[c] = next++;
    std::vector<std::vector<int>> out;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      std::vector<int> row(static_cast<std::size_t>(cols_));
      for (int x = 0; x < cols_; ++x) row[static_cast<std::size_t>(x)] = index[static_cast<std::size_t>(at(static_cast<int>(c), x))];
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  static int inv(int x) { return x ^ 1; }

  std::vector<int> to_cols(const Word& w) const {
    std::vector<int> r;
    for (int l : w) r.push_back(l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1);
    return r;
  }

  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)]; }
  int at(int c, int x) const { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)]; }
  bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int new_coset() {
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    ++live_;
    return c;
  }

  // Lookahead: scan every live coset without defining. Returns false when
  // nothing was freed.
  bool lookahead(const std::vector<std::vector<int>>& rels) {
    const std::size_t before = live_;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      for (const auto& r : rels) {
        if (!live(c)) break;
        scan(static_cast<int>(c), r, false);
      }
    return live_ < before;
  }

  bool define(int c, int x, const std::vector<std::vector<int>>& rels) {
    if (live_ >= cap_) {
      lookahead(rels);
      if (!live(static_cast<std::size_t>(c)) || at(c, x) >= 0) return true;
    }
    return define_unchecked(c, x);
  }

  bool define_unchecked(int c, int x) {
    if (at(c, x) >= 0) return true;
    if (live_ >= cap_) return false;
    const int d = new_coset();
    at(c, x) = d;
    at(d, inv(x)) = c;
    return true;
  }

  // Scans relator r from coset c. With fill, undefined gaps get new cosets;
  // returns false only if the cap stops a definition.
  bool scan(int c, const std::vector<int>& r, bool fill) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(r.size()) - 1;
    for (;;) {
      while (i <= j && at(f, r[static_cast<std::size_t>(i)]) >= 0) f = at(f, r[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, inv(r[static_cast<std::size_t>(j)])) >= 0) b = at(b, inv(r[static_cast<std::size_t>(j--)]));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, r[static_cast<std::size_t>(i)]) = b;
        at(b, inv(r[static_cast<std::size_t>(i)])) = f;
        return true;
      }
      if (!fill) return true;
      if (!define_unchecked(f, r[static_cast<std::size_t>(i)])) return false;
    }
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::deque<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (int x = 0; x < cols_; ++x) {
        const int f = at(e, x);
        if (f < 0) continue;
        if (at(f, inv(x)) == e) at(f, inv(x)) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, inv(x)) >= 0) {
          merge(e1, at(f1, inv(x)), queue);
        } else {
          at(e1, x) = f1;
          at(f1, inv(x)) = e1;
        }
      }
    }
  }

  int cols_;
  std::vector<Word> relators_;
  std::size_t cap_;
  std::vector<int> parent_;
  std::vector<int> table_;
  std::size_t live_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& p, const std::vector<Word>& extra_relators,
                        const std::vector<Word>& subgroup, std::size_t coset_cap) {
  if (coset_cap < 1) throw std::invalid_argument("todd_coxeter: coset cap must be >= 1");
  std::vector<Word> rels;
  for (const Relator& r : p.relators) rels.push_back(r.word());
  for (const Word& w : extra_relators) rels.push_back(w);
  for (const Word& w : rels) check_word(w, p.generators);
  for (const Word& w : subgroup) check_word(w, p.generators);
  // empty relators impose nothing and would confuse the scan
  std::erase_if(rels, [](const Word& w) { return w.empty(); });
  Enumerator en(p.generators, rels, coset_cap);
  CosetTable t;
  t.complete = en.run(subgroup);
  t.cosets = en.live_count();
  t.max_cosets_defined = en.max_defined();
  if (t.complete) t.table = en.compact();
  return t;
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
  return r;
}

Perm invert(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

}  // namespace

Int hom_count(const GroupPresentation& p, int n, const std::vector<Word>& extra_relators) {
  if (n < 1) throw std::invalid_argument("hom_count: n must be >= 1");
  if (n > 8) throw std::overflow_error("hom_count: target S_n with n > 8 is beyond the search bound");
  std::vector<Word> rels;
  for (const Relator& r : p.relators) rels.push_back(r.word());
  for (const Word& w : extra_relators) rels.push_back(w);
  for (const Word& w : rels) check_word(w, p.generators);

  // Relators grouped by the largest generator they mention.
  std::vector<std::vector<Word>> ready(static_cast<std::size_t>(p.generators) + 1);
  for (const Word& w : rels) {
    int top = 0;
    for (int l : w) top = std::max(top, std::abs(l));
    ready[static_cast<std::size_t>(top)].push_back(w);
  }
  std::vector<Perm> all;
  Perm base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  do all.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));

  std::vector<Perm> image(static_cast<std::size_t>(p.generators) + 1), image_inv(image.size());
  auto holds = [&](const Word& w) {
    Perm acc = base;
    std::iota(acc.begin(), acc.end(), 0);
    for (int l : w) acc = compose(acc, l > 0 ? image[static_cast<std::size_t>(l)] : image_inv[static_cast<std::size_t>(-l)]);
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (acc[i] != static_cast<int>(i)) return false;
    return true;
  };
  for (const Word& w : ready[0])
    if (!holds(w)) return 0;

  Int count = 0;
  std::function<void(int)> assign = [&](int k) {
    if (k > p.generators) {
      ++count;
      return;
    }
    for (const Perm& g : all) {
      image[static_cast<std::size_t>(k)] = g;
      image_inv[static_cast<std::size_t>(k)] = invert(g);
      bool ok = true;
      for (const Word& w : ready[static_cast<std::size_t>(k)])
        if (!holds(w)) {
          ok = false;
          break;
        }
      if (ok) assign(k + 1);
    }
  };
  assign(1);
  return count;
}

namespace {

std::string letter(int l) { return "t" + std::to_string(std::abs(l)) + (l < 0 ? "^-1" : ""); }

std::string word_text(const Word& w, const char* sep) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? sep : "") + letter(w[i]);
  return s;
}

RelatorKind infer_kind(const Relator& r) {
  if (r.lhs.size() == 2 && r.rhs.size() == 2) return RelatorKind::Commute;
  if (r.lhs.size() == 3 && r.rhs.size() == 3) return RelatorKind::Braid;
  if (r.lhs.size() == 4 && r.rhs.size() == 4) return RelatorKind::Triangle;
  return RelatorKind::Other;
}

RelatorKind kind_from_string(const std::string& s) {
  for (RelatorKind k : {RelatorKind::Commute, RelatorKind::Braid, RelatorKind::Triangle, RelatorKind::Other})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown relator kind '" + s + "'");
}

// Reads letters "tK" or "tK^-1" separated by `sep` characters; "1" is empty.
Word parse_word(std::string_view text, std::string_view seps) {
  Word w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || seps.find(text[i]) != std::string_view::npos)) ++i;
  };
  skip();
  if (text.substr(i) == "1" || text.substr(i).starts_with("One(")) return w;
  while (i < text.size()) {
    if (text[i] != 't') throw std::invalid_argument("bad letter in word: '" + std::string(text) + "'");
    ++i;
    int k = 0;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) k = 10 * k + (text[i++] - '0');
    if (i == start || k == 0) throw std::invalid_argument("bad generator index in '" + std::string(text) + "'");
    if (text.substr(i).starts_with("^-1")) {
      w.push_back(-k);
      i += 3;
    } else {
      w.push_back(k);
    }
    skip();
  }
  return w;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

void check_presentation(const GroupPresentation& p) {
  if (p.generators < 0) throw std::invalid_argument("negative generator count");
  for (const Relator& r : p.relators) check_word(r.word(), p.generators);
}

}  // namespace

std::string export_presentation(const GroupPresentation& p, std::string_view format) {
  if (format == "plain") {
    std::string s = "<";
    for (int k = 1; k <= p.generators; ++k) s += (k > 1 ? "," : "") + letter(k);
    s += " |";
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      s += std::string(i ? ", " : " ") + word_text(p.relators[i].lhs, " ") + " = " + word_text(p.relators[i].rhs, " ");
    return s + ">";
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    std::vector<std::string> gens;
    for (int k = 1; k <= p.generators; ++k) gens.push_back(letter(k));
    j["generators"] = gens;
    j["relators"] = nlohmann::ordered_json::array();
    for (const Relator& r : p.relators)
      j["relators"].push_back({{"kind", to_string(r.kind)}, {"lhs", r.lhs}, {"rhs", r.rhs}});
    return j.dump(2);
  }
  if (format == "gap") {
    std::ostringstream os;
    os << "F := FreeGroup(";
    for (int k = 1; k <= p.generators; ++k) os << (k > 1 ? ", " : "") << '"' << letter(k) << '"';
    os << ");;\nAssignGeneratorVariables(F);;\nG := F / [\n";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      const Relator& r = p.relators[i];
      const std::string lhs = r.lhs.empty() ? "One(F)" : word_text(r.lhs, "*");
      const std::string rhs = r.rhs.empty() ? "One(F)" : word_text(r.rhs, "*");
      os << "  (" << lhs << ")/(" << rhs << ")" << (i + 1 < p.relators.size() ? "," : "") << "\n";
    }
    os << "];;\n";
    return os.str();
  }
  throw std::invalid_argument("unknown presentation format '" + std::string(format) + "'");
}

GroupPresentation import_presentation(std::string_view text, std::string_view format) {
  GroupPresentation p;
  if (format == "plain") {
    const std::string s = trim(text);
    if (s.size() < 2 || s.front() != '<' || s.back() != '>') throw std::invalid_argument("plain presentation must be <...>");
    const std::string body = s.substr(1, s.size() - 2);
    const auto bar = body.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("plain presentation needs '|'");
    const std::string gens = trim(std::string_view(body).substr(0, bar));
    p.generators = gens.empty() ? 0 : static_cast<int>(parse_word(gens, ",").size());
    std::string rels = body.substr(bar + 1);
    std::stringstream ss(rels);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (trim(item).empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("relator without '=': " + item);
      Relator r{RelatorKind::Other, parse_word(trim(item.substr(0, eq)), " "), parse_word(trim(item.substr(eq + 1)), " ")};
      r.kind = infer_kind(r);
      p.relators.push_back(std::move(r));
    }
  } else if (format == "json") {
    const auto j = nlohmann::json::parse(text);
    p.generators = static_cast<int>(j.at("generators").size());
    for (const auto& r : j.at("relators"))
      p.relators.push_back({kind_from_string(r.at("kind").get<std::string>()), r.at("lhs").get<Word>(),
                            r.at("rhs").get<Word>()});
  } else if (format == "gap") {
    const std::string s(text);
    const auto open = s.find("FreeGroup(");
    const auto close = s.find(')', open);
    if (open == std::string::npos || close == std::string::npos) throw std::invalid_argument("gap text lacks FreeGroup(...)");
    p.generators = static_cast<int>(std::count(s.begin() + static_cast<long>(open), s.begin() + static_cast<long>(close), '"') / 2);
    const auto lb = s.find('[', close);
    const auto rb = s.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb) throw std::invalid_argument("gap text lacks relator list");
    std::stringstream ss(s.substr(lb + 1, rb - lb - 1));
    std::string line;
    while (std::getline(ss, line)) {
      std::string t = trim(line);
      if (!t.empty() && t.back() == ',') t.pop_back();
      if (t.empty()) continue;
      const auto mid = t.find(")/(");
      if (t.front() != '(' || t.back() != ')' || mid == std::string::npos) throw std::invalid_argument("bad gap relator: " + t);
      Relator r{RelatorKind::Other, parse_word(t.substr(1, mid - 1), "*"), parse_word(t.substr(mid + 3, t.size() - mid - 4), "*")};
      r.kind = infer_kind(r);
      p.relators.push_back(std::move(r));
    }
  } else {
    throw std::invalid_argument("unknown presentation format '" + std::string(format) + "'");
  }
  check_presentation(p);
  return p;
}

}  // namespace discknot::presenter
