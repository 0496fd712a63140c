#include "oracles.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

#include "osalg/matroid.hpp"

namespace oracles {

using namespace osalg;

bool is_independent(const std::vector<ElementSet>& circuits, ElementSet x) {
  for (const ElementSet& c : circuits)
    if (c.subset_of(x)) return false;
  return true;
}

int rank(const std::vector<ElementSet>& circuits, ElementSet x) {
  int best = 0;
  std::uint32_t sub = x.mask();
  while (true) {
    ElementSet s = ElementSet::from_mask(sub);
    if (is_independent(circuits, s) && s.size() > best) best = s.size();
    if (sub == 0) break;
    sub = (sub - 1) & x.mask();
  }
  return best;
}

ElementSet closure(ElementSet ground, const std::vector<ElementSet>& circuits, ElementSet x) {
  int base = rank(circuits, x);
  ElementSet out = x;
  for (GroundElement e : (ground - x).elements())
    if (rank(circuits, x.with(e)) == base) out = out.with(e);
  return out;
}

std::vector<ElementSet> minimal_dependents(ElementSet ground,
                                           const std::function<bool(ElementSet)>& dependent) {
  std::vector<ElementSet> out;
  std::uint32_t sub = ground.mask();
  while (true) {
    ElementSet s = ElementSet::from_mask(sub);
    if (!s.empty() && dependent(s)) {
      bool minimal = true;
      for (GroundElement e : s.elements())
        if (dependent(s.without(e))) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(s);
    }
    if (sub == 0) break;
    sub = (sub - 1) & ground.mask();
  }
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return GradedLexLess{}(a, b); });
  return out;
}

std::vector<ElementSet> nbc_sets(ElementSet ground, const std::vector<ElementSet>& circuits,
                                 int level) {
  std::vector<ElementSet> broken;
  for (const ElementSet& c : circuits)
    if (c.size() > 1) broken.push_back(c.without(c.min()));

  std::vector<ElementSet> out;
  std::uint32_t sub = ground.mask();
  while (true) {
    ElementSet s = ElementSet::from_mask(sub);
    if (s.size() == level && is_independent(circuits, s)) {
      bool keep = true;
      for (const ElementSet& b : broken)
        if (b.subset_of(s)) {
          keep = false;
          break;
        }
      if (keep) out.push_back(s);
    }
    if (sub == 0) break;
    sub = (sub - 1) & ground.mask();
  }
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return lex_less(a, b); });
  return out;
}

Scalar det_cofactor(const MatQ& m) {
  std::size_t n = m.size();
  for (const auto& row : m) assert(row.size() == n);
  if (n == 0) return Scalar(1);
  if (n == 1) return m[0][0];
  Scalar out(0);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    MatQ minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t s = 0; s < n; ++s)
        if (s != k) row.push_back(m[r][s]);
      minor.push_back(std::move(row));
    }
    out += Scalar(sign) * m[0][k] * det_cofactor(minor);
    sign = -sign;
  }
  return out;
}

namespace {

void submatrices(const MatQ& m, std::size_t k, std::vector<std::size_t> rows,
                 std::vector<std::size_t> cols, std::size_t next_row, std::size_t next_col,
                 bool& found) {
  if (found) return;
  if (rows.size() < k) {
    for (std::size_t r = next_row; r + (k - rows.size()) <= m.size(); ++r) {
      rows.push_back(r);
      submatrices(m, k, rows, cols, r + 1, next_col, found);
      rows.pop_back();
    }
    return;
  }
  std::size_t width = m.empty() ? 0 : m[0].size();
  if (cols.size() < k) {
    for (std::size_t s = next_col; s + (k - cols.size()) <= width; ++s) {
      cols.push_back(s);
      submatrices(m, k, rows, cols, next_row, s + 1, found);
      cols.pop_back();
    }
    return;
  }
  MatQ sub;
  for (std::size_t r : rows) {
    std::vector<Scalar> row;
    for (std::size_t s : cols) row.push_back(m[r][s]);
    sub.push_back(std::move(row));
  }
  if (sgn(det_cofactor(sub)) != 0) found = true;
}

}  // namespace

int rank_by_minors(const MatQ& m) {
  std::size_t height = m.size();
  std::size_t width = height == 0 ? 0 : m[0].size();
  int best = 0;
  for (std::size_t k = 1; k <= std::min(height, width); ++k) {
    bool found = false;
    submatrices(m, k, {}, {}, 0, 0, found);
    if (found) best = static_cast<int>(k);
  }
  return best;
}

namespace {

// Row echelon over the columns; returns pivot column indices.
std::vector<std::size_t> echelon(MatQ& rows) {
  std::vector<std::size_t> pivots;
  std::size_t width = rows.empty() ? 0 : rows[0].size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < width && top < rows.size(); ++col) {
    std::size_t pivot = top;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || sgn(rows[r][col]) == 0) continue;
      Scalar factor = rows[r][col] / rows[top][col];
      for (std::size_t s = col; s < width; ++s) rows[r][s] -= factor * rows[top][s];
    }
    pivots.push_back(col);
    ++top;
  }
  return pivots;
}

}  // namespace

AlgebraElement nbc_expansion(const ChiMap& c, ElementSet j) {
  const Matroid& m = c.matroid();
  int level = j.size();

  std::vector<ElementSet> all;
  std::map<std::uint32_t, std::size_t> row_of;
  std::uint32_t sub = m.ground().mask();
  while (true) {
    ElementSet s = ElementSet::from_mask(sub);
    if (s.size() == level) {
      row_of[s.mask()] = all.size();
      all.push_back(s);
    }
    if (sub == 0) break;
    sub = (sub - 1) & m.ground().mask();
  }

  std::vector<ElementSet> nbc = nbc_sets(m.ground(), m.circuits(), level);

  // Columns: one unit column per nbc monomial, then the degree-level
  // relation space: dependent monomials and boundaries of unidependent sets
  // whose circuit is not a loop.
  MatQ columns;
  for (ElementSet s : nbc) {
    std::vector<Scalar> col(all.size(), Scalar(0));
    col[row_of.at(s.mask())] = Scalar(1);
    columns.push_back(std::move(col));
  }
  std::size_t relation_count = 0;
  for (ElementSet s : all)
    if (!is_independent(m.circuits(), s)) {
      std::vector<Scalar> col(all.size(), Scalar(0));
      col[row_of.at(s.mask())] = Scalar(1);
      columns.push_back(std::move(col));
      ++relation_count;
    }
  sub = m.ground().mask();
  while (true) {
    ElementSet u = ElementSet::from_mask(sub);
    if (u.size() == level + 1 && rank(m.circuits(), u) == level) {
      ElementSet circuit;
      for (const ElementSet& cc : m.circuits())
        if (cc.subset_of(u)) circuit = cc;
      if (circuit.size() > 1) {
        std::vector<Scalar> col(all.size(), Scalar(0));
        int sign = -1;
        for (GroundElement e : u.elements()) {
          ElementSet rest = u.without(e);
          Scalar value = Scalar(sign) * c.eval_set(rest);
          if (sgn(value) != 0) col[row_of.at(rest.mask())] += value;
          sign = -sign;
        }
        columns.push_back(std::move(col));
        ++relation_count;
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & m.ground().mask();
  }

  // Certify that the nbc part meets the relation space trivially, so the
  // nbc coordinates of any solution are forced.
  {
    MatQ relations_rows;
    for (std::size_t r = 0; r < all.size(); ++r) {
      std::vector<Scalar> row;
      for (std::size_t s = nbc.size(); s < columns.size(); ++s) row.push_back(columns[s][r]);
      relations_rows.push_back(std::move(row));
    }
    MatQ all_rows;
    for (std::size_t r = 0; r < all.size(); ++r) {
      std::vector<Scalar> row;
      for (const auto& col : columns) row.push_back(col[r]);
      all_rows.push_back(std::move(row));
    }
    MatQ rel_copy = relations_rows;
    MatQ full_copy = all_rows;
    std::size_t rel_rank = echelon(rel_copy).size();
    std::size_t full_rank = echelon(full_copy).size();
    if (full_rank != nbc.size() + rel_rank)
      throw std::logic_error("nbc monomials are not independent from the relation space");
  }

  // Solve [columns] x = e_j by elimination on the augmented matrix.
  MatQ aug;
  for (std::size_t r = 0; r < all.size(); ++r) {
    std::vector<Scalar> row;
    for (const auto& col : columns) row.push_back(col[r]);
    row.push_back(all[r] == j ? Scalar(1) : Scalar(0));
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots = echelon(aug);
  std::size_t width = columns.size() + 1;
  std::vector<Scalar> solution(columns.size(), Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == width - 1) throw std::logic_error("e_j is outside nbc span + relation space");
    solution[pivots[r]] = aug[r][width - 1] / aug[r][pivots[r]];
  }

  AlgebraElement out;
  for (std::size_t i = 0; i < nbc.size(); ++i) out.add_term(nbc[i], solution[i]);
  return out;
}

}  // namespace oracles
