#include "osalg/arrangement.hpp"

#include <algorithm>
#include <cassert>

#include <json.hpp>

#include "osalg/errors.hpp"

namespace osalg {

namespace {

bool is_zero_vector(const std::vector<Scalar>& v) {
  for (const Scalar& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

MatQ rows_of(const Arrangement& a, ElementSet s) {
  MatQ rows;
  rows.reserve(s.size());
  for (GroundElement e : s.elements()) rows.push_back(a.vector_at(e));
  return rows;
}

int vector_rank(const Arrangement& a, ElementSet s) {
  return matrix_rank(rows_of(a, s));
}

}  // namespace

Arrangement::Arrangement(int d, std::vector<std::vector<Scalar>> vectors)
    : d_(d), vectors_(std::move(vectors)) {
  if (d < 0) throw input_error("arrangement dimension must be nonnegative");
  if (static_cast<int>(vectors_.size()) > kMaxGroundSize)
    throw input_error("arrangement has more than " + std::to_string(kMaxGroundSize) + " vectors");
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    if (static_cast<int>(vectors_[i].size()) != d)
      throw input_error("vector " + std::to_string(i + 1) + " has length " +
                        std::to_string(vectors_[i].size()) + ", expected " + std::to_string(d));
}

const std::vector<Scalar>& Arrangement::vector_at(GroundElement e) const {
  if (e < 1 || e > size())
    throw input_error("vector index " + std::to_string(e) + " out of range [1," +
                      std::to_string(size()) + "]");
  return vectors_[static_cast<std::size_t>(e - 1)];
}

bool Arrangement::is_affine() const {
  if (vectors_.empty() || d_ == 0) return false;
  for (const auto& v : vectors_)
    if (v.back() != 1) return false;
  return true;
}

Arrangement parse_arrangement(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("arrangement JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("vectors"))
    throw input_error("arrangement JSON needs fields \"d\" and \"vectors\"");
  if (!j["d"].is_number_integer()) throw input_error("arrangement field \"d\" must be an integer");
  int d = j["d"].get<int>();
  if (!j["vectors"].is_array()) throw input_error("arrangement field \"vectors\" must be an array");

  std::vector<std::vector<Scalar>> vectors;
  int index = 0;
  for (const auto& row : j["vectors"]) {
    ++index;
    if (!row.is_array())
      throw input_error("vector " + std::to_string(index) + " must be an array of rational strings");
    std::vector<Scalar> v;
    for (const auto& entry : row) {
      if (!entry.is_string())
        throw input_error("vector " + std::to_string(index) + ": entries must be rational strings");
      v.push_back(parse_scalar(entry.get<std::string>()));
    }
    vectors.push_back(std::move(v));
  }
  return Arrangement(d, std::move(vectors));
}

Matroid matroid_from_vectors(const Arrangement& a) {
  int n = a.size();
  ElementSet ground = ElementSet::full(n);
  int full_rank = vector_rank(a, ground);

  // A circuit has at most rank+1 elements; scan subsets by size and keep the
  // dependents all of whose maximal proper subsets are independent.
  std::vector<ElementSet> circuits;
  auto is_dependent = [&](ElementSet s) { return vector_rank(a, s) < s.size(); };
  std::vector<GroundElement> elems = ground.elements();

  auto scan = [&](auto&& self, ElementSet cur, std::size_t next, int remaining) -> void {
    if (remaining == 0) {
      if (!is_dependent(cur)) return;
      for (GroundElement e : cur.elements())
        if (is_dependent(cur.without(e))) return;
      circuits.push_back(cur);
      return;
    }
    for (std::size_t i = next; i + remaining <= elems.size(); ++i)
      self(self, cur.with(elems[i]), i + 1, remaining - 1);
  };
  for (int size = 1; size <= full_rank + 1 && size <= n; ++size)
    scan(scan, ElementSet(), 0, size);

  return Matroid(n, std::move(circuits), Matroid::unchecked);
}

OrderedTuple flat_basis(const Arrangement& a, ElementSet f) {
  if (!f.subset_of(ElementSet::full(a.size())))
    throw input_error("flat " + f.to_string() + " exceeds the arrangement's ground set");
  int fr = vector_rank(a, f);
  for (GroundElement e : (ElementSet::full(a.size()) - f).elements())
    if (vector_rank(a, f.with(e)) == fr)
      throw precondition_error("set " + f.to_string() + " is not a flat: element " +
                               std::to_string(e) + " lies in its span");

  OrderedTuple basis;
  ElementSet chosen;
  for (GroundElement e : f.elements()) {
    if (vector_rank(a, chosen.with(e)) > chosen.size()) {
      chosen = chosen.with(e);
      basis.entries.push_back(e);
    }
    if (chosen.size() == fr) break;
  }
  assert(chosen.size() == fr);
  return basis;
}

Scalar det_in_basis(const Arrangement& a, const OrderedTuple& t, const OrderedTuple& basis) {
  if (t.size() != basis.size())
    throw precondition_error("det: tuple length " + std::to_string(t.size()) +
                             " differs from basis length " + std::to_string(basis.size()));
  ElementSet bs = basis.support();
  if (vector_rank(a, bs) != basis.size())
    throw precondition_error("det: basis " + basis.to_string() + " is not independent");

  MatQ columns;
  for (GroundElement b : basis.entries) columns.push_back(a.vector_at(b));
  MatQ coord_columns;
  for (GroundElement e : t.entries) {
    auto c = solve_in_columns(columns, a.vector_at(e));
    if (!c)
      throw precondition_error("det: vector " + std::to_string(e) + " is outside the span of " +
                               basis.to_string());
    coord_columns.push_back(std::move(*c));
  }

  // matrix_determinant takes rows; determinant is transpose-invariant.
  return matrix_determinant(coord_columns);
}

Scalar det_in_flat_basis(const Arrangement& a, const OrderedTuple& t) {
  if (t.has_repeat()) return Scalar(0);
  ElementSet s = t.support();
  if (vector_rank(a, s) < s.size()) return Scalar(0);

  int sr = s.size();
  ElementSet flat = s;
  for (GroundElement e : (ElementSet::full(a.size()) - s).elements())
    if (vector_rank(a, s.with(e)) == sr) flat = flat.with(e);

  return det_in_basis(a, t, flat_basis(a, flat));
}

FlatBasisTable::FlatBasisTable(const Arrangement& a, const Matroid& m) : matroid_(m) {
  // Every flat is the closure of an independent set; enumerate independents
  // by backtracking and close them.
  std::vector<GroundElement> elems = m.ground().elements();
  std::vector<ElementSet> flats;
  auto visit_flat = [&](ElementSet flat) {
    if (flats_.count(flat.mask())) return;
    flats_.emplace(flat.mask(), FlatData{});
    flats.push_back(flat);
  };
  auto extend = [&](auto&& self, ElementSet cur, std::size_t next) -> void {
    visit_flat(m.closure(cur));
    for (std::size_t i = next; i < elems.size(); ++i) {
      ElementSet cand = cur.with(elems[i]);
      if (m.is_independent(cand)) self(self, cand, i + 1);
    }
  };
  extend(extend, ElementSet(), 0);

  for (ElementSet flat : flats) {
    FlatData& data = flats_.at(flat.mask());

    ElementSet chosen;
    MatQ columns;
    for (GroundElement e : flat.elements())
      if (m.is_independent(chosen.with(e))) {
        chosen = chosen.with(e);
        columns.push_back(a.vector_at(e));
        data.basis.push_back(e);
      }

    for (GroundElement e : flat.elements()) {
      auto c = solve_in_columns(columns, a.vector_at(e));
      assert(c.has_value());
      data.coords.emplace(e, std::move(*c));
    }
  }
}

Scalar FlatBasisTable::det(const OrderedTuple& t) const {
  if (t.has_repeat()) return Scalar(0);
  ElementSet s = t.support();
  if (!matroid_.is_independent(s)) return Scalar(0);

  const FlatData& data = flats_.at(matroid_.closure(s).mask());
  MatQ coord_columns;
  for (GroundElement e : t.entries) coord_columns.push_back(data.coords.at(e));
  return matrix_determinant(coord_columns);
}

const std::vector<GroundElement>& FlatBasisTable::basis_of(ElementSet flat) const {
  auto it = flats_.find(flat.mask());
  if (it == flats_.end())
    throw precondition_error("set " + flat.to_string() + " is not a known flat");
  return it->second.basis;
}

}  // namespace osalg
