#pragma once

#include <unordered_map>
#include <vector>

#include "osalg/linalg.hpp"
#include "osalg/matroid.hpp"
#include "osalg/scalar.hpp"

namespace osalg {

/// A configuration of rational vectors (the linear forms of a hyperplane
/// arrangement). Zero vectors are allowed and realize loops.
class Arrangement {
public:
  Arrangement(int d, std::vector<std::vector<Scalar>> vectors);

  int dimension() const { return d_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  /// 1-based, matching ground set labels.
  const std::vector<Scalar>& vector_at(GroundElement e) const;

  /// Nonempty and every vector has last coordinate exactly 1.
  bool is_affine() const;

private:
  int d_;
  std::vector<std::vector<Scalar>> vectors_;
};

/// Parses {"d": int, "vectors": [["p/q",...],...]}; rationals as strings.
Arrangement parse_arrangement(const std::string& json_text);

/// Circuits = minimal linearly dependent subsets, by exact rank.
Matroid matroid_from_vectors(const Arrangement& a);

/// The lexicographically smallest independent subset of f spanning f, in
/// increasing index order. pre: f is a flat of matroid_from_vectors(a).
OrderedTuple flat_basis(const Arrangement& a, ElementSet f);

/// Determinant of the coordinate matrix of t's vectors expressed in the given
/// basis, columns in tuple order. pre: basis independent, |t| = |basis|,
/// every vector of t inside the span of basis.
Scalar det_in_basis(const Arrangement& a, const OrderedTuple& t, const OrderedTuple& basis);

/// det_in_basis against flat_basis(closure(support)); 0 on dependent or
/// repeated supports.
Scalar det_in_flat_basis(const Arrangement& a, const OrderedTuple& t);

/// Precomputed flat bases and coordinates for fast repeated determinant
/// evaluation. Built once per chi map; immutable afterwards.
class FlatBasisTable {
public:
  /// pre: m == matroid_from_vectors(a).
  FlatBasisTable(const Arrangement& a, const Matroid& m);

  /// As det_in_flat_basis but served from the cache. The tuple must live in
  /// the ground set of m.
  Scalar det(const OrderedTuple& t) const;

  const std::vector<GroundElement>& basis_of(ElementSet flat) const;

private:
  struct FlatData {
    std::vector<GroundElement> basis;
    std::unordered_map<GroundElement, std::vector<Scalar>> coords;
  };
  Matroid matroid_;
  std::unordered_map<std::uint32_t, FlatData> flats_;
};

}  // namespace osalg
