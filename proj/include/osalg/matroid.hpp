#pragma once

#include <optional>
#include <vector>

#include "osalg/ground_set.hpp"

namespace osalg {

/// A closed set; produced by Matroid::closure.
using Flat = ElementSet;

/// A matroid given by its list of circuits. The ground set is a subset of the
/// ambient {1..n}: minors keep the original element labels, so after deleting
/// or contracting x the remaining elements are still named as before.
///
/// Immutable after construction; all operations are pure.
class Matroid {
public:
  struct UncheckedTag {};
  static constexpr UncheckedTag unchecked{};

  /// Validates the circuit axioms: no empty circuit, no duplicates, no
  /// circuit containing another, and (exhaustively, for n ≤ 12) circuit
  /// elimination. Throws input_error on violation.
  Matroid(int n, std::vector<ElementSet> circuits);

  /// Range checks only; for generated families known to be valid.
  Matroid(int n, std::vector<ElementSet> circuits, UncheckedTag);

  int ambient_size() const { return n_; }
  ElementSet ground() const { return ground_; }
  int size() const { return ground_.size(); }

  /// Sorted by cardinality, then lexicographically.
  const std::vector<ElementSet>& circuits() const { return circuits_; }

  bool is_loop(GroundElement e) const;
  /// No loops and no two-element circuits.
  bool is_simple() const;

  int rank() const { return rank_; }
  int rank(ElementSet x) const;
  bool is_independent(ElementSet x) const;
  Flat closure(ElementSet x) const;

  Matroid deleted(GroundElement x) const;
  /// pre: x is not a loop.
  Matroid contracted(GroundElement x) const;

  /// { C minus min(C) : C circuit with |C| > 1 }, deduplicated, sorted.
  std::vector<ElementSet> broken_circuits() const;

  /// All independent level-subsets of the ground set containing no broken
  /// circuit, in lexicographic order. pre: 0 <= level <= rank().
  std::vector<ElementSet> nbc_sets(int level) const;

  /// The unique circuit contained in u, if there is exactly one.
  std::optional<ElementSet> unique_circuit(ElementSet u) const;

  /// rank(u) == |u| - 1, i.e. u contains exactly one circuit.
  bool is_unidependent(ElementSet u) const;

  /// { a in closure(i) minus i : a == min(unique_circuit(i+a)) }.
  /// pre: i independent.
  ElementSet active_elements(ElementSet i) const;

  /// True iff u is unidependent and c = min(C(u)) is the smallest active
  /// element of u minus c.
  bool is_inactive_unidependent(ElementSet u) const;

  /// The unique y in i with {x,y} a circuit, if any. pre: x not in i, x not
  /// a loop, i independent (uniqueness relies on it).
  std::optional<GroundElement> parallel_partner(ElementSet i, GroundElement x) const;

private:
  Matroid(ElementSet ground, int n, std::vector<ElementSet> circuits);
  void check_subset(ElementSet x) const;
  void finalize_circuits(bool reject_redundant);

  int n_ = 0;
  ElementSet ground_;
  std::vector<ElementSet> circuits_;
  ElementSet loops_;
  int rank_ = 0;
};

}  // namespace osalg
