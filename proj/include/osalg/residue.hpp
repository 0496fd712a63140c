#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osalg/algebra.hpp"
#include "osalg/chi.hpp"
#include "osalg/matroid.hpp"

namespace osalg {

/// Strictly increasing chain of flats; the k-th entry has rank k.
struct FlagChain {
  std::vector<Flat> flats;

  int size() const { return static_cast<int>(flats.size()); }
  friend bool operator==(const FlagChain& a, const FlagChain& b) { return a.flats == b.flats; }
  std::string to_string() const;
};

/// A family of ordered independent tuples, one per member set; the order is
/// the data, its support is the set.
struct DiagonalBasisCandidate {
  int level = 0;
  std::vector<OrderedTuple> orders;
};

/// The NBC sets of the given level with increasing orders.
DiagonalBasisCandidate nbc_candidate(const Matroid& m, int level);

/// The chain cl(last) < cl(last two) < ... < cl(support), built from the last
/// entry backwards. pre: support independent.
FlagChain flag_of(const Matroid& m, const OrderedTuple& order);

/// The unique ordering of j whose flag equals f, if one exists. Greedy from
/// the last position; at most one unused element can extend the chain at each
/// step (two would contradict independence of j). pre: j independent,
/// |j| == f.size().
std::optional<OrderedTuple> match_flag(const Matroid& m, ElementSet j, const FlagChain& f);

/// Degree-preserving section of deletion: embeds each term unchanged, then
/// reduces to the NBC basis of c's matroid. When x is the maximum ground
/// element the NBC basis of the deletion embeds unchanged. c is the chi map
/// of the larger matroid; a lives over its deletion by x.
AlgebraElement inclusion(const ChiMap& c, GroundElement x, const AlgebraElement& a);

/// One residue step: e_I maps to e_{I-x} when x is in I; to the chi ratio
/// times e_{I-y} when some y in I is parallel to x; to 0 otherwise. The
/// result lives over the contraction by x (pair it with c.contracted(x)).
/// pre: x not a loop; supports of a independent.
AlgebraElement residue_step(const ChiMap& c, GroundElement x, const AlgebraElement& a);

/// Composition of residue steps along the order, applying the LAST entry
/// first and contracting matroid and chi after each step; returns the final
/// degree-0 coefficient. The input is reduced to NBC normal form first, so
/// any representative of the class may be passed.
/// pre: order independent; a homogeneous of degree |order| (or zero).
Scalar iterated_residue(const ChiMap& c, const OrderedTuple& order, const AlgebraElement& a);

/// True iff the candidate has at least dimension(m, level) members, every
/// member is an independent level-set, and no member's flag is matched by a
/// different member's set. A passing candidate is a basis of the level
/// component, with the iterated residues along its orders as dual basis.
bool is_diagonal_basis(const Matroid& m, const DiagonalBasisCandidate& cand);

/// Coordinates of a in the diagonal basis: the coefficient of each member
/// (I, sigma_I) is iterated_residue along I^{sigma_I}. pre: cand passes
/// is_diagonal_basis; a homogeneous of degree cand.level (or zero).
AlgebraElement expand(const ChiMap& c, const DiagonalBasisCandidate& cand, const AlgebraElement& a);

/// Sum of all dual-basis coefficients of a. For determinant chi maps built
/// from affine configurations (last coordinate 1) this equals 1 on every
/// nonzero class of top degree.
Scalar sum_residues(const ChiMap& c, const DiagonalBasisCandidate& cand, const AlgebraElement& a);

struct ExactSequenceDegree {
  int level = 0;
  int dim_full = 0;        // A_level of the matroid
  int dim_deleted = 0;     // A_level of the deletion
  int dim_contracted = 0;  // A_{level-1} of the contraction
  bool dims_ok = false;
  bool compose_zero_ok = false;  // residue after inclusion vanishes
  bool section_ok = false;       // residue after the section is the identity
  bool inclusion_injective_ok = false;

  bool ok() const { return dims_ok && compose_zero_ok && section_ok && inclusion_injective_ok; }
};

struct ExactSequenceReport {
  GroundElement x = 0;
  bool simple = true;  // parallel elements or loops present: checks still run, splitting may fail
  std::vector<ExactSequenceDegree> degrees;
  bool boundary_generators_annihilated = true;
  std::vector<std::string> failures;

  bool ok() const;
};

/// Checks the split exact sequence of the deletion-contraction pair at x:
/// dimensions add up, residue after inclusion vanishes, the section inverts
/// the residue on the contraction's NBC basis, inclusion is injective, and
/// every boundary ideal generator is annihilated by the residue step.
/// pre: x not a loop.
ExactSequenceReport verify_exact_sequence(const ChiMap& c, GroundElement x);

}  // namespace osalg
