#pragma once

#include <functional>
#include <vector>

#include "osalg/algebra.hpp"
#include "osalg/chi.hpp"
#include "osalg/ground_set.hpp"
#include "osalg/linalg.hpp"
#include "osalg/scalar.hpp"

/// Brute-force reimplementations used as cross-checks. Everything here favors
/// the most literal definition over speed and shares no code with the library
/// paths under test.
namespace oracles {

bool is_independent(const std::vector<osalg::ElementSet>& circuits, osalg::ElementSet x);

int rank(const std::vector<osalg::ElementSet>& circuits, osalg::ElementSet x);

osalg::ElementSet closure(osalg::ElementSet ground, const std::vector<osalg::ElementSet>& circuits,
                          osalg::ElementSet x);

/// Minimal sets on which the predicate reports dependence.
std::vector<osalg::ElementSet> minimal_dependents(
    osalg::ElementSet ground, const std::function<bool(osalg::ElementSet)>& dependent);

/// All independent level-subsets containing no broken circuit, by filtering
/// every subset.
std::vector<osalg::ElementSet> nbc_sets(osalg::ElementSet ground,
                                        const std::vector<osalg::ElementSet>& circuits, int level);

/// Recursive cofactor expansion; 0x0 gives 1.
osalg::Scalar det_cofactor(const osalg::MatQ& m);

/// Largest k with a nonsingular k-by-k submatrix, by cofactor determinants.
int rank_by_minors(const osalg::MatQ& m);

/// Expansion of e_j in the nbc monomial basis obtained by plain linear
/// algebra: solve e_j = nbc part + span of the degree-|j| relation space
/// (dependent monomials and unidependent boundaries), and certify that the
/// two parts meet trivially so the nbc coordinates are forced.
osalg::AlgebraElement nbc_expansion(const osalg::ChiMap& c, osalg::ElementSet j);

}  // namespace oracles
