#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "osalg/arrangement.hpp"
#include "osalg/matroid.hpp"
#include "osalg/scalar.hpp"

namespace osalg {

enum class ChiKind { orlik_solomon, orlik_terao, oriented_sign };

std::string to_string(ChiKind k);

/// Commutation coefficients beta_{i,j} for i < j; all entries nonzero.
class BetaTable {
public:
  BetaTable(int n, Scalar default_value);

  /// pre: i < j, v != 0.
  void set(GroundElement i, GroundElement j, Scalar v);
  const Scalar& at(GroundElement i, GroundElement j) const;
  int size() const { return n_; }

private:
  int n_;
  Scalar default_;
  std::map<std::pair<GroundElement, GroundElement>, Scalar> entries_;
};

/// A multiplicative-unit-compatible alternating map from ordered tuples to
/// rationals, nonzero exactly on independent supports. Evaluation composes
/// through contraction by appending contracted elements to the tuple; labels
/// never shift.
///
/// Immutable; minors share the underlying evaluation context.
class ChiMap {
public:
  ChiKind kind() const { return kind_; }
  /// The matroid of the current minor.
  const Matroid& matroid() const { return current_; }
  const BetaTable& beta() const { return *beta_; }

  /// Sign rule included: eval(t) = sgn(sort t) * eval(sorted t). Entries must
  /// be distinct and inside the current ground set.
  Scalar eval(const OrderedTuple& t) const;
  /// Evaluation on the increasing arrangement of a set.
  Scalar eval_set(ElementSet s) const;

  /// Restriction to the deletion minor. pre: x in ground, not a loop.
  ChiMap deleted(GroundElement x) const;
  /// The induced map on the contraction: eval'(t) = eval(t * x).
  /// pre: x in ground, not a loop.
  ChiMap contracted(GroundElement x) const;

  /// Copy whose value on the sorted set s is forced to v (fault injection
  /// for the verifier tests).
  ChiMap with_value_override(ElementSet s, Scalar v) const;
  /// oriented_sign only: flips the basis signature on the given flats.
  ChiMap with_flat_sign_flips(std::vector<ElementSet> flats) const;

private:
  friend ChiMap make_chi_os(const Matroid& m, std::optional<BetaTable> beta);
  friend ChiMap make_chi_ot(const Arrangement& a, std::optional<BetaTable> beta);
  friend ChiMap make_chi_sign(const Arrangement& a, std::optional<BetaTable> beta);
  ChiMap() = default;

  Scalar base_value(ElementSet s) const;

  ChiKind kind_ = ChiKind::orlik_solomon;
  std::shared_ptr<const Matroid> base_;
  Matroid current_{0, {}};
  std::vector<GroundElement> contract_suffix_;  // most recent contraction first
  std::shared_ptr<const BetaTable> beta_;
  std::shared_ptr<const FlatBasisTable> flat_table_;  // ot / sign
  std::shared_ptr<const std::map<std::uint32_t, Scalar>> overrides_;
  std::shared_ptr<const std::vector<ElementSet>> sign_flips_;
};

/// chi = permutation sign on independent sets; beta defaults to -1.
ChiMap make_chi_os(const Matroid& m, std::optional<BetaTable> beta = std::nullopt);
/// chi = determinant in the flat basis of the closure; beta defaults to +1.
/// pre: no zero vectors.
ChiMap make_chi_ot(const Arrangement& a, std::optional<BetaTable> beta = std::nullopt);
/// chi = sign of the flat-basis determinant; beta defaults to +1.
/// pre: no zero vectors.
ChiMap make_chi_sign(const Arrangement& a, std::optional<BetaTable> beta = std::nullopt);

struct UcViolation {
  enum class Rule { uc1, uc2 };
  Rule rule;
  ElementSet set_u;
  ElementSet set_uprime;  // empty for uc1
  std::string detail;
};

struct UcReport {
  long uc1_checked = 0;
  long uc2_checked = 0;
  std::vector<UcViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive UC1 check over all subsets of the ground set and UC2 check over
/// all nested unidependent pairs U' subset of U. pre: ground size <= 12.
UcReport verify_uc(const ChiMap& c);

}  // namespace osalg
