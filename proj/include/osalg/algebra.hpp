#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osalg/chi.hpp"
#include "osalg/ground_set.hpp"
#include "osalg/scalar.hpp"

namespace osalg {

struct Monomial {
  ElementSet support;
  Scalar coeff;
};

/// A linear combination of square-free monomials e_X, stored with sorted
/// supports in canonical (cardinality, lex) order and no zero coefficients.
class AlgebraElement {
public:
  using TermMap = std::map<ElementSet, Scalar, GradedLexLess>;

  AlgebraElement() = default;

  static AlgebraElement unit() { return monomial(ElementSet()); }
  static AlgebraElement monomial(ElementSet support, Scalar coeff = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }
  /// 0 when the support is absent.
  Scalar coeff(ElementSet support) const;

  /// Common degree of all terms; nullopt when zero or mixed-degree.
  std::optional<int> homogeneous_degree() const;

  void add_term(ElementSet support, const Scalar& coeff);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Scalar& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Scalar(-1); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Debug rendering like "-1 e{1,2,5} + 2 e{1,3,5}"; "0" when zero.
  std::string to_string() const;

private:
  TermMap terms_;
};

/// Product of beta_{j,i} over the inverted pairs i in x, j in y with i > j:
/// the coefficient picked up when e_x e_y is reordered to e_{x|y}.
/// pre: x and y disjoint.
Scalar beta_product(const BetaTable& beta, ElementSet x, ElementSet y);
Scalar beta_product(const ChiMap& c, ElementSet x, ElementSet y);

/// Sorts the tuple, accumulating beta factors; zero coefficient on repeats.
Monomial normalize_tuple(const BetaTable& beta, const OrderedTuple& t);
Monomial normalize_tuple(const ChiMap& c, const OrderedTuple& t);

/// Bilinear product in the ambient algebra (e_i^2 = 0, e_j e_i = beta e_i e_j);
/// the result is NOT reduced modulo the ideal.
AlgebraElement multiply(const ChiMap& c, const AlgebraElement& a, const AlgebraElement& b);

/// The alternating boundary of e_x: sum over positions p (1-based, increasing
/// support order) of (-1)^p chi(x minus p-th element) e_{x minus p-th element}.
AlgebraElement boundary(const ChiMap& c, ElementSet x);

struct IdealGenerator {
  enum class Kind { monomial, boundary };
  Kind kind;
  ElementSet set;
  AlgebraElement element;
};

/// Basis of the defining ideal: e_D for every dependent D, and the boundary
/// of e_U for every inactive unidependent U; graded by degree, then lex.
std::vector<IdealGenerator> ideal_generators(const ChiMap& c);

enum class ReduceStrategy { lex_smallest, randomized };

struct ReduceOptions {
  ReduceStrategy strategy = ReduceStrategy::lex_smallest;
  unsigned long long seed = 0;  // randomized strategy only
};

struct ReduceStats {
  long rewrite_steps = 0;
  /// Every rewrite replaced a support by strictly lex-smaller supports of the
  /// same size (the termination certificate).
  bool strictly_decreasing = true;
};

/// Normal form modulo the ideal: dependent supports are dropped; supports
/// containing a broken circuit are straightened through the boundary relation
/// of the corresponding unidependent until only NBC supports remain.
AlgebraElement reduce_to_nbc(const ChiMap& c, const AlgebraElement& a,
                             const ReduceOptions& options = {}, ReduceStats* stats = nullptr);

/// Number of NBC sets of the given size; 0 above the rank. pre: level >= 0.
int dimension(const Matroid& m, int level);

}  // namespace osalg
