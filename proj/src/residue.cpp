#include "osalg/residue.hpp"

#include <algorithm>
#include <cassert>

#include "osalg/errors.hpp"
#include "osalg/linalg.hpp"

namespace osalg {

std::string FlagChain::to_string() const {
  std::string out;
  for (const Flat& f : flats) {
    if (!out.empty()) out += " < ";
    out += f.to_string();
  }
  return out.empty() ? "(empty chain)" : out;
}

DiagonalBasisCandidate nbc_candidate(const Matroid& m, int level) {
  DiagonalBasisCandidate cand;
  cand.level = level;
  for (ElementSet s : m.nbc_sets(level)) cand.orders.push_back(sorted_tuple(s));
  return cand;
}

FlagChain flag_of(const Matroid& m, const OrderedTuple& order) {
  if (order.has_repeat()) throw input_error("flag of a tuple with repeated entries");
  ElementSet support = order.support();
  if (!m.is_independent(support))
    throw input_error("flag of a dependent tuple " + order.to_string());

  FlagChain chain;
  ElementSet acc;
  for (auto it = order.entries.rbegin(); it != order.entries.rend(); ++it) {
    acc = acc.with(*it);
    chain.flats.push_back(m.closure(acc));
  }
  return chain;
}

std::optional<OrderedTuple> match_flag(const Matroid& m, ElementSet j, const FlagChain& f) {
  if (!m.is_independent(j)) throw precondition_error("match_flag requires an independent set");
  if (j.size() != f.size())
    throw precondition_error("match_flag: set size " + std::to_string(j.size()) +
                             " differs from chain length " + std::to_string(f.size()));

  std::vector<GroundElement> reversed;
  ElementSet used;
  for (int k = 0; k < f.size(); ++k) {
    int found = 0;
    GroundElement pick = 0;
    for (GroundElement e : (j - used).elements())
      if (m.closure(used.with(e)) == f.flats[static_cast<std::size_t>(k)]) {
        ++found;
        pick = e;
      }
    if (found == 0) return std::nullopt;
    assert(found == 1);  // two candidates would force a dependence inside j
    used = used.with(pick);
    reversed.push_back(pick);
  }
  std::reverse(reversed.begin(), reversed.end());
  return OrderedTuple(std::move(reversed));
}

AlgebraElement inclusion(const ChiMap& c, GroundElement x, const AlgebraElement& a) {
  const Matroid& m = c.matroid();
  if (!m.ground().contains(x))
    throw input_error("inclusion pivot " + std::to_string(x) + " is outside the ground set");
  AlgebraElement embedded;
  for (const auto& [support, coeff] : a.terms()) {
    if (support.contains(x))
      throw input_error("inclusion input contains the pivot element " + std::to_string(x));
    if (!support.subset_of(m.ground().without(x)))
      throw input_error("inclusion input support " + support.to_string() +
                        " is outside the deletion's ground set");
    embedded.add_term(support, coeff);
  }
  return reduce_to_nbc(c, embedded);
}

AlgebraElement residue_step(const ChiMap& c, GroundElement x, const AlgebraElement& a) {
  const Matroid& m = c.matroid();
  if (!m.ground().contains(x))
    throw input_error("residue pivot " + std::to_string(x) + " is outside the ground set");
  if (m.is_loop(x)) throw precondition_error("cannot contract the loop " + std::to_string(x));

  AlgebraElement out;
  for (const auto& [support, coeff] : a.terms()) {
    if (!m.is_independent(support))
      throw precondition_error("residue step on dependent support " + support.to_string());
    if (support.contains(x)) {
      out.add_term(support.without(x), coeff);
      continue;
    }
    std::optional<GroundElement> y = m.parallel_partner(support, x);
    if (!y) continue;
    OrderedTuple rest = sorted_tuple(support.without(*y));
    Scalar num = c.eval(concat(rest, OrderedTuple{x}));
    Scalar den = c.eval(concat(rest, OrderedTuple{*y}));
    assert(sgn(den) != 0);
    Scalar value = coeff * num / den;
    out.add_term(support.without(*y), value);
  }
  return out;
}

Scalar iterated_residue(const ChiMap& c, const OrderedTuple& order, const AlgebraElement& a) {
  if (order.has_repeat()) throw input_error("residue order has repeated entries");
  ElementSet support = order.support();
  if (!c.matroid().is_independent(support))
    throw input_error("residue order " + order.to_string() + " is not independent");

  if (a.is_zero()) return Scalar(0);
  std::optional<int> degree = a.homogeneous_degree();
  if (!degree)
    throw input_error("iterated residue requires a homogeneous element");
  if (*degree != order.size())
    throw input_error("degree " + std::to_string(*degree) + " does not match order length " +
                      std::to_string(order.size()));

  AlgebraElement cur = reduce_to_nbc(c, a);
  ChiMap chi = c;
  for (auto it = order.entries.rbegin(); it != order.entries.rend(); ++it) {
    if (cur.is_zero()) return Scalar(0);
    cur = residue_step(chi, *it, cur);
    chi = chi.contracted(*it);
  }
  return cur.coeff(ElementSet());
}

namespace {

void validate_candidate(const Matroid& m, const DiagonalBasisCandidate& cand) {
  if (cand.level < 0) throw input_error("diagonal basis level must be nonnegative");
  for (const OrderedTuple& order : cand.orders) {
    if (order.size() != cand.level)
      throw input_error("diagonal basis order " + order.to_string() + " has length " +
                        std::to_string(order.size()) + ", expected " + std::to_string(cand.level));
    if (order.has_repeat())
      throw input_error("diagonal basis order " + order.to_string() + " repeats an entry");
    if (!order.support().subset_of(m.ground()))
      throw input_error("diagonal basis order " + order.to_string() +
                        " is outside the ground set");
  }
}

}  // namespace

bool is_diagonal_basis(const Matroid& m, const DiagonalBasisCandidate& cand) {
  validate_candidate(m, cand);

  if (static_cast<int>(cand.orders.size()) < dimension(m, cand.level)) return false;

  std::vector<ElementSet> supports;
  for (const OrderedTuple& order : cand.orders) {
    ElementSet s = order.support();
    if (!m.is_independent(s)) return false;
    supports.push_back(s);
  }
  for (std::size_t i = 0; i < supports.size(); ++i)
    for (std::size_t k = i + 1; k < supports.size(); ++k)
      if (supports[i] == supports[k]) return false;

  for (std::size_t i = 0; i < cand.orders.size(); ++i) {
    FlagChain flag = flag_of(m, cand.orders[i]);
    for (std::size_t k = 0; k < supports.size(); ++k) {
      if (supports[k] == supports[i]) continue;
      if (match_flag(m, supports[k], flag)) return false;
    }
  }
  return true;
}

AlgebraElement expand(const ChiMap& c, const DiagonalBasisCandidate& cand,
                      const AlgebraElement& a) {
  if (!is_diagonal_basis(c.matroid(), cand))
    throw precondition_error("expansion requires a diagonal basis candidate that passes the check");
  if (!a.is_zero()) {
    std::optional<int> degree = a.homogeneous_degree();
    if (!degree || *degree != cand.level)
      throw input_error("expansion input must be homogeneous of degree " +
                        std::to_string(cand.level));
  }

  AlgebraElement reduced = reduce_to_nbc(c, a);
  AlgebraElement out;
  for (const OrderedTuple& order : cand.orders)
    out.add_term(order.support(), iterated_residue(c, order, reduced));
  return out;
}

Scalar sum_residues(const ChiMap& c, const DiagonalBasisCandidate& cand, const AlgebraElement& a) {
  AlgebraElement coords = expand(c, cand, a);
  Scalar sum(0);
  for (const auto& [support, coeff] : coords.terms()) sum += coeff;
  return sum;
}

namespace {

std::vector<ElementSet> nbc_or_empty(const Matroid& m, int level) {
  if (level < 0 || level > m.rank()) return {};
  return m.nbc_sets(level);
}

}  // namespace

bool ExactSequenceReport::ok() const {
  if (!boundary_generators_annihilated) return false;
  for (const ExactSequenceDegree& d : degrees)
    if (!d.ok()) return false;
  return true;
}

ExactSequenceReport verify_exact_sequence(const ChiMap& c, GroundElement x) {
  const Matroid& m = c.matroid();
  ExactSequenceReport report;
  report.x = x;
  report.simple = m.is_simple();

  ChiMap c_del = c.deleted(x);
  ChiMap c_con = c.contracted(x);
  const Matroid& m_del = c_del.matroid();
  const Matroid& m_con = c_con.matroid();

  for (int level = 0; level <= m.rank(); ++level) {
    ExactSequenceDegree deg;
    deg.level = level;
    deg.dim_full = dimension(m, level);
    deg.dim_deleted = dimension(m_del, level);
    deg.dim_contracted = level == 0 ? 0 : dimension(m_con, level - 1);
    deg.dims_ok = deg.dim_full == deg.dim_deleted + deg.dim_contracted;
    if (!deg.dims_ok)
      report.failures.push_back("degree " + std::to_string(level) + ": dimensions " +
                                std::to_string(deg.dim_full) + " != " +
                                std::to_string(deg.dim_deleted) + " + " +
                                std::to_string(deg.dim_contracted));

    // Residue after inclusion vanishes, and the embedded basis stays
    // linearly independent.
    std::vector<ElementSet> del_basis = nbc_or_empty(m_del, level);
    std::vector<ElementSet> full_basis = nbc_or_empty(m, level);
    MatQ image_rows;
    deg.compose_zero_ok = true;
    for (ElementSet i : del_basis) {
      AlgebraElement included = inclusion(c, x, AlgebraElement::monomial(i));
      AlgebraElement res = reduce_to_nbc(c_con, residue_step(c, x, included));
      if (!res.is_zero()) {
        deg.compose_zero_ok = false;
        report.failures.push_back("degree " + std::to_string(level) + ": residue of included e" +
                                  i.to_string() + " is " + res.to_string());
      }
      std::vector<Scalar> row;
      row.reserve(full_basis.size());
      for (ElementSet b : full_basis) row.push_back(included.coeff(b));
      image_rows.push_back(std::move(row));
    }
    deg.inclusion_injective_ok =
        matrix_rank(image_rows) == static_cast<int>(del_basis.size());
    if (!deg.inclusion_injective_ok)
      report.failures.push_back("degree " + std::to_string(level) +
                                ": inclusion images are linearly dependent");

    // The section e_I -> e_{I+x} splits the residue.
    deg.section_ok = true;
    for (ElementSet i : nbc_or_empty(m_con, level - 1)) {
      AlgebraElement lifted = reduce_to_nbc(c, AlgebraElement::monomial(i.with(x)));
      AlgebraElement back = reduce_to_nbc(c_con, residue_step(c, x, lifted));
      if (!(back == AlgebraElement::monomial(i))) {
        deg.section_ok = false;
        report.failures.push_back("degree " + std::to_string(level) + ": section at e" +
                                  i.to_string() + " returns " + back.to_string());
      }
    }

    report.degrees.push_back(deg);
  }

  for (const IdealGenerator& gen : ideal_generators(c)) {
    if (gen.kind != IdealGenerator::Kind::boundary) continue;
    AlgebraElement res = reduce_to_nbc(c_con, residue_step(c, x, gen.element));
    if (!res.is_zero()) {
      report.boundary_generators_annihilated = false;
      report.failures.push_back("boundary generator of " + gen.set.to_string() +
                                " maps to " + res.to_string());
    }
  }
  return report;
}

}  // namespace osalg
