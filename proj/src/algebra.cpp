#include "osalg/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "osalg/errors.hpp"

namespace osalg {

AlgebraElement AlgebraElement::monomial(ElementSet support, Scalar coeff) {
  AlgebraElement e;
  e.add_term(support, coeff);
  return e;
}

Scalar AlgebraElement::coeff(ElementSet support) const {
  auto it = terms_.find(support);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> AlgebraElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int deg = terms_.begin()->first.size();
  for (const auto& [support, coeff] : terms_)
    if (support.size() != deg) return std::nullopt;
  return deg;
}

void AlgebraElement::add_term(ElementSet support, const Scalar& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(support, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [support, coeff] : other.terms_) add_term(support, coeff);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [support, coeff] : other.terms_) {
    Scalar neg = -coeff;
    add_term(support, neg);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [support, coeff] : terms_) coeff *= s;
  return *this;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [support, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += scalar_to_string(coeff) + " e" + support.to_string();
  }
  return out;
}

Scalar beta_product(const BetaTable& beta, ElementSet x, ElementSet y) {
  if (x.intersects(y))
    throw input_error("beta product requires disjoint supports, got " + x.to_string() + " and " +
                      y.to_string());
  Scalar out(1);
  for (GroundElement i : x.elements())
    for (GroundElement j : y.elements())
      if (i > j) out *= beta.at(j, i);
  return out;
}

Scalar beta_product(const ChiMap& c, ElementSet x, ElementSet y) {
  return beta_product(c.beta(), x, y);
}

Monomial normalize_tuple(const BetaTable& beta, const OrderedTuple& t) {
  if (t.has_repeat()) return Monomial{ElementSet(), Scalar(0)};
  // Bubble sort; each adjacent swap of a descent (a,b), a > b, contributes
  // the relation factor beta_{b,a}.
  std::vector<GroundElement> entries = t.entries;
  Scalar coeff(1);
  for (std::size_t i = 1; i < entries.size(); ++i)
    for (std::size_t k = i; k > 0 && entries[k - 1] > entries[k]; --k) {
      coeff *= beta.at(entries[k], entries[k - 1]);
      std::swap(entries[k - 1], entries[k]);
    }
  return Monomial{ElementSet::of(entries), coeff};
}

Monomial normalize_tuple(const ChiMap& c, const OrderedTuple& t) {
  return normalize_tuple(c.beta(), t);
}

AlgebraElement multiply(const ChiMap& c, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [s, q] : a.terms())
    for (const auto& [t, r] : b.terms()) {
      if (s.intersects(t)) continue;
      Scalar coeff = q * r * beta_product(c.beta(), s, t);
      out.add_term(s | t, coeff);
    }
  return out;
}

AlgebraElement boundary(const ChiMap& c, ElementSet x) {
  AlgebraElement out;
  std::vector<GroundElement> elems = x.elements();
  int sign = -1;  // (-1)^p starting at p = 1
  for (GroundElement e : elems) {
    ElementSet rest = x.without(e);
    Scalar coeff = Scalar(sign) * c.eval_set(rest);
    out.add_term(rest, coeff);
    sign = -sign;
  }
  return out;
}

std::vector<IdealGenerator> ideal_generators(const ChiMap& c) {
  const Matroid& m = c.matroid();
  std::vector<IdealGenerator> out;
  std::uint32_t ground = m.ground().mask();
  // Enumerate all subsets of the ground set (submask walk includes 0).
  std::uint32_t sub = ground;
  while (true) {
    ElementSet s = ElementSet::from_mask(sub);
    if (!m.is_independent(s))
      out.push_back({IdealGenerator::Kind::monomial, s, AlgebraElement::monomial(s)});
    // Unidependents whose circuit is a loop contribute no boundary relation:
    // their boundary has independent support and does not lie in the ideal.
    if (m.is_inactive_unidependent(s) && m.unique_circuit(s)->size() > 1)
      out.push_back({IdealGenerator::Kind::boundary, s, boundary(c, s)});
    if (sub == 0) break;
    sub = (sub - 1) & ground;
  }
  std::sort(out.begin(), out.end(), [](const IdealGenerator& a, const IdealGenerator& b) {
    if (a.set != b.set) return GradedLexLess{}(a.set, b.set);
    return a.kind < b.kind;
  });
  return out;
}

namespace {

struct BrokenCircuitRule {
  ElementSet broken;
  GroundElement alpha;  // min of the generating circuit
};

std::vector<BrokenCircuitRule> broken_circuit_rules(const Matroid& m) {
  std::vector<BrokenCircuitRule> rules;
  for (const ElementSet& c : m.circuits())
    if (c.size() > 1) rules.push_back({c.without(c.min()), c.min()});
  std::sort(rules.begin(), rules.end(), [](const BrokenCircuitRule& a, const BrokenCircuitRule& b) {
    if (a.broken != b.broken) return lex_less(a.broken, b.broken);
    return a.alpha < b.alpha;
  });
  rules.erase(std::unique(rules.begin(), rules.end(),
                          [](const BrokenCircuitRule& a, const BrokenCircuitRule& b) {
                            return a.broken == b.broken && a.alpha == b.alpha;
                          }),
              rules.end());
  return rules;
}

}  // namespace

AlgebraElement reduce_to_nbc(const ChiMap& c, const AlgebraElement& a, const ReduceOptions& options,
                             ReduceStats* stats) {
  const Matroid& m = c.matroid();
  std::vector<BrokenCircuitRule> rules = broken_circuit_rules(m);
  std::mt19937_64 rng(options.seed);

  if (stats) *stats = ReduceStats{};

  AlgebraElement work;
  for (const auto& [support, coeff] : a.terms())
    if (m.is_independent(support)) work.add_term(support, coeff);

  AlgebraElement done;
  while (!work.is_zero()) {
    // Largest pending support first: rewrites only produce lex-smaller
    // supports of the same size, so nothing lands above the cursor again.
    auto it = std::prev(work.terms().end());
    ElementSet support = it->first;
    Scalar coeff = it->second;

    std::vector<const BrokenCircuitRule*> applicable;
    for (const BrokenCircuitRule& r : rules)
      if (r.broken.subset_of(support)) applicable.push_back(&r);

    if (applicable.empty()) {
      done.add_term(support, coeff);
      AlgebraElement removal = AlgebraElement::monomial(support, coeff);
      work -= removal;
      continue;
    }

    const BrokenCircuitRule* rule = applicable.front();
    if (options.strategy == ReduceStrategy::randomized && applicable.size() > 1)
      rule = applicable[static_cast<std::size_t>(rng() % applicable.size())];

    assert(!support.contains(rule->alpha));
    ElementSet u = support.with(rule->alpha);
    std::vector<GroundElement> u_elems = u.elements();
    int alpha_pos = 0;
    for (std::size_t p = 0; p < u_elems.size(); ++p)
      if (u_elems[p] == rule->alpha) alpha_pos = static_cast<int>(p) + 1;

    Scalar pivot = c.eval_set(support);
    assert(sgn(pivot) != 0);

    AlgebraElement replacement;
    int p = 0;
    for (GroundElement e : u_elems) {
      ++p;
      if (e == rule->alpha) continue;
      ElementSet rest = u.without(e);
      Scalar value = c.eval_set(rest);
      if (sgn(value) == 0) continue;
      int sign = ((p - alpha_pos) % 2 == 0) ? 1 : -1;
      Scalar term = Scalar(-sign) * value / pivot;
      if (stats && !lex_less(rest, support)) stats->strictly_decreasing = false;
      replacement.add_term(rest, term);
    }
    if (stats) ++stats->rewrite_steps;

    AlgebraElement removal = AlgebraElement::monomial(support, coeff);
    work -= removal;
    work += coeff * replacement;
  }
  return done;
}

int dimension(const Matroid& m, int level) {
  if (level < 0) throw precondition_error("dimension level must be nonnegative");
  if (level > m.rank()) return 0;
  return static_cast<int>(m.nbc_sets(level).size());
}

}  // namespace osalg
