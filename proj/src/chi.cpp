#include "osalg/chi.hpp"

#include <algorithm>
#include <cassert>

#include "osalg/algebra.hpp"
#include "osalg/errors.hpp"

namespace osalg {

std::string to_string(ChiKind k) {
  switch (k) {
    case ChiKind::orlik_solomon: return "orlik-solomon";
    case ChiKind::orlik_terao: return "orlik-terao";
    case ChiKind::oriented_sign: return "sign";
  }
  return "?";
}

BetaTable::BetaTable(int n, Scalar default_value) : n_(n), default_(std::move(default_value)) {
  if (n < 0 || n > kMaxGroundSize) throw input_error("beta table size out of range");
  if (sgn(default_) == 0) throw input_error("beta coefficients must be nonzero");
}

void BetaTable::set(GroundElement i, GroundElement j, Scalar v) {
  if (i < 1 || j <= i || j > n_)
    throw input_error("beta index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") must satisfy 1 <= i < j <= " + std::to_string(n_));
  if (sgn(v) == 0) throw input_error("beta coefficients must be nonzero");
  entries_[{i, j}] = std::move(v);
}

const Scalar& BetaTable::at(GroundElement i, GroundElement j) const {
  if (i < 1 || j <= i || j > n_)
    throw precondition_error("beta lookup (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range: need 1 <= i < j <= " + std::to_string(n_));
  auto it = entries_.find({i, j});
  return it == entries_.end() ? default_ : it->second;
}

Scalar ChiMap::base_value(ElementSet s) const {
  switch (kind_) {
    case ChiKind::orlik_solomon:
      return base_->is_independent(s) ? Scalar(1) : Scalar(0);
    case ChiKind::orlik_terao:
      return flat_table_->det(sorted_tuple(s));
    case ChiKind::oriented_sign:
      return Scalar(sgn(flat_table_->det(sorted_tuple(s))));
  }
  return Scalar(0);
}

Scalar ChiMap::eval(const OrderedTuple& t) const {
  for (GroundElement e : t.entries)
    if (!current_.ground().contains(e))
      throw input_error("element " + std::to_string(e) + " is outside the current ground set " +
                        current_.ground().to_string());
  if (t.has_repeat()) return Scalar(0);

  OrderedTuple full = concat(t, OrderedTuple(contract_suffix_));
  int sign = sort_sign(full);
  assert(sign != 0);
  ElementSet s = full.support();

  Scalar value = base_value(s);
  if (overrides_) {
    auto it = overrides_->find(s.mask());
    if (it != overrides_->end()) value = it->second;
  }
  if (sign_flips_ && kind_ == ChiKind::oriented_sign && sgn(value) != 0) {
    ElementSet flat = base_->closure(s);
    for (const ElementSet& f : *sign_flips_)
      if (f == flat) value = -value;
  }
  return Scalar(sign) * value;
}

Scalar ChiMap::eval_set(ElementSet s) const {
  return eval(sorted_tuple(s));
}

ChiMap ChiMap::deleted(GroundElement x) const {
  if (current_.is_loop(x))
    throw precondition_error("cannot delete the loop " + std::to_string(x) +
                             " from the chi map (restriction is undefined on loops)");
  ChiMap out = *this;
  out.current_ = current_.deleted(x);
  return out;
}

ChiMap ChiMap::contracted(GroundElement x) const {
  ChiMap out = *this;
  out.current_ = current_.contracted(x);  // rejects loops
  out.contract_suffix_.insert(out.contract_suffix_.begin(), x);
  return out;
}

ChiMap ChiMap::with_value_override(ElementSet s, Scalar v) const {
  ChiMap out = *this;
  auto table = out.overrides_ ? std::map<std::uint32_t, Scalar>(*out.overrides_)
                              : std::map<std::uint32_t, Scalar>();
  table[s.mask()] = std::move(v);
  out.overrides_ = std::make_shared<const std::map<std::uint32_t, Scalar>>(std::move(table));
  return out;
}

ChiMap ChiMap::with_flat_sign_flips(std::vector<ElementSet> flats) const {
  if (kind_ != ChiKind::oriented_sign)
    throw precondition_error("flat sign flips apply to the sign map only");
  ChiMap out = *this;
  out.sign_flips_ = std::make_shared<const std::vector<ElementSet>>(std::move(flats));
  return out;
}

namespace {

std::shared_ptr<const BetaTable> resolve_beta(int n, const Scalar& default_value,
                                              std::optional<BetaTable> beta) {
  if (!beta) return std::make_shared<const BetaTable>(n, default_value);
  if (beta->size() != n)
    throw input_error("beta table size " + std::to_string(beta->size()) +
                      " does not match ground set size " + std::to_string(n));
  return std::make_shared<const BetaTable>(std::move(*beta));
}

void require_loopless(const Arrangement& a, const char* what) {
  for (GroundElement e = 1; e <= a.size(); ++e) {
    bool zero = true;
    for (const Scalar& x : a.vector_at(e))
      if (sgn(x) != 0) {
        zero = false;
        break;
      }
    if (zero)
      throw precondition_error(std::string(what) + " requires a loopless arrangement; vector " +
                               std::to_string(e) + " is zero");
  }
}

}  // namespace

ChiMap make_chi_os(const Matroid& m, std::optional<BetaTable> beta) {
  ChiMap c;
  c.kind_ = ChiKind::orlik_solomon;
  c.base_ = std::make_shared<const Matroid>(m);
  c.current_ = m;
  c.beta_ = resolve_beta(m.ambient_size(), Scalar(-1), std::move(beta));
  return c;
}

ChiMap make_chi_ot(const Arrangement& a, std::optional<BetaTable> beta) {
  require_loopless(a, "the determinant chi map");
  ChiMap c;
  c.kind_ = ChiKind::orlik_terao;
  Matroid m = matroid_from_vectors(a);
  c.base_ = std::make_shared<const Matroid>(m);
  c.current_ = m;
  c.beta_ = resolve_beta(m.ambient_size(), Scalar(1), std::move(beta));
  c.flat_table_ = std::make_shared<const FlatBasisTable>(a, m);
  return c;
}

ChiMap make_chi_sign(const Arrangement& a, std::optional<BetaTable> beta) {
  require_loopless(a, "the sign chi map");
  ChiMap c = make_chi_ot(a, std::move(beta));
  c.kind_ = ChiKind::oriented_sign;
  return c;
}

namespace {

// lhs == eps * rhs for a single nonzero eps?
bool proportional(const AlgebraElement& lhs, const AlgebraElement& rhs, Scalar* eps_out) {
  if (lhs.term_count() != rhs.term_count()) return false;
  Scalar eps(0);
  for (const auto& [support, coeff] : rhs.terms()) {
    Scalar lc = lhs.coeff(support);
    if (sgn(lc) == 0) return false;
    Scalar ratio = lc / coeff;
    if (sgn(eps) == 0)
      eps = ratio;
    else if (eps != ratio)
      return false;
  }
  if (sgn(eps) == 0) return false;
  if (eps_out) *eps_out = eps;
  return true;
}

}  // namespace

UcReport verify_uc(const ChiMap& c) {
  const Matroid& m = c.matroid();
  if (m.size() > 12)
    throw precondition_error("verify_uc enumerates all subsets; ground size " +
                             std::to_string(m.size()) + " exceeds 12");
  UcReport report;
  std::uint32_t ground = m.ground().mask();

  std::uint32_t sub = ground;
  while (true) {
    ElementSet s = ElementSet::from_mask(sub);
    bool independent = m.is_independent(s);
    bool nonzero = sgn(c.eval_set(s)) != 0;
    ++report.uc1_checked;
    if (independent != nonzero)
      report.violations.push_back({UcViolation::Rule::uc1, s, ElementSet(),
                                   independent ? "chi vanishes on independent " + s.to_string()
                                               : "chi is nonzero on dependent " + s.to_string()});
    if (sub == 0) break;
    sub = (sub - 1) & ground;
  }

  sub = ground;
  while (true) {
    ElementSet u = ElementSet::from_mask(sub);
    if (m.is_unidependent(u)) {
      ElementSet circuit = *m.unique_circuit(u);
      AlgebraElement lhs = boundary(c, u);
      // Every unidependent subset of u contains the same circuit, so it has
      // the form circuit + W.
      ElementSet extra = u - circuit;
      std::uint32_t wsub = extra.mask();
      while (true) {
        ElementSet uprime = circuit | ElementSet::from_mask(wsub);
        AlgebraElement rhs = multiply(c, boundary(c, uprime), AlgebraElement::monomial(u - uprime));
        ++report.uc2_checked;
        if (!proportional(lhs, rhs, nullptr))
          report.violations.push_back(
              {UcViolation::Rule::uc2, u, uprime,
               "no nonzero scalar matches boundary(" + u.to_string() + ") against boundary(" +
                   uprime.to_string() + ") * e" + (u - uprime).to_string()});
        if (wsub == 0) break;
        wsub = (wsub - 1) & extra.mask();
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & ground;
  }
  return report;
}

}  // namespace osalg
