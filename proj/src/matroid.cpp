#include "osalg/matroid.hpp"

#include <algorithm>
#include <cassert>

#include "osalg/errors.hpp"

namespace osalg {

namespace {

constexpr int kEliminationCheckLimit = 12;

}  // namespace

Matroid::Matroid(int n, std::vector<ElementSet> circuits) : n_(n), circuits_(std::move(circuits)) {
  if (n < 0 || n > kMaxGroundSize)
    throw input_error("ground set size " + std::to_string(n) + " out of range [0," +
                      std::to_string(kMaxGroundSize) + "]");
  ground_ = ElementSet::full(n);
  finalize_circuits(/*reject_redundant=*/true);

  if (n_ <= kEliminationCheckLimit) {
    for (std::size_t a = 0; a < circuits_.size(); ++a)
      for (std::size_t b = a + 1; b < circuits_.size(); ++b) {
        ElementSet common = circuits_[a] & circuits_[b];
        ElementSet merged = circuits_[a] | circuits_[b];
        for (GroundElement e : common.elements()) {
          ElementSet target = merged.without(e);
          bool found = false;
          for (const ElementSet& c : circuits_)
            if (c.subset_of(target)) {
              found = true;
              break;
            }
          if (!found)
            throw input_error("circuit elimination fails for " + circuits_[a].to_string() + " and " +
                              circuits_[b].to_string() + " at element " + std::to_string(e));
        }
      }
  }
}

Matroid::Matroid(int n, std::vector<ElementSet> circuits, UncheckedTag)
    : n_(n), circuits_(std::move(circuits)) {
  if (n < 0 || n > kMaxGroundSize)
    throw input_error("ground set size " + std::to_string(n) + " out of range [0," +
                      std::to_string(kMaxGroundSize) + "]");
  ground_ = ElementSet::full(n);
  finalize_circuits(/*reject_redundant=*/false);
}

Matroid::Matroid(ElementSet ground, int n, std::vector<ElementSet> circuits)
    : n_(n), ground_(ground), circuits_(std::move(circuits)) {
  finalize_circuits(/*reject_redundant=*/false);
}

void Matroid::finalize_circuits(bool reject_redundant) {
  for (const ElementSet& c : circuits_) {
    if (c.empty()) throw input_error("the empty set cannot be a circuit");
    if (!c.subset_of(ground_))
      throw input_error("circuit " + c.to_string() + " is not contained in the ground set");
  }
  std::sort(circuits_.begin(), circuits_.end(),
            [](ElementSet a, ElementSet b) { return GradedLexLess{}(a, b); });
  auto dup = std::adjacent_find(circuits_.begin(), circuits_.end());
  if (dup != circuits_.end()) {
    if (reject_redundant) throw input_error("duplicate circuit " + dup->to_string());
    circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
  }
  for (std::size_t a = 0; a < circuits_.size(); ++a)
    for (std::size_t b = a + 1; b < circuits_.size(); ++b)
      if (circuits_[a].subset_of(circuits_[b])) {
        if (reject_redundant)
          throw input_error("circuit " + circuits_[a].to_string() + " is contained in circuit " +
                            circuits_[b].to_string());
      }

  loops_ = ElementSet();
  for (const ElementSet& c : circuits_)
    if (c.size() == 1) loops_ = loops_ | c;

  rank_ = 0;
  ElementSet acc;
  for (GroundElement e : ground_.elements())
    if (is_independent(acc.with(e))) {
      acc = acc.with(e);
      ++rank_;
    }
}

void Matroid::check_subset(ElementSet x) const {
  if (!x.subset_of(ground_))
    throw input_error("set " + x.to_string() + " is not contained in the ground set " +
                      ground_.to_string());
}

bool Matroid::is_loop(GroundElement e) const {
  check_subset(ElementSet::single(e));
  return loops_.contains(e);
}

bool Matroid::is_simple() const {
  for (const ElementSet& c : circuits_)
    if (c.size() <= 2) return false;
  return true;
}

bool Matroid::is_independent(ElementSet x) const {
  check_subset(x);
  for (const ElementSet& c : circuits_)
    if (c.subset_of(x)) return false;
  return true;
}

int Matroid::rank(ElementSet x) const {
  check_subset(x);
  ElementSet acc;
  int r = 0;
  for (GroundElement e : x.elements())
    if (is_independent(acc.with(e))) {
      acc = acc.with(e);
      ++r;
    }
  return r;
}

Flat Matroid::closure(ElementSet x) const {
  check_subset(x);
  int base = rank(x);
  ElementSet out = x;
  for (GroundElement e : (ground_ - x).elements())
    if (rank(x.with(e)) == base) out = out.with(e);
  return out;
}

Matroid Matroid::deleted(GroundElement x) const {
  check_subset(ElementSet::single(x));
  std::vector<ElementSet> kept;
  for (const ElementSet& c : circuits_)
    if (!c.contains(x)) kept.push_back(c);
  return Matroid(ground_.without(x), n_, std::move(kept));
}

Matroid Matroid::contracted(GroundElement x) const {
  check_subset(ElementSet::single(x));
  if (is_loop(x)) throw precondition_error("cannot contract the loop " + std::to_string(x));
  std::vector<ElementSet> candidates;
  for (const ElementSet& c : circuits_) candidates.push_back(c.without(x));
  std::vector<ElementSet> minimal;
  for (const ElementSet& s : candidates) {
    bool keep = true;
    for (const ElementSet& t : candidates)
      if (t != s && t.subset_of(s)) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](ElementSet a, ElementSet b) { return GradedLexLess{}(a, b); });
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  return Matroid(ground_.without(x), n_, std::move(minimal));
}

std::vector<ElementSet> Matroid::broken_circuits() const {
  std::vector<ElementSet> out;
  for (const ElementSet& c : circuits_)
    if (c.size() > 1) out.push_back(c.without(c.min()));
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return GradedLexLess{}(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementSet> Matroid::nbc_sets(int level) const {
  if (level < 0 || level > rank_)
    throw precondition_error("nbc level " + std::to_string(level) + " out of range [0," +
                             std::to_string(rank_) + "]");
  std::vector<ElementSet> broken = broken_circuits();
  std::vector<GroundElement> elems = ground_.elements();
  std::vector<ElementSet> out;

  // Depth-first over increasing elements; prefixes that are dependent or
  // already contain a broken circuit cannot be completed, so prune them.
  auto extend = [&](auto&& self, ElementSet cur, std::size_t next, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = next; i + remaining <= elems.size(); ++i) {
      ElementSet cand = cur.with(elems[i]);
      if (!is_independent(cand)) continue;
      bool blocked = false;
      for (const ElementSet& b : broken)
        if (b.contains(elems[i]) && b.subset_of(cand)) {
          blocked = true;
          break;
        }
      if (!blocked) self(self, cand, i + 1, remaining - 1);
    }
  };
  extend(extend, ElementSet(), 0, level);
  return out;
}

std::optional<ElementSet> Matroid::unique_circuit(ElementSet u) const {
  check_subset(u);
  std::optional<ElementSet> found;
  for (const ElementSet& c : circuits_)
    if (c.subset_of(u)) {
      if (found) return std::nullopt;
      found = c;
    }
  return found;
}

bool Matroid::is_unidependent(ElementSet u) const {
  check_subset(u);
  return rank(u) == u.size() - 1;
}

ElementSet Matroid::active_elements(ElementSet i) const {
  if (!is_independent(i)) throw precondition_error("active elements are defined for independent sets only");
  ElementSet out;
  for (GroundElement a : (closure(i) - i).elements()) {
    std::optional<ElementSet> c = unique_circuit(i.with(a));
    assert(c.has_value());
    if (c->min() == a) out = out.with(a);
  }
  return out;
}

bool Matroid::is_inactive_unidependent(ElementSet u) const {
  check_subset(u);
  if (!is_unidependent(u)) return false;
  std::optional<ElementSet> c = unique_circuit(u);
  assert(c.has_value());
  GroundElement head = c->min();
  ElementSet act = active_elements(u.without(head));
  assert(!act.empty());
  return act.min() == head;
}

std::optional<GroundElement> Matroid::parallel_partner(ElementSet i, GroundElement x) const {
  check_subset(i.with(x));
  if (i.contains(x)) throw precondition_error("parallel partner requires x outside the set");
  if (is_loop(x)) throw precondition_error("parallel partner is undefined for the loop " + std::to_string(x));
  std::optional<GroundElement> found;
  for (const ElementSet& c : circuits_) {
    if (c.size() > 2) break;
    if (c.size() == 2 && c.contains(x)) {
      GroundElement y = (c.without(x)).min();
      if (i.contains(y)) {
        if (found) throw precondition_error("multiple parallel partners: set is dependent");
        found = y;
      }
    }
  }
  return found;
}

}  // namespace osalg
