#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace osalg {

/// Ground set elements are 1-based labels. Labels survive deletion and
/// contraction unchanged, so every set is a subset of the ambient {1..n}.
using GroundElement = int;

/// Maximum ambient ground set size supported by the bitmask representation.
inline constexpr int kMaxGroundSize = 30;

/// An immutable subset of {1..kMaxGroundSize} backed by a bitmask.
class ElementSet {
public:
  constexpr ElementSet() = default;

  static ElementSet single(GroundElement e);
  static ElementSet full(int n);  // {1..n}
  static constexpr ElementSet from_mask(std::uint32_t mask) { return ElementSet(mask); }
  static ElementSet of(std::initializer_list<GroundElement> elems);
  static ElementSet of(const std::vector<GroundElement>& elems);

  constexpr std::uint32_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(GroundElement e) const {
    return e >= 1 && e <= kMaxGroundSize && (bits_ >> (e - 1)) & 1u;
  }
  GroundElement min() const;  // pre: nonempty
  GroundElement max() const;  // pre: nonempty

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  ElementSet with(GroundElement e) const;
  ElementSet without(GroundElement e) const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(ElementSet a, ElementSet b) { return a.bits_ != b.bits_; }

  /// Elements in increasing order.
  std::vector<GroundElement> elements() const;

  /// Compact rendering such as "{1,2,5}"; "{}" when empty.
  std::string to_string() const;

private:
  constexpr explicit ElementSet(std::uint32_t mask) : bits_(mask) {}
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on the increasing element sequences.
bool lex_less(ElementSet a, ElementSet b);

/// Strict weak order: first by cardinality, then lexicographically. This is
/// the canonical term order used throughout serialization and printing.
struct GradedLexLess {
  bool operator()(ElementSet a, ElementSet b) const;
};

/// A finite sequence of ground set elements; order matters and repeats are
/// representable (they normalize to zero downstream).
struct OrderedTuple {
  std::vector<GroundElement> entries;

  OrderedTuple() = default;
  OrderedTuple(std::initializer_list<GroundElement> e) : entries(e) {}
  explicit OrderedTuple(std::vector<GroundElement> e) : entries(std::move(e)) {}

  int size() const { return static_cast<int>(entries.size()); }
  bool has_repeat() const;
  /// pre: no repeats
  ElementSet support() const;
  std::string to_string() const;  // "(1,3,5)"

  friend bool operator==(const OrderedTuple& a, const OrderedTuple& b) { return a.entries == b.entries; }
};

/// The increasing arrangement of a set.
OrderedTuple sorted_tuple(ElementSet s);

/// Sign of the permutation that sorts the tuple increasingly; 0 on repeats.
int sort_sign(const OrderedTuple& t);

OrderedTuple concat(const OrderedTuple& a, const OrderedTuple& b);

}  // namespace osalg
