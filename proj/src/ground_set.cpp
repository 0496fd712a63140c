#include "osalg/ground_set.hpp"

#include <algorithm>
#include <bit>

#include "osalg/errors.hpp"

namespace osalg {

namespace {

void check_element(GroundElement e) {
  if (e < 1 || e > kMaxGroundSize)
    throw input_error("ground element " + std::to_string(e) + " out of range [1," +
                      std::to_string(kMaxGroundSize) + "]");
}

}  // namespace

ElementSet ElementSet::single(GroundElement e) {
  check_element(e);
  return ElementSet(1u << (e - 1));
}

ElementSet ElementSet::full(int n) {
  if (n < 0 || n > kMaxGroundSize)
    throw input_error("ground set size " + std::to_string(n) + " out of range [0," +
                      std::to_string(kMaxGroundSize) + "]");
  return ElementSet(n == 0 ? 0u : (~0u >> (32 - n)));
}

ElementSet ElementSet::of(std::initializer_list<GroundElement> elems) {
  ElementSet s;
  for (GroundElement e : elems) s = s.with(e);
  return s;
}

ElementSet ElementSet::of(const std::vector<GroundElement>& elems) {
  ElementSet s;
  for (GroundElement e : elems) s = s.with(e);
  return s;
}

GroundElement ElementSet::min() const {
  return std::countr_zero(bits_) + 1;
}

GroundElement ElementSet::max() const {
  return 32 - std::countl_zero(bits_);
}

ElementSet ElementSet::with(GroundElement e) const {
  check_element(e);
  return ElementSet(bits_ | (1u << (e - 1)));
}

ElementSet ElementSet::without(GroundElement e) const {
  check_element(e);
  return ElementSet(bits_ & ~(1u << (e - 1)));
}

std::vector<GroundElement> ElementSet::elements() const {
  std::vector<GroundElement> out;
  out.reserve(size());
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (GroundElement e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

bool lex_less(ElementSet a, ElementSet b) {
  // Walk the low bits in parallel; the first position where they differ
  // decides, and a proper prefix precedes its extensions.
  std::uint32_t x = a.mask();
  std::uint32_t y = b.mask();
  while (x != 0 && y != 0) {
    int ea = std::countr_zero(x);
    int eb = std::countr_zero(y);
    if (ea != eb) return ea < eb;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

bool GradedLexLess::operator()(ElementSet a, ElementSet b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

bool OrderedTuple::has_repeat() const {
  std::vector<GroundElement> copy = entries;
  std::sort(copy.begin(), copy.end());
  return std::adjacent_find(copy.begin(), copy.end()) != copy.end();
}

ElementSet OrderedTuple::support() const {
  ElementSet s;
  for (GroundElement e : entries) {
    if (s.contains(e)) throw precondition_error("tuple has repeated entry " + std::to_string(e));
    s = s.with(e);
  }
  return s;
}

std::string OrderedTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

OrderedTuple sorted_tuple(ElementSet s) {
  return OrderedTuple(s.elements());
}

int sort_sign(const OrderedTuple& t) {
  int sign = 1;
  for (std::size_t i = 0; i < t.entries.size(); ++i)
    for (std::size_t j = i + 1; j < t.entries.size(); ++j) {
      if (t.entries[i] == t.entries[j]) return 0;
      if (t.entries[i] > t.entries[j]) sign = -sign;
    }
  return sign;
}

OrderedTuple concat(const OrderedTuple& a, const OrderedTuple& b) {
  OrderedTuple out = a;
  out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
  return out;
}

}  // namespace osalg
