#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "osalg/algebra.hpp"
#include "osalg/arrangement.hpp"
#include "osalg/matroid.hpp"
#include "osalg/scalar.hpp"

namespace fixtures {

using namespace osalg;

inline std::string data_path(const char* name) {
  return std::string(OSALG_DATA_DIR "/") + name;
}

inline AlgebraElement mono(std::initializer_list<GroundElement> support, Scalar coeff = Scalar(1)) {
  return AlgebraElement::monomial(ElementSet::of(support), coeff);
}

/// The six-line affine arrangement shipped as data/fig1.json: three lines
/// through x=0, three through y=0, and the point 6 = (1/3, 1/3) on neither
/// axis but on two of the diagonals.
inline Arrangement six_lines_arrangement() {
  auto q = [](long p, long r) { return make_scalar(p, r); };
  return Arrangement(3, {
                            {q(0, 1), q(0, 1), q(1, 1)},
                            {q(0, 1), q(1, 2), q(1, 1)},
                            {q(0, 1), q(1, 1), q(1, 1)},
                            {q(1, 2), q(0, 1), q(1, 1)},
                            {q(1, 1), q(0, 1), q(1, 1)},
                            {q(1, 3), q(1, 3), q(1, 1)},
                        });
}

inline std::vector<ElementSet> six_lines_circuits() {
  return {ElementSet::of({1, 2, 3}),    ElementSet::of({1, 4, 5}),
          ElementSet::of({2, 5, 6}),    ElementSet::of({3, 4, 6}),
          ElementSet::of({1, 2, 4, 6}), ElementSet::of({1, 3, 5, 6}),
          ElementSet::of({2, 3, 4, 5})};
}

inline Matroid six_lines_matroid() { return Matroid(6, six_lines_circuits()); }

/// Uniform rank 2 on four elements.
inline Matroid u24_matroid() {
  return Matroid(4, {ElementSet::of({1, 2, 3}), ElementSet::of({1, 2, 4}),
                     ElementSet::of({1, 3, 4}), ElementSet::of({2, 3, 4})});
}

inline Arrangement u24_arrangement() {
  std::vector<std::vector<Scalar>> vectors;
  for (long t = 0; t < 4; ++t) vectors.push_back({make_scalar(t), make_scalar(1)});
  return Arrangement(2, std::move(vectors));
}

/// Uniform rank 3 on five elements, realized on the moment curve.
inline Matroid u35_matroid() {
  std::vector<ElementSet> circuits;
  for (GroundElement a = 1; a <= 5; ++a)
    for (GroundElement b = a + 1; b <= 5; ++b)
      for (GroundElement c = b + 1; c <= 5; ++c)
        for (GroundElement d = c + 1; d <= 5; ++d)
          circuits.push_back(ElementSet::of({a, b, c, d}));
  return Matroid(5, std::move(circuits));
}

inline Arrangement u35_arrangement() {
  std::vector<std::vector<Scalar>> vectors;
  for (long t = 0; t < 5; ++t) vectors.push_back({make_scalar(t), make_scalar(t * t), make_scalar(1)});
  return Arrangement(3, std::move(vectors));
}

/// Uniform rank 4 on six elements (degree-4 residue orders become possible).
inline Matroid u46_matroid() {
  std::vector<ElementSet> circuits;
  for (GroundElement a = 1; a <= 6; ++a)
    for (GroundElement b = a + 1; b <= 6; ++b)
      for (GroundElement c = b + 1; c <= 6; ++c)
        for (GroundElement d = c + 1; d <= 6; ++d)
          for (GroundElement e = d + 1; e <= 6; ++e)
            circuits.push_back(ElementSet::of({a, b, c, d, e}));
  return Matroid(6, std::move(circuits));
}

inline Arrangement u46_arrangement() {
  std::vector<std::vector<Scalar>> vectors;
  for (long t = 0; t < 6; ++t)
    vectors.push_back({make_scalar(t), make_scalar(t * t), make_scalar(t * t * t), make_scalar(1)});
  return Arrangement(4, std::move(vectors));
}

/// Cycle matroid of the complete graph on four vertices; edges are labeled
/// 1:12, 2:13, 3:14, 4:23, 5:24, 6:34.
inline Matroid k4_matroid() {
  return Matroid(6, {ElementSet::of({1, 2, 4}), ElementSet::of({1, 3, 5}),
                     ElementSet::of({2, 3, 6}), ElementSet::of({4, 5, 6}),
                     ElementSet::of({1, 2, 5, 6}), ElementSet::of({1, 3, 4, 6}),
                     ElementSet::of({2, 3, 4, 5})});
}

inline Arrangement k4_arrangement() {
  auto edge = [](int u, int v) {
    std::vector<Scalar> x(4, Scalar(0));
    x[static_cast<std::size_t>(u - 1)] = Scalar(1);
    x[static_cast<std::size_t>(v - 1)] = Scalar(-1);
    return x;
  };
  return Arrangement(4, {edge(1, 2), edge(1, 3), edge(1, 4), edge(2, 3), edge(2, 4), edge(3, 4)});
}

}  // namespace fixtures
