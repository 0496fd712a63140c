#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "osalg/linalg.hpp"

using namespace osalg;

namespace {

MatQ random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  MatQ m(rows, std::vector<Scalar>(cols));
  for (auto& row : m)
    for (auto& x : row) x = make_scalar(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(matrix_determinant({}) == Scalar(1));
  CHECK(matrix_determinant({{make_scalar(-7, 3)}}) == make_scalar(-7, 3));
  CHECK(matrix_determinant({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}) == Scalar(-1));
  CHECK(matrix_determinant({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}) == Scalar(0));
}

TEST_CASE("determinant and rank agree with cofactor expansion and minors") {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
    MatQ square = random_matrix(rng, n, n);
    CHECK(matrix_determinant(square) == oracles::det_cofactor(square));

    std::size_t rows = 1 + static_cast<std::size_t>(rng() % 4);
    std::size_t cols = 1 + static_cast<std::size_t>(rng() % 5);
    MatQ rect = random_matrix(rng, rows, cols);
    CHECK(matrix_rank(rect) == oracles::rank_by_minors(rect));
  }
  CHECK(matrix_rank({}) == 0);
}

TEST_CASE("solve_in_columns") {
  MatQ columns = {{Scalar(1), Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(1)}};

  auto hit = solve_in_columns(columns, {Scalar(2), Scalar(3), Scalar(5)});
  REQUIRE(hit.has_value());
  CHECK((*hit)[0] == Scalar(2));
  CHECK((*hit)[1] == Scalar(3));

  auto miss = solve_in_columns(columns, {Scalar(1), Scalar(1), Scalar(3)});
  CHECK_FALSE(miss.has_value());

  auto empty = solve_in_columns({}, {Scalar(0), Scalar(0)});
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
}

TEST_CASE("solve_in_columns reproduces random combinations") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> num(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t dim = 2 + static_cast<std::size_t>(rng() % 3);
    std::size_t k = 1 + static_cast<std::size_t>(rng() % dim);
    MatQ columns;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Scalar> col(dim);
      for (auto& x : col) x = Scalar(num(rng));
      columns.push_back(col);
    }
    std::vector<Scalar> weights(k);
    for (auto& w : weights) w = Scalar(num(rng));
    std::vector<Scalar> target(dim, Scalar(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < dim; ++r) target[r] += weights[i] * columns[i][r];

    auto back = solve_in_columns(columns, target);
    REQUIRE(back.has_value());
    std::vector<Scalar> rebuilt(dim, Scalar(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < dim; ++r) rebuilt[r] += (*back)[i] * columns[i][r];
    CHECK(rebuilt == target);
  }
}
