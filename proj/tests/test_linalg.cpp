#include "qcat/matrix.hpp"
#include "qcat/sparse_rank.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qcat;
using qcat::test::q;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.emplace_back(x);
    cols = v.size();
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(out, cols);
}

Matrix random_matrix(test::Random& rnd, std::size_t r, std::size_t c, int zero_odds = 3) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rnd.index(zero_odds) == 0 ? Scalar(0) : rnd.rational();
  return m;
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-7/9") == q(-7, 9));
  CHECK(parse_scalar("6/4") == q(3, 2));
  CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_scalar("6/-4"), Error);
  CHECK(to_string(q(10, 5)) == "2");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK_THROWS_AS(parse_scalar(""), Error);
  CHECK(power(q(2, 3), -2) == q(9, 4));
  CHECK(power(q(5), 0) == 1);
}

TEST_CASE("scalar field axioms on random values") {
  test::Random rnd(11);
  for (int i = 0; i < 200; ++i) {
    Scalar a = rnd.rational(), b = rnd.rational(), c = rnd.rational();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * (1 / a) == 1);
    CHECK(a - a == 0);
    Scalar s = a / b;
    CHECK(s.get_den() > 0);
    CHECK(gcd(s.get_num(), s.get_den()) == 1);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(2, 5)) == 0);
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_bareiss(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(4)).empty());
  auto k = kernel_basis(mat({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("kernel of a random full-rank 6x10 matrix") {
  test::Random rnd(3);
  Matrix m;
  do m = random_matrix(rnd, 6, 10); while (rank(m) != 6);
  auto k = kernel_basis(m);
  CHECK(k.size() == 4);
  for (const auto& v : k) CHECK(Matrix::from_columns({m * v}, 6).is_zero());
  CHECK(rank(Matrix::from_columns(k, 10)) == 4);
}

TEST_CASE("rank-nullity and elimination agreement on random matrices") {
  test::Random rnd(5);
  for (int i = 0; i < 60; ++i) {
    std::size_t r = 1 + rnd.index(7), c = 1 + rnd.index(7);
    Matrix m = random_matrix(rnd, r, c, 2);
    if (rnd.coin() && r > 1) {
      // Force a dependent row.
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3 - m(r - 2, j);
    }
    const std::size_t rk = rank(m);
    CHECK(rk == rank_bareiss(m));
    CHECK(rk + kernel_basis(m).size() == c);
    std::vector<SparseRow> rows;
    for (std::size_t a = 0; a < r; ++a) {
      SparseRow row;
      for (std::size_t j = 0; j < c; ++j)
        if (m(a, j) != 0) row.emplace_back(static_cast<std::uint32_t>(j), m(a, j));
      rows.push_back(std::move(row));
    }
    CHECK(sparse_rank(rows, c) == rk);
  }
}

TEST_CASE("sparse rank over disconnected blocks") {
  std::vector<SparseRow> rows = {
      {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}, {{5, 1}}, {{3, 1}, {4, -1}}, {{4, 1}, {6, 1}}, {{3, 1}, {6, 1}}};
  CHECK(sparse_rank(rows, 7) == 4);
  CHECK(sparse_rank({}, 3) == 0);
}

TEST_CASE("inverse") {
  Matrix m = mat({{2, 1}, {1, 1}});
  CHECK(m * inverse(m) == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("annihilator examples") {
  // Whole space and zero space.
  CHECK(annihilator(Matrix::identity(3), 3).rows() == 0);
  CHECK(annihilator(Matrix(0, 3), 3) == Matrix::identity(3));

  // span{e1e2 - 2 e2e1} in the 4-dimensional tensor square.
  Matrix s(1, 4);
  s(0, 1) = 1;
  s(0, 2) = -2;
  Matrix ann = annihilator(s, 4);
  CHECK(ann.rows() == 3);
  for (std::size_t i = 0; i < ann.rows(); ++i) {
    Scalar pairing = 0;
    for (std::size_t j = 0; j < 4; ++j) pairing += ann(i, j) * s(0, j);
    CHECK(pairing == 0);
  }
}

TEST_CASE("double annihilator recovers the span") {
  test::Random rnd(17);
  for (int i = 0; i < 25; ++i) {
    std::size_t dim = 2 + rnd.index(6);
    Matrix s = random_matrix(rnd, rnd.index(dim + 1), dim);
    std::vector<int> signs(dim);
    for (auto& x : signs) x = rnd.coin() ? -1 : 1;
    Matrix ann = annihilator(s, dim, signs);
    CHECK(ann.rows() == dim - rank(s));
    CHECK(same_row_space(annihilator(ann, dim, signs), s));
  }
}

TEST_CASE("projectors of the classical split") {
  // Antisymmetric and symmetric tensors in the even 2-dimensional square.
  Matrix anti = mat({{0, 1, -1, 0}});
  Matrix sym = mat({{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}});
  auto p = projectors({anti, sym}, 4);
  REQUIRE(p.size() == 2);
  Matrix expect_anti(4, 4);
  expect_anti(1, 1) = expect_anti(2, 2) = q(1, 2);
  expect_anti(1, 2) = expect_anti(2, 1) = q(-1, 2);
  CHECK(p[0] == expect_anti);
  CHECK(p[1] == Matrix::identity(4) - expect_anti);
}

TEST_CASE("projector identities on random decompositions") {
  test::Random rnd(23);
  for (int i = 0; i < 20; ++i) {
    std::size_t dim = 2 + rnd.index(5);
    Matrix basis = rnd.invertible(dim);
    std::size_t parts = 2 + rnd.index(std::min<std::size_t>(dim - 1, 3));
    std::vector<Matrix> comps(parts, Matrix(0, dim));
    for (std::size_t r = 0; r < dim; ++r) comps[r < parts ? r : rnd.index(parts)].append_row(basis.row(r));
    auto p = projectors(comps, dim);
    Matrix sum(dim, dim);
    for (std::size_t k = 0; k < parts; ++k) {
      sum = sum + p[k];
      CHECK(p[k] * p[k] == p[k]);
      for (std::size_t l = 0; l < parts; ++l)
        if (l != k) CHECK((p[k] * p[l]).is_zero());
      for (std::size_t r = 0; r < comps[k].rows(); ++r) CHECK(p[k] * comps[k].row_vector(r) == comps[k].row_vector(r));
    }
    CHECK(sum == Matrix::identity(dim));
  }
}

TEST_CASE("projectors reject non-complementary subspaces") {
  Matrix a = mat({{1, 0, 0}});
  Matrix b = mat({{1, 0, 0}, {0, 1, 0}});
  try {
    projectors({a, b}, 3);
    FAIL("expected NotComplementary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotComplementary);
  }
  CHECK_THROWS_AS(projectors({a, mat({{0, 1, 0}})}, 3), Error);
}
