#include "doctest.h"
#include "matwb/constructions.hpp"
#include "matwb/matrix.hpp"

#include <random>

using namespace matwb;

namespace {

RatFun rf(const std::string& s) { return RatFun::parse(s); }

// Independent determinant oracle: plain cofactor expansion along the first
// row, exact rational-function arithmetic throughout.
RatFun cofactorDet(const LabeledMatrix& a) {
  size_t n = a.nRows();
  REQUIRE(n == a.nCols());
  if (n == 0) return RatFun(1);
  if (n == 1) return a.at(size_t{0}, size_t{0});
  RatFun acc(0);
  std::vector<std::string> subRows(a.rowLabels().begin() + 1, a.rowLabels().end());
  for (size_t t = 0; t < n; ++t) {
    const RatFun& e = a.at(0, t);
    if (e.isZero()) continue;
    std::vector<std::string> subCols;
    for (size_t j = 0; j < n; ++j)
      if (j != t) subCols.push_back(a.colLabels()[j]);
    RatFun term = e * cofactorDet(a.submatrix(subRows, subCols));
    acc = (t % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Random near-regular P-matrices: group scalings and pivots of an A12
// submatrix keep the P-matrix property.
LabeledMatrix randomPMatrix(std::mt19937_64& rng, size_t size) {
  LabeledMatrix a = buildA12();
  std::uniform_int_distribution<int> expD(-1, 2), signD(0, 1), idxD6(0, 5);
  for (int s = 0; s < 4; ++s) {
    RatFun c = reconstruct(GroupFactorization{signD(rng), expD(rng), expD(rng)});
    if (signD(rng))
      a = a.scaleRow(a.rowLabels()[static_cast<size_t>(idxD6(rng))], c);
    else
      a = a.scaleCol(a.colLabels()[static_cast<size_t>(idxD6(rng))], c);
  }
  for (int s = 0; s < 3; ++s) {
    size_t i = static_cast<size_t>(idxD6(rng)), j = static_cast<size_t>(idxD6(rng));
    if (!a.at(i, j).isZero()) a = a.pivot(a.rowLabels()[i], a.colLabels()[j]);
  }
  std::vector<std::string> rows(a.rowLabels().begin(), a.rowLabels().begin() + size);
  std::vector<std::string> cols(a.colLabels().begin(), a.colLabels().begin() + size);
  return a.submatrix(rows, cols);
}

}  // namespace

TEST_CASE("submatrix extracts labeled blocks in inherited order") {
  LabeledMatrix a12 = buildA12();
  LabeledMatrix block = a12.submatrix({"a", "b", "c"}, {"d", "e", "f"});
  LabeledMatrix expected = LabeledMatrix::fromStrings(
      PartialField::nearRegular(), {"a", "b", "c"}, {"d", "e", "f"},
      {{"1", "0", "1"}, {"0", "-1", "1"}, {"1", "1", "0"}});
  CHECK(block == expected);

  LabeledMatrix block2 = a12.submatrix({"3", "1", "2"}, {"6", "4", "5"});
  LabeledMatrix expected2 = LabeledMatrix::fromStrings(
      PartialField::nearRegular(), {"1", "2", "3"}, {"4", "5", "6"},
      {{"1", "0", "1"}, {"0", "1", "-1"}, {"1", "1", "0"}});
  CHECK(block2 == expected2);

  LabeledMatrix empty = a12.submatrix({}, {});
  CHECK(empty.nRows() == 0);
  CHECK(empty.nCols() == 0);
  CHECK_THROWS_AS(a12.submatrix({"z"}, {}), Error);
}

TEST_CASE("det: identity, cofactor-oracle agreement, block values") {
  for (size_t n : {1u, 3u, 5u}) {
    std::vector<std::string> labels, cols;
    for (size_t i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
    LabeledMatrix id = LabeledMatrix::identity(PartialField::regular(), labels);
    CHECK(id.det() == RatFun(1));
  }

  LabeledMatrix a12 = buildA12();
  LabeledMatrix block = a12.submatrix({"a", "b", "c"}, {"d", "e", "f"});
  CHECK(block.det() == cofactorDet(block));
  CHECK(block.det() == RatFun(0));

  // The full 6x6 determinant is zero (the matrix is block triangular with a
  // singular top block); zero satisfies the determinant condition.
  RatFun full = a12.det();
  CHECK(full == cofactorDet(a12));
  CHECK(full == RatFun(0));

  CHECK_THROWS_AS(a12.submatrix({"a", "b"}, {"d"}).det(), Error);
}

TEST_CASE("det matches the cofactor oracle on random matrices") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> valD(-3, 3), alphaD(0, 3);
  for (int t = 0; t < 40; ++t) {
    size_t n = 4 + static_cast<size_t>(t % 2);
    std::vector<std::string> rows, cols;
    for (size_t i = 0; i < n; ++i) {
      rows.push_back("r" + std::to_string(i));
      cols.push_back("c" + std::to_string(i));
    }
    std::vector<std::vector<RatFun>> e;
    for (size_t i = 0; i < n; ++i) {
      std::vector<RatFun> row;
      for (size_t j = 0; j < n; ++j) {
        RatFun v(valD(rng));
        if (alphaD(rng) == 0) v = v * RatFun::variable();
        row.push_back(v);
      }
      e.push_back(std::move(row));
    }
    LabeledMatrix a(PartialField::nearRegular(), rows, cols, std::move(e));
    CHECK(a.det() == cofactorDet(a));
  }
}

TEST_CASE("pivot: pinned examples") {
  LabeledMatrix one(PartialField::nearRegular(), {"x"}, {"y"}, {{rf("a")}});
  LabeledMatrix p = one.pivot("x", "y");
  CHECK(p.rowLabels() == std::vector<std::string>{"y"});
  CHECK(p.colLabels() == std::vector<std::string>{"x"});
  CHECK(p.at(size_t{0}, size_t{0}) == rf("1/a"));

  LabeledMatrix two = LabeledMatrix::fromStrings(PartialField::nearRegular(), {"x1", "x2"},
                                                 {"y1", "y2"}, {{"1", "1"}, {"1", "a"}});
  LabeledMatrix q = two.pivot("x1", "y1");
  LabeledMatrix expected = LabeledMatrix::fromStrings(PartialField::nearRegular(), {"y1", "x2"},
                                                      {"x1", "y2"}, {{"1", "1"}, {"-1", "a-1"}});
  CHECK(q == expected);

  LabeledMatrix zeroPiv = LabeledMatrix::fromStrings(PartialField::nearRegular(), {"x"}, {"y"},
                                                     {{"0"}});
  CHECK_THROWS_WITH_AS(zeroPiv.pivot("x", "y"), "zero pivot entry", Error);
}

TEST_CASE("pivot involution on random matrices") {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<int> valD(-3, 3);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::vector<RatFun>> e(4, std::vector<RatFun>(4));
    for (auto& row : e)
      for (auto& v : row) {
        v = RatFun(valD(rng));
        if (valD(rng) > 1) v = v + RatFun::variable();
      }
    LabeledMatrix a(PartialField::nearRegular(), {"p", "q", "r", "s"}, {"t", "u", "v", "w"},
                    std::move(e));
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) {
        if (a.at(i, j).isZero()) continue;
        const std::string& x = a.rowLabels()[i];
        const std::string& y = a.colLabels()[j];
        CHECK(a.pivot(x, y).pivot(y, x) == a);
      }
  }
}

TEST_CASE("isPMatrix: certificate for the 6x6 obstruction matrix") {
  PMatrixCertificate cert = buildA12().isPMatrix();
  CHECK(cert.verdict);
  CHECK(cert.checkedCount == 924);
  CHECK_FALSE(cert.witness.has_value());
}

TEST_CASE("isPMatrix: violation witness is the first in canonical order") {
  LabeledMatrix bad = LabeledMatrix::fromStrings(PartialField::nearRegular(), {"x1", "x2"},
                                                 {"y1", "y2"}, {{"1", "1"}, {"1", "a+1"}});
  PMatrixCertificate cert = bad.isPMatrix();
  REQUIRE_FALSE(cert.verdict);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->rows == std::vector<std::string>{"x2"});
  CHECK(cert.witness->cols == std::vector<std::string>{"y2"});
  CHECK(cert.witness->det == rf("a+1"));
}

TEST_CASE("isPMatrix: empty matrix") {
  LabeledMatrix empty(PartialField::nearRegular(), {}, {}, {});
  PMatrixCertificate cert = empty.isPMatrix();
  CHECK(cert.verdict);
  CHECK(cert.checkedCount == 0);
}

TEST_CASE("isPMatrix is preserved by pivoting") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 10; ++t) {
    LabeledMatrix a = randomPMatrix(rng, 4);
    REQUIRE(a.isPMatrix().verdict);
    for (size_t i = 0; i < a.nRows(); ++i)
      for (size_t j = 0; j < a.nCols(); ++j) {
        if (a.at(i, j).isZero()) continue;
        CHECK(a.pivot(a.rowLabels()[i], a.colLabels()[j]).isPMatrix().verdict);
      }
  }
}

TEST_CASE("detViaPivot equals det") {
  LabeledMatrix c(PartialField::nearRegular(), {"x"}, {"y"}, {{rf("-3")}});
  CHECK(c.detViaPivot("x", "y") == rf("-3"));

  LabeledMatrix block = buildA12().submatrix({"a", "b", "c"}, {"d", "e", "f"});
  CHECK(block.detViaPivot("a", "d") == block.det());

  std::mt19937_64 rng(109);
  for (int t = 0; t < 8; ++t) {
    LabeledMatrix a = randomPMatrix(rng, 5);
    RatFun d = a.det();
    CHECK(d == cofactorDet(a));
    for (const auto& x : a.rowLabels())
      for (const auto& y : a.colLabels()) {
        if (a.at(a.rowIndex(x), a.colIndex(y)).isZero()) continue;
        CHECK(a.detViaPivot(x, y) == d);
      }
  }
}

TEST_CASE("scaleRow / scaleCol") {
  LabeledMatrix a12 = buildA12();
  CHECK(a12.scaleRow("a", RatFun(1)) == a12);
  CHECK(a12.scaleRow("a", RatFun(-1)).isPMatrix().verdict);
  CHECK(a12.scaleCol("4", rf("a")).scaleCol("4", rf("1/a")) == a12);
  CHECK_THROWS_WITH_AS(a12.scaleRow("a", rf("a+1")), "scaling must use a group element", Error);
  CHECK_THROWS_AS(a12.scaleCol("4", RatFun(0)), Error);
}

TEST_CASE("finite-field matrices use modular arithmetic") {
  PartialField f3 = PartialField::finiteField(3);
  LabeledMatrix a = LabeledMatrix::fromStrings(f3, {"x1", "x2"}, {"y1", "y2"},
                                               {{"2", "1"}, {"1", "2"}});
  CHECK(a.det() == RatFun(0));  // 4 - 1 = 3 = 0 mod 3
  LabeledMatrix p = a.pivot("x1", "y1");
  CHECK(p.at(size_t{0}, size_t{0}) == RatFun(2));  // inverse of 2 mod 3
  CHECK(a.isPMatrix().verdict);
  CHECK_THROWS_AS(LabeledMatrix::fromStrings(f3, {"x"}, {"y"}, {{"a"}}), Error);
  CHECK_THROWS_AS(LabeledMatrix::fromStrings(f3, {"x"}, {"y"}, {{"1/3"}}), Error);
}

TEST_CASE("finite-field evaluation commutes with det") {
  std::mt19937_64 rng(113);
  const std::pair<unsigned long, unsigned long> points[] = {{101, 2}, {103, 3}, {107, 5}};
  for (int t = 0; t < 6; ++t) {
    LabeledMatrix a = randomPMatrix(rng, 4);
    RatFun symbolic = a.det();
    for (auto [p, c] : points) {
      PartialField fp = PartialField::finiteField(p);
      std::vector<std::vector<RatFun>> e;
      for (size_t i = 0; i < a.nRows(); ++i) {
        std::vector<RatFun> row;
        for (size_t j = 0; j < a.nCols(); ++j)
          row.push_back(RatFun(static_cast<long>(a.at(i, j).evalMod(p, c))));
        e.push_back(std::move(row));
      }
      LabeledMatrix phi(fp, a.rowLabels(), a.colLabels(), std::move(e));
      CHECK(phi.det() == RatFun(static_cast<long>(symbolic.evalMod(p, c))));
    }
  }
}

TEST_CASE("label validation") {
  CHECK_THROWS_AS(LabeledMatrix::fromStrings(PartialField::regular(), {"x", "x"}, {"y"},
                                             {{"1"}, {"1"}}),
                  Error);
  CHECK_THROWS_AS(LabeledMatrix::fromStrings(PartialField::regular(), {"x"}, {"x"}, {{"1"}}),
                  Error);
  CHECK_THROWS_AS(LabeledMatrix::fromStrings(PartialField::regular(), {"x"}, {"y"}, {{"a"}}),
                  Error);
}
