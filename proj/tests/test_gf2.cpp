#include <doctest.h>

#include <random>
#include <stdexcept>

#include "slc/gf2.hpp"
#include "support.hpp"

using slc::gf2::Matrix;
using slc::gf2::Vector;

namespace {

Matrix rows(std::initializer_list<const char*> bits) {
  std::vector<Vector> r;
  for (const char* b : bits) r.push_back(Vector::from_string(b));
  return Matrix::from_rows(r);
}

// Every vector of the span of `basis`, by enumerating all 2^k combinations.
std::vector<Vector> span_of(const std::vector<Vector>& basis, std::size_t dim) {
  std::vector<Vector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    Vector v(dim);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((mask >> i) & 1u) v ^= basis[i];
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("vector addition is xor") {
  std::mt19937_64 rng(slc::testing::kSeed);
  for (int i = 0; i < 200; ++i) {
    const std::size_t dim = rng() % 300;
    const Vector v = slc::testing::random_vector(rng, dim);
    const Vector w = slc::testing::random_vector(rng, dim);
    CHECK(v + w == w + v);
    CHECK((v + v).is_zero());
    CHECK((v + Vector(dim)) == v);
  }
}

TEST_CASE("bit scanning crosses block boundaries") {
  Vector v(130);
  v.set(3);
  v.set(64);
  v.set(129);
  CHECK(v.find_first() == 3);
  CHECK(v.find_next(4) == 64);
  CHECK(v.find_next(65) == 129);
  CHECK(v.find_next(130) == Vector::npos);
  CHECK(v.popcount() == 3);
  CHECK(Vector::from_string(v.to_string()) == v);
}

TEST_CASE("rank of small matrices") {
  CHECK(slc::gf2::rank(Matrix::identity(3)) == 3);
  CHECK(slc::gf2::rank(rows({"11", "11"})) == 1);
  CHECK(slc::gf2::rank(Matrix(4, 7)) == 0);
}

TEST_CASE("kernel basis of small matrices") {
  CHECK(slc::gf2::kernel_basis(Matrix::identity(2)).empty());
  CHECK(slc::gf2::kernel_basis(Matrix(1, 3)).size() == 3);

  const Matrix m = rows({"110", "011"});
  const auto basis = slc::gf2::kernel_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == Vector::from_string("111"));

  // Exhaustive: the only nonzero null vector among all 8.
  std::vector<Vector> null;
  for (std::uint64_t x = 1; x < 8; ++x) {
    const Vector v = Vector::from_uint(3, x);
    if ((m * v).is_zero()) null.push_back(v);
  }
  REQUIRE(null.size() == 1);
  CHECK(null[0] == basis[0]);
}

TEST_CASE("rank-nullity on random matrices up to 200x200") {
  std::mt19937_64 rng(slc::testing::kSeed + 1);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t r = 1 + rng() % 200;
    const std::size_t c = 1 + rng() % 200;
    const double density = (trial % 3 == 0) ? 0.05 : 0.5;
    const Matrix m = slc::testing::random_matrix(rng, r, c, density);
    const auto basis = slc::gf2::kernel_basis(m);
    CHECK(slc::gf2::rank(m) + basis.size() == c);
    for (const auto& v : basis) CHECK((m * v).is_zero());
    CHECK(slc::gf2::rank(Matrix::from_rows(basis.empty() ? std::vector<Vector>{Vector(c)} : basis)) ==
          basis.size());
  }
}

TEST_CASE("rank is invariant under transposition") {
  std::mt19937_64 rng(slc::testing::kSeed + 2);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix m = slc::testing::random_matrix(rng, 1 + rng() % 60, 1 + rng() % 60, 0.3);
    CHECK(slc::gf2::rank(m) == slc::gf2::rank(m.transposed()));
  }
}

TEST_CASE("matrix product agrees with repeated matrix-vector products") {
  std::mt19937_64 rng(slc::testing::kSeed + 3);
  const Matrix a = slc::testing::random_matrix(rng, 17, 70);
  const Matrix b = slc::testing::random_matrix(rng, 70, 9);
  const Matrix ab = a * b;
  for (std::size_t c = 0; c < 9; ++c) CHECK(ab.column(c) == a * b.column(c));
}

TEST_CASE("quotient coordinates, trivial cases") {
  SUBCASE("zero boundaries give an identity-like map") {
    const std::vector<Vector> cycles{Vector::from_string("10"), Vector::from_string("01")};
    const auto q = slc::gf2::quotient_coordinates(cycles, {});
    CHECK(q.dim() == 2);
    CHECK(q.coordinates(Vector::from_string("10")) == Vector::from_string("10"));
    CHECK(q.coordinates(Vector::from_string("11")) == Vector::from_string("11"));
  }
  SUBCASE("boundaries equal to cycles leave nothing") {
    const std::vector<Vector> basis{Vector::from_string("100"), Vector::from_string("110"),
                                    Vector::from_string("111")};
    const auto q = slc::gf2::quotient_coordinates(basis, basis);
    CHECK(q.dim() == 0);
    CHECK(q.coordinates(Vector::from_string("011")).dim() == 0);
  }
  SUBCASE("boundary outside the cycle span is rejected") {
    const std::vector<Vector> cycles{Vector::from_string("110")};
    const std::vector<Vector> bad{Vector::from_string("001")};
    CHECK_THROWS_AS(slc::gf2::quotient_coordinates(cycles, bad), std::invalid_argument);
  }
  SUBCASE("non-cycles are rejected by coordinates") {
    const std::vector<Vector> cycles{Vector::from_string("110")};
    const auto q = slc::gf2::quotient_coordinates(cycles, {});
    CHECK_FALSE(q.in_cycle_space(Vector::from_string("100")));
    CHECK_THROWS_AS(q.coordinates(Vector::from_string("100")), std::domain_error);
  }
}

TEST_CASE("quotient coordinates vanish exactly on boundaries (brute force)") {
  std::mt19937_64 rng(slc::testing::kSeed + 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dim = 8 + rng() % 40;
    const std::size_t zdim = 1 + rng() % 10;
    std::vector<Vector> cycles;
    for (std::size_t i = 0; i < zdim; ++i) cycles.push_back(slc::testing::random_vector(rng, dim));
    // Boundaries: random combinations of cycles.
    std::vector<Vector> boundaries;
    const std::size_t bdim = rng() % (zdim + 1);
    for (std::size_t i = 0; i < bdim; ++i) {
      Vector b(dim);
      for (const auto& z : cycles) {
        if (rng() & 1) b ^= z;
      }
      boundaries.push_back(b);
    }
    const auto q = slc::gf2::quotient_coordinates(cycles, boundaries);
    CHECK(q.dim() == q.cycle_dim() - q.boundary_dim());

    for (const auto& b : span_of(boundaries, dim)) CHECK(q.coordinates(b).is_zero());

    // Injective on Z / B: vectors with equal coordinates differ by a boundary.
    slc::gf2::EchelonBasis bspan(dim);
    for (const auto& b : boundaries) bspan.insert(b);
    const auto zs = span_of(cycles, dim);
    for (std::size_t i = 0; i < zs.size(); i += 7) {
      for (std::size_t j = i + 1; j < zs.size(); j += 5) {
        const bool same = q.coordinates(zs[i]) == q.coordinates(zs[j]);
        CHECK(same == bspan.contains(zs[i] ^ zs[j]));
      }
    }
    for (std::size_t j = 0; j < q.dim(); ++j) {
      CHECK(q.coordinates(q.representatives()[j]) == Vector::unit(q.dim(), j));
    }
  }
}
