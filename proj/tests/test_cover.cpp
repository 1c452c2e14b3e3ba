#include <doctest.h>

#include <random>
#include <stdexcept>

#include "slc/cover.hpp"
#include "support.hpp"

using slc::CoverCW;
using slc::Word;
using slc::gf2::Matrix;
using slc::gf2::Vector;

namespace {

// Boundary matrices rebuilt directly from the cell structure, without
// going through CoverCW.
struct Oracle {
  Matrix d1;
  Matrix d2;
};

Oracle build_oracle(int g) {
  const std::uint32_t nv = 1u << (2 * g);
  const std::size_t ne = nv * static_cast<std::size_t>(2 * g);
  std::vector<Vector> d1_cols;
  for (std::uint32_t v = 0; v < nv; ++v) {
    for (int k = 0; k < 2 * g; ++k) {
      Vector c(nv);
      c.flip(v);
      c.flip(v ^ (1u << k));
      d1_cols.push_back(c);
    }
  }
  const Word r = slc::surface_relator(g);
  std::vector<Vector> d2_cols;
  for (std::uint32_t v = 0; v < nv; ++v) {
    Vector c(ne);
    std::uint32_t at = v;
    for (const auto& l : r.letters()) {
      const std::uint32_t next = at ^ (1u << l.gen);
      const std::uint32_t src = l.inverse ? next : at;
      c.flip(src * 2u * static_cast<std::uint32_t>(g) + l.gen);
      at = next;
    }
    d2_cols.push_back(c);
  }
  return {Matrix::from_columns(d1_cols), Matrix::from_columns(d2_cols)};
}

std::uint64_t fingerprint(const Matrix& m) {
  // Weighted bit sum; enough to pin a specific matrix.
  std::uint64_t h = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Vector row = m.row(r);
    for (std::size_t c = row.find_first(); c != Vector::npos; c = row.find_next(c + 1)) {
      h += (r + 1) * 1000003ull + (c + 1) * 7919ull + (r + 1) * (c + 1);
    }
  }
  return h;
}

}  // namespace

TEST_CASE("genus 2 cover: cell counts and homology") {
  const CoverCW cover(2);
  CHECK(cover.num_vertices() == 16);
  CHECK(cover.num_edges() == 64);
  CHECK(cover.num_faces() == 16);
  CHECK(cover.degree() == 16);
  CHECK(cover.euler_characteristic() == -32);
  CHECK(cover.h1_dim() == 34);
  CHECK(cover.cover_genus() == 17);
  CHECK(cover.boundary_rank() == 15);
  CHECK(cover.cycle_dim() == 49);
}

TEST_CASE("boundary matrices match an independent construction") {
  for (int g = 2; g <= 3; ++g) {
    const CoverCW cover(g);
    const Oracle o = build_oracle(g);
    CHECK(cover.boundary1() == o.d1);
    CHECK(cover.boundary2() == o.d2);
    CHECK((o.d1 * o.d2).is_zero());
    const std::size_t r1 = slc::gf2::rank(o.d1);
    const std::size_t r2 = slc::gf2::rank(o.d2);
    CHECK(r1 == cover.num_vertices() - 1);
    CHECK(r2 == cover.num_faces() - 1);
    CHECK(cover.num_edges() - r1 - r2 == cover.h1_dim());
  }
}

TEST_CASE("genus 3 and 4 covers") {
  const CoverCW g3(3);
  CHECK(g3.num_vertices() == 64);
  CHECK(g3.num_edges() == 384);
  CHECK(g3.euler_characteristic() == -256);
  CHECK(g3.h1_dim() == 258);

  const CoverCW g4(4);
  CHECK(g4.num_vertices() == 256);
  CHECK(g4.euler_characteristic() == -1536);
  CHECK(g4.h1_dim() == 1538);
}

TEST_CASE("genus outside the supported range") {
  CHECK_THROWS_AS(CoverCW(1), std::invalid_argument);
  CHECK_THROWS_AS(CoverCW(5), slc::ResourceBoundError);
}

TEST_CASE("spanning tree") {
  const CoverCW cover(2);
  std::size_t tree_edges = 0;
  for (std::size_t e = 0; e < cover.num_edges(); ++e) tree_edges += cover.is_tree_edge(e) ? 1 : 0;
  CHECK(tree_edges == 15);
  CHECK(cover.tree_path(0).is_zero());
  for (std::uint32_t v = 0; v < 16; ++v) {
    Vector ends(16);
    ends.flip(0);
    ends.flip(v);
    CHECK(cover.boundary1() * cover.tree_path(v) == ends);
  }
}

TEST_CASE("lifts of short words") {
  const CoverCW cover(2);
  const auto a = cover.lift_word(slc::parse_word("a1", 2), 0);
  CHECK(a.endpoint == 1);
  CHECK(a.edge_chain == Vector::unit(64, cover.edge_index(0, 0)));

  // A1 from 0 walks edge (1, a1) backwards.
  const auto ai = cover.lift_word(slc::parse_word("A1", 2), 0);
  CHECK(ai.endpoint == 1);
  CHECK(ai.edge_chain == Vector::unit(64, cover.edge_index(1, 0)));

  // a1 a1 closes up over two distinct edges.
  const auto aa = cover.lift_word(slc::parse_word("a1 a1", 2), 0);
  CHECK(aa.endpoint == 0);
  CHECK(aa.edge_chain.popcount() == 2);
  CHECK(!cover.loop_h1_class(aa, 0).is_zero());
}

TEST_CASE("lift endpoint is the start plus the mod-2 class") {
  std::mt19937_64 rng(slc::testing::kSeed);
  const CoverCW cover(2);
  for (int i = 0; i < 1000; ++i) {
    const Word w = slc::testing::random_word(rng, 2, 24);
    const std::uint32_t start = static_cast<std::uint32_t>(rng() % 16);
    const auto lift = cover.lift_word(w, start);
    CHECK(lift.endpoint == (start ^ slc::abelianization_mask(w)));
    Vector ends(16);
    ends.flip(start);
    ends.flip(lift.endpoint);
    CHECK(cover.boundary1() * lift.edge_chain == ends);
  }
}

TEST_CASE("relator lifts bound faces, commutators of one handle do not") {
  const CoverCW cover(2);
  const Word r = slc::surface_relator(2);
  const Word c = slc::parse_word("a1 b1 A1 B1", 2);
  for (std::uint32_t v = 0; v < 16; ++v) {
    CHECK(cover.lift_word(r, v).edge_chain == cover.face_chain(v));
    CHECK(cover.lift_class(r, v).is_zero());
    CHECK(!cover.lift_class(c, v).is_zero());
  }
}

TEST_CASE("table route agrees with the exact chain route") {
  std::mt19937_64 rng(slc::testing::kSeed + 1);
  for (int g = 2; g <= 3; ++g) {
    const CoverCW cover(g);
    for (int i = 0; i < 300; ++i) {
      const Word w = slc::testing::random_word(rng, g, 30);
      const std::uint32_t start = static_cast<std::uint32_t>(rng() % cover.num_vertices());
      const auto lift = cover.lift_word(w, start);
      CHECK(cover.lift_class(w, start) == cover.loop_h1_class(lift, start));
    }
  }
}

TEST_CASE("H1 class survives relator splices") {
  std::mt19937_64 rng(slc::testing::kSeed + 2);
  const CoverCW cover(2);
  for (int i = 0; i < 300; ++i) {
    const Word w = slc::testing::random_word(rng, 2, 16);
    const Word w2 = slc::testing::splice_relator(rng, w, 5);
    const std::uint32_t start = static_cast<std::uint32_t>(rng() % 16);
    CHECK(cover.lift_class(w, start) == cover.lift_class(w2, start));
  }
}

TEST_CASE("deck action on H1") {
  const CoverCW cover(2);
  CHECK(cover.deck_action_on_h1(0) == Matrix::identity(34));
  for (std::uint32_t u = 1; u < 16; ++u) {
    const Matrix a = cover.deck_action_on_h1(u);
    CHECK(!(a == Matrix::identity(34)));
    CHECK(a * a == Matrix::identity(34));
    CHECK(slc::gf2::rank(a) == 34);
  }
  // Composition of translations.
  CHECK(cover.deck_action_on_h1(1) * cover.deck_action_on_h1(2) == cover.deck_action_on_h1(3));
  CHECK(cover.deck_action_on_h1(5) * cover.deck_action_on_h1(12) == cover.deck_action_on_h1(9));
  // Regression pin for the basis chosen by the echelon construction.
  CHECK(fingerprint(cover.deck_action_on_h1(1)) == 828549983);
}

TEST_CASE("translated faces are faces") {
  const CoverCW cover(2);
  for (std::uint32_t u = 0; u < 16; ++u) {
    for (std::uint32_t v = 0; v < 16; ++v) {
      CHECK(cover.translate_chain(cover.face_chain(v), u) == cover.face_chain(v ^ u));
    }
  }
}
