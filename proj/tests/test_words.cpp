#include <doctest.h>

#include <random>
#include <stdexcept>
#include <set>

#include "slc/words.hpp"
#include "support.hpp"

using slc::ConjClass;
using slc::Word;

namespace {

Word W(const char* text, int g = 2) { return slc::parse_word(text, g); }

// Independent normal-closure oracle: freely reduced words reachable from the
// empty word by inserting cyclic conjugates of r^{+-1}, bare or conjugated by
// a single letter, under a length budget. Every word reached is trivial in
// the surface group.
std::set<slc::LetterSeq> trivial_words_by_insertion(int g, std::size_t budget) {
  const Word r = slc::surface_relator(g);
  std::vector<slc::LetterSeq> rels;
  for (const Word& base : {r, r.inverse()}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      const Word rot = base.rotated(k);
      rels.emplace_back(rot.letters().begin(), rot.letters().end());
      for (std::uint16_t code = 0; code < 4 * g; ++code) {
        const Word x = Word::generator(g, static_cast<std::uint16_t>(code / 2), (code & 1) != 0);
        const Word c = x * rot * x.inverse();
        rels.emplace_back(c.letters().begin(), c.letters().end());
      }
    }
  }
  std::set<slc::LetterSeq> seen{{}};
  std::vector<slc::LetterSeq> queue{{}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const slc::LetterSeq w = queue[head];
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      for (const auto& rel : rels) {
        slc::LetterSeq next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), rel.begin(), rel.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
        next = slc::free_reduce(next);
        if (next.size() > budget || !seen.insert(next).second) continue;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

ConjClass brute_force_class(const Word& w) {
  const Word c = w.cyclically_reduced();
  Word best = c;
  for (const Word& x : {c, c.inverse()}) {
    for (std::size_t k = 0; k < x.size(); ++k) best = std::min(best, x.rotated(k));
  }
  return ConjClass{best};
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(W("a1 A1 b1") == W("b1"));
  CHECK(W("").empty());
  CHECK(W("a1 b1 B1 A1 a2") == W("a2"));
  std::mt19937_64 rng(slc::testing::kSeed);
  for (int i = 0; i < 200; ++i) {
    const Word w = slc::testing::random_word(rng, 2, 20);
    CHECK(Word(2, w.letters()) == w);
  }
}

TEST_CASE("literal syntax round trips and rejects junk") {
  CHECK(slc::to_string(W("a1 B2 A1 b1")) == "a1 B2 A1 b1");
  CHECK_THROWS_AS(W("c1"), std::invalid_argument);
  CHECK_THROWS_AS(W("a3"), std::invalid_argument);
  CHECK_THROWS_AS(W("a"), std::invalid_argument);
  CHECK_THROWS_AS(W("a1x"), std::invalid_argument);
}

TEST_CASE("surface relator") {
  CHECK(slc::surface_relator(2) == W("a1 b1 A1 B1 a2 b2 A2 B2"));
  CHECK(slc::surface_relator(2).size() == 8);
  CHECK(slc::surface_relator(3).size() == 12);
  CHECK_THROWS_AS(slc::surface_relator(1), std::invalid_argument);
  for (int g = 2; g <= 4; ++g) {
    CHECK(slc::surface_relator(g).is_cyclically_reduced());
    CHECK(slc::abelianization_mod2(slc::surface_relator(g)).is_zero());
  }
}

TEST_CASE("mod-2 abelianization") {
  CHECK(slc::abelianization_mod2(W("a1")) == slc::gf2::Vector::unit(4, 0));
  CHECK(slc::abelianization_mod2(W("a1 b1 A1 B1")).is_zero());
  CHECK(slc::abelianization_mod2(W("a1 b2 a1")) == slc::gf2::Vector::unit(4, 3));

  std::mt19937_64 rng(slc::testing::kSeed + 1);
  for (int i = 0; i < 1000; ++i) {
    const Word u = slc::testing::random_word(rng, 2, 15);
    const Word v = slc::testing::random_word(rng, 2, 15);
    CHECK(slc::abelianization_mod2(u * v) == slc::abelianization_mod2(u) + slc::abelianization_mod2(v));
  }
}

TEST_CASE("Dehn's algorithm on known words") {
  CHECK(slc::is_trivial(slc::surface_relator(2)));
  CHECK(slc::is_trivial(slc::surface_relator(3).inverse()));
  CHECK(slc::is_trivial(W("")));
  CHECK_FALSE(slc::is_trivial(W("a1")));
  CHECK_FALSE(slc::is_trivial(W("a1 b1 A1 B1")));
  CHECK_FALSE(slc::is_trivial(slc::commutator(W("a1 a1"), W("b1 b1"))));
  // Rotations of the relator are trivial; a swapped second handle is not.
  CHECK(slc::is_trivial(W("B1 a2 b2 A2 B2 a1 b1 A1")));
  CHECK_FALSE(slc::is_trivial(W("a1 b1 A1 B1 b2 a2 B2 A2")));
}

TEST_CASE("conjugates of the relator are trivial") {
  std::mt19937_64 rng(slc::testing::kSeed + 2);
  for (int g = 2; g <= 3; ++g) {
    const Word r = slc::surface_relator(g);
    for (int i = 0; i < 100; ++i) {
      const Word u = slc::testing::random_word(rng, g, 12);
      CHECK(slc::is_trivial(u * r * u.inverse()));
      CHECK(slc::is_trivial(u * r.inverse() * u.inverse()));
    }
  }
}

TEST_CASE("random products of relator conjugates are trivial") {
  std::mt19937_64 rng(slc::testing::kSeed + 3);
  for (int i = 0; i < 200; ++i) {
    Word w(2);
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < k; ++j) w = slc::testing::splice_relator(rng, w, 6);
    CHECK(slc::is_trivial(w));
  }
}

TEST_CASE("triviality implies zero mod-2 class") {
  std::mt19937_64 rng(slc::testing::kSeed + 4);
  for (int i = 0; i < 2000; ++i) {
    const Word w = slc::testing::random_word(rng, 2, 10);
    if (slc::is_trivial(w)) CHECK(slc::abelianization_mod2(w).is_zero());
    // Inserting a relator conjugate never changes the answer.
    CHECK(slc::is_trivial(slc::testing::splice_relator(rng, w, 4)) == slc::is_trivial(w));
  }
}

TEST_CASE("Dehn agrees with the insertion oracle on short words (g = 2)") {
  const auto oracle = trivial_words_by_insertion(2, 12);
  std::size_t long_ones = 0;
  for (const auto& seq : oracle) {
    CHECK(slc::is_trivial(Word(2, seq)));
    long_ones += seq.size() >= 8 ? 1 : 0;
  }
  CHECK(long_ones > 16);

  // Words of length <= 6: the oracle reaches none of them, and Dehn agrees.
  std::size_t total = 0;
  std::vector<slc::LetterSeq> layer{{}};
  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<slc::LetterSeq> next;
    for (const auto& w : layer) {
      for (std::uint16_t code = 0; code < 8; ++code) {
        const slc::Letter l{static_cast<std::uint16_t>(code / 2), (code & 1) != 0};
        if (!w.empty() && w.back().cancels(l)) continue;
        auto x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
    for (const auto& w : layer) {
      ++total;
      CHECK(slc::is_trivial(Word(2, w)) == oracle.contains(w));
    }
  }
  CHECK(total == 8 * (1 + 7 + 49 + 343 + 2401 + 16807));
}

TEST_CASE("canonical class") {
  CHECK(slc::canonical_class(W("b1 a1 B1")) == slc::canonical_class(W("a1")));
  CHECK(slc::canonical_class(W("A1")) == slc::canonical_class(W("a1")));
  CHECK(slc::canonical_class(W("a1")).rep == W("a1"));
  const auto c = slc::canonical_class(W("a1 b2 a1 b1"));
  CHECK(slc::canonical_class(W("b2 a1 b1 a1")) == c);
  CHECK(slc::canonical_class(W("a1 b1 a1 b2")) == c);
  CHECK(slc::canonical_class(W("b1 a1 b2 a1")) == c);
  CHECK_THROWS_AS(slc::canonical_class(W("")), std::invalid_argument);
  CHECK_THROWS_AS(slc::canonical_class(W("a1 b1 B1 A1")), std::invalid_argument);
}

TEST_CASE("canonical class is rotation, conjugation and inversion invariant") {
  std::mt19937_64 rng(slc::testing::kSeed + 5);
  for (int i = 0; i < 500; ++i) {
    const Word w = slc::testing::random_word(rng, 2, 16).cyclically_reduced();
    if (w.empty()) continue;
    const ConjClass c = slc::canonical_class(w);
    CHECK(c == brute_force_class(w));
    CHECK(c.rep.is_cyclically_reduced());
    CHECK(slc::canonical_class(w.rotated(rng() % w.size())) == c);
    CHECK(slc::canonical_class(w.inverse()) == c);
    const Word x = Word::generator(2, static_cast<std::uint16_t>(rng() % 4), rng() & 1);
    CHECK(slc::canonical_class(x * w * x.inverse()) == c);
  }
}

TEST_CASE("proper powers") {
  CHECK(slc::is_proper_power(slc::canonical_class(W("a1 a1"))));
  CHECK_FALSE(slc::is_proper_power(slc::canonical_class(W("a1 b1"))));
  CHECK(slc::is_proper_power(slc::canonical_class(W("a1 b2 a1 b2 a1 b2"))));
  CHECK_FALSE(slc::is_proper_power(slc::canonical_class(W("a1 b1 A1 B1"))));
  CHECK_FALSE(slc::is_proper_power(slc::canonical_class(W("a1"))));
}
