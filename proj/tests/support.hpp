#pragma once

// Random inputs for property tests. Seeds are fixed so failures reproduce.

#include <cstdint>
#include <random>

#include "slc/gf2.hpp"
#include "slc/words.hpp"

namespace slc::testing {

inline constexpr std::uint64_t kSeed = 20240229;

inline Word random_word(std::mt19937_64& rng, int genus, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter(0, 4 * genus - 1);
  const std::size_t len = len_dist(rng);
  LetterSeq seq;
  while (seq.size() < len) {
    const int code = letter(rng);
    const Letter l{static_cast<std::uint16_t>(code / 2), (code & 1) != 0};
    if (!seq.empty() && seq.back().cancels(l)) continue;
    seq.push_back(l);
  }
  return Word(genus, seq);
}

inline gf2::Vector random_vector(std::mt19937_64& rng, std::size_t dim, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  gf2::Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (bit(rng)) v.set(i);
  }
  return v;
}

inline gf2::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::vector<gf2::Vector> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(random_vector(rng, cols, density));
  if (rows == 0) return gf2::Matrix(0, cols);
  return gf2::Matrix::from_rows(r);
}

/// Splices u r^{+-1} u^-1 into w at a random position.
inline Word splice_relator(std::mt19937_64& rng, const Word& w, std::size_t conj_len) {
  const int g = w.genus();
  const Word u = random_word(rng, g, conj_len);
  Word r = surface_relator(g);
  if (rng() & 1) r = r.inverse();
  const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
  const Word head(g, w.letters().subspan(0, cut));
  const Word tail(g, w.letters().subspan(cut));
  return head * u * r * u.inverse() * tail;
}

}  // namespace slc::testing
