#pragma once

// Words in the standard generators a1, b1, ..., ag, bg of the fundamental
// group of a closed orientable genus-g surface.
//
// Generator indices interleave the symplectic pairs: a_i has index 2(i-1) and
// b_i has index 2(i-1)+1. Literal syntax is whitespace separated tokens
// `a1 b1 A1 B1 ...`, an uppercase letter denoting the inverse.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slc/gf2.hpp"

namespace slc {

struct Letter {
  std::uint16_t gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  bool cancels(Letter other) const { return gen == other.gen && inverse != other.inverse; }
  /// Canonical order a1 < A1 < b1 < B1 < a2 < ...
  std::uint32_t code() const { return 2u * gen + (inverse ? 1u : 0u); }

  bool operator==(const Letter&) const = default;
  std::strong_ordering operator<=>(const Letter& o) const { return code() <=> o.code(); }
};

using LetterSeq = std::vector<Letter>;

LetterSeq free_reduce(std::span<const Letter> seq);
LetterSeq inverse_of(std::span<const Letter> seq);

/// A freely reduced word in the surface group generators.
class Word {
 public:
  explicit Word(int genus) : genus_(genus) {}
  /// Freely reduces `seq`. Throws std::invalid_argument on an out-of-range
  /// generator.
  Word(int genus, std::span<const Letter> seq);

  static Word generator(int genus, std::uint16_t gen, bool inverse = false);
  static Word a(int genus, int i) { return generator(genus, static_cast<std::uint16_t>(2 * (i - 1))); }
  static Word b(int genus, int i) { return generator(genus, static_cast<std::uint16_t>(2 * (i - 1) + 1)); }

  int genus() const { return genus_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(int k) const;
  Word operator*(const Word& other) const;

  bool is_cyclically_reduced() const;
  Word cyclically_reduced() const;
  Word rotated(std::size_t k) const;

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& o) const;

 private:
  int genus_;
  LetterSeq letters_;
};

Word commutator(const Word& x, const Word& y);

std::string to_string(Letter l);
std::string to_string(const Word& w);
/// Throws std::invalid_argument on malformed tokens.
Word parse_word(std::string_view text, int genus);

/// [a1,b1][a2,b2]...[ag,bg]. Throws std::invalid_argument for g < 2.
Word surface_relator(int genus);

/// Exponent-sum parities: the mod-2 abelianization into (Z/2)^{2g}.
gf2::Vector abelianization_mod2(const Word& w);
/// Same map as a bitmask, bit k for generator index k.
std::uint64_t abelianization_mask(const Word& w);

/// Decides whether `w` is the identity of the surface group by Dehn's
/// algorithm on cyclic words.
bool is_trivial(const Word& w);

/// Free conjugacy class: the cyclically reduced representative that is
/// minimal among all rotations of itself and of its inverse.
struct ConjClass {
  Word rep;

  std::size_t length() const { return rep.size(); }
  bool operator==(const ConjClass&) const = default;
  auto operator<=>(const ConjClass&) const = default;
};

/// Throws std::invalid_argument if `w` is trivial in the free group.
ConjClass canonical_class(const Word& w);

/// True iff the cyclic word is u^k for some k >= 2.
bool is_proper_power(const ConjClass& c);

struct ConjClassHash {
  std::size_t operator()(const ConjClass& c) const noexcept;
};

}  // namespace slc
