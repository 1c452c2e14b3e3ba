#pragma once

// Group-theoretic bookkeeping for realizing a finitely presented group as the
// fundamental group of a closed n-manifold, n >= 4: a connected sum of
// S^{n-1} x S^1 handles followed by one surgery per relator.
//
// Recipes are documents. They certify the Seifert-van Kampen accounting and
// make no claim about the manifolds themselves.

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slc/words.hpp"

namespace slc {

/// Generators are names starting with a lowercase letter; a relator token
/// with the first letter uppercased denotes the inverse.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<LetterSeq> relators;

  bool operator==(const Presentation&) const = default;
};

/// Reads line 1 as generator names and every following nonblank line as a
/// relator. Throws std::invalid_argument on unknown tokens or bad names.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation(std::string_view text);
std::string format_word(const Presentation& p, std::span<const Letter> w);
std::string to_string(const Presentation& p);

/// Generators of `p2` that collide with `p1` are renamed with a numeric
/// suffix.
Presentation free_product(const Presentation& p1, const Presentation& p2);

/// Same presentation with generators renamed x1, x2, ... in order.
Presentation canonical_renaming(const Presentation& p);

struct SurgeryStep {
  std::string relator;
  std::string removed;
  std::string glued;
  std::string justification;
};

struct ManifoldRecipe {
  int dimension = 0;
  std::size_t handle_count = 0;
  std::string base;
  std::vector<SurgeryStep> steps;
  Presentation resulting_group;
  /// Set when the group is described only by its order.
  bool symbolic = false;
  std::optional<std::size_t> group_order_log2;
  std::vector<std::string> notes;
};

inline constexpr int kMinRealizationDimension = 4;

/// Throws std::invalid_argument for n < 4.
ManifoldRecipe realize(const Presentation& p, int n);

/// Template recipe for the finite quotient G of the genus-g surface group,
/// annotated with |G| = 2^{2g + 2g'} from the homology cover.
ManifoldRecipe recipe_for_G(int genus, int n);

}  // namespace slc
