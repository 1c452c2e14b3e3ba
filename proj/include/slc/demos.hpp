#pragma once

// Orientation characters, the 2-sidedness test chi_source = chi_target o f_*,
// and the 1-sided torus in RP^2 x S^1 whose kernel contains no simple class.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "slc/quotient.hpp"
#include "slc/realize.hpp"

namespace slc {

/// A class (p, q) in pi1(T^2) = Z x Z.
struct TorusClass {
  long p = 0;
  long q = 0;

  TorusClass operator+(const TorusClass& o) const { return {p + o.p, q + o.q}; }
  bool operator==(const TorusClass&) const = default;
};

/// An element of Z/2 x Z.
struct Z2xZ {
  int torsion = 0;
  long free = 0;

  Z2xZ operator+(const Z2xZ& o) const { return {(torsion + o.torsion) % 2, free + o.free}; }
  bool is_zero() const { return torsion == 0 && free == 0; }
  bool operator==(const Z2xZ&) const = default;
};

/// The embedding T^2 -> RP^2 x S^1 on fundamental groups: (p, q) -> (p mod 2, q).
Z2xZ iota_star(TorusClass c);

/// Essential simple closed curves on the torus are exactly the primitive
/// classes. Throws std::invalid_argument for (0, 0).
bool is_simple_torus(TorusClass c);

struct TorusScan {
  long bound = 0;
  std::vector<TorusClass> kernel;
  std::size_t simple_in_kernel = 0;

  bool non_geometric() const { return simple_in_kernel == 0; }
};

/// Every nonzero (p, q) with |p|, |q| <= bound.
TorusScan scan_torus_kernel(long bound);
bool kernel_is_non_geometric_torus(long bound);

/// Values on generators; evaluated on words by summing mod 2.
struct OrientationCharacter {
  std::vector<std::uint8_t> values;

  std::uint8_t operator()(std::span<const Letter> w) const;
};

/// Finitely generated abelian group, order 0 meaning an infinite cyclic
/// factor. Homomorphisms into it are checked exactly by exponent sums.
struct AbelianTarget {
  std::vector<std::string> generators;
  std::vector<long> orders;
};

/// A group given only through a word-problem oracle.
struct OracleTarget {
  std::vector<std::string> generators;
  std::function<bool(std::span<const Letter>)> is_identity;
};

using TargetGroup = std::variant<Presentation, AbelianTarget, OracleTarget>;

struct SidednessReport {
  bool two_sided = false;
  /// False when the images could not be confirmed to define a homomorphism
  /// (a presented target without a matching relator).
  bool homomorphism_verified = false;
  std::vector<std::string> notes;
};

/// Compares chi_source(s) with chi_target(images[s]) on every source
/// generator. Throws std::invalid_argument when a character is not well
/// defined on the relators or the images provably fail to define a
/// homomorphism.
SidednessReport check_sidedness(const Presentation& source, const OrientationCharacter& source_char,
                                const TargetGroup& target, const OrientationCharacter& target_char,
                                const std::vector<LetterSeq>& images);

bool is_two_sided(const Presentation& source, const OrientationCharacter& source_char, const TargetGroup& target,
                  const OrientationCharacter& target_char, const std::vector<LetterSeq>& images);

/// pi1 of the closed genus-g surface as a presentation on a1 b1 ... ag bg.
Presentation surface_presentation(int genus);

/// The torus a -> t, b -> z into RP^2 x S^1 with chi(t) = 1.
SidednessReport torus_embedding_sidedness();
/// The map S -> M realizing rho, M orientable.
SidednessReport main_construction_sidedness(const GroupContext& ctx);
/// The same map followed by M \ D^n -> M # (RP^2 x S^{n-2}), target group
/// G * Z/2 with chi nontrivial only on the Z/2 factor. When
/// `through_z2_factor` is set, a1 is instead sent to the Z/2 generator and the
/// other generators to the identity, which is 1-sided.
SidednessReport free_factor_sidedness(const GroupContext& ctx, bool through_z2_factor = false);

struct DimensionExtension {
  int dimension = 0;
  std::string fundamental_group;
  bool pi1_unchanged = false;
  bool needs_review = false;
  std::string note;
  TorusScan scan;
};

/// RP^2 x S^1 x S^{n-3}. Throws std::invalid_argument for n < 4; n = 4 is
/// flagged because the extra factor is a circle.
DimensionExtension extend_to_dimension(int n, long bound = 100);

}  // namespace slc
