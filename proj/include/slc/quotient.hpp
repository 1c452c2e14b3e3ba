#pragma once

// The finite group G obtained by quotienting the surface group by the loops
// that lift to closed, mod-2 null-homologous loops in the homology cover.
//
// An element is a pair (v, h): v in (Z/2)^{2g} is the deck coordinate and h
// the H1(cover; Z/2) class of the tree-closed lift from vertex 0. The group
// law is the twisted extension
//
//   (v1, h1) * (v2, h2) = (v1 + v2, h1 + A_{v1} h2 + c(v1, v2))
//
// with A_v the deck action on H1 and c the cocycle built from tree paths.

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "slc/cover.hpp"
#include "slc/gf2.hpp"
#include "slc/words.hpp"

namespace slc {

struct GElement {
  gf2::Vector v;
  gf2::Vector h;

  bool is_identity() const { return v.is_zero() && h.is_zero(); }
  bool operator==(const GElement&) const = default;
};

class GroupContext {
 public:
  explicit GroupContext(std::shared_ptr<const CoverCW> cover);

  const CoverCW& cover() const { return *cover_; }
  int genus() const { return cover_->genus(); }
  /// log2 |G| = 2g + 2g'.
  std::size_t order_log2() const { return static_cast<std::size_t>(2 * genus()) + cover_->h1_dim(); }

  GElement identity() const;
  GElement rho(const Word& w) const;
  GElement mul(const GElement& x, const GElement& y) const;
  bool in_kernel(const Word& w) const;

  /// A_v * h, composed from the generator matrices.
  gf2::Vector act(std::uint32_t v, const gf2::Vector& h) const;
  const gf2::Matrix& generator_action(int k) const { return generator_action_[static_cast<std::size_t>(k)]; }
  /// Memoized; safe to call from concurrent workers.
  const gf2::Vector& cocycle(std::uint32_t v1, std::uint32_t v2) const;

  /// Rank of the H1 classes of the Schreier generators of the cover's
  /// fundamental group, i.e. the attained rank of the h-component over v = 0.
  std::size_t h_image_rank() const;

 private:
  std::shared_ptr<const CoverCW> cover_;
  std::vector<gf2::Matrix> generator_action_;

  mutable std::unique_ptr<std::once_flag[]> cocycle_once_;
  mutable std::vector<gf2::Vector> cocycle_memo_;
};

struct KernelWitness {
  Word word;
  bool proper_power = false;
};

/// Enumerates cyclically reduced words up to `max_len` by increasing length,
/// one canonical representative per free conjugacy class, and returns those
/// in ker rho that are nontrivial in the surface group.
std::vector<KernelWitness> search_kernel_elements(const GroupContext& ctx, std::size_t max_len);

}  // namespace slc
