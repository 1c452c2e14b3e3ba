#pragma once

// The regular cover of a closed genus-g surface associated with the mod-2
// abelianization, built as an explicit CW complex.
//
// Vertices are the deck group (Z/2)^{2g}, encoded as integers with bit k the
// coordinate of generator k. Edge (v, k) runs from v to v + e_k and has index
// v * 2g + k. The face at v is attached along the lift of the surface relator
// starting at v.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "slc/gf2.hpp"
#include "slc/words.hpp"

namespace slc {

/// Raised when a request exceeds the supported resource envelope.
class ResourceBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMinGenus = 2;
inline constexpr int kMaxCoverGenus = 4;

struct LiftResult {
  gf2::Vector edge_chain;
  std::uint32_t endpoint = 0;
};

class CoverCW {
 public:
  /// Throws std::invalid_argument for g < 2 and ResourceBoundError for g > 4.
  explicit CoverCW(int genus);

  int genus() const { return genus_; }
  int generator_count() const { return 2 * genus_; }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return num_vertices_ * static_cast<std::size_t>(2 * genus_); }
  std::size_t num_faces() const { return num_vertices_; }
  std::size_t degree() const { return num_vertices_; }
  long euler_characteristic() const;
  std::size_t h1_dim() const { return h1_.dim(); }
  std::size_t cover_genus() const { return h1_dim() / 2; }
  std::size_t cycle_dim() const { return h1_.cycle_dim(); }
  std::size_t boundary_rank() const { return h1_.boundary_dim(); }

  std::size_t edge_index(std::uint32_t v, int gen) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(2 * genus_) + static_cast<std::size_t>(gen);
  }
  std::uint32_t edge_source(std::size_t e) const { return static_cast<std::uint32_t>(e / (2 * genus_)); }
  int edge_generator(std::size_t e) const { return static_cast<int>(e % (2 * genus_)); }
  std::uint32_t edge_target(std::size_t e) const { return edge_source(e) ^ (1u << edge_generator(e)); }

  const gf2::Matrix& boundary1() const { return d1_; }
  const gf2::Matrix& boundary2() const { return d2_; }
  const gf2::QuotientMap& h1() const { return h1_; }

  bool is_tree_edge(std::size_t e) const { return tree_edge_[e]; }
  /// Chain of the spanning-tree path from vertex 0 to `v`.
  const gf2::Vector& tree_path(std::uint32_t v) const { return tree_path_[v]; }

  /// Face boundary: the lift of the surface relator from `v`.
  gf2::Vector face_chain(std::uint32_t v) const;

  LiftResult lift_word(const Word& w, std::uint32_t start) const;
  /// Closes the lift with the tree path from its endpoint back to `start`
  /// and returns the H1 coordinates of the resulting cycle.
  gf2::Vector loop_h1_class(const LiftResult& lift, std::uint32_t start) const;

  /// H1 class of a cycle through the per-edge table (tree edges contribute
  /// nothing, each other edge contributes its fundamental cycle).
  gf2::Vector cycle_class(const gf2::Vector& cycle) const;
  /// H1 class of the lift of `w` from `start`, tree-closed. Equal to
  /// loop_h1_class(lift_word(w, start), start) without materializing chains.
  gf2::Vector lift_class(const Word& w, std::uint32_t start) const;
  const gf2::Vector& edge_class(std::size_t e) const { return edge_h1_[e]; }

  /// Image of a chain under the deck transformation by `u`.
  gf2::Vector translate_chain(const gf2::Vector& chain, std::uint32_t u) const;
  /// Push-forward on H1 coordinates induced by translation by `u`.
  gf2::Matrix deck_action_on_h1(std::uint32_t u) const;

 private:
  int genus_;
  std::size_t num_vertices_;
  gf2::Matrix d1_;
  gf2::Matrix d2_;
  std::vector<bool> tree_edge_;
  std::vector<gf2::Vector> tree_path_;
  gf2::QuotientMap h1_;
  std::vector<gf2::Vector> edge_h1_;
};

}  // namespace slc
