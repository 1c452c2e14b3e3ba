#include "slc/cover.hpp"

#include <deque>
#include <string>

namespace slc {

namespace {

int checked_genus(int genus) {
  if (genus < kMinGenus) throw std::invalid_argument("cover: genus must be at least 2");
  if (genus > kMaxCoverGenus) {
    throw ResourceBoundError("cover: genus " + std::to_string(genus) + " exceeds the supported bound " +
                             std::to_string(kMaxCoverGenus));
  }
  return genus;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("cover construction invariant violated: ") + what);
}

}  // namespace

CoverCW::CoverCW(int genus)
    : genus_(checked_genus(genus)), num_vertices_(std::size_t{1} << (2 * genus)) {
  const std::size_t V = num_vertices();
  const std::size_t E = num_edges();

  d1_ = gf2::Matrix(V, E);
  for (std::size_t e = 0; e < E; ++e) {
    d1_.set(edge_source(e), e);
    d1_.set(edge_target(e), e);
  }

  const Word relator = surface_relator(genus_);
  std::vector<gf2::Vector> faces;
  faces.reserve(V);
  for (std::uint32_t v = 0; v < V; ++v) {
    LiftResult lift = lift_word(relator, v);
    require(lift.endpoint == v, "face boundary does not close");
    faces.push_back(std::move(lift.edge_chain));
  }
  d2_ = gf2::Matrix::from_columns(faces);
  require((d1_ * d2_).is_zero(), "d1 * d2 != 0");

  tree_edge_.assign(E, false);
  tree_path_.assign(V, gf2::Vector(E));
  std::vector<bool> seen(V, false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (int k = 0; k < generator_count(); ++k) {
      const std::uint32_t w = v ^ (1u << k);
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      const std::size_t e = edge_index(v, k);
      tree_edge_[e] = true;
      tree_path_[w] = tree_path_[v];
      tree_path_[w].flip(e);
      queue.push_back(w);
    }
  }
  require(reached == V, "1-skeleton is disconnected");

  const auto cycles = gf2::kernel_basis(d1_);
  h1_ = gf2::quotient_coordinates(cycles, faces);
  require(static_cast<long>(h1_.dim()) == 2 - euler_characteristic(), "dim H1 != 2 - Euler characteristic");
  require(h1_.boundary_dim() == V - 1, "rank d2 != faces - 1");

  edge_h1_.reserve(E);
  for (std::size_t e = 0; e < E; ++e) {
    if (tree_edge_[e]) {
      edge_h1_.emplace_back(h1_.dim());
      continue;
    }
    gf2::Vector cycle = tree_path_[edge_source(e)] ^ tree_path_[edge_target(e)];
    cycle.flip(e);
    edge_h1_.push_back(h1_.coordinates(cycle));
  }
}

long CoverCW::euler_characteristic() const {
  return static_cast<long>(num_vertices()) - static_cast<long>(num_edges()) + static_cast<long>(num_faces());
}

gf2::Vector CoverCW::face_chain(std::uint32_t v) const { return d2_.column(v); }

LiftResult CoverCW::lift_word(const Word& w, std::uint32_t start) const {
  LiftResult r{gf2::Vector(num_edges()), start};
  for (Letter l : w.letters()) {
    const std::uint32_t bit = 1u << l.gen;
    if (l.inverse) {
      r.endpoint ^= bit;
      r.edge_chain.flip(edge_index(r.endpoint, l.gen));
    } else {
      r.edge_chain.flip(edge_index(r.endpoint, l.gen));
      r.endpoint ^= bit;
    }
  }
  return r;
}

gf2::Vector CoverCW::loop_h1_class(const LiftResult& lift, std::uint32_t start) const {
  gf2::Vector closed = lift.edge_chain ^ tree_path_[lift.endpoint] ^ tree_path_[start];
  if (!(d1_ * closed).is_zero()) throw std::logic_error("cover: tree-closed lift is not a cycle");
  return h1_.coordinates(closed);
}

gf2::Vector CoverCW::cycle_class(const gf2::Vector& cycle) const {
  gf2::Vector acc(h1_dim());
  for (auto e = cycle.find_first(); e != gf2::Vector::npos; e = cycle.find_next(e + 1)) acc ^= edge_h1_[e];
  return acc;
}

gf2::Vector CoverCW::lift_class(const Word& w, std::uint32_t start) const {
  gf2::Vector acc(h1_dim());
  std::uint32_t v = start;
  for (Letter l : w.letters()) {
    const std::uint32_t bit = 1u << l.gen;
    if (l.inverse) {
      v ^= bit;
      acc ^= edge_h1_[edge_index(v, l.gen)];
    } else {
      acc ^= edge_h1_[edge_index(v, l.gen)];
      v ^= bit;
    }
  }
  return acc;
}

gf2::Vector CoverCW::translate_chain(const gf2::Vector& chain, std::uint32_t u) const {
  gf2::Vector out(num_edges());
  for (auto e = chain.find_first(); e != gf2::Vector::npos; e = chain.find_next(e + 1)) {
    out.flip(edge_index(edge_source(e) ^ u, edge_generator(e)));
  }
  return out;
}

gf2::Matrix CoverCW::deck_action_on_h1(std::uint32_t u) const {
  if (u >= num_vertices()) throw std::invalid_argument("cover: deck element out of range");
  std::vector<gf2::Vector> columns;
  columns.reserve(h1_dim());
  for (const auto& rep : h1_.representatives()) columns.push_back(cycle_class(translate_chain(rep, u)));
  return gf2::Matrix::from_columns(columns);
}

}  // namespace slc
