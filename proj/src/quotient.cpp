#include "slc/quotient.hpp"

#include <functional>

namespace slc {

GroupContext::GroupContext(std::shared_ptr<const CoverCW> cover) : cover_(std::move(cover)) {
  if (!cover_) throw std::invalid_argument("group context: null cover");
  for (int k = 0; k < cover_->generator_count(); ++k) {
    generator_action_.push_back(cover_->deck_action_on_h1(1u << k));
  }
  const std::size_t pairs = cover_->num_vertices() * cover_->num_vertices();
  cocycle_once_ = std::make_unique<std::once_flag[]>(pairs);
  cocycle_memo_.resize(pairs);
}

GElement GroupContext::identity() const {
  return GElement{gf2::Vector(static_cast<std::size_t>(2 * genus())), gf2::Vector(cover_->h1_dim())};
}

GElement GroupContext::rho(const Word& w) const {
  if (w.genus() != genus()) throw std::invalid_argument("rho: word genus does not match the context");
  return GElement{abelianization_mod2(w), cover_->lift_class(w, 0)};
}

gf2::Vector GroupContext::act(std::uint32_t v, const gf2::Vector& h) const {
  gf2::Vector out = h;
  for (int k = 0; k < cover_->generator_count(); ++k) {
    if ((v >> k) & 1u) out = generator_action_[static_cast<std::size_t>(k)] * out;
  }
  return out;
}

const gf2::Vector& GroupContext::cocycle(std::uint32_t v1, std::uint32_t v2) const {
  const std::size_t slot = static_cast<std::size_t>(v1) * cover_->num_vertices() + v2;
  std::call_once(cocycle_once_[slot], [&] {
    const gf2::Vector cycle =
        cover_->tree_path(v1) ^ cover_->translate_chain(cover_->tree_path(v2), v1) ^ cover_->tree_path(v1 ^ v2);
    cocycle_memo_[slot] = cover_->cycle_class(cycle);
  });
  return cocycle_memo_[slot];
}

GElement GroupContext::mul(const GElement& x, const GElement& y) const {
  const auto v1 = static_cast<std::uint32_t>(x.v.low_word());
  const auto v2 = static_cast<std::uint32_t>(y.v.low_word());
  return GElement{x.v ^ y.v, x.h ^ act(v1, y.h) ^ cocycle(v1, v2)};
}

bool GroupContext::in_kernel(const Word& w) const {
  if (abelianization_mask(w) != 0) return false;
  return cover_->lift_class(w, 0).is_zero();
}

std::size_t GroupContext::h_image_rank() const {
  // The lift of the Schreier generator T(v) x T(v + e_x)^-1 from vertex 0 is
  // the fundamental cycle of the edge (v, x).
  gf2::EchelonBasis span(cover_->h1_dim());
  for (std::size_t e = 0; e < cover_->num_edges(); ++e) span.insert(cover_->edge_class(e));
  return span.rank();
}

std::vector<KernelWitness> search_kernel_elements(const GroupContext& ctx, std::size_t max_len) {
  const int g = ctx.genus();
  const auto letters = static_cast<std::uint32_t>(4 * g);
  std::vector<KernelWitness> found;
  LetterSeq buf;

  for (std::size_t len = 1; len <= max_len; ++len) {
    buf.assign(len, Letter{});
    // A canonical representative starts with its smallest letter.
    std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t pos, std::uint64_t mask) {
      if (pos == len) {
        if (mask != 0) return;
        if (len >= 2 && buf.front().cancels(buf.back())) return;
        const Word w(g, buf);
        if (canonical_class(w).rep != w) return;
        if (!ctx.in_kernel(w) || is_trivial(w)) return;
        found.push_back(KernelWitness{w, is_proper_power(ConjClass{w})});
        return;
      }
      const std::uint32_t lo = pos == 0 ? 0 : buf.front().code();
      for (std::uint32_t code = lo; code < letters; ++code) {
        const Letter l{static_cast<std::uint16_t>(code / 2), (code & 1u) != 0};
        if (pos > 0 && buf[pos - 1].cancels(l)) continue;
        buf[pos] = l;
        extend(pos + 1, mask ^ (std::uint64_t{1} << l.gen));
      }
    };
    extend(0, 0);
  }
  return found;
}

}  // namespace slc
