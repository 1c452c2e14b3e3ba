#include "slc/curves.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "slc/parallel.hpp"

namespace slc {

Word apply_twist(const TwistAutomorphism& t, const Word& w) {
  LetterSeq seq;
  for (Letter l : w.letters()) {
    const Word& img = t.images.at(l.gen);
    if (l.inverse) {
      const auto inv = inverse_of(img.letters());
      seq.insert(seq.end(), inv.begin(), inv.end());
    } else {
      seq.insert(seq.end(), img.letters().begin(), img.letters().end());
    }
  }
  return Word(w.genus(), seq);
}

TwistAutomorphism identity_twist(int genus) {
  TwistAutomorphism t{"id", {}};
  for (int k = 0; k < 2 * genus; ++k) t.images.push_back(Word::generator(genus, static_cast<std::uint16_t>(k)));
  return t;
}

void validate_twist_pair(const TwistAutomorphism& t, const TwistAutomorphism& inverse) {
  if (t.images.empty()) throw std::logic_error("twist " + t.name + ": no generator images");
  const int g = t.images.front().genus();
  const Word r = surface_relator(g);
  const Word image = apply_twist(t, r);
  const ConjClass cls = canonical_class(image);
  if (cls != canonical_class(r) || !is_trivial(image)) {
    throw std::logic_error("twist " + t.name + ": relator image is not conjugate to the relator");
  }
  for (int k = 0; k < 2 * g; ++k) {
    const Word x = Word::generator(g, static_cast<std::uint16_t>(k));
    if (apply_twist(inverse, apply_twist(t, x)) != x || apply_twist(t, apply_twist(inverse, x)) != x) {
      throw std::logic_error("twist " + t.name + ": inverse " + inverse.name + " does not undo it");
    }
  }
}

namespace {

// Twist table entries as substitutions written in word literal syntax;
// unlisted generators are fixed. For the chain curve between handles i and
// i+1 the twist is composed with conjugation by a_i a_{i+1} on those two
// handles so that the relator is fixed letter for letter.
struct Substitution {
  int gen_offset;  // 0 = a_i, 1 = b_i, 2 = a_{i+1}, 3 = b_{i+1}
  const char* image;
};

struct TwistRecipe {
  const char* stem;
  bool chain;
  std::vector<Substitution> forward;
  std::vector<Substitution> backward;
};

const std::vector<TwistRecipe>& recipes() {
  // Placeholders: x = a_i, y = b_i, z = a_{i+1}, w = b_{i+1}; uppercase is
  // the inverse.
  static const std::vector<TwistRecipe> table = {
      {"Ta", false, {{1, "y x"}}, {{1, "y X"}}},
      {"Tb", false, {{0, "x y"}}, {{0, "x Y"}}},
      {"Tc",
       true,
       {{0, "x z x Z X"}, {1, "x z X Z y Z X"}, {2, "x z X"}, {3, "w Z X"}},
       {{0, "Z X x x z"}, {1, "Z X z x y x z"}, {2, "Z X z x z"}, {3, "Z X x z w x z"}}},
  };
  return table;
}

Word expand(const char* pattern, int genus, int handle) {
  std::string text;
  for (const char* p = pattern; *p; ++p) {
    if (*p == ' ') continue;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(*p)));
    const bool inv = lower != *p;
    int h = handle;
    char gen = 'a';
    switch (lower) {
      case 'x': gen = 'a'; break;
      case 'y': gen = 'b'; break;
      case 'z': gen = 'a'; h = handle + 1; break;
      case 'w': gen = 'b'; h = handle + 1; break;
      default: throw std::logic_error("twist recipe: bad placeholder");
    }
    text += static_cast<char>(inv ? std::toupper(gen) : gen);
    text += std::to_string(h);
    text += ' ';
  }
  return parse_word(text, genus);
}

TwistAutomorphism build(const std::string& name, int genus, int handle, const std::vector<Substitution>& subs) {
  TwistAutomorphism t = identity_twist(genus);
  t.name = name;
  for (const auto& s : subs) {
    const int gen = 2 * (handle - 1) + s.gen_offset;
    t.images[static_cast<std::size_t>(gen)] = expand(s.image, genus, handle);
  }
  return t;
}

}  // namespace

TwistTable::TwistTable(int genus) : genus_(genus) {
  if (genus < kMinGenus) throw std::invalid_argument("twist table: genus must be at least 2");
  for (const auto& recipe : recipes()) {
    const int last = recipe.chain ? genus - 1 : genus;
    for (int i = 1; i <= last; ++i) {
      const std::string name = std::string(recipe.stem) + std::to_string(i);
      TwistAutomorphism fwd = build(name, genus, i, recipe.forward);
      TwistAutomorphism bwd = build(name + "^-1", genus, i, recipe.backward);
      validate_twist_pair(fwd, bwd);
      twists_.push_back(std::move(fwd));
      twists_.push_back(std::move(bwd));
    }
  }
}

const TwistAutomorphism& TwistTable::at(const std::string& name) const {
  for (const auto& t : twists_) {
    if (t.name == name) return t;
  }
  throw std::out_of_range("twist table: unknown twist '" + name + "'");
}

Word standard_curve_word(int genus, const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unknown standard curve '" + name + "'");
  const int index = std::stoi(name.substr(1));
  switch (name[0]) {
    case 'a':
      if (index >= 1 && index <= genus) return Word::a(genus, index);
      break;
    case 'b':
      if (index >= 1 && index <= genus) return Word::b(genus, index);
      break;
    case 's':
      if (index >= 1 && index < genus) {
        Word w(genus);
        for (int i = 1; i <= index; ++i) w = w * commutator(Word::a(genus, i), Word::b(genus, i));
        return w;
      }
      break;
    default:
      break;
  }
  throw std::invalid_argument("unknown standard curve '" + name + "'");
}

std::vector<SimpleClass> standard_curves(int genus) {
  if (genus < kMinGenus) throw std::invalid_argument("standard curves: genus must be at least 2");
  std::vector<SimpleClass> out;
  auto add = [&](const std::string& name) {
    const Word w = standard_curve_word(genus, name);
    out.push_back(SimpleClass{canonical_class(w), name, {}, abelianization_mask(w) == 0});
  };
  for (int i = 1; i <= genus; ++i) {
    add("a" + std::to_string(i));
    add("b" + std::to_string(i));
  }
  for (int k = 1; k < genus; ++k) add("s" + std::to_string(k));
  return out;
}

ConjClass replay_certificate(const TwistTable& table, const SimpleClass& c) {
  Word w = standard_curve_word(table.genus(), c.base);
  for (const auto& name : c.certificate) w = apply_twist(table.at(name), w);
  return canonical_class(w);
}

std::vector<SimpleClass> generate_from(const TwistTable& table, const std::vector<SimpleClass>& seeds,
                                       std::size_t depth, std::size_t max_len, unsigned workers) {
  std::vector<SimpleClass> out;
  std::unordered_set<ConjClass, ConjClassHash> seen;
  std::vector<std::size_t> frontier;
  for (const auto& s : seeds) {
    if (s.cls.length() > max_len || !seen.insert(s.cls).second) continue;
    frontier.push_back(out.size());
    out.push_back(s);
  }

  const auto& twists = table.twists();
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    // Images are computed in parallel; insertion runs in frontier order so
    // the result does not depend on the worker count.
    std::vector<std::vector<ConjClass>> images(frontier.size());
    parallel_for(frontier.size(), workers, [&](std::size_t i) {
      const Word& rep = out[frontier[i]].cls.rep;
      auto& row = images[i];
      row.reserve(twists.size());
      for (const auto& t : twists) row.push_back(canonical_class(apply_twist(t, rep)));
    });

    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (std::size_t j = 0; j < twists.size(); ++j) {
        ConjClass& cls = images[i][j];
        if (cls.length() > max_len || seen.contains(cls)) continue;
        seen.insert(cls);
        const SimpleClass& parent = out[frontier[i]];
        SimpleClass child{std::move(cls), parent.base, parent.certificate, parent.separating};
        child.certificate.push_back(twists[j].name);
        child.separating = abelianization_mask(child.cls.rep) == 0;
        next.push_back(out.size());
        out.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<SimpleClass> generate_simple_classes(int genus, std::size_t depth, std::size_t max_len,
                                                 unsigned workers) {
  const TwistTable table(genus);
  return generate_from(table, standard_curves(genus), depth, max_len, workers);
}

NonGeometricReport verify_non_geometric(const GroupContext& ctx, const std::vector<SimpleClass>& classes,
                                        unsigned workers) {
  NonGeometricReport report;
  report.total = classes.size();
  report.verdicts.resize(classes.size());
  parallel_for(classes.size(), workers, [&](std::size_t i) {
    const Word& w = classes[i].cls.rep;
    if (w.genus() != ctx.genus()) throw std::invalid_argument("verify: class genus does not match the context");
    const GElement e = ctx.rho(w);
    report.verdicts[i] = ClassVerdict{!e.v.is_zero(), !e.h.is_zero(), e.is_identity()};
  });

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& v = report.verdicts[i];
    const bool mod2_zero = !v.deck_nonzero;
    if (classes[i].separating) {
      ++report.separating;
    } else {
      ++report.nonseparating;
    }
    if (classes[i].separating != mod2_zero) ++report.flag_mismatches;
    if (v.deck_nonzero) {
      ++report.rejected_by_deck;
    } else if (v.h1_nonzero) {
      ++report.rejected_by_h1;
    }
    if (v.in_kernel) report.kernel_hits.push_back(i);
  }
  return report;
}

LemmaReport lemma_check(const GroupContext& ctx, const std::vector<SimpleClass>& classes, unsigned workers) {
  const CoverCW& cover = ctx.cover();
  struct Partial {
    std::size_t lifts = 0;
    std::size_t closed = 0;
    std::size_t nonzero = 0;
    std::vector<std::string> failures;
  };
  std::vector<Partial> parts(classes.size());

  parallel_for(classes.size(), workers, [&](std::size_t i) {
    const SimpleClass& c = classes[i];
    const Word& w = c.cls.rep;
    Partial& p = parts[i];
    const std::uint64_t mask = abelianization_mask(w);
    const std::string label = to_string(w);
    if (!c.separating) {
      if (mask == 0) p.failures.push_back("nonseparating class with zero mod-2 class: " + label);
      return;
    }
    if (mask != 0) {
      p.failures.push_back("separating class with nonzero mod-2 class: " + label);
      return;
    }
    for (std::uint32_t start = 0; start < cover.num_vertices(); ++start) {
      const LiftResult lift = cover.lift_word(w, start);
      ++p.lifts;
      if (lift.endpoint != start) {
        p.failures.push_back("lift does not close from vertex " + std::to_string(start) + ": " + label);
        continue;
      }
      ++p.closed;
      if (cover.loop_h1_class(lift, start).is_zero()) {
        p.failures.push_back("lift from vertex " + std::to_string(start) + " is null-homologous: " + label);
      } else {
        ++p.nonzero;
      }
    }
  });

  LemmaReport report;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].separating) {
      ++report.separating_checked;
    } else {
      ++report.nonseparating_checked;
    }
    report.lifts_checked += parts[i].lifts;
    report.lifts_closed += parts[i].closed;
    report.lifts_nonzero += parts[i].nonzero;
    for (auto& f : parts[i].failures) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace slc
