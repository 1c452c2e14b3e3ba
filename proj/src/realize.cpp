#include "slc/realize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "slc/cover.hpp"

namespace slc {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string inverse_token(const std::string& name) {
  std::string s = name;
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

void check_generators(const std::vector<std::string>& gens) {
  std::unordered_map<std::string, int> seen;
  for (const auto& g : gens) {
    if (!valid_name(g)) throw std::invalid_argument("presentation: bad generator name '" + g + "'");
    if (seen[g]++) throw std::invalid_argument("presentation: duplicate generator '" + g + "'");
  }
}

}  // namespace

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  std::string line;
  bool have_header = false;
  std::unordered_map<std::string, Letter> tokens;
  while (std::getline(in, line)) {
    if (!have_header) {
      std::istringstream ls(line);
      std::string name;
      while (ls >> name) p.generators.push_back(name);
      check_generators(p.generators);
      for (std::size_t i = 0; i < p.generators.size(); ++i) {
        const auto gen = static_cast<std::uint16_t>(i);
        tokens[p.generators[i]] = Letter{gen, false};
        tokens[inverse_token(p.generators[i])] = Letter{gen, true};
      }
      have_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    LetterSeq rel;
    while (ls >> tok) {
      auto it = tokens.find(tok);
      if (it == tokens.end()) throw std::invalid_argument("presentation: unknown token '" + tok + "'");
      rel.push_back(it->second);
    }
    rel = free_reduce(rel);
    if (!rel.empty()) p.relators.push_back(std::move(rel));
  }
  if (!have_header) throw std::invalid_argument("presentation: missing generator line");
  return p;
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_presentation(in);
}

std::string format_word(const Presentation& p, std::span<const Letter> w) {
  std::string s;
  for (Letter l : w) {
    if (!s.empty()) s += ' ';
    const std::string& name = p.generators.at(l.gen);
    s += l.inverse ? inverse_token(name) : name;
  }
  return s;
}

std::string to_string(const Presentation& p) {
  std::string s = "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) s += ", ";
    s += p.generators[i];
  }
  s += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) s += ", ";
    s += format_word(p, p.relators[i]);
  }
  s += " >";
  return s;
}

Presentation free_product(const Presentation& p1, const Presentation& p2) {
  Presentation out = p1;
  const auto offset = static_cast<std::uint16_t>(p1.generators.size());
  for (const auto& name : p2.generators) {
    std::string fresh = name;
    for (int k = 2; std::find(out.generators.begin(), out.generators.end(), fresh) != out.generators.end(); ++k) {
      fresh = name + "_" + std::to_string(k);
    }
    out.generators.push_back(fresh);
  }
  for (const auto& rel : p2.relators) {
    LetterSeq shifted;
    shifted.reserve(rel.size());
    for (Letter l : rel) shifted.push_back(Letter{static_cast<std::uint16_t>(l.gen + offset), l.inverse});
    out.relators.push_back(std::move(shifted));
  }
  return out;
}

Presentation canonical_renaming(const Presentation& p) {
  Presentation out = p;
  for (std::size_t i = 0; i < out.generators.size(); ++i) out.generators[i] = "x" + std::to_string(i + 1);
  return out;
}

namespace {

std::string base_description(int n, std::size_t k) {
  std::string s = "S^" + std::to_string(n);
  if (k > 0) {
    s += " # " + std::to_string(k) + " x (S^" + std::to_string(n - 1) + " x S^1)";
  }
  return s;
}

void check_dimension(int n) {
  if (n < kMinRealizationDimension) {
    throw std::invalid_argument("realize: dimension " + std::to_string(n) +
                                " rejected; the construction assumes n >= 4 so that S^(n-2) x D^2 is "
                                "simply connected and embedded loops do not link");
  }
}

}  // namespace

ManifoldRecipe realize(const Presentation& p, int n) {
  check_dimension(n);
  check_generators(p.generators);

  ManifoldRecipe r;
  r.dimension = n;
  r.handle_count = p.generators.size();
  r.base = base_description(n, r.handle_count);

  // Each handle summand contributes a free Z factor.
  Presentation group;
  for (const auto& name : p.generators) group = free_product(group, Presentation{{name}, {}});

  const std::string removed = "S^1 x D^" + std::to_string(n - 1);
  const std::string glued = "S^" + std::to_string(n - 2) + " x D^2";
  for (const auto& rel : p.relators) {
    for (Letter l : rel) {
      if (l.gen >= p.generators.size()) throw std::invalid_argument("realize: relator uses an unknown generator");
    }
    SurgeryStep step;
    step.relator = format_word(p, rel);
    step.removed = removed;
    step.glued = glued;
    step.justification = "complement of the tube keeps pi1 (loops do not link for n >= 4); " + glued +
                         " is simply connected and its boundary circle maps to the relator loop, so "
                         "Seifert-van Kampen adds exactly this relator";
    r.steps.push_back(std::move(step));
    group.relators.push_back(rel);
  }
  r.resulting_group = std::move(group);
  r.notes.push_back("pi1(M # N) = pi1(M) * pi1(N) for each connected sum (Seifert-van Kampen)");
  if (!p.relators.empty()) {
    r.notes.push_back("surgery loops assumed pairwise disjoint; no embedding data is verified");
  }
  return r;
}

ManifoldRecipe recipe_for_G(int genus, int n) {
  check_dimension(n);
  const CoverCW cover(genus);

  ManifoldRecipe r;
  r.dimension = n;
  r.symbolic = true;
  r.base = "S^" + std::to_string(n) + " # k x (S^" + std::to_string(n - 1) +
           " x S^1), k = number of generators of any finite presentation of G";
  r.group_order_log2 = static_cast<std::size_t>(2 * genus) + cover.h1_dim();
  r.notes.push_back("G = pi1(S) / (p o q)_* pi1(Sigma): deck group (Z/2)^" + std::to_string(2 * genus) +
                    " extended by H1(Sigma'; Z/2) of dimension " + std::to_string(cover.h1_dim()));
  r.notes.push_back("one surgery S^1 x D^" + std::to_string(n - 1) + " -> S^" + std::to_string(n - 2) +
                    " x D^2 per relator of the chosen presentation");
  r.notes.push_back("M is orientable, so its orientation character is trivial and the map realizing rho "
                    "is 2-sided");
  return r;
}

}  // namespace slc
