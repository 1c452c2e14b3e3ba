#pragma once

// Certified families of simple closed curves and the verification sweeps run
// over them.
//
// Simplicity is never decided for an arbitrary word. Every class produced
// here is the image of a standard curve under a sequence of twist
// automorphisms, and that sequence is kept as a replayable certificate.
// Classes are deduplicated by free conjugacy, which can keep two classes
// that are conjugate only in the surface group; that over-tests, never
// under-tests.

#include <cstddef>
#include <string>
#include <vector>

#include "slc/quotient.hpp"
#include "slc/words.hpp"

namespace slc {

struct TwistAutomorphism {
  std::string name;
  /// Image of each generator, indexed by generator index.
  std::vector<Word> images;
};

/// Substitutes generator images and freely reduces.
Word apply_twist(const TwistAutomorphism& t, const Word& w);

TwistAutomorphism identity_twist(int genus);

/// Checks that `t` sends the surface relator to a conjugate of the relator
/// or its inverse (free conjugacy, confirmed trivial by Dehn's algorithm)
/// and that `inverse` undoes it on every generator. Throws std::logic_error
/// otherwise.
void validate_twist_pair(const TwistAutomorphism& t, const TwistAutomorphism& inverse);

/// Dehn twist actions for the Lickorish curves: a twist along each a_i,
/// each b_i and each chain curve between consecutive handles, plus inverses.
class TwistTable {
 public:
  explicit TwistTable(int genus);

  int genus() const { return genus_; }
  const std::vector<TwistAutomorphism>& twists() const { return twists_; }
  const TwistAutomorphism& at(const std::string& name) const;

 private:
  int genus_;
  std::vector<TwistAutomorphism> twists_;
};

struct SimpleClass {
  ConjClass cls;
  /// Name of the standard curve the certificate starts from.
  std::string base;
  /// Twist names, applied left to right.
  std::vector<std::string> certificate;
  bool separating = false;
};

/// Standard curve by name: "a<i>", "b<i>", or "s<k>" = [a1,b1]...[ak,bk].
Word standard_curve_word(int genus, const std::string& name);

/// a_i and b_i for every handle, then the separating s_1 ... s_{g-1}.
std::vector<SimpleClass> standard_curves(int genus);

/// Replays a certificate from its standard curve.
ConjClass replay_certificate(const TwistTable& table, const SimpleClass& c);

/// Breadth-first closure of `seeds` under the twist table, up to `depth`
/// twists, keeping classes of length at most `max_len`. Deterministic for
/// any worker count.
std::vector<SimpleClass> generate_from(const TwistTable& table, const std::vector<SimpleClass>& seeds,
                                       std::size_t depth, std::size_t max_len, unsigned workers = 1);

std::vector<SimpleClass> generate_simple_classes(int genus, std::size_t depth, std::size_t max_len,
                                                 unsigned workers = 1);

struct ClassVerdict {
  bool deck_nonzero = false;
  bool h1_nonzero = false;
  bool in_kernel = false;
};

struct NonGeometricReport {
  std::size_t total = 0;
  std::size_t separating = 0;
  std::size_t nonseparating = 0;
  std::size_t rejected_by_deck = 0;
  std::size_t rejected_by_h1 = 0;
  /// Separating flag disagreeing with the mod-2 class.
  std::size_t flag_mismatches = 0;
  /// Indices into the verified class list.
  std::vector<std::size_t> kernel_hits;
  std::vector<ClassVerdict> verdicts;

  bool ok() const { return kernel_hits.empty() && flag_mismatches == 0; }
};

NonGeometricReport verify_non_geometric(const GroupContext& ctx, const std::vector<SimpleClass>& classes,
                                        unsigned workers = 1);

struct LemmaReport {
  std::size_t separating_checked = 0;
  std::size_t nonseparating_checked = 0;
  std::size_t lifts_checked = 0;
  std::size_t lifts_closed = 0;
  std::size_t lifts_nonzero = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Separating classes: every lift from every deck vertex closes and has a
/// nonzero H1 class. Nonseparating classes: nonzero mod-2 class, so no lift
/// closes.
LemmaReport lemma_check(const GroupContext& ctx, const std::vector<SimpleClass>& classes, unsigned workers = 1);

}  // namespace slc
