#include "slc/words.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace slc {

LetterSeq free_reduce(std::span<const Letter> seq) {
  LetterSeq out;
  out.reserve(seq.size());
  for (Letter l : seq) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

LetterSeq inverse_of(std::span<const Letter> seq) {
  LetterSeq out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word::Word(int genus, std::span<const Letter> seq) : genus_(genus), letters_(free_reduce(seq)) {
  for (Letter l : letters_) {
    if (l.gen >= 2 * genus) throw std::invalid_argument("word: generator index out of range for genus");
  }
}

Word Word::generator(int genus, std::uint16_t gen, bool inverse) {
  const Letter l{gen, inverse};
  return Word(genus, std::span<const Letter>(&l, 1));
}

Word Word::inverse() const {
  Word w(genus_);
  w.letters_ = inverse_of(letters_);
  return w;
}

Word Word::pow(int k) const {
  const Word base = k < 0 ? inverse() : *this;
  LetterSeq seq;
  for (int i = 0; i < std::abs(k); ++i) seq.insert(seq.end(), base.letters_.begin(), base.letters_.end());
  return Word(genus_, seq);
}

Word Word::operator*(const Word& other) const {
  if (genus_ != other.genus_) throw std::invalid_argument("word: genus mismatch in product");
  LetterSeq seq = letters_;
  seq.insert(seq.end(), other.letters_.begin(), other.letters_.end());
  Word w(genus_);
  w.letters_ = free_reduce(seq);
  return w;
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || !letters_.front().cancels(letters_.back());
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo].cancels(letters_[hi - 1])) {
    ++lo;
    --hi;
  }
  Word w(genus_);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                    letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

Word Word::rotated(std::size_t k) const {
  Word w(genus_);
  if (letters_.empty()) return w;
  k %= letters_.size();
  w.letters_ = letters_;
  std::rotate(w.letters_.begin(), w.letters_.begin() + static_cast<std::ptrdiff_t>(k), w.letters_.end());
  return Word(genus_, w.letters_);
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = genus_ <=> o.genus_; c != 0) return c;
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(), o.letters_.begin(),
                                                o.letters_.end());
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

std::string to_string(Letter l) {
  const char base = (l.gen % 2 == 0) ? 'a' : 'b';
  std::string s(1, l.inverse ? static_cast<char>(std::toupper(base)) : base);
  s += std::to_string(l.gen / 2 + 1);
  return s;
}

std::string to_string(const Word& w) {
  std::string s;
  for (Letter l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += to_string(l);
  }
  return s;
}

Word parse_word(std::string_view text, int genus) {
  LetterSeq seq;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) throw std::invalid_argument("word: malformed token '" + tok + "'");
    const char c = tok[0];
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower != 'a' && lower != 'b') throw std::invalid_argument("word: unknown generator '" + tok + "'");
    int index = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), index);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || index < 1 || index > genus) {
      throw std::invalid_argument("word: bad generator index in '" + tok + "'");
    }
    const auto gen = static_cast<std::uint16_t>(2 * (index - 1) + (lower == 'b' ? 1 : 0));
    seq.push_back(Letter{gen, c != lower});
  }
  return Word(genus, seq);
}

Word surface_relator(int genus) {
  if (genus < 2) throw std::invalid_argument("surface relator requires genus >= 2");
  Word r(genus);
  for (int i = 1; i <= genus; ++i) r = r * commutator(Word::a(genus, i), Word::b(genus, i));
  return r;
}

std::uint64_t abelianization_mask(const Word& w) {
  std::uint64_t mask = 0;
  for (Letter l : w.letters()) mask ^= std::uint64_t{1} << l.gen;
  return mask;
}

gf2::Vector abelianization_mod2(const Word& w) {
  return gf2::Vector::from_uint(static_cast<std::size_t>(2 * w.genus()), abelianization_mask(w));
}

namespace {

// All cyclic conjugates of the relator and its inverse, indexed by first
// letter. In the surface relator every letter occurs exactly once, so each
// letter starts exactly one rotation of r and one of r^-1.
struct RelatorTable {
  int genus;
  std::vector<std::vector<LetterSeq>> by_first;

  explicit RelatorTable(int g) : genus(g), by_first(static_cast<std::size_t>(4 * g)) {
    const Word r = surface_relator(g);
    for (const auto& base : {r, r.inverse()}) {
      for (std::size_t k = 0; k < base.size(); ++k) {
        LetterSeq rot(base.letters().begin(), base.letters().end());
        std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(k), rot.end());
        by_first[rot.front().code()].push_back(std::move(rot));
      }
    }
  }
};

const RelatorTable& relator_table(int genus) {
  static thread_local std::vector<std::unique_ptr<RelatorTable>> cache;
  for (const auto& t : cache) {
    if (t->genus == genus) return *t;
  }
  cache.push_back(std::make_unique<RelatorTable>(genus));
  return *cache.back();
}

LetterSeq cyclic_reduce(LetterSeq w) {
  w = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo].cancels(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return LetterSeq(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

// One Dehn step on the cyclic word `w`: finds the longest cyclic subword of
// length > half the relator matching a relator rotation and replaces it with
// the inverse of the complement. Returns false if no such subword exists.
bool dehn_step(LetterSeq& w, const RelatorTable& table) {
  const std::size_t rel_len = static_cast<std::size_t>(4 * table.genus);
  const std::size_t threshold = rel_len / 2 + 1;
  const std::size_t n = w.size();
  if (n < threshold) return false;

  std::size_t best_len = 0;
  std::size_t best_pos = 0;
  const LetterSeq* best_rel = nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& rel : table.by_first[w[i].code()]) {
      std::size_t k = 0;
      const std::size_t limit = std::min(n, rel_len);
      while (k < limit && w[(i + k) % n] == rel[k]) ++k;
      if (k > best_len) {
        best_len = k;
        best_pos = i;
        best_rel = &rel;
      }
    }
  }
  if (best_len < threshold) return false;

  // Rotate so the match is a prefix, then replace it.
  LetterSeq rotated(n);
  for (std::size_t k = 0; k < n; ++k) rotated[k] = w[(best_pos + k) % n];
  LetterSeq out = inverse_of(std::span<const Letter>(*best_rel).subspan(best_len));
  out.insert(out.end(), rotated.begin() + static_cast<std::ptrdiff_t>(best_len), rotated.end());
  w = cyclic_reduce(std::move(out));
  return true;
}

}  // namespace

bool is_trivial(const Word& w) {
  const auto& table = relator_table(w.genus());
  LetterSeq cur = cyclic_reduce(LetterSeq(w.letters().begin(), w.letters().end()));
  while (!cur.empty()) {
    if (!dehn_step(cur, table)) return false;
  }
  return true;
}

namespace {

// Booth's least-rotation algorithm on letter codes.
std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return s[i % n].code(); };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    long i = f[j - k - 1];
    while (i != -1 && at(j) != at(k + static_cast<std::size_t>(i) + 1)) {
      if (at(j) < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && at(j) != at(k)) {
      if (at(j) < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

}  // namespace

ConjClass canonical_class(const Word& w) {
  const Word c = w.cyclically_reduced();
  if (c.empty()) throw std::invalid_argument("canonical_class: trivial word has no essential class");
  const Word ci = c.inverse();
  Word x = c.rotated(least_rotation(c.letters()));
  Word y = ci.rotated(least_rotation(ci.letters()));
  return ConjClass{std::min(x, y)};
}

bool is_proper_power(const ConjClass& c) {
  const auto s = c.rep.letters();
  const std::size_t n = s.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = s[i] == s[i - p];
    if (periodic) return true;
  }
  return false;
}

std::size_t ConjClassHash::operator()(const ConjClass& c) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter l : c.rep.letters()) {
    h ^= l.code();
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace slc
