#ifndef WHITEHEAD_WORD_HPP_
#define WHITEHEAD_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "whitehead/errors.hpp"

namespace whitehead {

/// Index of a generator in a basis. Ids are dense 0..rank-1.
using GeneratorId = std::uint32_t;

/// A signed generator: an element of X u X^-1.
///
/// Letters order by (generator id, sign) with the positive letter first;
/// this is the total order used for canonical cyclic rotations and for the
/// deterministic vertex order of Whitehead graphs.
class Letter {
 public:
  constexpr Letter(GeneratorId gen, bool positive)
      : code_(gen * 2 + (positive ? 0u : 1u)) {}

  static constexpr Letter positive(GeneratorId gen) { return Letter(gen, true); }
  static constexpr Letter negative(GeneratorId gen) { return Letter(gen, false); }
  static constexpr Letter from_code(std::uint32_t code) {
    return Letter(code / 2, code % 2 == 0);
  }

  constexpr GeneratorId gen() const { return code_ / 2; }
  constexpr bool is_positive() const { return code_ % 2 == 0; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }

  /// Dense encoding gen*2 + (0 for positive, 1 for negative).
  constexpr std::uint32_t code() const { return code_; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;

 private:
  std::uint32_t code_;
};

/// A freely reduced word over a basis. The constructor reduces, so the
/// no-adjacent-cancellation invariant always holds.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> raw) : letters_(std::move(raw)) { reduce_in_place(); }

  static Word single(Letter l) { return Word(std::vector<Letter>{l}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  Letter at(std::size_t i) const { return letters_[i]; }

  /// Reversed sequence with flipped signs.
  Word inverse() const;

  /// Concatenation followed by free reduction.
  Word operator*(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

 private:
  void reduce_in_place();
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence. Idempotent.
inline Word reduce(std::vector<Letter> raw) { return Word(std::move(raw)); }

/// A cyclically reduced word up to rotation, stored in its
/// lexicographically least rotation (letter order: generator id ascending,
/// positive before negative). Represents a nontrivial conjugacy class.
class CyclicWord {
 public:
  /// Canonicalizes the rotation. Throws ValidationError if the sequence is
  /// empty or not cyclically reduced.
  explicit CyclicWord(std::vector<Letter> cyc);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  std::optional<CyclicWord> core;  // absent iff the input was trivial
  Word conjugator;                 // input = conjugator * core * conjugator^-1
};

/// Strips matching end letters until the core is cyclically reduced.
CyclicReduction cyclically_reduce(const Word& w);

/// One member of the relator set R: a nontrivial element or a nontrivial
/// conjugacy class.
class Relator {
 public:
  static Relator element(Word w);
  static Relator conj_class(CyclicWord c);
  /// Class of an arbitrary word; cyclically reduces first.
  static Relator conj_class_of(const Word& w);

  bool is_element() const { return std::holds_alternative<Word>(value_); }
  const Word& element_word() const { return std::get<Word>(value_); }
  const CyclicWord& class_word() const { return std::get<CyclicWord>(value_); }

  /// Letter count of the (cyclically) reduced sequence.
  std::size_t length() const;

  /// Generators whose letter occurs, in either sign. Sorted, unique.
  std::vector<GeneratorId> support() const;

  friend bool operator==(const Relator&, const Relator&) = default;

 private:
  explicit Relator(std::variant<Word, CyclicWord> v) : value_(std::move(v)) {}
  std::variant<Word, CyclicWord> value_;
};

std::size_t total_length(std::span<const Relator> rs);

/// A total map from a source basis to words over a (possibly different)
/// target basis, extended to words as a homomorphism.
class Substitution {
 public:
  explicit Substitution(std::vector<Word> images) : images_(std::move(images)) {}
  static Substitution identity(std::size_t rank);

  std::size_t source_rank() const { return images_.size(); }
  const Word& image(GeneratorId g) const;

  /// Replaces each letter x^e by image(x)^e and freely reduces.
  /// Throws ValidationError when a letter falls outside the domain.
  Word apply(const Word& w) const;

 private:
  std::vector<Word> images_;
};

inline Word substitute(const Word& w, const Substitution& s) { return s.apply(w); }

/// Substituted relator: classes are re-cyclically-reduced. Throws
/// ValidationError if the image is trivial (s was not injective).
Relator substitute(const Relator& r, const Substitution& s);

}  // namespace whitehead

#endif  // WHITEHEAD_WORD_HPP_
