#ifndef WHITEHEAD_BASIS_HPP_
#define WHITEHEAD_BASIS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "whitehead/word.hpp"

namespace whitehead {

/// The current basis together with its audit trail: every current generator
/// expressed over the original basis, and every original generator expressed
/// over the current basis. The two substitutions stay mutually inverse
/// through every transform.
class BasisState {
 public:
  /// The identity state: names a, b, ..., z, x26, ...; both substitutions
  /// are the identity. Throws ValidationError for rank 0.
  static BasisState standard(std::size_t rank);

  BasisState(std::vector<std::string> names, std::vector<std::string> original_names,
             std::vector<Word> over_original, Substitution original_over_current);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(GeneratorId g) const { return names_[g]; }
  const std::vector<std::string>& original_names() const { return original_names_; }

  /// Current generator g as a word over the original basis.
  const Word& over_original(GeneratorId g) const { return over_original_[g]; }
  /// All of over_original as a substitution (current basis -> original basis).
  Substitution over_original_substitution() const { return Substitution(over_original_); }
  /// Original generators over the current basis.
  const Substitution& original_over_current() const { return original_over_current_; }

  /// Checks that the two substitutions compose to the identity both ways.
  bool inverse_pair_ok() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::string> original_names_;
  std::vector<Word> over_original_;
  Substitution original_over_current_;
};

/// Default display name for generator g: a..z, then "x26", "x27", ...
std::string default_generator_name(GeneratorId g);

}  // namespace whitehead

#endif  // WHITEHEAD_BASIS_HPP_
