#include "whitehead/basis.hpp"

#include <utility>

namespace whitehead {

std::string default_generator_name(GeneratorId g) {
  if (g < 26) return std::string(1, static_cast<char>('a' + g));
  return "x" + std::to_string(g);
}

BasisState BasisState::standard(std::size_t rank) {
  if (rank == 0) {
    throw ValidationError("free group must have rank at least 1");
  }
  std::vector<std::string> names;
  names.reserve(rank);
  std::vector<Word> over_original;
  over_original.reserve(rank);
  for (GeneratorId g = 0; g < rank; ++g) {
    names.push_back(default_generator_name(g));
    over_original.push_back(Word::single(Letter::positive(g)));
  }
  return BasisState(names, names, std::move(over_original), Substitution::identity(rank));
}

BasisState::BasisState(std::vector<std::string> names, std::vector<std::string> original_names,
                       std::vector<Word> over_original, Substitution original_over_current)
    : names_(std::move(names)),
      original_names_(std::move(original_names)),
      over_original_(std::move(over_original)),
      original_over_current_(std::move(original_over_current)) {
  if (names_.empty() || names_.size() != over_original_.size() ||
      names_.size() != original_names_.size() ||
      original_over_current_.source_rank() != names_.size()) {
    throw ValidationError("inconsistent basis state");
  }
}

bool BasisState::inverse_pair_ok() const {
  const Substitution down = over_original_substitution();
  for (GeneratorId g = 0; g < rank(); ++g) {
    if (original_over_current_.apply(over_original_[g]) != Word::single(Letter::positive(g))) {
      return false;
    }
    if (down.apply(original_over_current_.image(g)) != Word::single(Letter::positive(g))) {
      return false;
    }
  }
  return true;
}

}  // namespace whitehead
