#include "whitehead/transform.hpp"

#include <utility>

namespace whitehead {

WhiteheadTransform::WhiteheadTransform(std::size_t rank, Letter multiplier,
                                       std::vector<bool> gamma)
    : multiplier_(multiplier), gamma_(std::move(gamma)) {
  if (rank == 0 || multiplier_.code() >= 2 * rank || gamma_.size() != 2 * rank) {
    throw ValidationError("malformed Whitehead transform");
  }
  gamma_[multiplier_.code()] = false;
  gamma_[multiplier_.inverse().code()] = false;
}

WhiteheadTransform WhiteheadTransform::identity(std::size_t rank) {
  return WhiteheadTransform(rank, Letter::positive(0), std::vector<bool>(2 * rank, false));
}

Word WhiteheadTransform::image(GeneratorId g) const {
  const Letter x = Letter::positive(g);
  std::vector<Letter> out;
  if (gamma(x)) out.push_back(multiplier_.inverse());
  out.push_back(x);
  if (gamma(x.inverse())) out.push_back(multiplier_);
  return Word(std::move(out));
}

Substitution WhiteheadTransform::forward_images() const {
  std::vector<Word> images;
  images.reserve(rank());
  for (GeneratorId g = 0; g < rank(); ++g) images.push_back(image(g));
  return Substitution(std::move(images));
}

Substitution WhiteheadTransform::inverse_images() const {
  std::vector<Word> images;
  images.reserve(rank());
  for (GeneratorId g = 0; g < rank(); ++g) {
    const Letter x = Letter::positive(g);
    std::vector<Letter> out;
    if (gamma(x)) out.push_back(multiplier_);
    out.push_back(x);
    if (gamma(x.inverse())) out.push_back(multiplier_.inverse());
    images.push_back(Word(std::move(out)));
  }
  return Substitution(std::move(images));
}

bool WhiteheadTransform::is_identity() const {
  for (const bool b : gamma_) {
    if (b) return false;
  }
  return true;
}

std::vector<WhiteheadTransform> enumerate_transforms(std::size_t rank) {
  if (rank == 0) throw ValidationError("rank must be at least 1");
  std::vector<WhiteheadTransform> out;
  const std::size_t free_letters = 2 * (rank - 1);
  out.reserve(2 * rank * (std::size_t{1} << free_letters));
  for (std::uint32_t ycode = 0; ycode < 2 * rank; ++ycode) {
    const Letter y = Letter::from_code(ycode);
    // Letter codes outside {y, y^-1}, ascending; mask bit i drives slot i.
    std::vector<std::uint32_t> slots;
    for (std::uint32_t c = 0; c < 2 * rank; ++c) {
      if (c != ycode && c != (ycode ^ 1u)) slots.push_back(c);
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << free_letters); ++mask) {
      std::vector<bool> gamma(2 * rank, false);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (mask & (std::size_t{1} << i)) gamma[slots[i]] = true;
      }
      out.emplace_back(rank, y, std::move(gamma));
    }
  }
  return out;
}

TransformApplication apply_transform(const BasisState& x, const WhiteheadTransform& t,
                                     std::span<const Relator> rs) {
  if (t.rank() != x.rank()) {
    throw ValidationError("transform rank does not match basis rank");
  }
  const Substitution inverse = t.inverse_images();
  const Substitution old_to_original = x.over_original_substitution();

  std::vector<std::string> names;
  names.reserve(x.rank());
  std::vector<Word> over_original;
  over_original.reserve(x.rank());
  for (GeneratorId g = 0; g < x.rank(); ++g) {
    const Word im = t.image(g);
    names.push_back(im == Word::single(Letter::positive(g)) ? x.name(g) : x.name(g) + "'");
    over_original.push_back(old_to_original.apply(im));
  }

  std::vector<Word> original_images;
  original_images.reserve(x.rank());
  for (GeneratorId g = 0; g < x.rank(); ++g) {
    original_images.push_back(inverse.apply(x.original_over_current().image(g)));
  }

  std::vector<Relator> rewritten;
  rewritten.reserve(rs.size());
  for (const Relator& r : rs) {
    rewritten.push_back(substitute(r, inverse));
  }

  return TransformApplication{
      BasisState(std::move(names), x.original_names(), std::move(over_original),
                 Substitution(std::move(original_images))),
      std::move(rewritten)};
}

}  // namespace whitehead
