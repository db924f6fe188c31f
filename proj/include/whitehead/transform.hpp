#ifndef WHITEHEAD_TRANSFORM_HPP_
#define WHITEHEAD_TRANSFORM_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "whitehead/basis.hpp"
#include "whitehead/word.hpp"

namespace whitehead {

/// A Whitehead transform: a multiplier letter y together with a map gamma
/// from letters to {identity, y}, constrained by gamma(y) = gamma(y^-1).
/// The induced basis images are x' = gamma(x)^-1 * x * gamma(x^-1), which
/// fix y itself. The value of gamma on {y, y^-1} never changes the images,
/// so it is normalized to the identity.
class WhiteheadTransform {
 public:
  /// gamma is indexed by letter code (size 2*rank); true means "multiply".
  WhiteheadTransform(std::size_t rank, Letter multiplier, std::vector<bool> gamma);

  static WhiteheadTransform identity(std::size_t rank);

  std::size_t rank() const { return gamma_.size() / 2; }
  Letter multiplier() const { return multiplier_; }
  bool gamma(Letter x) const { return gamma_[x.code()]; }

  /// The image x' of the positive letter of g, as a word over the source
  /// basis. Length 1, 2, or 3.
  Word image(GeneratorId g) const;

  /// x -> x' over the source basis; this is the transform acting as an
  /// automorphism on words.
  Substitution forward_images() const;

  /// x -> gamma(x) * x' * gamma(x^-1)^-1 read over the target basis (the
  /// letter at index g stands for the new generator g'). Rewrites old-basis
  /// words over the new basis.
  Substitution inverse_images() const;

  bool is_identity() const;

  friend bool operator==(const WhiteheadTransform&, const WhiteheadTransform&) = default;

 private:
  Letter multiplier_;
  std::vector<bool> gamma_;
};

/// All (y, gamma) pairs for the given rank, gamma free on the 2(rank-1)
/// letters outside {y, y^-1}: 2*rank*4^(rank-1) transforms, each exactly
/// once. Multipliers ascend in letter order; gammas in mask order.
std::vector<WhiteheadTransform> enumerate_transforms(std::size_t rank);

struct TransformApplication {
  BasisState basis;
  std::vector<Relator> relators;
};

/// Rewrites the basis audit trail and the relators over the transformed
/// basis. Generators whose image changed get a prime appended to their
/// name. Group elements are unchanged: reading any rewritten relator back
/// through over_original gives the original relator.
TransformApplication apply_transform(const BasisState& x, const WhiteheadTransform& t,
                                     std::span<const Relator> rs);

}  // namespace whitehead

#endif  // WHITEHEAD_TRANSFORM_HPP_
