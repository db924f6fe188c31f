#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "whitehead/io.hpp"
#include "whitehead/transform.hpp"

using namespace whitehead;

namespace {

const Letter a = Letter::positive(0);
const Letter A = Letter::negative(0);
const Letter b = Letter::positive(1);
const Letter B = Letter::negative(1);

Relator parse_relator(const std::string& s, std::size_t rank) {
  const ParsedInput in = parse_input(s, rank);
  REQUIRE(in.relators.size() == 1);
  return in.relators[0];
}

// Image tuple of a transform, for duplicate-freeness comparisons.
std::vector<std::vector<std::uint32_t>> image_tuple(const WhiteheadTransform& t) {
  std::vector<std::vector<std::uint32_t>> out;
  for (GeneratorId g = 0; g < t.rank(); ++g) {
    std::vector<std::uint32_t> codes;
    for (const Letter l : t.image(g).letters()) codes.push_back(l.code());
    out.push_back(std::move(codes));
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration is complete and duplicate-free") {
  // 2 * rank * 4^(rank-1) pairs (y, gamma), gamma free off {y, y^-1}.
  CHECK(enumerate_transforms(1).size() == 2);
  CHECK(enumerate_transforms(2).size() == 16);
  CHECK(enumerate_transforms(3).size() == 96);

  for (std::size_t rank = 1; rank <= 3; ++rank) {
    const auto transforms = enumerate_transforms(rank);
    // No (y, gamma) pair repeats.
    std::set<std::pair<std::uint32_t, std::vector<bool>>> seen;
    for (const auto& t : transforms) {
      std::vector<bool> gamma;
      for (std::uint32_t c = 0; c < 2 * rank; ++c) gamma.push_back(t.gamma(Letter::from_code(c)));
      CHECK(seen.insert({t.multiplier().code(), gamma}).second);
    }
    // The multiset of image tuples matches a direct brute-force enumeration
    // of (y, gamma) pairs.
    std::multiset<std::vector<std::vector<std::uint32_t>>> produced;
    for (const auto& t : transforms) produced.insert(image_tuple(t));
    std::multiset<std::vector<std::vector<std::uint32_t>>> brute;
    for (std::uint32_t ycode = 0; ycode < 2 * rank; ++ycode) {
      const Letter y = Letter::from_code(ycode);
      std::vector<std::uint32_t> others;
      for (std::uint32_t c = 0; c < 2 * rank; ++c) {
        if (c != ycode && c != (ycode ^ 1u)) others.push_back(c);
      }
      for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
        std::vector<std::vector<std::uint32_t>> images;
        for (GeneratorId g = 0; g < rank; ++g) {
          auto gamma_of = [&](Letter l) {
            for (std::size_t i = 0; i < others.size(); ++i) {
              if (others[i] == l.code()) return (mask >> i) & 1u;
            }
            return std::size_t{0};
          };
          std::vector<Letter> im;
          if (gamma_of(Letter::positive(g))) im.push_back(y.inverse());
          im.push_back(Letter::positive(g));
          if (gamma_of(Letter::negative(g))) im.push_back(y);
          std::vector<std::uint32_t> codes;
          for (const Letter l : Word(std::move(im)).letters()) codes.push_back(l.code());
          images.push_back(std::move(codes));
        }
        brute.insert(std::move(images));
      }
    }
    CHECK(produced == brute);
  }

  // Rank 1: both transforms per multiplier collapse to identity images.
  for (const auto& t : enumerate_transforms(1)) {
    CHECK(t.image(0) == Word::single(a));
  }
}

TEST_CASE("transform images") {
  // y = a, gamma(b^-1) = a: b' = ba, a' = a.
  std::vector<bool> gamma(4, false);
  gamma[B.code()] = true;
  const WhiteheadTransform t(2, a, gamma);
  CHECK(t.image(1) == reduce({b, a}));
  CHECK(t.image(0) == Word::single(a));
  CHECK_FALSE(t.is_identity());
  CHECK(WhiteheadTransform::identity(2).is_identity());

  // The multiplier's own gamma never matters: it is normalized away.
  std::vector<bool> noisy(4, false);
  noisy[a.code()] = true;
  noisy[A.code()] = true;
  CHECK(WhiteheadTransform(2, a, noisy) == WhiteheadTransform::identity(2));
}

TEST_CASE("applying a transform rewrites basis and relators") {
  const BasisState x = BasisState::standard(2);

  SUBCASE("identity changes nothing") {
    const std::vector<Relator> rs{parse_relator("[abab]", 2)};
    const TransformApplication applied = apply_transform(x, WhiteheadTransform::identity(2), rs);
    CHECK(applied.relators == rs);
    CHECK(applied.basis.names() == x.names());
    CHECK(applied.basis.over_original(1) == Word::single(b));
  }

  SUBCASE("the worked descent step on [abab]") {
    std::vector<bool> gamma(4, false);
    gamma[B.code()] = true;
    const WhiteheadTransform t(2, a, gamma);
    const std::vector<Relator> rs{parse_relator("[abab]", 2)};
    const TransformApplication applied = apply_transform(x, t, rs);
    CHECK(applied.basis.name(0) == "a");
    CHECK(applied.basis.name(1) == "b'");
    CHECK(applied.basis.over_original(1) == reduce({b, a}));
    REQUIRE(applied.relators.size() == 1);
    CHECK_FALSE(applied.relators[0].is_element());
    CHECK(applied.relators[0].class_word() == CyclicWord({b, b}));
    CHECK(total_length(applied.relators) == 2);
    CHECK(applied.basis.inverse_pair_ok());
  }

  SUBCASE("conjugating transform takes aba^-1 to a single letter") {
    // b' = a b a^-1 arises from y = a^-1 with gamma(b) = a^-1, gamma(b^-1) = a^-1.
    std::vector<bool> gamma(4, false);
    gamma[b.code()] = true;
    gamma[B.code()] = true;
    const WhiteheadTransform t(2, A, gamma);
    CHECK(t.image(1) == reduce({a, b, A}));
    const std::vector<Relator> rs{parse_relator("abA", 2)};
    const TransformApplication applied = apply_transform(x, t, rs);
    REQUIRE(applied.relators.size() == 1);
    CHECK(applied.relators[0].element_word() == Word::single(b));
    CHECK(applied.basis.over_original(1) == reduce({a, b, A}));
  }
}

TEST_CASE("group elements are preserved by random transform chains") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rank = 1 + rng() % 3;
    BasisState basis = BasisState::standard(rank);
    const whtest::RandomInput input =
        whtest::random_relators(rng, whtest::RandomRelatorParams{rank, 3, 18});
    std::vector<Relator> rs = input.relators;
    // random_relators picks its own rank <= rank; rebuild over our basis.
    bool in_range = true;
    for (const Relator& r : rs) {
      for (const GeneratorId g : r.support()) in_range = in_range && g < rank;
    }
    if (!in_range) continue;

    const std::vector<Relator> original = rs;
    for (int k = 0; k < 4; ++k) {
      const WhiteheadTransform t = whtest::random_transform(rng, rank);
      TransformApplication applied = apply_transform(basis, t, rs);
      basis = std::move(applied.basis);
      rs = std::move(applied.relators);
    }
    const Substitution down = basis.over_original_substitution();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (original[i].is_element()) {
        CHECK(down.apply(rs[i].element_word()) == original[i].element_word());
      } else {
        const Word flat = down.apply(Word(rs[i].class_word().letters()));
        const auto cr = cyclically_reduce(flat);
        REQUIRE(cr.core.has_value());
        CHECK(*cr.core == original[i].class_word());
      }
    }
  }
}
