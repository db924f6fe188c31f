#ifndef WHITEHEAD_IO_HPP_
#define WHITEHEAD_IO_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "whitehead/word.hpp"

namespace whitehead {

/// Grammar: a lowercase letter is a generator and the matching uppercase
/// letter is its inverse; `xN` / `XN` (N decimal) address generators by
/// index; `[ ... ]` wraps a conjugacy class; whitespace separates relators
/// and is ignored inside brackets.

std::string letter_str(Letter l, std::span<const std::string> names);
std::string word_str(const Word& w, std::span<const std::string> names);
std::string cyclic_str(const CyclicWord& c, std::span<const std::string> names);
/// Elements print bare, classes in brackets.
std::string relator_str(const Relator& r, std::span<const std::string> names);

struct ParsedInput {
  std::size_t rank = 0;
  std::vector<Relator> relators;
};

/// Parses a whitespace-separated relator list over the standard basis.
/// Rank is the largest mentioned generator plus one unless overridden.
/// Throws ValidationError on unbalanced brackets, unknown characters,
/// trivial relators, an override below a mentioned generator, or an input
/// that determines no rank at all.
ParsedInput parse_input(std::string_view text, std::optional<std::size_t> rank_override = {});

}  // namespace whitehead

#endif  // WHITEHEAD_IO_HPP_
