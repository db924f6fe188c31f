#include "whitehead/io.hpp"

#include <cctype>

#include "whitehead/basis.hpp"

namespace whitehead {

std::string letter_str(Letter l, std::span<const std::string> names) {
  std::string s = l.gen() < names.size() ? names[l.gen()] : default_generator_name(l.gen());
  if (!l.is_positive() && !s.empty()) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

std::string word_str(const Word& w, std::span<const std::string> names) {
  std::string s;
  for (const Letter l : w.letters()) s += letter_str(l, names);
  return s;
}

std::string cyclic_str(const CyclicWord& c, std::span<const std::string> names) {
  std::string s = "[";
  for (const Letter l : c.letters()) s += letter_str(l, names);
  s += "]";
  return s;
}

std::string relator_str(const Relator& r, std::span<const std::string> names) {
  return r.is_element() ? word_str(r.element_word(), names) : cyclic_str(r.class_word(), names);
}

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;
  GeneratorId max_gen = 0;
  bool saw_gen = false;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  // One letter: a-z, A-Z, or xN / XN. Returns nothing at a non-letter.
  std::optional<Letter> letter() {
    if (done()) return std::nullopt;
    const char c = peek();
    const bool lower = std::islower(static_cast<unsigned char>(c));
    const bool upper = std::isupper(static_cast<unsigned char>(c));
    if (!lower && !upper) return std::nullopt;
    ++pos;
    GeneratorId gen;
    if ((c == 'x' || c == 'X') && !done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t value = 0;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + static_cast<std::size_t>(peek() - '0');
        if (value > 1'000'000) throw ValidationError("generator index out of range");
        ++pos;
      }
      gen = static_cast<GeneratorId>(value);
    } else {
      gen = static_cast<GeneratorId>(std::tolower(static_cast<unsigned char>(c)) - 'a');
    }
    saw_gen = true;
    if (gen > max_gen) max_gen = gen;
    return Letter(gen, lower);
  }
};

}  // namespace

ParsedInput parse_input(std::string_view text, std::optional<std::size_t> rank_override) {
  Scanner sc{text};
  std::vector<Relator> relators;
  std::vector<Letter> current;  // element letters accumulated outside brackets
  auto flush_element = [&] {
    if (current.empty()) return;
    Word w(std::move(current));
    current = {};
    if (w.empty()) throw ValidationError("trivial element relator");
    relators.push_back(Relator::element(std::move(w)));
  };

  while (!sc.done()) {
    const char c = sc.peek();
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush_element();
      ++sc.pos;
    } else if (c == '[') {
      flush_element();
      ++sc.pos;
      std::vector<Letter> cls;
      bool closed = false;
      while (!sc.done()) {
        if (sc.peek() == ']') {
          ++sc.pos;
          closed = true;
          break;
        }
        if (std::isspace(static_cast<unsigned char>(sc.peek()))) {
          ++sc.pos;
          continue;
        }
        if (sc.peek() == '[') throw ValidationError("nested '[' in conjugacy class");
        auto l = sc.letter();
        if (!l) throw ValidationError(std::string("unknown character '") + sc.peek() + "'");
        cls.push_back(*l);
      }
      if (!closed) throw ValidationError("unbalanced '[': missing ']'");
      CyclicReduction cr = cyclically_reduce(Word(std::move(cls)));
      if (!cr.core) throw ValidationError("trivial conjugacy class relator");
      relators.push_back(Relator::conj_class(*std::move(cr.core)));
    } else if (c == ']') {
      throw ValidationError("unbalanced ']'");
    } else {
      auto l = sc.letter();
      if (!l) throw ValidationError(std::string("unknown character '") + c + "'");
      current.push_back(*l);
    }
  }
  flush_element();

  std::size_t rank = sc.saw_gen ? static_cast<std::size_t>(sc.max_gen) + 1 : 0;
  if (rank_override) {
    if (*rank_override < rank) {
      throw ValidationError("rank override is smaller than a mentioned generator");
    }
    rank = *rank_override;
  }
  if (rank == 0) {
    throw ValidationError("cannot infer a rank from an empty input; pass --rank");
  }
  return ParsedInput{rank, std::move(relators)};
}

}  // namespace whitehead
