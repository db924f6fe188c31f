#include "whitehead/word.hpp"

#include <algorithm>
#include <set>

namespace whitehead {

void Word::reduce_in_place() {
  std::size_t top = 0;  // letters_[0..top) is the reduced prefix
  for (const Letter l : letters_) {
    if (top > 0 && letters_[top - 1] == l.inverse()) {
      --top;
    } else {
      letters_[top++] = l;
    }
  }
  letters_.erase(letters_.begin() + static_cast<std::ptrdiff_t>(top), letters_.end());
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  Word w;
  w.letters_ = std::move(out);  // inverse of reduced is reduced
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> cat;
  cat.reserve(size() + rhs.size());
  cat.insert(cat.end(), letters_.begin(), letters_.end());
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(cat));
}

namespace {

bool is_cyclically_reduced(const std::vector<Letter>& v) {
  if (v.empty()) return true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] == v[i - 1].inverse()) return false;
  }
  return v.back() != v.front().inverse() || v.size() == 1;
}

// Booth's least-rotation algorithm on letter codes.
std::size_t least_rotation(const std::vector<Letter>& v) {
  const std::size_t n = v.size();
  if (n <= 1) return 0;
  auto at = [&](std::size_t i) { return v[i % n].code(); };
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && at(j) != at(k + i + 1)) {
      if (at(j) < at(k + i + 1)) k = j - i - 1;
      i = fail[i];
    }
    if (i == -1 && at(j) != at(k)) {
      if (at(j) < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k;
}

}  // namespace

CyclicWord::CyclicWord(std::vector<Letter> cyc) {
  if (cyc.empty()) {
    throw ValidationError("cyclic word must be nonempty");
  }
  if (!is_cyclically_reduced(cyc)) {
    throw ValidationError("sequence is not cyclically reduced");
  }
  const std::size_t r = least_rotation(cyc);
  letters_.reserve(cyc.size());
  letters_.insert(letters_.end(), cyc.begin() + static_cast<std::ptrdiff_t>(r), cyc.end());
  letters_.insert(letters_.end(), cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(r));
}

CyclicReduction cyclically_reduce(const Word& w) {
  std::vector<Letter> core(w.letters());
  std::vector<Letter> conj;
  std::size_t lo = 0, hi = core.size();
  while (hi - lo >= 2 && core[lo] == core[hi - 1].inverse()) {
    conj.push_back(core[lo]);
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.conjugator = Word(std::move(conj));
  if (lo < hi) {
    out.core = CyclicWord(std::vector<Letter>(core.begin() + static_cast<std::ptrdiff_t>(lo),
                                              core.begin() + static_cast<std::ptrdiff_t>(hi)));
  }
  return out;
}

Relator Relator::element(Word w) {
  if (w.empty()) {
    throw ValidationError("trivial element is not a valid relator");
  }
  return Relator(std::variant<Word, CyclicWord>(std::move(w)));
}

Relator Relator::conj_class(CyclicWord c) {
  return Relator(std::variant<Word, CyclicWord>(std::move(c)));
}

Relator Relator::conj_class_of(const Word& w) {
  CyclicReduction r = cyclically_reduce(w);
  if (!r.core) {
    throw ValidationError("trivial conjugacy class is not a valid relator");
  }
  return conj_class(*std::move(r.core));
}

std::size_t Relator::length() const {
  return is_element() ? element_word().size() : class_word().size();
}

std::vector<GeneratorId> Relator::support() const {
  std::set<GeneratorId> s;
  const std::vector<Letter>& ls = is_element() ? element_word().letters() : class_word().letters();
  for (const Letter l : ls) s.insert(l.gen());
  return {s.begin(), s.end()};
}

std::size_t total_length(std::span<const Relator> rs) {
  std::size_t n = 0;
  for (const Relator& r : rs) n += r.length();
  return n;
}

Substitution Substitution::identity(std::size_t rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (GeneratorId g = 0; g < rank; ++g) {
    images.push_back(Word::single(Letter::positive(g)));
  }
  return Substitution(std::move(images));
}

const Word& Substitution::image(GeneratorId g) const {
  if (g >= images_.size()) {
    throw ValidationError("generator outside substitution domain: basis mismatch");
  }
  return images_[g];
}

Word Substitution::apply(const Word& w) const {
  std::vector<Letter> cat;
  for (const Letter l : w.letters()) {
    const Word& im = image(l.gen());
    if (l.is_positive()) {
      cat.insert(cat.end(), im.letters().begin(), im.letters().end());
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) {
        cat.push_back(it->inverse());
      }
    }
  }
  return Word(std::move(cat));
}

Relator substitute(const Relator& r, const Substitution& s) {
  if (r.is_element()) {
    Word w = s.apply(r.element_word());
    if (w.empty()) {
      throw ValidationError("substitution produced a trivial element");
    }
    return Relator::element(std::move(w));
  }
  Word flat = s.apply(Word(r.class_word().letters()));
  CyclicReduction cr = cyclically_reduce(flat);
  if (!cr.core) {
    throw ValidationError("substitution produced a trivial conjugacy class");
  }
  return Relator::conj_class(*std::move(cr.core));
}

}  // namespace whitehead
