#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "whitehead/partition.hpp"
#include "whitehead/transform.hpp"

namespace whtest {

bool is_cutvertex_by_bipartition(const WhiteheadGraph& g, Vertex v) {
  std::vector<Vertex> others;
  for (const Vertex u : g.vertices()) {
    if (u != v) others.push_back(u);
  }
  const std::size_t k = others.size();
  if (k < 2) return false;
  std::map<Vertex, int> side;
  // others[0] pinned to side 1; the mask places the rest.
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << (k - 1)); ++mask) {
    side.clear();
    side[others[0]] = 1;
    for (std::size_t i = 1; i < k; ++i) {
      side[others[i]] = (mask & (std::size_t{1} << (i - 1))) ? 1 : 2;
    }
    bool some_in_2 = false;
    for (std::size_t i = 1; i < k; ++i) {
      if (side[others[i]] == 2) some_in_2 = true;
    }
    if (!some_in_2) continue;
    bool crossing = false;
    for (const Turn& t : g.edges()) {
      if (t.touches(v)) continue;
      if (side[t.a] != side[t.b]) {
        crossing = true;
        break;
      }
    }
    if (!crossing) return true;
  }
  return false;
}

std::vector<Vertex> bipartition_cutvertices(const WhiteheadGraph& g) {
  std::vector<Vertex> out;
  for (const Vertex v : g.vertices()) {
    if (is_cutvertex_by_bipartition(g, v)) out.push_back(v);
  }
  return out;
}

namespace {

void extend_partition(std::size_t rank, GeneratorId next,
                      std::vector<std::vector<GeneratorId>>& current,
                      std::vector<std::vector<std::vector<GeneratorId>>>& out) {
  if (next == rank) {
    auto sorted = current;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  for (std::size_t b = 0; b < current.size(); ++b) {
    current[b].push_back(next);
    extend_partition(rank, next + 1, current, out);
    current[b].pop_back();
  }
  current.push_back({next});
  extend_partition(rank, next + 1, current, out);
  current.pop_back();
}

}  // namespace

std::vector<std::vector<std::vector<GeneratorId>>> all_partitions(std::size_t rank) {
  std::vector<std::vector<std::vector<GeneratorId>>> out;
  std::vector<std::vector<GeneratorId>> current;
  extend_partition(rank, 0, current, out);
  return out;
}

namespace {

std::string state_key(const std::vector<Relator>& rs) {
  std::vector<std::string> parts;
  parts.reserve(rs.size());
  for (const Relator& r : rs) {
    std::string p = r.is_element() ? "e" : "c";
    const auto& ls = r.is_element() ? r.element_word().letters() : r.class_word().letters();
    for (const Letter l : ls) {
      p += std::to_string(l.code());
      p += ',';
    }
    parts.push_back(std::move(p));
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) {
    key += p;
    key += ';';
  }
  return key;
}

std::size_t block_count_of(std::size_t rank, const std::vector<Relator>& rs) {
  std::vector<std::vector<GeneratorId>> supports;
  supports.reserve(rs.size());
  for (const Relator& r : rs) supports.push_back(r.support());
  return finest_partition(rank, supports).block_count();
}

}  // namespace

DescentSearch exhaustive_descent(std::size_t rank, const std::vector<Relator>& rs,
                                 std::size_t depth) {
  const std::vector<WhiteheadTransform> transforms = enumerate_transforms(rank);
  DescentSearch result;
  result.min_length = total_length(rs);
  result.factor_counts_at_min = {block_count_of(rank, rs)};

  std::set<std::string> seen{state_key(rs)};
  std::vector<std::vector<Relator>> frontier{rs};
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<std::vector<Relator>> next;
    for (const std::vector<Relator>& state : frontier) {
      for (const WhiteheadTransform& t : transforms) {
        if (t.is_identity()) continue;
        const Substitution inverse = t.inverse_images();
        std::vector<Relator> image;
        image.reserve(state.size());
        for (const Relator& r : state) image.push_back(substitute(r, inverse));
        std::string key = state_key(image);
        if (!seen.insert(std::move(key)).second) continue;
        const std::size_t len = total_length(image);
        if (len < result.min_length) {
          result.min_length = len;
          result.factor_counts_at_min = {block_count_of(rank, image)};
        } else if (len == result.min_length) {
          result.factor_counts_at_min.insert(block_count_of(rank, image));
        }
        next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return result;
}

namespace {

Word letter_image(const WhiteheadTransform& t, Letter l) {
  const Word im = t.image(l.gen());
  return l.is_positive() ? im : im.inverse();
}

}  // namespace

Relator rewrite_by_cases(const Relator& r, const DescentPlan& plan,
                         const WhiteheadTransform& t) {
  const std::vector<Letter>& ls =
      r.is_element() ? r.element_word().letters() : r.class_word().letters();
  const std::size_t len = ls.size();
  const bool cyclic = !r.is_element();
  const Vertex iy = Vertex::initial(plan.y);

  // Turn endpoints at position i (between letter i and letter i+1), with
  // the identity padding for elements and cyclic padding for classes.
  auto turn_from = [&](std::size_t i) {
    if (i == 0) return cyclic ? Vertex::terminal(ls[len - 1]) : Vertex::one();
    return Vertex::terminal(ls[i - 1]);
  };
  auto turn_to = [&](std::size_t i) {
    if (i == len) return cyclic ? Vertex::initial(ls[0]) : Vertex::one();
    return Vertex::initial(ls[i]);
  };
  auto chi = [&plan](Vertex v) { return plan.chi_of(v); };
  auto split = [&](std::size_t i) { return chi(turn_from(i)) != chi(turn_to(i)); };
  // n_i: chi of the turn's endpoints once iota y is removed.
  auto n = [&](std::size_t i) {
    const Vertex a = turn_from(i), b = turn_to(i);
    if (a == iy) return chi(b);
    if (b == iy) return chi(a);
    if (chi(a) != chi(b)) throw InternalError("split turn away from iota y");
    return chi(a);
  };

  if (cyclic && n(0) != n(len)) throw InternalError("cyclic boundary exponents differ");

  std::vector<Letter> emitted;
  std::vector<Letter> y_word{plan.y};
  for (std::size_t j = 1; j <= len; ++j) {
    const Letter x = ls[j - 1];
    const bool drop_incoming = split(j - 1) && x == plan.y;            // iota x_j = iota y
    const bool drop_outgoing = split(j) && x == plan.y.inverse();      // tau x_j = iota y
    // The factor y^-n(j-1) * x * y^n(j) over the source basis must match
    // the case analysis: trivial when dropped, the image of x otherwise.
    const int e0 = -n(j - 1);
    const int e1 = n(j);
    std::vector<Letter> flat;
    for (int k = 0; k < std::abs(e0); ++k) flat.push_back(e0 > 0 ? plan.y : plan.y.inverse());
    flat.push_back(x);
    for (int k = 0; k < std::abs(e1); ++k) flat.push_back(e1 > 0 ? plan.y : plan.y.inverse());
    const Word value(std::move(flat));
    if (drop_incoming || drop_outgoing) {
      if (!value.empty()) throw InternalError("dropped factor is not trivial");
      continue;
    }
    if (value != letter_image(t, x)) {
      throw InternalError("kept factor does not equal the image letter");
    }
    emitted.push_back(x);  // the image letter x' has x's code over the new basis
  }

  if (!cyclic) {
    Word w{std::vector<Letter>(emitted)};
    if (w.empty()) throw InternalError("element rewrote to the identity");
    return Relator::element(std::move(w));
  }
  const CyclicReduction cr = cyclically_reduce(Word(std::move(emitted)));
  if (!cr.core) throw InternalError("class rewrote to the identity");
  return Relator::conj_class(*cr.core);
}

Letter random_letter(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(2 * rank - 1));
  return Letter::from_code(pick(rng));
}

Word random_reduced_word(std::mt19937_64& rng, std::size_t rank, std::size_t length) {
  std::vector<Letter> out;
  out.reserve(length);
  while (out.size() < length) {
    const Letter l = random_letter(rng, rank);
    if (!out.empty() && l == out.back().inverse()) continue;
    out.push_back(l);
  }
  Word w(std::move(out));
  return w;
}

CyclicWord random_cyclic_word(std::mt19937_64& rng, std::size_t rank, std::size_t length) {
  for (;;) {
    std::vector<Letter> out;
    out.reserve(length);
    while (out.size() < length) {
      const Letter l = random_letter(rng, rank);
      if (!out.empty() && l == out.back().inverse()) continue;
      if (out.size() + 1 == length && l == out.front().inverse() && length > 1) continue;
      out.push_back(l);
    }
    if (length > 1 && out.back() == out.front().inverse()) continue;
    return CyclicWord(std::move(out));
  }
}

WhiteheadTransform random_transform(std::mt19937_64& rng, std::size_t rank) {
  const Letter y = random_letter(rng, rank);
  std::vector<bool> gamma(2 * rank, false);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::uint32_t c = 0; c < 2 * rank; ++c) {
    if (c == y.code() || c == y.inverse().code()) continue;
    gamma[c] = coin(rng) == 1;
  }
  return WhiteheadTransform(rank, y, std::move(gamma));
}

RandomInput random_relators(std::mt19937_64& rng, const RandomRelatorParams& params) {
  std::uniform_int_distribution<std::size_t> rank_pick(1, params.max_rank);
  const std::size_t rank = rank_pick(rng);
  std::uniform_int_distribution<std::size_t> count_pick(1, params.max_count);
  const std::size_t count = count_pick(rng);
  std::uniform_int_distribution<std::size_t> total_pick(count, params.max_total_length);
  std::size_t budget = total_pick(rng);

  std::vector<std::size_t> lengths(count, 1);
  budget -= count;
  std::uniform_int_distribution<std::size_t> which(0, count - 1);
  while (budget > 0) {
    lengths[which(rng)] += 1;
    --budget;
  }

  std::uniform_int_distribution<int> coin(0, 1);
  RandomInput input;
  input.rank = rank;
  for (const std::size_t len : lengths) {
    if (coin(rng) == 0) {
      input.relators.push_back(Relator::element(random_reduced_word(rng, rank, len)));
    } else {
      input.relators.push_back(Relator::conj_class(random_cyclic_word(rng, rank, len)));
    }
  }
  return input;
}

}  // namespace whtest
