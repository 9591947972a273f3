#include "qs3/rewrite.hpp"

#include <optional>
#include <random>
#include <stdexcept>

namespace qs3 {

std::vector<int> redex_positions(const AlgebraPresentation& pres, const Word& w) {
  std::vector<int> out;
  for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
    if (pres.rewrite_pair(w[i], w[i + 1]).has_value()) out.push_back(i);
  return out;
}

// Reads a terminal (redex-free) word off into a basis monomial.  Returns
// nullopt when the side conditions make the monomial zero (x_alpha P_k with
// alpha <= -k), which is the normal-form value of such words.
static std::optional<Monomial> parse_terminal(const AlgebraPresentation& pres, const Word& w) {
  Monomial m;
  size_t i = 0;
  for (int slot : pres.block_order()) {
    if (slot >= pres.num_gens()) continue;
    if (pres.mode(slot) == GenMode::IsometryPlain) {
      int j = 0, l = 0;
      while (i < w.size() && !w[i].proj && w[i].slot == slot && !w[i].star) ++i, ++j;
      while (i < w.size() && !w[i].proj && w[i].slot == slot && w[i].star) ++i, ++l;
      m.alpha = j;
      m.alpha_star = l;
    } else {
      int up = 0, down = 0;
      while (i < w.size() && !w[i].proj && w[i].slot == slot && !w[i].star) ++i, ++up;
      while (i < w.size() && !w[i].proj && w[i].slot == slot && w[i].star) ++i, ++down;
      if (up != 0 && down != 0)
        throw std::logic_error("mixed generator block in terminal word");
      (slot == 0 ? m.alpha : m.beta) = up - down;
    }
  }
  if (i < w.size() && w[i].proj) {
    int slot = w[i].slot;
    m.proj = slot == 0 ? Proj::First : Proj::Second;
    if (pres.mode(slot) == GenMode::Disc) {
      int count = 0;
      while (i < w.size() && w[i].proj && w[i].slot == slot) ++i, ++count;
      m.k = count;
    } else {
      m.k = w[i].k;
      ++i;
    }
  }
  if (i != w.size()) throw std::logic_error("unparsed letters in terminal word");
  if (!monomial_valid(pres, m)) return std::nullopt;
  return m;
}

namespace {

struct Pending {
  cplx coeff;
  Word word;
};

// apply the rewrite at position pos, pushing the resulting words
void expand(std::vector<Pending>& stack, const Pending& item, int pos, const PairRewrite& rw) {
  for (int t = 0; t < rw.count; ++t) {
    const auto& term = rw.terms[t];
    Pending next;
    next.coeff = item.coeff * term.coeff;
    next.word.reserve(item.word.size() - 2 + term.len);
    next.word.insert(next.word.end(), item.word.begin(), item.word.begin() + pos);
    for (int j = 0; j < term.len; ++j) next.word.push_back(term.letters[j]);
    next.word.insert(next.word.end(), item.word.begin() + pos + 2, item.word.end());
    stack.push_back(std::move(next));
  }
}

NCElement normalize(const AlgebraPresentation& pres, Word start, std::mt19937_64* rng) {
  NCElement out(pres);
  std::vector<Pending> stack;
  stack.push_back(Pending{1.0, std::move(start)});
  while (!stack.empty()) {
    size_t pick = stack.size() - 1;
    if (rng) pick = (*rng)() % stack.size();
    Pending item = std::move(stack[pick]);
    stack.erase(stack.begin() + pick);

    std::optional<int> redex;
    if (rng) {
      std::vector<int> rs = redex_positions(pres, item.word);
      if (!rs.empty()) redex = rs[(*rng)() % rs.size()];
    } else {
      for (int i = 0; i + 1 < static_cast<int>(item.word.size()); ++i)
        if (pres.rewrite_pair(item.word[i], item.word[i + 1]).has_value()) {
          redex = i;
          break;
        }
    }

    if (!redex) {
      if (auto m = parse_terminal(pres, item.word)) out.add_term(*m, item.coeff);
      continue;
    }
    PairRewrite rw = *pres.rewrite_pair(item.word[*redex], item.word[*redex + 1]);
    expand(stack, item, *redex, rw);
  }
  out.prune();
  return out;
}

}  // namespace

NCElement normal_form(const Word& w, const AlgebraPresentation& pres) {
  return normalize(pres, w, nullptr);
}

NCElement normal_form_randomized(const Word& w, const AlgebraPresentation& pres,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return normalize(pres, w, &rng);
}

}  // namespace qs3
