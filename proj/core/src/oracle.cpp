#include "pgk/oracle.hpp"

#include <algorithm>
#include <deque>

#include "pgk/errors.hpp"

namespace pgk {

namespace {

bool matches_at(const Word& w, std::size_t pos, const Word& pattern) {
  if (pos + pattern.size() > w.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), w.begin() + pos);
}

Word splice(const Word& w, std::size_t pos, std::size_t len,
            const Word& replacement) {
  Word out;
  out.reserve(w.size() - len + replacement.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), w.begin() + pos + len, w.end());
  return out;
}

}  // namespace

std::set<Word> oracle_closure(const Word& w, const PresentationSpec& spec,
                              const ClosureLimits& limits) {
  std::set<Word> seen{w};
  std::deque<const Word*> queue{&*seen.begin()};
  while (!queue.empty()) {
    const Word cur = *queue.front();
    queue.pop_front();
    for (const auto& rel : spec.relations()) {
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir == 0 ? rel.lhs : rel.rhs;
        const Word& to = dir == 0 ? rel.rhs : rel.lhs;
        for (std::size_t pos = 0; pos + from.size() <= cur.size(); ++pos) {
          if (!matches_at(cur, pos, from)) continue;
          Word next = splice(cur, pos, from.size(), to);
          if (limits.word_length_cap != 0 &&
              next.size() > limits.word_length_cap)
            throw ClosureBudgetExceededError(limits.word_length_cap);
          auto [it, fresh] = seen.insert(std::move(next));
          if (fresh) {
            if (seen.size() > limits.node_budget)
              throw ClosureBudgetExceededError(limits.node_budget);
            queue.push_back(&*it);
          }
        }
      }
    }
  }
  return seen;
}

bool oracle_equal(const Word& w1, const Word& w2, const PresentationSpec& spec,
                  const ClosureLimits& limits) {
  if (w1 == w2) return true;
  return oracle_closure(w1, spec, limits).count(w2) != 0;
}

Word closure_min_word(const Word& w, const PresentationSpec& spec,
                      const ClosureLimits& limits) {
  Word best = w;
  for (const Word& c : oracle_closure(w, spec, limits))
    if (length_lex_less(c, best)) best = c;
  return best;
}

}  // namespace pgk
