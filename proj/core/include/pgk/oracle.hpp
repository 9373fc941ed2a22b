#ifndef PGK_ORACLE_HPP
#define PGK_ORACLE_HPP

#include <cstddef>
#include <set>

#include "pgk/presentation.hpp"
#include "pgk/word.hpp"

namespace pgk {

struct ClosureLimits {
  std::size_t node_budget = 1'000'000;
  // 0 = uncapped; otherwise any derived word longer than this aborts the
  // saturation with ClosureBudgetExceededError (runaway non-atomic input).
  std::size_t word_length_cap = 0;
};

// All positive words obtainable from w by applying relations (in both
// directions) anywhere, closed under iteration.  Finite for atomic inputs;
// throws ClosureBudgetExceededError when the node budget is hit, which fails
// loudly rather than silently passing.
std::set<Word> oracle_closure(const Word& w, const PresentationSpec& spec,
                              const ClosureLimits& limits = {});

// True iff w1 and w2 represent the same monoid element.
bool oracle_equal(const Word& w1, const Word& w2, const PresentationSpec& spec,
                  const ClosureLimits& limits = {});

// Length-lex least word of the closure.  Used as the bootstrap canonical
// form before a Garside structure exists.
Word closure_min_word(const Word& w, const PresentationSpec& spec,
                      const ClosureLimits& limits = {});

}  // namespace pgk

#endif  // PGK_ORACLE_HPP
