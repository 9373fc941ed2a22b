#ifndef PGK_WORD_HPP
#define PGK_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pgk {

// Atoms are indices into PresentationSpec::atoms(); file order is canonical
// and used for all deterministic tie-breaking.
using AtomId = int;

// A positive word over the atoms.
using Word = std::vector<AtomId>;

// One letter of a signed word: an atom or its formal inverse.
struct SignedLetter {
  AtomId atom = 0;
  bool inverse = false;

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

using SignedWord = std::vector<SignedLetter>;

// One letter of a word over simple elements: the simple is identified by its
// canonical atom word.  Atoms embed as one-letter simples.
struct SimpleLetter {
  Word simple;
  bool inverse = false;

  friend bool operator==(const SimpleLetter&, const SimpleLetter&) = default;
  friend auto operator<=>(const SimpleLetter&, const SimpleLetter&) = default;
};

using SimpleWord = std::vector<SimpleLetter>;

inline SignedWord to_signed(const Word& w) {
  SignedWord out;
  out.reserve(w.size());
  for (AtomId a : w) out.push_back({a, false});
  return out;
}

inline SignedWord inverse_of(const SignedWord& w) {
  SignedWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->atom, !it->inverse});
  return out;
}

inline SignedWord concat(SignedWord a, const SignedWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline SimpleWord inverse_of(const SimpleWord& w) {
  SimpleWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->simple, !it->inverse});
  return out;
}

inline SimpleWord concat(SimpleWord a, const SimpleWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// True iff no letter is inverted.
inline bool is_positive(const SignedWord& w) {
  for (const auto& l : w)
    if (l.inverse) return false;
  return true;
}

inline bool is_positive(const SimpleWord& w) {
  for (const auto& l : w)
    if (l.inverse) return false;
  return true;
}

// Expands a simple word to the signed atom word it spells (the a* map).
inline SignedWord expand(const SimpleWord& w) {
  SignedWord out;
  for (const auto& l : w) {
    if (!l.inverse) {
      for (AtomId a : l.simple) out.push_back({a, false});
    } else {
      for (auto it = l.simple.rbegin(); it != l.simple.rend(); ++it)
        out.push_back({*it, true});
    }
  }
  return out;
}

// Length-lexicographic order with atom file order breaking ties.
inline bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace pgk

#endif  // PGK_WORD_HPP
