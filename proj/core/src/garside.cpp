#include "pgk/garside.hpp"

#include <algorithm>
#include <sstream>

#include "pgk/errors.hpp"

namespace pgk {

namespace {

// Memoizes closure-derived canonical forms during structure construction.
class CanonCache {
 public:
  CanonCache(const PresentationSpec& spec, const ClosureLimits& limits)
      : spec_(spec), limits_(limits) {}

  const Word& canon(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    Word c = closure_min_word(w, spec_, limits_);
    return cache_.emplace(w, std::move(c)).first->second;
  }

  std::set<Word> closure(const Word& w) {
    return oracle_closure(w, spec_, limits_);
  }

 private:
  const PresentationSpec& spec_;
  ClosureLimits limits_;
  std::map<Word, Word> cache_;
};

DivisorSets divisors_impl(const Word& g, CanonCache& cc) {
  DivisorSets out;
  for (const Word& w : cc.closure(g)) {
    for (std::size_t i = 0; i <= w.size(); ++i) {
      out.left.insert(cc.canon(Word(w.begin(), w.begin() + i)));
      out.right.insert(cc.canon(Word(w.begin() + i, w.end())));
      for (std::size_t j = i; j <= w.size(); ++j)
        out.factors.insert(cc.canon(Word(w.begin() + i, w.begin() + j)));
    }
  }
  return out;
}

}  // namespace

DivisorSets divisors(const Word& g, const PresentationSpec& spec,
                     const ClosureLimits& limits) {
  CanonCache cc(spec, limits);
  return divisors_impl(g, cc);
}

SimpleId GarsideStructure::simple_id(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

SimpleId GarsideStructure::atom_simple(AtomId a) const {
  SimpleId s = simple_id(Word{a});
  if (s < 0) throw InternalError("atom is not simple");
  return s;
}

SimpleId GarsideStructure::meet_L(SimpleId s, SimpleId t) const {
  SimpleId best = 0;
  for (SimpleId k = 0; k < static_cast<SimpleId>(simples_.size()); ++k)
    if (left_div_[k][s] && left_div_[k][t] && left_div_[best][k]) best = k;
  return best;
}

SimpleId GarsideStructure::join_L(SimpleId s, SimpleId t) const {
  SimpleId best = delta_;
  for (SimpleId k = 0; k < static_cast<SimpleId>(simples_.size()); ++k)
    if (left_div_[s][k] && left_div_[t][k] && left_div_[k][best]) best = k;
  return best;
}

SimpleId GarsideStructure::meet_R(SimpleId s, SimpleId t) const {
  SimpleId best = 0;
  for (SimpleId k = 0; k < static_cast<SimpleId>(simples_.size()); ++k)
    if (right_div_[k][s] && right_div_[k][t] && right_div_[best][k]) best = k;
  return best;
}

SimpleId GarsideStructure::join_R(SimpleId s, SimpleId t) const {
  SimpleId best = delta_;
  for (SimpleId k = 0; k < static_cast<SimpleId>(simples_.size()); ++k)
    if (right_div_[s][k] && right_div_[t][k] && right_div_[k][best]) best = k;
  return best;
}

SimpleId GarsideStructure::lquot(SimpleId s, SimpleId t) const {
  for (SimpleId u = 0; u < static_cast<SimpleId>(simples_.size()); ++u)
    if (product_[s][u] == t) return u;
  throw InternalError("left quotient of simples does not exist");
}

SimpleId GarsideStructure::rquot(SimpleId s, SimpleId t) const {
  for (SimpleId u = 0; u < static_cast<SimpleId>(simples_.size()); ++u)
    if (product_[u][s] == t) return u;
  throw InternalError("right quotient of simples does not exist");
}

std::vector<SimpleId> GarsideStructure::simples_in(
    const std::vector<AtomId>& subset) const {
  std::set<AtomId> keep(subset.begin(), subset.end());
  std::vector<SimpleId> out;
  for (SimpleId s = 0; s < static_cast<SimpleId>(simples_.size()); ++s) {
    bool inside = std::all_of(simples_[s].begin(), simples_[s].end(),
                              [&](AtomId a) { return keep.count(a) != 0; });
    if (inside) out.push_back(s);
  }
  return out;
}

void GarsideStructure::build_tables(const ClosureLimits& limits) {
  CanonCache cc(spec_, limits);
  const auto n = simples_.size();
  index_.clear();
  for (std::size_t i = 0; i < n; ++i)
    index_.emplace(simples_[i], static_cast<SimpleId>(i));

  left_div_.assign(n, std::vector<bool>(n, false));
  right_div_.assign(n, std::vector<bool>(n, false));
  product_.assign(n, std::vector<SimpleId>(n, -1));
  atom_length_.assign(n, 0);

  for (std::size_t j = 0; j < n; ++j) {
    for (const Word& w : cc.closure(simples_[j])) {
      atom_length_[j] = std::max(atom_length_[j], w.size());
      for (std::size_t i = 0; i <= w.size(); ++i) {
        SimpleId p = simple_id(cc.canon(Word(w.begin(), w.begin() + i)));
        SimpleId s = simple_id(cc.canon(Word(w.begin() + i, w.end())));
        // Prefixes and suffixes of a simple are divisors of delta, hence
        // simple themselves.
        if (p < 0 || s < 0)
          throw InternalError("divisor of a simple is not simple");
        left_div_[p][j] = true;
        right_div_[s][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Word prod = concat(simples_[i], simples_[j]);
      SimpleId p = simple_id(cc.canon(prod));
      product_[i][j] = p;  // -1 when the product leaves the simple set
    }
  }
}

GarsideStructure find_minimal_garside(const PresentationSpec& spec,
                                      const std::vector<AtomId>& leaf_atoms,
                                      std::size_t max_word_length,
                                      const ClosureLimits& limits) {
  std::vector<AtomId> atoms = leaf_atoms;
  std::sort(atoms.begin(), atoms.end());
  PresentationSpec leaf_spec = spec.restrict_to(atoms);
  if (max_word_length == 0)
    max_word_length = 2 * atoms.size() * atoms.size();

  CanonCache cc(leaf_spec, limits);

  // Length-lexicographic enumeration; only closure-minimal words are
  // tested, so the first success is the minimal Garside element.
  Word w;
  auto advance = [&]() -> bool {
    // next word over `atoms` in length-lex order
    std::size_t i = w.size();
    while (i > 0) {
      std::size_t pos =
          std::find(atoms.begin(), atoms.end(), w[i - 1]) - atoms.begin();
      if (pos + 1 < atoms.size()) {
        w[i - 1] = atoms[pos + 1];
        return true;
      }
      w[i - 1] = atoms[0];
      --i;
    }
    if (w.size() >= max_word_length || atoms.empty()) return false;
    w.assign(w.size() + 1, atoms[0]);
    return true;
  };

  while (true) {
    if (w == cc.canon(w)) {
      DivisorSets div = divisors_impl(w, cc);
      bool balanced = div.left == div.right;
      bool generates = true;
      for (AtomId a : atoms)
        if (div.left.count(Word{a}) == 0) {
          generates = false;
          break;
        }
      if (balanced && generates) {
        GarsideStructure gs;
        gs.spec_ = leaf_spec;
        gs.atoms_ = atoms;
        gs.simples_.assign(div.left.begin(), div.left.end());
        std::sort(gs.simples_.begin(), gs.simples_.end(), length_lex_less);
        gs.build_tables(limits);
        gs.delta_ = gs.simple_id(w);
        return gs;
      }
    }
    if (!advance()) break;
  }
  throw SearchExhaustedError(max_word_length);
}

std::string serialize_garside(const GarsideStructure& gs) {
  std::ostringstream out;
  out << "delta: " << gs.spec().spell(gs.delta_word()) << '\n';
  out << "simples: " << gs.simple_count() << '\n';
  for (std::size_t i = 0; i < gs.simple_count(); ++i)
    out << gs.spec().spell(gs.simple_word(static_cast<SimpleId>(i))) << '\n';
  auto table = [&](const char* label, auto&& get) {
    out << label << ":\n";
    for (std::size_t i = 0; i < gs.simple_count(); ++i) {
      for (std::size_t j = 0; j < gs.simple_count(); ++j)
        out << (get(static_cast<SimpleId>(i), static_cast<SimpleId>(j)) ? '1'
                                                                        : '0');
      out << '\n';
    }
  };
  table("left_divides",
        [&](SimpleId i, SimpleId j) { return gs.left_divides(i, j); });
  table("right_divides",
        [&](SimpleId i, SimpleId j) { return gs.right_divides(i, j); });
  return out.str();
}

GarsideStructure parse_garside(const std::string& text,
                               const PresentationSpec& ambient_spec,
                               const ClosureLimits& limits) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&]() -> std::string {
    if (!std::getline(in, line))
      throw ParseError("truncated garside block", 0, 0);
    return line;
  };
  std::string delta_line = next_line();
  if (delta_line.rfind("delta: ", 0) != 0 && delta_line != "delta:")
    throw ParseError("expected 'delta:'", 1, 1);
  Word delta = ambient_spec.parse_word(
      delta_line.size() > 6 ? delta_line.substr(6) : "");

  std::string count_line = next_line();
  if (count_line.rfind("simples: ", 0) != 0)
    throw ParseError("expected 'simples:'", 2, 1);
  std::size_t count = std::stoul(count_line.substr(9));

  GarsideStructure gs;
  std::set<AtomId> atom_set;
  for (std::size_t i = 0; i < count; ++i) {
    Word w = ambient_spec.parse_word(next_line());
    for (AtomId a : w) atom_set.insert(a);
    gs.simples_.push_back(std::move(w));
  }
  for (AtomId a : delta) atom_set.insert(a);
  gs.atoms_.assign(atom_set.begin(), atom_set.end());
  gs.spec_ = ambient_spec.restrict_to(gs.atoms_);
  std::sort(gs.simples_.begin(), gs.simples_.end(), length_lex_less);
  // The divisibility tables in the block are authoritative input but cheap
  // to recompute; rebuilding also restores the product table the block
  // does not carry, and any disagreement is surfaced below.
  gs.build_tables(limits);
  gs.delta_ = gs.simple_id(delta);
  if (gs.delta_ < 0) throw ParseError("delta is not among the simples", 1, 1);

  auto check_table = [&](const char* label, auto&& get) {
    if (next_line() != std::string(label) + ":")
      throw ParseError(std::string("expected '") + label + ":'", 0, 0);
    for (std::size_t i = 0; i < count; ++i) {
      std::string row = next_line();
      for (std::size_t j = 0; j < count; ++j) {
        bool bit = row.at(j) == '1';
        if (bit != get(static_cast<SimpleId>(i), static_cast<SimpleId>(j)))
          throw ParseError("divisibility table mismatch", 0, 0);
      }
    }
  };
  check_table("left_divides",
              [&](SimpleId i, SimpleId j) { return gs.left_divides(i, j); });
  check_table("right_divides",
              [&](SimpleId i, SimpleId j) { return gs.right_divides(i, j); });
  return gs;
}

// ---- element operations ----

std::vector<SimpleId> to_simples(const GarsideStructure& gs, const Word& w) {
  std::vector<SimpleId> out;
  out.reserve(w.size());
  for (AtomId a : w) out.push_back(gs.atom_simple(a));
  return out;
}

Word from_simples(const GarsideStructure& gs,
                  const std::vector<SimpleId>& factors) {
  Word out;
  for (SimpleId s : factors)
    out = concat(std::move(out), gs.simple_word(s));
  return out;
}

namespace {

// One local rewriting step of the greedy normalization: make the pair (s,t)
// left-weighted, i.e. s absorbs the largest simple chunk of t.
bool make_left_weighted(const GarsideStructure& gs, SimpleId& s, SimpleId& t) {
  SimpleId u = gs.meet_L(gs.rcomp(s), t);
  if (u == gs.identity()) return false;
  SimpleId t2 = gs.lquot(u, t);
  SimpleId s2 = gs.product(s, u);
  if (s2 < 0) throw InternalError("left-weighting left the simple set");
  s = s2;
  t = t2;
  return true;
}

bool make_right_weighted(const GarsideStructure& gs, SimpleId& s,
                         SimpleId& t) {
  SimpleId u = gs.meet_R(s, gs.lcomp(t));
  if (u == gs.identity()) return false;
  SimpleId s2 = gs.rquot(u, s);
  SimpleId t2 = gs.product(u, t);
  if (t2 < 0) throw InternalError("right-weighting left the simple set");
  t = t2;
  s = s2;
  return true;
}

void drop_identities(const GarsideStructure& gs, std::vector<SimpleId>& v) {
  std::erase(v, gs.identity());
}

// Bounds the total number of local rewrites; any consistent structure
// stays far below it, so hitting the cap means the tables are not those
// of a Garside leaf.
std::size_t rewrite_cap(const GarsideStructure& gs, std::size_t len) {
  std::size_t delta_len = gs.atom_length(gs.delta()) + 2;
  return 4 * (len + 2) * (len + 2) * delta_len + 64;
}

std::vector<SimpleId> normalize_left(const GarsideStructure& gs,
                                     std::vector<SimpleId> v) {
  drop_identities(gs, v);
  std::size_t cap = rewrite_cap(gs, v.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (make_left_weighted(gs, v[i], v[i + 1])) {
        changed = true;
        if (cap-- == 0)
          throw InternalError("greedy normalization did not converge");
      }
    drop_identities(gs, v);
  }
  return v;
}

std::vector<SimpleId> normalize_right(const GarsideStructure& gs,
                                      std::vector<SimpleId> v) {
  drop_identities(gs, v);
  std::size_t cap = rewrite_cap(gs, v.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = v.size(); i-- > 1;)
      if (make_right_weighted(gs, v[i - 1], v[i])) {
        changed = true;
        if (cap-- == 0)
          throw InternalError("greedy normalization did not converge");
      }
    drop_identities(gs, v);
  }
  return v;
}

// x^{-1} * (element of the list), assuming x left-divides it; nullopt when
// it does not, which doubles as the divisibility test.
std::optional<std::vector<SimpleId>> try_left_quotient_by_simple(
    const GarsideStructure& gs, SimpleId x, std::vector<SimpleId> rest) {
  std::vector<SimpleId> out;
  std::size_t i = 0;
  while (x != gs.identity()) {
    if (i == rest.size()) return std::nullopt;
    SimpleId s = rest[i];
    SimpleId v = gs.join_L(x, s);
    out.push_back(gs.lquot(x, v));
    x = gs.lquot(s, v);
    ++i;
  }
  out.insert(out.end(), rest.begin() + i, rest.end());
  return normalize_left(gs, std::move(out));
}

std::optional<std::vector<SimpleId>> try_right_quotient_by_simple(
    const GarsideStructure& gs, SimpleId x, std::vector<SimpleId> rest) {
  std::vector<SimpleId> out;
  std::size_t i = rest.size();
  while (x != gs.identity()) {
    if (i == 0) return std::nullopt;
    SimpleId s = rest[i - 1];
    SimpleId v = gs.join_R(x, s);
    out.push_back(gs.rquot(x, v));
    x = gs.rquot(s, v);
    --i;
  }
  std::vector<SimpleId> result(rest.begin(), rest.begin() + i);
  result.insert(result.end(), out.rbegin(), out.rend());
  return normalize_left(gs, std::move(result));
}

std::vector<SimpleId> greedy_of(const GarsideStructure& gs, const Word& w) {
  return normalize_left(gs, to_simples(gs, w));
}

}  // namespace

std::vector<SimpleId> left_greedy_nf(const GarsideStructure& gs,
                                     const Word& w) {
  return greedy_of(gs, w);
}

std::vector<SimpleId> right_greedy_nf(const GarsideStructure& gs,
                                      const Word& w) {
  return normalize_right(gs, to_simples(gs, w));
}

Word canonical_word(const GarsideStructure& gs, const Word& w) {
  return from_simples(gs, greedy_of(gs, w));
}

bool left_divides(const GarsideStructure& gs, const Word& a, const Word& b) {
  auto rest = greedy_of(gs, b);
  for (SimpleId f : greedy_of(gs, a)) {
    auto q = try_left_quotient_by_simple(gs, f, std::move(rest));
    if (!q) return false;
    rest = std::move(*q);
  }
  return true;
}

Word left_quotient(const GarsideStructure& gs, const Word& a, const Word& b) {
  auto rest = greedy_of(gs, b);
  for (SimpleId f : greedy_of(gs, a)) {
    auto q = try_left_quotient_by_simple(gs, f, std::move(rest));
    if (!q) throw InternalError("left_quotient: not a left divisor");
    rest = std::move(*q);
  }
  return from_simples(gs, rest);
}

bool right_divides(const GarsideStructure& gs, const Word& a, const Word& b) {
  auto rest = greedy_of(gs, b);
  auto fa = greedy_of(gs, a);
  for (auto it = fa.rbegin(); it != fa.rend(); ++it) {
    auto q = try_right_quotient_by_simple(gs, *it, std::move(rest));
    if (!q) return false;
    rest = std::move(*q);
  }
  return true;
}

Word right_quotient(const GarsideStructure& gs, const Word& a, const Word& b) {
  auto rest = greedy_of(gs, b);
  auto fa = greedy_of(gs, a);
  for (auto it = fa.rbegin(); it != fa.rend(); ++it) {
    auto q = try_right_quotient_by_simple(gs, *it, std::move(rest));
    if (!q) throw InternalError("right_quotient: not a right divisor");
    rest = std::move(*q);
  }
  return from_simples(gs, rest);
}

Word gcd_L(const GarsideStructure& gs, const Word& a, const Word& b) {
  auto fa = greedy_of(gs, a);
  auto fb = greedy_of(gs, b);
  std::size_t cap = rewrite_cap(gs, fa.size() + fb.size());
  std::vector<SimpleId> acc;
  while (!fa.empty() && !fb.empty()) {
    SimpleId x = gs.meet_L(fa.front(), fb.front());
    if (x == gs.identity()) break;
    if (cap-- == 0) throw InternalError("gcd iteration did not converge");
    acc.push_back(x);
    fa = *try_left_quotient_by_simple(gs, x, std::move(fa));
    fb = *try_left_quotient_by_simple(gs, x, std::move(fb));
  }
  return from_simples(gs, normalize_left(gs, std::move(acc)));
}

Word gcd_R(const GarsideStructure& gs, const Word& a, const Word& b) {
  auto fa = normalize_right(gs, to_simples(gs, a));
  auto fb = normalize_right(gs, to_simples(gs, b));
  std::size_t cap = rewrite_cap(gs, fa.size() + fb.size());
  std::vector<SimpleId> acc;  // accumulated right-to-left
  while (!fa.empty() && !fb.empty()) {
    SimpleId x = gs.meet_R(fa.back(), fb.back());
    if (x == gs.identity()) break;
    if (cap-- == 0) throw InternalError("gcd iteration did not converge");
    acc.push_back(x);
    fa = *try_right_quotient_by_simple(gs, x, std::move(fa));
    fb = *try_right_quotient_by_simple(gs, x, std::move(fb));
    fa = normalize_right(gs, std::move(fa));
    fb = normalize_right(gs, std::move(fb));
  }
  std::vector<SimpleId> d(acc.rbegin(), acc.rend());
  return from_simples(gs, normalize_left(gs, std::move(d)));
}

namespace {

struct SignedSimple {
  SimpleId s;
  bool inverse;
};

// Left-reversing: rewrite every x^{-1} y into p q^{-1} with x p = y q the
// left lcm.  Ends with all positive letters before all negative ones.
void left_reverse(const GarsideStructure& gs, std::vector<SignedSimple>& v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (!v[i].inverse || v[i + 1].inverse) continue;
      SimpleId x = v[i].s, y = v[i + 1].s;
      std::vector<SignedSimple> repl;
      if (x != y) {
        SimpleId j = gs.join_L(x, y);
        SimpleId p = gs.lquot(x, j);
        SimpleId q = gs.lquot(y, j);
        if (p != gs.identity()) repl.push_back({p, false});
        if (q != gs.identity()) repl.push_back({q, true});
      }
      v.erase(v.begin() + i, v.begin() + i + 2);
      v.insert(v.begin() + i, repl.begin(), repl.end());
      changed = true;
      break;
    }
  }
}

}  // namespace

LeafGroupElement group_nf(const GarsideStructure& gs, const SignedWord& w) {
  std::vector<SignedSimple> v;
  v.reserve(w.size());
  for (const auto& l : w) v.push_back({gs.atom_simple(l.atom), l.inverse});
  left_reverse(gs, v);

  std::vector<SimpleId> pos, neg;
  for (const auto& l : v) (l.inverse ? neg : pos).push_back(l.s);
  std::reverse(neg.begin(), neg.end());  // ... z2^- z1^-  ->  z1 z2 ...

  Word num = from_simples(gs, normalize_left(gs, std::move(pos)));
  Word den = from_simples(gs, normalize_left(gs, std::move(neg)));
  Word d = gcd_R(gs, num, den);
  return {right_quotient(gs, d, num), right_quotient(gs, d, den)};
}

std::size_t simple_length(const GarsideStructure& gs,
                          const LeafGroupElement& g) {
  return greedy_of(gs, g.num).size() + greedy_of(gs, g.den).size();
}

SimpleWord leaf_canonical_sword(const GarsideStructure& gs,
                                const LeafGroupElement& g) {
  SimpleWord out;
  for (SimpleId s : right_greedy_nf(gs, g.num))
    out.push_back({gs.simple_word(s), false});
  auto den = right_greedy_nf(gs, g.den);
  for (auto it = den.rbegin(); it != den.rend(); ++it)
    out.push_back({gs.simple_word(*it), true});
  return out;
}

SignedWord to_signed(const LeafGroupElement& g) {
  SignedWord out = to_signed(g.num);
  for (auto it = g.den.rbegin(); it != g.den.rend(); ++it)
    out.push_back({*it, true});
  return out;
}

namespace {

Word lcm_from_reversal(const GarsideStructure& gs, const Word& a,
                       const Word& b) {
  std::vector<SignedSimple> v;
  auto fa = greedy_of(gs, a);
  for (auto it = fa.rbegin(); it != fa.rend(); ++it)
    v.push_back({*it, true});
  for (SimpleId s : greedy_of(gs, b)) v.push_back({s, false});
  left_reverse(gs, v);
  std::vector<SimpleId> u;
  for (const auto& l : v)
    if (!l.inverse) u.push_back(l.s);
  // a^{-1} b = u t^{-1} with a u = b t = lcm_L(a, b)
  return canonical_word(gs, concat(Word(a), from_simples(gs, u)));
}

}  // namespace

Word lcm_L(const GarsideStructure& gs, const Word& a, const Word& b) {
  return lcm_from_reversal(gs, canonical_word(gs, a), canonical_word(gs, b));
}

Word lcm_R(const GarsideStructure& gs, const Word& a, const Word& b) {
  // Right-reversing x y^{-1} -> p^{-1} q with p x = q y; the negative
  // letters collect on the left and v a = u b = lcm_R(a, b).
  std::vector<SignedSimple> v;
  for (SimpleId s : greedy_of(gs, a)) v.push_back({s, false});
  auto fb = greedy_of(gs, b);
  for (auto it = fb.rbegin(); it != fb.rend(); ++it)
    v.push_back({*it, true});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i].inverse || !v[i + 1].inverse) continue;
      SimpleId x = v[i].s, y = v[i + 1].s;
      std::vector<SignedSimple> repl;
      if (x != y) {
        SimpleId j = gs.join_R(x, y);
        SimpleId p = gs.rquot(x, j);
        SimpleId q = gs.rquot(y, j);
        if (p != gs.identity()) repl.push_back({p, true});
        if (q != gs.identity()) repl.push_back({q, false});
      }
      v.erase(v.begin() + i, v.begin() + i + 2);
      v.insert(v.begin() + i, repl.begin(), repl.end());
      changed = true;
      break;
    }
  }
  std::vector<SimpleId> neg;
  for (const auto& l : v)
    if (l.inverse) neg.push_back(l.s);
  std::reverse(neg.begin(), neg.end());
  return canonical_word(gs, concat(from_simples(gs, neg), Word(a)));
}

}  // namespace pgk
