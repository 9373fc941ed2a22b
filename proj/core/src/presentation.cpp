#include "pgk/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pgk/errors.hpp"

namespace pgk {

PresentationSpec::PresentationSpec(std::vector<std::string> atoms,
                                   std::vector<Relation> rels,
                                   std::string name)
    : atoms_(std::move(atoms)), relations_(std::move(rels)),
      name_(std::move(name)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    index_.emplace(atoms_[i], static_cast<AtomId>(i));
}

AtomId PresentationSpec::atom_id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownAtomError(name);
  return it->second;
}

std::optional<AtomId> PresentationSpec::try_atom_id(
    const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string PresentationSpec::spell(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += atoms_[w[i]];
  }
  return out;
}

std::string PresentationSpec::spell(const SignedWord& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += atoms_[w[i].atom];
    if (w[i].inverse) out += '-';
  }
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Word PresentationSpec::parse_word(const std::string& text) const {
  Word out;
  for (const auto& tok : tokenize(text)) out.push_back(atom_id(tok));
  return out;
}

SignedWord PresentationSpec::parse_signed_word(const std::string& text) const {
  SignedWord out;
  for (auto tok : tokenize(text)) {
    bool inv = false;
    if (tok.size() > 1 && tok.back() == '-') {
      inv = true;
      tok.pop_back();
    }
    out.push_back({atom_id(tok), inv});
  }
  return out;
}

PresentationSpec PresentationSpec::restrict_to(
    const std::vector<AtomId>& subset) const {
  std::set<AtomId> keep(subset.begin(), subset.end());
  std::vector<Relation> rels;
  for (const auto& r : relations_) {
    auto inside = [&](const Word& w) {
      return std::all_of(w.begin(), w.end(),
                         [&](AtomId a) { return keep.count(a) != 0; });
    };
    if (inside(r.lhs) && inside(r.rhs)) rels.push_back(r);
  }
  // Atom names and ids are shared with the ambient spec; atoms outside the
  // subset simply never occur in the kept relations.
  return PresentationSpec(atoms_, std::move(rels), name_);
}

PresentationSpec parse_presentation(const std::string& text,
                                    const std::string& name) {
  std::vector<std::string> atoms;
  std::set<std::string> seen;
  std::vector<std::pair<std::vector<std::string>, std::size_t>> raw_relations;
  bool have_atoms = false;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "atoms:") {
      if (have_atoms)
        throw ParseError("repeated 'atoms:' line", lineno, 1);
      if (tokens.size() == 1)
        throw ParseError("empty atom list", lineno, 1);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!seen.insert(tokens[i]).second)
          throw DuplicateAtomError(tokens[i], lineno, i + 1);
        atoms.push_back(tokens[i]);
      }
      have_atoms = true;
    } else if (tokens[0] == "rel:") {
      if (!have_atoms)
        throw ParseError("'rel:' before 'atoms:'", lineno, 1);
      raw_relations.emplace_back(
          std::vector<std::string>(tokens.begin() + 1, tokens.end()), lineno);
    } else {
      throw ParseError("expected 'atoms:' or 'rel:', got '" + tokens[0] + "'",
                       lineno, 1);
    }
  }
  if (!have_atoms) throw ParseError("missing 'atoms:' line", 1, 1);

  PresentationSpec lookup(atoms, {}, name);
  std::vector<Relation> relations;
  for (const auto& [tokens, lno] : raw_relations) {
    auto eq = std::find(tokens.begin(), tokens.end(), "=");
    if (eq == tokens.end())
      throw ParseError("relation without '='", lno, 1);
    Word lhs, rhs;
    for (auto it = tokens.begin(); it != eq; ++it)
      lhs.push_back(lookup.atom_id(*it));
    for (auto it = eq + 1; it != tokens.end(); ++it)
      rhs.push_back(lookup.atom_id(*it));
    if (lhs.empty() || rhs.empty())
      throw MalformedRelationError("empty side in relation at line " +
                                   std::to_string(lno));
    if (lhs.front() == rhs.front())
      throw MalformedRelationError("sides share head atom '" +
                                   atoms[lhs.front()] + "' at line " +
                                   std::to_string(lno));
    if (lhs.back() == rhs.back())
      throw MalformedRelationError("sides share tail atom '" +
                                   atoms[lhs.back()] + "' at line " +
                                   std::to_string(lno));
    relations.push_back({std::move(lhs), std::move(rhs)});
  }
  return PresentationSpec(std::move(atoms), std::move(relations), name);
}

std::string serialize_presentation(const PresentationSpec& spec) {
  std::ostringstream out;
  out << "atoms:";
  for (const auto& a : spec.atoms()) out << ' ' << a;
  out << '\n';
  for (const auto& r : spec.relations())
    out << "rel: " << spec.spell(r.lhs) << " = " << spec.spell(r.rhs) << '\n';
  return out.str();
}

const Word* ComplementPair::fL(AtomId x, AtomId y) const {
  auto it = f_L_.find(key(x, y));
  return it == f_L_.end() ? nullptr : &it->second;
}

const Word* ComplementPair::fR(AtomId x, AtomId y) const {
  auto it = f_R_.find(key(x, y));
  return it == f_R_.end() ? nullptr : &it->second;
}

std::vector<std::pair<AtomId, AtomId>> ComplementPair::edges_L() const {
  std::vector<std::pair<AtomId, AtomId>> out;
  for (const auto& [k, v] : f_L_)
    if (k.first < k.second) out.push_back(k);
  return out;
}

std::vector<std::pair<AtomId, AtomId>> ComplementPair::edges_R() const {
  std::vector<std::pair<AtomId, AtomId>> out;
  for (const auto& [k, v] : f_R_)
    if (k.first < k.second) out.push_back(k);
  return out;
}

ComplementPair derive_complements(const PresentationSpec& spec) {
  ComplementPair cp;
  auto put = [&](std::map<std::pair<AtomId, AtomId>, Word>& table, AtomId x,
                 AtomId y, Word value, const char* side) {
    auto [it, fresh] = table.emplace(std::make_pair(x, y), std::move(value));
    if (!fresh)
      throw ConflictingComplementError(
          std::string(side) + "(" + spec.atom_name(x) + "," +
          spec.atom_name(y) + ") defined by two relations");
  };
  for (const auto& r : spec.relations()) {
    AtomId x = r.lhs.front(), y = r.rhs.front();
    put(cp.f_L_, x, y, Word(r.lhs.begin() + 1, r.lhs.end()), "f_L");
    put(cp.f_L_, y, x, Word(r.rhs.begin() + 1, r.rhs.end()), "f_L");
    AtomId xr = r.lhs.back(), yr = r.rhs.back();
    put(cp.f_R_, yr, xr, Word(r.lhs.begin(), r.lhs.end() - 1), "f_R");
    put(cp.f_R_, xr, yr, Word(r.rhs.begin(), r.rhs.end() - 1), "f_R");
  }
  return cp;
}

AtomReport validate_atoms(const PresentationSpec& spec,
                          const ComplementPair& cp) {
  AtomReport report;
  const auto n = spec.atom_count();
  report.is_atom.assign(n, true);
  for (AtomId x = 0; x < static_cast<AtomId>(n); ++x) {
    for (AtomId y = 0; y < static_cast<AtomId>(n); ++y) {
      if (x == y) continue;
      const Word* f = cp.fL(x, y);
      if (f != nullptr && f->empty()) {
        report.is_atom[x] = false;
        report.non_atoms.push_back(x);
        break;
      }
    }
  }
  return report;
}

bool check_graph_coincidence(const ComplementPair& cp) {
  return cp.edges_L() == cp.edges_R();
}

}  // namespace pgk
