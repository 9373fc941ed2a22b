#include "pgk_cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "pgk/decisions.hpp"
#include "pgk/errors.hpp"
#include "pgk/parabolic.hpp"
#include "pgk/presets.hpp"

namespace pgk {

namespace {

struct Common {
  std::vector<std::string> positionals;  // [FILE] words...
  std::string preset;
  std::size_t max_garside_len = 0;
  std::size_t oracle_budget = 1'000'000;

  void attach(CLI::App* cmd, std::size_t n_words) {
    cmd->add_option("args", positionals,
                    n_words > 0 ? "presentation file, then word(s)"
                                : "presentation file")
        ->expected(0, static_cast<int>(n_words) + 1);
    cmd->add_option("--preset", preset, "built-in presentation name");
    cmd->add_option("--max-garside-len", max_garside_len,
                    "bound for the Garside element search (0 = default)");
    cmd->add_option("--oracle-budget", oracle_budget,
                    "node budget for rewriting closures");
  }

  // Splits the positional list into the presentation source and the words.
  std::vector<std::string> words(std::size_t n_words) {
    std::vector<std::string> args = positionals;
    if (preset.empty()) {
      if (args.empty()) throw Error("no presentation given");
      file_ = args.front();
      args.erase(args.begin());
    }
    if (args.size() != n_words)
      throw Error("expected " + std::to_string(n_words) + " word argument" +
                  (n_words == 1 ? "" : "s") + ", got " +
                  std::to_string(args.size()));
    return args;
  }

  PresentationSpec load() const {
    if (!preset.empty()) return load_preset(preset);
    std::ifstream in(file_);
    if (!in) throw Error("cannot open '" + file_ + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_presentation(text.str(), file_);
  }

  ClosureLimits limits() const { return {oracle_budget}; }

  FcTree tree(const PresentationSpec& spec) const {
    return build_fc_tree(spec, derive_complements(spec), max_garside_len,
                         limits());
  }

 private:
  std::string file_;
};

std::vector<AtomId> parse_subset(const PresentationSpec& spec,
                                 const std::string& csv) {
  std::vector<AtomId> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (!token.empty()) out.push_back(spec.atom_id(token));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_leaves(const FcNode& node) {
  if (node.is_leaf()) return 1;
  return count_leaves(*node.left) + count_leaves(*node.right);
}

int cmd_check(Common& common, std::ostream& out) {
  common.words(0);
  PresentationSpec spec = common.load();
  out << "name: " << (spec.name().empty() ? "(unnamed)" : spec.name())
      << '\n';
  out << "atoms:";
  for (const auto& a : spec.atoms()) out << ' ' << a;
  out << '\n';
  out << "relations: " << spec.relations().size() << '\n';
  ComplementPair cp = derive_complements(spec);
  AtomReport report = validate_atoms(spec, cp);
  out << "generators are atoms: " << (report.all_atoms() ? "yes" : "no");
  if (!report.all_atoms()) {
    out << " (non-atoms:";
    for (AtomId a : report.non_atoms) out << ' ' << spec.atom_name(a);
    out << ")";
  }
  out << '\n';
  bool coincide = check_graph_coincidence(cp);
  out << "graphs coincide: " << (coincide ? "yes" : "no") << '\n';
  if (!report.all_atoms() || !coincide) {
    out << "fc tree: refused\n";
    return 2;
  }
  try {
    FcTree tree = common.tree(spec);
    out << "fc tree: ok (" << count_leaves(*tree.root) << " leaves)\n";
  } catch (const Error& e) {
    out << "fc tree: failed (" << e.what() << ")\n";
    return 2;
  }
  return 0;
}

int cmd_tree(Common& common, std::ostream& out) {
  common.words(0);
  PresentationSpec spec = common.load();
  out << render_fc_tree(common.tree(spec));
  return 0;
}

int cmd_simples(Common& common, std::ostream& out) {
  common.words(0);
  PresentationSpec spec = common.load();
  auto enumeration = enumerate_spherical_parabolics(
      spec, derive_complements(spec), common.max_garside_len,
      common.limits());
  std::vector<Word> simples(enumeration.global_simples.begin(),
                            enumeration.global_simples.end());
  std::sort(simples.begin(), simples.end(), length_lex_less);
  for (const Word& s : simples)
    out << (s.empty() ? "1" : spec.spell(s)) << '\n';
  return 0;
}

int cmd_parabolic(Common& common, const std::string& subset_csv,
                  std::ostream& out) {
  common.words(0);
  PresentationSpec spec = common.load();
  auto subset = parse_subset(spec, subset_csv);
  bool verdict = is_parabolic(subset, spec, derive_complements(spec));
  out << (verdict ? "true" : "false") << '\n';
  return 0;
}

int cmd_nf(Common& common, const std::string& word_text, std::ostream& out) {
  common.words(0);
  PresentationSpec spec = common.load();
  FcTree tree = common.tree(spec);
  SignedWord w = spec.parse_signed_word(word_text);
  if (is_positive(w)) {
    Word pos;
    for (const auto& l : w) pos.push_back(l.atom);
    out << serialize_monoid_element(tree, *tree.root, pos) << '\n';
  } else {
    out << spell_sword(spec, group_canonical(tree, w)) << '\n';
  }
  return 0;
}

int cmd_eq(Common& common, std::ostream& out) {
  auto words = common.words(2);
  PresentationSpec spec = common.load();
  FcTree tree = common.tree(spec);
  bool eq = word_problem(tree, spec.parse_signed_word(words[0]),
                         spec.parse_signed_word(words[1]));
  out << (eq ? "true" : "false") << '\n';
  return eq ? 0 : 1;
}

int cmd_member(Common& common, std::ostream& out) {
  auto words = common.words(1);
  PresentationSpec spec = common.load();
  FcTree tree = common.tree(spec);
  bool member = monoid_membership(tree, spec.parse_signed_word(words[0]));
  out << (member ? "true" : "false") << '\n';
  return member ? 0 : 1;
}

int cmd_coset(Common& common, const std::string& subset_csv,
              std::ostream& out) {
  auto words = common.words(1);
  PresentationSpec spec = common.load();
  FcTree tree = common.tree(spec);
  bool member = coset_membership(tree, spec.parse_signed_word(words[0]),
                                 parse_subset(spec, subset_csv));
  out << (member ? "true" : "false") << '\n';
  return member ? 0 : 1;
}

int cmd_probe(Common& common, int k_max, std::ostream& out) {
  auto words = common.words(1);
  PresentationSpec spec = common.load();
  FcTree tree = common.tree(spec);
  bool ok = torsion_probe(tree, spec.parse_signed_word(words[0]), k_max);
  out << (ok ? "true" : "false") << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"decision procedures for preGarside monoids of FC type"};
  app.require_subcommand(1);

  Common common;
  std::string subset_csv, word_text;
  int k_max = 6;

  auto* check = app.add_subcommand("check", "validate a presentation");
  common.attach(check, 0);

  auto* tree = app.add_subcommand("tree", "print the FC tree");
  common.attach(tree, 0);

  auto* simples = app.add_subcommand("simples", "list the simple elements");
  common.attach(simples, 0);

  auto* parabolic =
      app.add_subcommand("parabolic", "test a subset for parabolicity");
  common.attach(parabolic, 0);
  parabolic->add_option("-X", subset_csv, "comma-separated atoms")
      ->required();

  auto* nf = app.add_subcommand("nf", "canonical form of a word");
  common.attach(nf, 0);
  nf->add_option("-w", word_text, "signed word")->required();

  auto* eq = app.add_subcommand("eq", "decide equality of two words");
  common.attach(eq, 2);

  auto* member = app.add_subcommand("member", "decide monoid membership");
  common.attach(member, 1);

  auto* coset =
      app.add_subcommand("coset", "decide parabolic-coset membership");
  common.attach(coset, 1);
  coset->add_option("-P", subset_csv, "comma-separated atoms")->required();

  auto* probe = app.add_subcommand("probe", "torsion evidence probe");
  common.attach(probe, 1);
  probe->add_option("-k", k_max, "largest exponent to test");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(common, out);
    if (tree->parsed()) return cmd_tree(common, out);
    if (simples->parsed()) return cmd_simples(common, out);
    if (parabolic->parsed()) return cmd_parabolic(common, subset_csv, out);
    if (nf->parsed()) return cmd_nf(common, word_text, out);
    if (eq->parsed()) return cmd_eq(common, out);
    if (member->parsed()) return cmd_member(common, out);
    if (coset->parsed()) return cmd_coset(common, subset_csv, out);
    if (probe->parsed()) return cmd_probe(common, k_max, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace pgk
