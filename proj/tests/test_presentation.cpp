#include "doctest.h"
#include "pgk/errors.hpp"
#include "pgk/presentation.hpp"
#include "pgk/presets.hpp"

using namespace pgk;

TEST_CASE("parse basic presentation") {
  auto spec = parse_presentation("atoms: a b\nrel: a b a = b a b\n");
  REQUIRE(spec.atom_count() == 2);
  CHECK(spec.atom_name(0) == "a");
  CHECK(spec.atom_name(1) == "b");
  REQUIRE(spec.relations().size() == 1);
  CHECK(spec.relations()[0].lhs == Word{0, 1, 0});
  CHECK(spec.relations()[0].rhs == Word{1, 0, 1});
}

TEST_CASE("parse single atom, no relations") {
  auto spec = parse_presentation("atoms: a\n");
  CHECK(spec.atom_count() == 1);
  CHECK(spec.relations().empty());
}

TEST_CASE("comments and blank lines are ignored") {
  auto spec = parse_presentation(
      "# heading\n\natoms: a b # inline\n# more\nrel: a b = b a\n");
  CHECK(spec.atom_count() == 2);
  CHECK(spec.relations().size() == 1);
}

TEST_CASE("parser rejections") {
  CHECK_THROWS_AS(parse_presentation("atoms: a a\n"), DuplicateAtomError);
  CHECK_THROWS_AS(parse_presentation("atoms: a b\nrel: a c = b a\n"),
                  UnknownAtomError);
  CHECK_THROWS_AS(parse_presentation("atoms: a b\nrel: = b a\n"),
                  MalformedRelationError);
  CHECK_THROWS_AS(parse_presentation("atoms: a b\nrel: a b a b a b\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("rel: a = b\n"), ParseError);
  // shared head
  CHECK_THROWS_AS(parse_presentation("atoms: a b\nrel: a b = a a b\n"),
                  MalformedRelationError);
  // shared tail: a = b a pairs tail a with tail a
  CHECK_THROWS_AS(parse_presentation("atoms: a b\nrel: a = b a\n"),
                  MalformedRelationError);
}

TEST_CASE("round trip parse/serialize/parse") {
  for (const auto& name : preset_names()) {
    auto spec = load_preset(name);
    auto again = parse_presentation(serialize_presentation(spec), name);
    CHECK(spec == again);
  }
}

TEST_CASE("derive complements on B3") {
  auto spec = load_preset("B3");
  auto cp = derive_complements(spec);
  AtomId a = spec.atom_id("a"), b = spec.atom_id("b");
  REQUIRE(cp.edge_L(a, b));
  REQUIRE(cp.edge_R(a, b));
  CHECK(*cp.fL(a, b) == Word{b, a});
  CHECK(*cp.fL(b, a) == Word{a, b});
  CHECK(*cp.fR(a, b) == Word{b, a});
  CHECK(*cp.fR(b, a) == Word{a, b});
}

TEST_CASE("derive complements on FREE2 is empty") {
  auto spec = load_preset("FREE2");
  auto cp = derive_complements(spec);
  CHECK(cp.edges_L().empty());
  CHECK(cp.edges_R().empty());
}

TEST_CASE("derive complements on RA2") {
  auto spec = load_preset("RA2");
  auto cp = derive_complements(spec);
  AtomId a = spec.atom_id("a"), b = spec.atom_id("b"), c = spec.atom_id("c");
  CHECK(*cp.fL(a, b) == Word{b});
  CHECK(*cp.fL(b, a) == Word{a});
  CHECK(*cp.fL(b, c) == Word{c});
  CHECK(*cp.fL(c, b) == Word{b});
  CHECK(*cp.fR(a, b) == Word{a});
  CHECK(*cp.fR(b, a) == Word{b});
  CHECK_FALSE(cp.edge_L(a, c));
}

TEST_CASE("complement entries reassemble the relations") {
  for (const auto& name : preset_names()) {
    auto spec = load_preset(name);
    auto cp = derive_complements(spec);
    for (auto [x, y] : cp.edges_L()) {
      Word lhs = concat(Word{x}, *cp.fL(x, y));
      Word rhs = concat(Word{y}, *cp.fL(y, x));
      bool found = false;
      for (const auto& r : spec.relations())
        found |= (r.lhs == lhs && r.rhs == rhs) ||
                 (r.lhs == rhs && r.rhs == lhs);
      CHECK(found);
    }
    for (auto [x, y] : cp.edges_R()) {
      Word lhs = concat(*cp.fR(y, x), Word{x});
      Word rhs = concat(*cp.fR(x, y), Word{y});
      bool found = false;
      for (const auto& r : spec.relations())
        found |= (r.lhs == lhs && r.rhs == rhs) ||
                 (r.lhs == rhs && r.rhs == lhs);
      CHECK(found);
    }
  }
}

TEST_CASE("conflicting complements rejected") {
  auto spec = parse_presentation(
      "atoms: a b\nrel: a b = b a\nrel: a b b = b a a\n");
  CHECK_THROWS_AS(derive_complements(spec), ConflictingComplementError);
}

TEST_CASE("validate_atoms flags epsilon complements") {
  // a = b c gives f_L(a,b) empty, so a is not an atom
  auto spec = parse_presentation("atoms: a b c\nrel: a = b c\n");
  auto cp = derive_complements(spec);
  auto report = validate_atoms(spec, cp);
  CHECK_FALSE(report.is_atom[spec.atom_id("a")]);
  CHECK(report.is_atom[spec.atom_id("b")]);
  CHECK(report.is_atom[spec.atom_id("c")]);
  CHECK_FALSE(report.all_atoms());
}

TEST_CASE("validate_atoms accepts presets") {
  for (const auto& name : preset_names()) {
    auto spec = load_preset(name);
    auto report = validate_atoms(spec, derive_complements(spec));
    CHECK(report.all_atoms());
  }
}

TEST_CASE("validate_atoms is monotone under relation removal") {
  for (const auto& name : preset_names()) {
    auto spec = load_preset(name);
    auto before = validate_atoms(spec, derive_complements(spec));
    for (std::size_t skip = 0; skip < spec.relations().size(); ++skip) {
      std::vector<Relation> rels;
      for (std::size_t i = 0; i < spec.relations().size(); ++i)
        if (i != skip) rels.push_back(spec.relations()[i]);
      PresentationSpec reduced(spec.atoms(), rels);
      auto after = validate_atoms(reduced, derive_complements(reduced));
      for (std::size_t i = 0; i < spec.atom_count(); ++i)
        if (before.is_atom[i]) CHECK(after.is_atom[i]);
    }
  }
}

TEST_CASE("graph coincidence") {
  for (const auto& name : preset_names()) {
    auto spec = load_preset(name);
    CHECK(check_graph_coincidence(derive_complements(spec)));
  }
  // heads pair {a,b}, tails pair {b,c}: graphs differ
  auto spec = parse_presentation("atoms: a b c\nrel: a b = b c\n");
  CHECK_FALSE(check_graph_coincidence(derive_complements(spec)));
}

TEST_CASE("word parsing and spelling") {
  auto spec = load_preset("B4");
  auto w = spec.parse_word("s1 s2 s1");
  CHECK(spec.spell(w) == "s1 s2 s1");
  auto sw = spec.parse_signed_word("s1 s2- s3");
  CHECK(spec.spell(sw) == "s1 s2- s3");
  CHECK_THROWS_AS(spec.parse_word("s1 zz"), UnknownAtomError);
}

TEST_CASE("restriction keeps relations inside the subset") {
  auto spec = load_preset("B3B3");
  AtomId a = spec.atom_id("a"), b = spec.atom_id("b");
  auto leaf = spec.restrict_to({a, b});
  REQUIRE(leaf.relations().size() == 1);
  CHECK(leaf.relations()[0].lhs == Word{a, b, a});
}
