#include "pgk/presets.hpp"

#include <map>

#include "pgk/errors.hpp"

namespace pgk {

namespace {

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> presets = {
      {"FREE2",
       "# free monoid on two generators\n"
       "atoms: a b\n"},
      {"B3",
       "# braid monoid on three strands\n"
       "atoms: a b\n"
       "rel: a b a = b a b\n"},
      {"B4",
       "# braid monoid on four strands\n"
       "atoms: s1 s2 s3\n"
       "rel: s1 s2 s1 = s2 s1 s2\n"
       "rel: s2 s3 s2 = s3 s2 s3\n"
       "rel: s1 s3 = s3 s1\n"},
      {"B3B3",
       "# two braid monoids amalgamated over the middle generator\n"
       "atoms: a b c\n"
       "rel: a b a = b a b\n"
       "rel: b c b = c b c\n"},
      {"RA2",
       "# right-angled presentation: a-b and b-c commute\n"
       "atoms: a b c\n"
       "rel: a b = b a\n"
       "rel: b c = c b\n"},
  };
  return presets;
}

}  // namespace

const std::string& preset_text(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw Error("unknown preset '" + name + "'");
  return it->second;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

PresentationSpec load_preset(const std::string& name) {
  return parse_presentation(preset_text(name), name);
}

}  // namespace pgk
