#ifndef PGK_PRESETS_HPP
#define PGK_PRESETS_HPP

#include <string>
#include <vector>

#include "pgk/presentation.hpp"

namespace pgk {

// Presentation text of a shipped preset (FREE2, B3, B4, B3B3, RA2).
// Throws Error for an unknown name.
const std::string& preset_text(const std::string& name);

std::vector<std::string> preset_names();

PresentationSpec load_preset(const std::string& name);

}  // namespace pgk

#endif  // PGK_PRESETS_HPP
