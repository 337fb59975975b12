#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rsabl/rules.hpp"

namespace rsabl {

// Rule file grammar, one rule per line, '#' starts a comment:
//
//   rule       := consequent "<-" antecedent
//   antecedent := literal { "&" literal }
//   consequent := literal
//   literal    := ["!"] word [ "=" word ]
//
// A bare antecedent word names an attribute over a {0,1} domain and means
// word=1. A bare consequent word is a decision value. Examples:
//
//   !bat <- !flys
//   !bat <- !flys & !swims
//   bat <- !flys

std::vector<Rule> parse_rules(const std::string& text);
std::vector<Rule> load_rules(const std::filesystem::path& path);

std::string format_descriptor(const Descriptor& desc);
std::string format_rule(const Rule& rule);
// One rule per line, in list order, terminated by newlines.
std::string format_rules(const std::vector<Rule>& rules);

}  // namespace rsabl
