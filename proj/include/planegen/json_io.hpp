#ifndef PLANEGEN_JSON_IO_HPP
#define PLANEGEN_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "planegen/geom.hpp"
#include "planegen/subst.hpp"

namespace pg {

// Pattern JSON: {"faces":[{"x":[0,0,0],"t":1}, ...]}
nlohmann::json pattern_to_json(const Pattern& P);
Pattern pattern_from_json(const nlohmann::json& j);

// Substitution JSON: {"1":"1","2":"2","3":"32"}
nlohmann::json substitution_to_json(const Substitution& s);
Substitution substitution_from_json(const nlohmann::json& j);

// Built-in registry: brun1..brun3, jp:a,b, tau1..tau3, theta1..theta4.
Substitution substitution_by_name(const std::string& name);

nlohmann::json load_json_file(const std::string& path);

// Fixture directory: $PLANEGEN_SEED_DIR if set, else "data".
std::string seed_dir();

}  // namespace pg

#endif
