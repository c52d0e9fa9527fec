#include "planegen/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "planegen/cf.hpp"

namespace pg {

nlohmann::json pattern_to_json(const Pattern& P) {
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& f : P)
    faces.push_back({{"x", {f.x[0], f.x[1], f.x[2]}}, {"t", f.t}});
  return {{"faces", faces}};
}

Pattern pattern_from_json(const nlohmann::json& j) {
  std::vector<Face> faces;
  for (const auto& jf : j.at("faces")) {
    const auto& x = jf.at("x");
    if (x.size() != 3) throw std::invalid_argument("face position must have 3 entries");
    faces.push_back(Face{{x[0].get<int64_t>(), x[1].get<int64_t>(), x[2].get<int64_t>()},
                         jf.at("t").get<int>()});
  }
  return Pattern(std::move(faces));
}

nlohmann::json substitution_to_json(const Substitution& s) {
  return {{"1", s.image(1)}, {"2", s.image(2)}, {"3", s.image(3)}};
}

Substitution substitution_from_json(const nlohmann::json& j) {
  return Substitution(j.at("1").get<std::string>(), j.at("2").get<std::string>(),
                      j.at("3").get<std::string>());
}

Substitution substitution_by_name(const std::string& name) {
  auto digit_suffix = [&](const std::string& prefix) -> int {
    if (name.size() != prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0)
      return -1;
    char c = name.back();
    return c >= '0' && c <= '9' ? c - '0' : -1;
  };
  if (int i = digit_suffix("brun"); i >= 1 && i <= 3) return brun_substitution(i);
  if (int i = digit_suffix("tau"); i >= 1 && i <= 3) return tau_substitution(i);
  if (int i = digit_suffix("theta"); i >= 1 && i <= 4) return theta_substitution(i);
  if (name.compare(0, 3, "jp:") == 0) {
    auto comma = name.find(',', 3);
    if (comma != std::string::npos) {
      try {
        int a = std::stoi(name.substr(3, comma - 3));
        int b = std::stoi(name.substr(comma + 1));
        return jp_substitution(a, b);
      } catch (const std::exception&) {
        // fall through to the error below
      }
    }
  }
  throw std::invalid_argument("unknown substitution name: " + name);
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

std::string seed_dir() {
  const char* env = std::getenv("PLANEGEN_SEED_DIR");
  return env && *env ? env : "data";
}

}  // namespace pg
