#ifndef SPINORLAB_STATE_IO_HPP
#define SPINORLAB_STATE_IO_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "spinorlab/spinor.hpp"

namespace spinorlab {

/// Malformed or incomplete state record.
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const char* to_string(Kind k) { return k == Kind::particle ? "particle" : "antiparticle"; }

/// {kind, m, p: [4], components: [[re, im] x 4]} plus "alpha" for basis spinors.
inline nlohmann::json to_json(const Spinor& psi) {
  nlohmann::json j;
  j["kind"] = to_string(psi.kind);
  j["m"] = psi.mass;
  j["p"] = {psi.momentum[0], psi.momentum[1], psi.momentum[2], psi.momentum[3]};
  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t i = 0; i < 4; ++i)
    comps.push_back({psi.components[i].real(), psi.components[i].imag()});
  j["components"] = comps;
  if (psi.spin) j["alpha"] = *psi.spin;
  return j;
}

inline Spinor spinor_from_json(const nlohmann::json& j) {
  auto number = [](const nlohmann::json& v, const char* what) {
    if (!v.is_number()) throw format_error(std::string("state: ") + what + " must be a number");
    return v.get<double>();
  };
  if (!j.is_object()) throw format_error("state: expected a JSON object");
  for (const char* key : {"kind", "m", "p", "components"})
    if (!j.contains(key)) throw format_error(std::string("state: missing field '") + key + "'");

  Spinor psi;
  const auto& kind = j.at("kind");
  if (!kind.is_string()) throw format_error("state: kind must be a string");
  if (kind == "particle")
    psi.kind = Kind::particle;
  else if (kind == "antiparticle")
    psi.kind = Kind::antiparticle;
  else
    throw format_error("state: kind must be 'particle' or 'antiparticle'");

  psi.mass = number(j.at("m"), "m");
  if (!(psi.mass > 0.0)) throw format_error("state: m must be positive");
  const auto& p = j.at("p");
  if (!p.is_array() || p.size() != 4) throw format_error("state: p must have 4 entries");
  for (std::size_t i = 0; i < 4; ++i) psi.momentum[i] = number(p[i], "p entry");

  const auto& c = j.at("components");
  if (!c.is_array() || c.size() != 4) throw format_error("state: components must have 4 entries");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!c[i].is_array() || c[i].size() != 2)
      throw format_error("state: each component must be [re, im]");
    psi.components[i] = complex{number(c[i][0], "component"), number(c[i][1], "component")};
  }
  if (j.contains("alpha")) {
    if (!j.at("alpha").is_number_integer()) throw format_error("state: alpha must be an integer");
    psi.spin = j.at("alpha").get<int>();
  }
  return psi;
}

inline Spinor spinor_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw format_error(std::string("state: invalid JSON: ") + e.what());
  }
  return spinor_from_json(j);
}

}  // namespace spinorlab

#endif  // SPINORLAB_STATE_IO_HPP
