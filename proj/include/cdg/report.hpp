#pragma once

#include <string>

#include <json.hpp>

#include "cdg/chardeg.hpp"
#include "cdg/factored.hpp"
#include "cdg/gmodule.hpp"
#include "cdg/tower.hpp"

namespace cdg {

inline constexpr const char* kToolName = "cdgkit";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Lossless JSON forms.  Exact exponents are plain integers; lazy ones are
// {"base": b, "twice": [factored...]}.  Factored integers carry a redundant
// "value" field when they fit in 64 bits (ignored on input).  Module
// matrices are always embedded, so a report containing an explicit step is
// self-contained.  All readers throw DescriptorError on malformed input.

nlohmann::json exponent_to_json(const Exponent& e);
Exponent exponent_from_json(const nlohmann::json& j);

nlohmann::json factored_to_json(const FactoredInt& f);
FactoredInt factored_from_json(const nlohmann::json& j);

nlohmann::json module_to_json(const MatModule& m);
MatModule module_from_json(const nlohmann::json& j);

nlohmann::json spun_to_json(const SpunModule& s);
SpunModule spun_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json structural_to_json(const StructuralGroup& g);
StructuralGroup structural_from_json(const nlohmann::json& j);

nlohmann::json level_to_json(const TowerLevel& l);
TowerLevel level_from_json(const nlohmann::json& j);

// {"schema", "tool": {"name", "version"}, "levels": [...]}
nlohmann::json tower_report(const Tower& t);
Tower tower_from_report(const nlohmann::json& j);

// Payload of the degrees command.
nlohmann::json degrees_to_json(u64 order, const DegreeMultiset& dm);

}  // namespace cdg
