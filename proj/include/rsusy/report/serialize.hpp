#pragma once

#include "rsusy/grid/convergence.hpp"
#include "rsusy/report/errata.hpp"
#include "rsusy/report/family_report.hpp"
#include "rsusy/susyqm/scarf.hpp"

#include "json.hpp"

#include <string>

namespace rsusy {

using nlohmann::json;

void to_json(json& j, const FamilyRecord& r);
void from_json(const json& j, FamilyRecord& r);
void to_json(json& j, const FamilyReport& r);
void from_json(const json& j, FamilyReport& r);

void to_json(json& j, const LevelRecord& r);
void from_json(const json& j, LevelRecord& r);
void to_json(json& j, const SpectrumReport& r);
void from_json(const json& j, SpectrumReport& r);

void to_json(json& j, const RelationRecord& r);
void from_json(const json& j, RelationRecord& r);

void to_json(json& j, const ErrataEntry& e);
void from_json(const json& j, ErrataEntry& e);

// 17 significant digits
std::string format_double(double v);

// level, N<grid>..., extrapolated, target, abs_error, order
std::string spectrum_csv(const SpectrumReport& r);
std::string family_csv(const FamilyReport& r);
std::string relations_csv(const std::vector<RelationRecord>& r);
std::string errata_csv(const std::vector<ErrataEntry>& e);

// write to a temporary file in the same directory, then rename over path
void write_atomic(const std::string& path, const std::string& content);

}  // namespace rsusy
