#pragma once

#include "fermat/criteria.hpp"
#include "fermat/density.hpp"
#include "fermat/frey.hpp"
#include "fermat/quadfield.hpp"
#include "fermat/sunit.hpp"
#include "fermat/units.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace fermat::render {

using nlohmann::json;

json field_info_json(const QuadField& field);
std::string field_info_text(const QuadField& field);

json solutions_json(const SUnitSolutionList& list);
std::string solutions_text(const SUnitSolutionList& list);

json report_json(const CriterionReport& rep);
std::string report_text(const CriterionReport& rep);

json frey_json(const FreyData& fd, const WkCheck& wk,
               const std::vector<ReductionReport>& reductions);
std::string frey_text(const FreyData& fd, const WkCheck& wk,
                      const std::vector<ReductionReport>& reductions);

json density_json(const DensityReport& rep);
std::string density_text(const DensityReport& rep);

void write_density_csv(std::ostream& os, const DensityReport& rep);

/// Canonical serialization: two-space indent, sorted keys (json object maps
/// are ordered), exact rationals as "num/den" strings.
std::string dump(const json& j);

} // namespace fermat::render
