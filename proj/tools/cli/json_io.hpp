#pragma once

#include <json.hpp>

#include "c4book/bounds.hpp"
#include "c4book/enumerate.hpp"
#include "c4book/gf.hpp"
#include "c4book/graph.hpp"
#include "c4book/random_delete.hpp"
#include "c4book/ramsey.hpp"

namespace c4book::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "c4book/1";

Json to_json(const gf::Field& field, bool tables);
Json degree_json(const DegreeProfile& profile);
Json to_json(const C4Check& check);
Json to_json(const KstReport& report);
Json to_json(const BookNumber& book);
Json to_json(const LowerBoundCertificate& cert);
Json to_json(const bounds::BoundReport& report);
Json to_json(const bounds::BoundsParams& params);
Json to_json(const bounds::Admissibility& admissibility);
Json to_json(const bounds::PredictedValue& value);
Json to_json(const DeletionRun& run);
Json to_json(const ExhaustionProof& proof);

/// Renders a JSON document as aligned "path  value" rows.
std::string render_table(const Json& doc);

}  // namespace c4book::cli
