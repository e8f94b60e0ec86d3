#pragma once

#include <string>

#include <json.hpp>

#include "repgeo/errors.hpp"
#include "repgeo/geometry.hpp"

namespace repgeo {

using Json = nlohmann::ordered_json;

Json to_json(const Representation& rep, const FreeContext& context, const Assignment& asg);
Json to_json(const GroupHom& h);
Json to_json(const RepHom& h);
/// Includes "verified": the brute-force re-check of the family.
Json to_json(const GroupSeparation& cert);
Json to_json(const RepSeparation& cert);
Json to_json(const SearchBounds& bounds);
Json to_json(const InseparablePair& pair, std::size_t side);
Json to_json(const FaithfulImage& image);
Json to_json(const Error& e);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& j);

}  // namespace repgeo
