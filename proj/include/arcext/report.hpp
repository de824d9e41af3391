#pragma once

#include <string>

#include "arcext/extensions.hpp"
#include "arcext/oracle.hpp"
#include "json.hpp"

namespace arcext {

nlohmann::json quiver_json(const Surface& S);
std::string quiver_text(const Surface& S);

nlohmann::json snake_json(const Triangulation& T, const SnakeGraph& G);

nlohmann::json arc_value_json(const Triangulation& T, const ArcValue& v);
nlohmann::json crossing_json(const Surface& S, int index, const Crossing& c);
nlohmann::json smoothing_json(const Surface& S, const SmoothingResult& r);
nlohmann::json triangle_json(const Surface& S, const Triangle& t);

// The full report of the `ext` verb: crossings, smoothings, dimension data
// and the cluster-category triangles.
nlohmann::json ext_report_json(const Surface& S, const StringWord& w1,
                               const StringWord& w2);

std::string crossing_text(const Surface& S, int index, const Crossing& c);

}  // namespace arcext
