#ifndef BENSON_JSON_IO_HPP
#define BENSON_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "benson/convexprog.hpp"
#include "benson/geometry.hpp"
#include "benson/instances.hpp"
#include "benson/metrics.hpp"
#include "benson/projection.hpp"

namespace benson {

// Ordered maps keep emitted files byte-stable across runs.
using Json = nlohmann::ordered_json;

// All emitted numerics carry 12 significant digits.
double round12(double x);

Json vec_to_json(const Vec& v);
Json polyhedron_to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const Json& j);

Json expr_to_json(const ConvexExpr& g);
ConvexExpr expr_from_json(const Json& j);

Json instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const Json& j);

Json result_to_json(const ApproxResult& r);
Json distance_report_to_json(const DistanceReport& r);
Json trace_to_json(const std::vector<TraceRecord>& trace, bool dual);

// Instance JSON extended with an "expectations" object.
Json generated_to_json(const GeneratedInstance& gi);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace benson

#endif
