#pragma once

#include "enptkit/hardness.hpp"
#include "enptkit/host_model.hpp"
#include "enptkit/minify.hpp"
#include "enptkit/pair_model.hpp"
#include "enptkit/solver.hpp"

#include <json.hpp>

#include <string>

namespace enptkit {

using Json = nlohmann::ordered_json;

// ParseError on bad syntax
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

// SchemaError on wrong shape or unknown ids
Json to_json(const HostTree& t);
HostTree tree_from_json(const Json& j);
Json to_json(const Representation& rep);
Representation rep_from_json(const Json& j);
Json to_json(const GraphPair& pair);
GraphPair pair_from_json(const Json& j);
Json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);
Json to_json(const DerivedGraphs& g);
Json to_json(const SolveOutcome& out, const GraphPair& pair);
Json to_json(const ReductionInstance& inst);
Json to_json(const std::vector<MinifyOp>& trace);
Coloring coloring_from_json(const Json& j);

// blue = non-splitting, red = splitting, as in the pair drawings
std::string to_dot(const GraphPair& pair);
// tree edges annotated with the ids of the paths through them
std::string to_dot(const Representation& rep);

} // namespace enptkit
