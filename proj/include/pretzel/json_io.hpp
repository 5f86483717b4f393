#pragma once

#include <json.hpp>

#include "pretzel/aux_graph.hpp"
#include "pretzel/certifier.hpp"
#include "pretzel/link_explorer.hpp"
#include "pretzel/pairing.hpp"

namespace pretzel {

// Ordered so that identical inputs serialise byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const BandMatching& matching);
Json to_json(const PathVerdict& verdict);
Json to_json(const Partition& partition);
Json to_json(const StageRun& run);
Json to_json(const SliceCertificate& cert);
Json to_json(const LinkReport& report);

/// Reads the matching format back: direction "A"|"B", pairs, unmatched, stages.
BandMatching matching_from_json(const Json& j, std::size_t size);

}  // namespace pretzel
