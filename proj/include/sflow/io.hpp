#pragma once

#include <string>

#include <json.hpp>

#include "sflow/generators.hpp"

namespace sflow {

using Json = nlohmann::ordered_json;

/// Instance files carry the source complex ("simplicial" or "chain"),
/// capacities, gamma, and optional voids / expected / index blocks.  All
/// rational values are "p/q" strings; JSON numbers are rejected so nothing
/// is ever rounded.
Json instance_to_json(const InstanceBundle& bundle);
InstanceBundle instance_from_json(const Json& doc);

std::string write_instance(const InstanceBundle& bundle);
InstanceBundle read_instance(const std::string& text);

InstanceBundle load_instance_file(const std::string& path);
void save_instance_file(const InstanceBundle& bundle, const std::string& path);

/// Certificates checked by the verify command.
Json flow_certificate(const FlowResult& flow);
Json cut_certificate(const Cochain& cochain);

}  // namespace sflow
