#pragma once

#include "latwalk/closed_forms.hpp"
#include "latwalk/egf.hpp"
#include "latwalk/graph.hpp"
#include "latwalk/group_walks.hpp"
#include "latwalk/ring.hpp"

#include <json.hpp>

#include <string>

namespace latwalk {

// Key order is part of the on-disk format, so everything goes through
// ordered_json; counts serialize as decimal strings to stay lossless.
using Json = nlohmann::ordered_json;

Json ring_to_json(const Ring& value);
Ring ring_from_json(const Json& j, const std::string& where);

Json egf_to_json(const EgfSeq& seq);

Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);
WeightedGraph load_graph_file(const std::string& path);

Json cayley_spec_to_json(const CayleySpec& spec);
CayleySpec cayley_spec_from_json(const Json& j);
CayleySpec load_cayley_file(const std::string& path);

Json identity_report_to_json(const IdentityReport& report);

// Parses text (rethrown with the source name on diagnostics) so callers get
// line/column positions from the underlying reader.
Json parse_json_text(const std::string& text, const std::string& source_name);

} // namespace latwalk
