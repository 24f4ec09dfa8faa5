#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "plo/chains.hpp"
#include "plo/countability.hpp"

namespace plo {

using Json = nlohmann::ordered_json;

// Node-list grammar: whitespace-separated "x,y" pairs, each coordinate "p" or
// "p/q"; '#' starts a comment running to the end of the line.
PLMap parse_map(std::string_view text);
std::string serialize_map(const PLMap& f);

struct MapDocument {
  std::string name;
  PLMap map;
};

Json to_json(const Rat& r);
Json to_json(const Interval& a);
Json to_json(const HalfOpen& d);
Json to_json(const MapDocument& doc);
Json to_json(const Word& w);
Json to_json(const SignedOrbital& so);
Json to_json(const ChainCertificate& c);
Json to_json(const BumpCode& code);

MapDocument map_document_from_json(const Json& j);

// Plain text holds one map per non-blank line, optionally prefixed "name:";
// JSON is an array of map documents or a single one. Unnamed generators
// become g1, g2, ...
GenSet parse_genset(std::string_view text, std::string name = "G");
std::string genset_to_text(const GenSet& g);
Json genset_to_json(const GenSet& g);

}  // namespace plo
