#include "plo/io.hpp"

#include <cctype>

#include "plo/error.hpp"

namespace plo {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text, std::size_t first_line = 1) {
  std::vector<Token> out;
  std::size_t line = first_line, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
    } else {
      Token t{{}, line, column};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
        t.text += text[i];
        ++column;
        ++i;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

Rat parse_coordinate(std::string_view text, std::size_t line, std::size_t column) {
  try {
    return parse_rat(text);
  } catch (const ParseError&) {
    throw ParseError(line, column, "malformed rational '" + std::string(text) + "'");
  }
}

PLMap parse_tokens(const std::vector<Token>& tokens, std::size_t line, std::size_t column) {
  if (tokens.empty()) throw ParseError(line, column, "expected at least one node");
  std::vector<Node> nodes;
  for (const auto& t : tokens) {
    auto comma = t.text.find(',');
    if (comma == std::string::npos || t.text.find(',', comma + 1) != std::string::npos)
      throw ParseError(t.line, t.column, "expected a node 'x,y', got '" + t.text + "'");
    Rat x = parse_coordinate(std::string_view(t.text).substr(0, comma), t.line, t.column);
    Rat y = parse_coordinate(std::string_view(t.text).substr(comma + 1), t.line, t.column + comma + 1);
    nodes.push_back({std::move(x), std::move(y)});
  }
  return make_map(std::move(nodes));
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

PLMap parse_map(std::string_view text) { return parse_tokens(tokenize(text), 1, 1); }

std::string serialize_map(const PLMap& f) {
  std::string out;
  for (const auto& n : f.nodes()) {
    if (!out.empty()) out += ' ';
    out += to_string(n.x) + "," + to_string(n.y);
  }
  return out;
}

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Interval& a) { return Json::array({to_string(a.left()), to_string(a.right())}); }

Json to_json(const HalfOpen& d) { return Json::array({to_string(d.lo()), to_string(d.hi())}); }

Json to_json(const MapDocument& doc) {
  Json nodes = Json::array();
  for (const auto& n : doc.map.nodes()) nodes.push_back(Json::array({to_string(n.x), to_string(n.y)}));
  Json j;
  j["name"] = doc.name;
  j["nodes"] = std::move(nodes);
  return j;
}

Json to_json(const Word& w) { return to_string(w); }

Json to_json(const SignedOrbital& so) {
  Json j;
  j["orbital"] = to_json(so.orbital);
  j["signature"] = serialize_map(so.signature);
  return j;
}

Json to_json(const ChainCertificate& c) {
  Json j;
  j["first"] = to_json(c.first);
  j["second"] = to_json(c.second);
  j["overlap"] = to_json(c.overlap);
  j["first_index"] = c.first_index;
  j["second_index"] = c.second_index;
  return j;
}

Json to_json(const BumpCode& code) {
  Json steps = Json::array();
  for (const auto& s : code.steps) steps.push_back(Json::array({to_string(s.bouncepoint), to_string(s.slope_leaving)}));
  Json j;
  j["initial_slope"] = to_string(code.initial_slope);
  j["steps"] = std::move(steps);
  return j;
}

MapDocument map_document_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
    throw ParseError(1, 1, "map document needs a \"nodes\" array");
  std::vector<Node> nodes;
  for (const auto& pair : j["nodes"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw ParseError(1, 1, "each node must be a pair of \"p/q\" strings");
    nodes.push_back({parse_rat(pair[0].get<std::string>()), parse_rat(pair[1].get<std::string>())});
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string();
  return {std::move(name), make_map(std::move(nodes))};
}

GenSet parse_genset(std::string_view text, std::string name) {
  GenSet g{std::move(name), {}, {}};
  std::string body = trim(text);
  if (!body.empty() && (body.front() == '[' || body.front() == '{')) {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw ParseError(1, e.byte, e.what());
    }
    if (j.is_object()) j = Json::array({j});
    for (const auto& item : j) {
      auto doc = map_document_from_json(item);
      g.generators.push_back(std::move(doc.map));
      g.labels.push_back(std::move(doc.name));
    }
    return g;
  }

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;

    std::string_view content = line.substr(0, line.find('#'));
    if (trim(content).empty()) continue;
    std::string label;
    std::size_t offset = 0;
    if (auto colon = content.find(':'); colon != std::string_view::npos) {
      label = trim(content.substr(0, colon));
      offset = colon + 1;
    }
    auto tokens = tokenize(content.substr(offset), line_no);
    for (auto& t : tokens) t.column += offset;
    g.generators.push_back(parse_tokens(tokens, line_no, offset + 1));
    g.labels.push_back(std::move(label));
  }
  return g;
}

std::string genset_to_text(const GenSet& g) {
  std::string out;
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    out += g.label(i) + ": " + serialize_map(g.generators[i]) + "\n";
  return out;
}

Json genset_to_json(const GenSet& g) {
  Json out = Json::array();
  for (std::size_t i = 0; i < g.generators.size(); ++i) out.push_back(to_json(MapDocument{g.label(i), g.generators[i]}));
  return out;
}

}  // namespace plo
