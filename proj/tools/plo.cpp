// Command-line front end for the PLo(I) kernel.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plo/constructions.hpp"
#include "plo/countability.hpp"
#include "plo/error.hpp"
#include "plo/io.hpp"
#include "plo/svg.hpp"
#include "plo/verify.hpp"

namespace {

using namespace plo;

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kResourceLimit = 3 };

struct Common {
  std::string in;
  std::vector<std::string> maps;
  std::string out;
  std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
  if (with_input) {
    cmd->add_option("--in", c.in, "Input file: node-list text (one map per line) or JSON");
    cmd->add_option("--map", c.maps, "A map as a node list, e.g. \"0,0 1/2,1/4 3/4,1/2 1,1\"");
  }
  cmd->add_option("--out", c.out, "Write output here instead of stdout");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

GenSet load_input(const Common& c) {
  GenSet g{"G", {}, {}};
  if (!c.in.empty()) {
    std::ifstream file(c.in);
    if (!file) throw Error(ErrorKind::ParseError, "cannot open " + c.in);
    std::stringstream buf;
    buf << file.rdbuf();
    g = parse_genset(buf.str(), c.in);
  }
  for (const auto& text : c.maps) {
    g.labels.resize(g.generators.size());
    g.generators.push_back(parse_map(text));
  }
  if (g.generators.empty()) throw Error(ErrorKind::PreconditionViolated, "no input maps; use --in or --map");
  return g;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write " + c.out);
  file << text;
}

void emit(const Common& c, const Json& j, const std::string& text) {
  emit(c, c.format == "json" ? j.dump(2) + "\n" : text);
}

std::string join(const std::vector<Rat>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + to_string(x);
  return out.empty() ? "-" : out;
}

Json rats(const std::vector<Rat>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(to_string(x));
  return j;
}

Json tower_json(const Tower& t) {
  Json j = Json::array();
  for (const auto& e : t.elements()) j.push_back(to_json(e));
  return j;
}

std::string tower_text(const Tower& t) {
  std::string out;
  for (const auto& e : t.elements()) out += (out.empty() ? "" : " < ") + to_string(e.orbital);
  return out;
}

std::pair<PLMap, PLMap> first_two(const GenSet& g) {
  if (g.generators.size() < 2) throw Error(ErrorKind::PreconditionViolated, "this command needs two maps");
  return {g.generators[0], g.generators[1]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the group of PL homeomorphisms of [0,1]"};
  app.require_subcommand(1);

  Common common;
  std::string point;
  std::size_t radius = 0;
  std::size_t cap = kDefaultElementCap;
  std::uint64_t seed = 0;
  std::size_t size = 100;
  bool timings = false;
  unsigned scale = 400;
  std::vector<std::string> args;

  auto* eval = app.add_subcommand("eval", "Evaluate every input map at a point");
  add_common(eval, common);
  eval->add_option("x", point, "Point in [0,1]")->required();

  auto* comp = app.add_subcommand("compose", "Compose the input maps left to right (first map acts first)");
  add_common(comp, common);

  auto* orbs = app.add_subcommand("orbitals", "Orbitals, directions and boundary slopes of every input map");
  add_common(orbs, common);

  auto* chains = app.add_subcommand("chains", "Find a transition chain among the inputs or, with --radius, in the generated group");
  add_common(chains, common);
  chains->add_option("--radius", radius, "Search the word ball of this radius");
  chains->add_option("--cap", cap, "Maximum number of distinct ball elements");

  auto* towers = app.add_subcommand("towers", "Maximal towers among the signed orbitals of the inputs");
  add_common(towers, common);

  auto* fund = app.add_subcommand("fundamental", "Fundamental domains at a point for every orbital containing it");
  add_common(fund, common);
  fund->add_option("x", point, "Point in (0,1)")->required();

  auto* wit = app.add_subcommand("witness", "Disjoint witness intervals for each maximal tower of the inputs");
  add_common(wit, common);

  auto* bounce = app.add_subcommand("bounce", "Bouncepoints of the first two maps");
  add_common(bounce, common);

  auto* corner = app.add_subcommand("corners", "Corners of the first two maps");
  add_common(corner, common);

  auto* phi = app.add_subcommand("phi", "Bump codes of one-orbital maps sharing an orbital, with injectivity check");
  add_common(phi, common);

  auto* build = app.add_subcommand("build", "Print a named construction: model | one-bump L R | crossing | nested D | wreath IL IR OL OR");
  add_common(build, common, false);
  build->add_option("args", args, "Construction name and arguments")->required();

  auto* svg = app.add_subcommand("svg", "Render the input maps as SVG");
  add_common(svg, common);
  svg->add_option("--scale", scale, "Pixels per unit");

  auto* verify = app.add_subcommand("verify", "Run property suites (all when none are named)");
  add_common(verify, common, false);
  verify->add_option("suites", args, "Suite names");
  verify->add_option("--seed", seed, "Generator seed");
  verify->add_option("--size", size, "Random instances per suite");
  verify->add_flag("--timings", timings, "Include wall-clock times (makes output nondeterministic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) {
      GenSet g = load_input(common);
      Rat x = parse_rat(point);
      Json j = Json::array();
      std::string text;
      for (std::size_t i = 0; i < g.generators.size(); ++i) {
        Rat y = evaluate(g.generators[i], x);
        j.push_back({{"map", g.label(i)}, {"x", to_string(x)}, {"value", to_string(y)}});
        text += g.label(i) + ": " + to_string(y) + "\n";
      }
      emit(common, j, text);
    } else if (comp->parsed()) {
      GenSet g = load_input(common);
      PLMap product;
      for (const auto& f : g.generators) product = compose(product, f);
      emit(common, to_json(MapDocument{"product", product}), serialize_map(product) + "\n");
    } else if (orbs->parsed()) {
      GenSet g = load_input(common);
      Json j = Json::array();
      std::string text;
      for (std::size_t i = 0; i < g.generators.size(); ++i) {
        const PLMap& f = g.generators[i];
        Json entries = Json::array();
        text += g.label(i) + ":";
        auto list = orbitals(f);
        if (list.empty()) text += " none";
        text += "\n";
        for (const auto& a : list) {
          auto slopes = boundary_slopes(f, a);
          const char* dir = to_string(direction(f, a));
          entries.push_back({{"orbital", to_json(a)},
                             {"direction", dir},
                             {"initial_slope", to_string(slopes.initial)},
                             {"terminal_slope", to_string(slopes.terminal)}});
          text += "  " + to_string(a) + " " + dir + " slopes " + to_string(slopes.initial) + " .. " +
                  to_string(slopes.terminal) + "\n";
        }
        j.push_back({{"map", g.label(i)}, {"orbitals", std::move(entries)}});
      }
      emit(common, j, text);
    } else if (chains->parsed()) {
      GenSet g = load_input(common);
      Json j;
      std::string text;
      if (radius == 0) {
        auto cert = detect_transition_chain(g.generators);
        j["certificate"] = cert ? to_json(*cert) : Json();
        if (cert)
          text = "transition chain: " + g.label(cert->first_index) + " on " + to_string(cert->first.orbital) + ", " +
                 g.label(cert->second_index) + " on " + to_string(cert->second.orbital) + ", overlap " +
                 to_string(cert->overlap) + "\n";
        else
          text = "none among the given maps (says nothing about the generated group)\n";
      } else {
        auto found = search_transition_chain(g, radius, cap);
        j["radius"] = found.radius;
        j["elements"] = found.elements;
        if (found.certificate) {
          j["certificate"] = to_json(*found.certificate);
          j["first_word"] = to_json(found.first_word);
          j["second_word"] = to_json(found.second_word);
          text = "transition chain at radius " + std::to_string(found.radius) + ": " + to_string(found.first_word) +
                 " on " + to_string(found.certificate->first.orbital) + ", " + to_string(found.second_word) + " on " +
                 to_string(found.certificate->second.orbital) + ", overlap " + to_string(found.certificate->overlap) +
                 "\n";
        } else {
          j["certificate"] = Json();
          j["note"] = "none within radius; not a proof that the group has no transition chains";
          text = "none within radius " + std::to_string(found.radius) + " (" + std::to_string(found.elements) +
                 " elements); not a proof that the group has no transition chains\n";
        }
      }
      emit(common, j, text);
    } else if (towers->parsed()) {
      GenSet g = load_input(common);
      auto pool = signed_orbitals(g.generators);
      auto list = maximal_towers(pool);
      Json j;
      j["fundamental"] = is_fundamental(pool);
      j["towers"] = Json::array();
      std::string text = std::string("fundamental: ") + (is_fundamental(pool) ? "yes" : "no") + "\n";
      for (const auto& t : list) {
        j["towers"].push_back(tower_json(t));
        text += tower_text(t) + "\n";
      }
      emit(common, j, text);
    } else if (fund->parsed()) {
      GenSet g = load_input(common);
      Rat x = parse_rat(point);
      Json j = Json::array();
      std::string text;
      for (std::size_t i = 0; i < g.generators.size(); ++i)
        for (const auto& a : orbitals(g.generators[i]))
          if (a.contains(x)) {
            auto d = fundamental_domain(x, g.generators[i], a);
            j.push_back({{"map", g.label(i)}, {"orbital", to_json(a)}, {"domain", to_json(d)}});
            text += g.label(i) + " on " + to_string(a) + ": " + to_string(d) + "\n";
          }
      emit(common, j, text);
    } else if (wit->parsed()) {
      GenSet g = load_input(common);
      Json j = Json::array();
      std::string text;
      for (const auto& t : maximal_towers(signed_orbitals(g.generators))) {
        auto w = witness_intervals(t);
        Json ws = Json::array();
        for (const auto& a : w) ws.push_back(to_json(a));
        j.push_back({{"tower", tower_json(t)}, {"witnesses", std::move(ws)}});
        text += tower_text(t) + "\n ";
        for (const auto& a : w) text += " " + to_string(a);
        text += "\n";
      }
      emit(common, j, text);
    } else if (bounce->parsed() || corner->parsed()) {
      auto [f, g] = first_two(load_input(common));
      auto pts = bounce->parsed() ? bouncepoints(f, g) : corners(f, g);
      emit(common, rats(pts), join(pts) + "\n");
    } else if (phi->parsed()) {
      GenSet g = load_input(common);
      auto orbs0 = orbitals(g.generators.front());
      if (orbs0.size() != 1) throw Error(ErrorKind::PreconditionViolated, "phi needs one-orbital maps");
      auto report = check_injectivity(g.generators, orbs0.front());
      Json j;
      j["orbital"] = to_json(orbs0.front());
      j["total"] = report.total;
      j["distinct_codes"] = report.distinct_codes;
      j["collisions"] = report.collisions;
      j["codes"] = Json::array();
      std::string text;
      for (std::size_t i = 0; i < report.codes.size(); ++i) {
        j["codes"].push_back(to_json(report.codes[i]));
        text += g.label(i) + ": " + to_string(report.codes[i]) + "\n";
      }
      text += std::to_string(report.total) + " bumps, " + std::to_string(report.distinct_codes) + " distinct codes, " +
              std::to_string(report.collisions.size()) + " collisions\n";
      emit(common, j, text);
      if (!report.collisions.empty()) return kVerifyFailed;
    } else if (build->parsed()) {
      auto need = [&](std::size_t n) {
        if (args.size() != n + 1) throw Error(ErrorKind::PreconditionViolated, args[0] + " takes " + std::to_string(n) + " arguments");
      };
      GenSet g;
      const std::string& name = args[0];
      if (name == "model") {
        need(0);
        g = {"model", {model_bump()}, {"a"}};
      } else if (name == "one-bump") {
        need(2);
        g = {"one-bump", {one_bump(Interval(parse_rat(args[1]), parse_rat(args[2])))}, {"b"}};
      } else if (name == "crossing") {
        need(0);
        auto [f, h] = crossing_pair();
        g = {"crossing", {f, h}, {"f", "g"}};
      } else if (name == "nested") {
        need(1);
        g = nested_tower(static_cast<unsigned>(std::stoul(args[1]))).generators;
      } else if (name == "wreath") {
        need(4);
        g = wreath_generators(Interval(parse_rat(args[1]), parse_rat(args[2])),
                              Interval(parse_rat(args[3]), parse_rat(args[4])));
      } else {
        throw Error(ErrorKind::PreconditionViolated, "unknown construction '" + name + "'");
      }
      emit(common, genset_to_json(g), genset_to_text(g));
    } else if (svg->parsed()) {
      GenSet g = load_input(common);
      std::vector<std::pair<std::string, PLMap>> named;
      for (std::size_t i = 0; i < g.generators.size(); ++i) named.emplace_back(g.label(i), g.generators[i]);
      SvgOptions options;
      options.scale = scale;
      emit(common, render_svg(named, options));
    } else if (verify->parsed()) {
      auto suites = args.empty() ? known_suites() : args;
      Report report = run_verify(suites, seed, size, timings);
      emit(common, report.to_json(), report.to_text());
      return report.passed() ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ResourceLimit ? kResourceLimit : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
