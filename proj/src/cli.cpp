#include "filterless/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "filterless/clique.hpp"
#include "filterless/coloring.hpp"
#include "filterless/decision.hpp"
#include "filterless/error.hpp"
#include "filterless/independence.hpp"
#include "filterless/io.hpp"
#include "filterless/oracle.hpp"

namespace filterless::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  bool use_stdin = false;
  int root = 1;
  std::uint64_t seed = 1;
  std::string format;
  std::string out;
  bool validate = false;
  bool timing = false;
  int k = 3;
  std::string kind;
  std::string oracle_what;
  int gen_m = 1;
  int gen_n = 1;
  int gen_t = 1;
};

// Thrown for a witness that fails its replayed check.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> one_based(const std::vector<int>& ids) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(id + 1);
  return out;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw ValidationFailure(what);
}

void check_independent(const InterferenceDigraph& g,
                       const std::vector<RequestId>& ids) {
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      check(!g.adjacent(ids[a], ids[b]), "independent set has an edge");
    }
  }
}

void check_clique(const InterferenceDigraph& g,
                  const std::vector<RequestId>& ids) {
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      check(g.adjacent(ids[a], ids[b]), "clique misses an edge");
    }
  }
}

void put_coloring(Json& doc, const Coloring& c) {
  doc["colours"] = c.num_colours;
  doc["colouring"] = c.colour;
  if (!c.tags.empty()) {
    std::vector<std::string> tags;
    for (ColourType t : c.tags) tags.emplace_back(colour_type_name(t));
    doc["tags"] = tags;
  }
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  auto scalar = [](const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  auto line = [&](const std::string& key, const Json& v) {
    out << key;
    if (v.is_array()) {
      for (const Json& item : v) out << ' ' << scalar(item);
    } else {
      out << ' ' << scalar(v);
    }
    out << '\n';
  };
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      for (const auto& [sub, v] : value.items()) line(key + "." + sub, v);
    } else {
      line(key, value);
    }
  }
  return out.str();
}

class Runner {
 public:
  Runner(const Options& opt, std::istream& in) : opt_(opt), in_(in) {}

  // Returns the document; sets `no` for a negative decision. `text` is set
  // when the text form is not the generic rendering.
  Json run(const std::string& command, bool& no, std::optional<std::string>& text);

 private:
  const Instance& instance();
  Vertex root();
  void oracle_checks(Json& doc, const std::string& command, int value);

  const Options& opt_;
  std::istream& in_;
  std::optional<Instance> inst_;
};

const Instance& Runner::instance() {
  if (inst_) return *inst_;
  std::string text;
  if (opt_.use_stdin) {
    text.assign(std::istreambuf_iterator<char>(in_), {});
  } else if (!opt_.input.empty()) {
    std::ifstream file(opt_.input);
    if (!file) {
      throw Error(ErrorKind::kParseError, "cannot open " + opt_.input);
    }
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    throw Error(ErrorKind::kBadParams, "no input: use --input FILE or --stdin");
  }
  inst_ = parse_instance(text);
  return *inst_;
}

Vertex Runner::root() {
  Vertex z = opt_.root - 1;
  if (!instance().tree().contains(z)) {
    throw Error(ErrorKind::kInvalidVertex,
                "--root " + std::to_string(opt_.root) + " outside 1.." +
                    std::to_string(instance().num_vertices()));
  }
  return z;
}

void Runner::oracle_checks(Json& doc, const std::string& command, int value) {
  if (!opt_.validate) return;
  const Instance& inst = instance();
  const int m = inst.num_requests();
  if (m == 0) {
    doc["validate"] = "ok";
    return;
  }
  if (command == "alpha" && m <= kOracleMaxSet) {
    check(oracle_alpha(inst).size == value, "alpha differs from the oracle");
  } else if (command == "omega" && m <= kOracleMaxSet) {
    check(oracle_omega(inst).size == value, "omega differs from the oracle");
  } else if ((command == "chi-approx" || command == "greedy-mis") &&
             m <= kOracleMaxChi) {
    int chi = oracle_chi(inst).num_colours;
    check(value >= chi, "fewer colours than the oracle chromatic number");
    if (command == "chi-approx") check(value <= 2 * chi, "more than 2 chi");
  } else if (command == "chi-2omega" && m <= kOracleMaxSet) {
    check(value <= 2 * oracle_omega(inst).size, "more than 2 omega colours");
  } else if (command == "decide" && m <= kOracleMaxChi) {
    bool yes = value != 0;
    check(yes == (oracle_chi(inst).num_colours <= opt_.k),
          "decision differs from the oracle");
  } else {
    doc["validate"] = "skipped";
    return;
  }
  doc["validate"] = "ok";
}

Json Runner::run(const std::string& command, bool& no,
                 std::optional<std::string>& text) {
  Json doc;
  doc["command"] = command;

  if (command == "gen") {
    GenParams params{opt_.gen_m, opt_.gen_n, opt_.gen_t};
    Instance inst = generate(opt_.kind, params, opt_.seed);
    std::string body = serialize_instance(inst);
    doc["kind"] = opt_.kind;
    doc["seed"] = opt_.seed;
    doc["instance"] = body;
    std::ostringstream t;
    t << "c gen " << opt_.kind << " m=" << opt_.gen_m << " n=" << opt_.gen_n
      << " t=" << opt_.gen_t << " seed=" << opt_.seed << '\n'
      << body;
    text = t.str();
    return doc;
  }

  const Instance& inst = instance();
  const int m = inst.num_requests();
  doc["requests"] = m;

  if (command == "digraph") {
    InterferenceDigraph g = build_digraph(inst);
    Json arcs = Json::array();
    std::ostringstream t;
    t << "d " << m << ' ' << g.num_arcs() << '\n';
    for (auto [i, j] : g.arcs()) {
      arcs.push_back({i + 1, j + 1});
      t << "a " << i + 1 << ' ' << j + 1 << '\n';
    }
    doc["arcs"] = arcs;
    text = t.str();
    return doc;
  }

  if (command == "reduce") {
    auto [reduced, mapping] = reduce_instance(inst);
    std::string body = serialize_instance(reduced);
    doc["vertices_before"] = inst.num_vertices();
    doc["vertices_after"] = reduced.num_vertices();
    doc["mapping"] = one_based(mapping.forward);
    doc["instance"] = body;
    text = "c reduced " + std::to_string(inst.num_vertices()) + " -> " +
           std::to_string(reduced.num_vertices()) + " vertices\n" + body;
    return doc;
  }

  InterferenceDigraph g = build_digraph(inst);

  if (command == "alpha") {
    IndependentSet set = max_independent_set(inst);
    check_independent(g, set.members);
    doc["answer"] = set.members.size();
    doc["members"] = one_based(set.members);
    doc["source"] = std::string(independent_set_source_name(set.source));
    oracle_checks(doc, command, static_cast<int>(set.members.size()));
  } else if (command == "omega") {
    Clique clique = max_clique(inst);
    check_clique(g, clique.members);
    doc["answer"] = clique.members.size();
    doc["members"] = one_based(clique.members);
    doc["bough"] = {clique.leaf_a + 1, clique.leaf_b + 1};
    doc["pivot"] = clique.pivot + 1;
    oracle_checks(doc, command, static_cast<int>(clique.members.size()));
  } else if (command == "chi-approx" || command == "chi-2omega" ||
             command == "greedy-mis") {
    Coloring c;
    if (command == "chi-approx") {
      doc["root"] = root() + 1;
      c = color_2approx(inst, root());
    } else if (command == "chi-2omega") {
      c = color_2omega(inst);
    } else {
      c = greedy_mis_color(inst);
    }
    check(is_proper(g, c), "colouring is not proper");
    doc["answer"] = c.num_colours;
    put_coloring(doc, c);
    oracle_checks(doc, command, c.num_colours);
  } else if (command == "decide") {
    doc["k"] = opt_.k;
    doc["root"] = root() + 1;
    std::optional<Coloring> c = decide(inst, opt_.k, root());
    if (c) {
      check(is_proper(g, *c) && c->num_colours <= std::max(opt_.k, 0),
            "colouring is not proper within budget");
      doc["answer"] = "yes";
      put_coloring(doc, *c);
    } else {
      doc["answer"] = "no";
      no = true;
    }
    oracle_checks(doc, command, c ? 1 : 0);
  } else if (command == "oracle") {
    doc["oracle"] = opt_.oracle_what;
    if (opt_.oracle_what == "alpha" || opt_.oracle_what == "omega") {
      OracleSet set = opt_.oracle_what == "alpha" ? oracle_alpha(inst)
                                                  : oracle_omega(inst);
      doc["answer"] = set.size;
      doc["members"] = one_based(set.members);
    } else if (opt_.oracle_what == "chi") {
      Coloring c = oracle_chi(inst);
      doc["answer"] = c.num_colours;
      put_coloring(doc, c);
    } else if (opt_.oracle_what == "digraph") {
      Json arcs = Json::array();
      std::ostringstream t;
      std::vector<std::pair<int, int>> list;
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if (i != j && oracle_interferes(inst.tree(), inst.requests()[i],
                                          inst.requests()[j])) {
            list.emplace_back(i, j);
          }
        }
      }
      t << "d " << m << ' ' << list.size() << '\n';
      for (auto [i, j] : list) {
        arcs.push_back({i + 1, j + 1});
        t << "a " << i + 1 << ' ' << j + 1 << '\n';
      }
      doc["arcs"] = arcs;
      text = t.str();
    } else {
      throw Error(ErrorKind::kBadParams,
                  "unknown oracle '" + opt_.oracle_what + "'");
    }
  }
  return doc;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args,
                          std::istream& in) {
  CommandResult result;
  Options opt;
  if (const char* env = std::getenv("FILTERLESS_FORMAT")) opt.format = env;
  if (opt.format.empty()) opt.format = "text";

  CLI::App app{"Interference quantities for requests on bidirected trees",
               "filterless"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--input", opt.input, "Instance file");
  app.add_flag("--stdin", opt.use_stdin, "Read the instance from stdin");
  app.add_option("--root", opt.root, "Root vertex (1-based)");
  app.add_option("--seed", opt.seed, "Generator seed");
  app.add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opt.out, "Write the result to a file");
  app.add_flag("--validate", opt.validate,
               "Replay oracle checks when the instance is small enough");
  app.add_flag("--timing", opt.timing, "Report the running time");

  app.add_subcommand("digraph", "Interference digraph");
  app.add_subcommand("alpha", "Maximum independent set");
  app.add_subcommand("omega", "Maximum clique");
  app.add_subcommand("chi-approx", "2-approximate colouring at --root");
  app.add_subcommand("chi-2omega", "Colouring with at most 2 omega colours");
  app.add_subcommand("greedy-mis", "Colouring by repeated maximum MIS");
  auto* decide_cmd = app.add_subcommand("decide", "k-colourability");
  decide_cmd->add_option("--k", opt.k, "Colour budget")->required();
  app.add_subcommand("reduce", "Contract unused edges");
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", opt.kind, "star_kmn, c5kt, fig1 or random")
      ->required();
  gen_cmd->add_option("--m", opt.gen_m, "Converging requests / request count");
  gen_cmd->add_option("--n", opt.gen_n, "Diverging requests / vertex count");
  gen_cmd->add_option("--t", opt.gen_t, "Blow-up factor for c5kt");
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference");
  oracle_cmd->add_option("what", opt.oracle_what, "alpha, omega, chi, digraph")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? 0 : 2;
    return result;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    auto start = std::chrono::steady_clock::now();
    Runner runner(opt, in);
    bool no = false;
    std::optional<std::string> text;
    Json doc = runner.run(command, no, text);
    if (opt.timing) {
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      doc["time_ms"] = ms;
      if (text) *text += "c time_ms " + std::to_string(ms) + "\n";
    }
    std::string body = opt.format == "json" ? doc.dump(2) + "\n"
                       : text               ? *text
                                            : render_text(doc);
    if (!opt.out.empty()) {
      std::ofstream file(opt.out);
      if (!file) throw Error(ErrorKind::kBadParams, "cannot write " + opt.out);
      file << body;
    } else {
      result.out = body;
    }
    result.exit_code = no ? 1 : 0;
  } catch (const ValidationFailure& e) {
    result.err = std::string("validation failed: ") + e.what() + "\n";
    result.exit_code = 2;
  } catch (const std::exception& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
  }
  return result;
}

}  // namespace filterless::cli
