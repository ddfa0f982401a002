// Command-line front end over the C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathlab/pathlab.h"

using Json = nlohmann::ordered_json;

namespace {

struct Failure {
  int code;
};

// Owns a string returned by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { pl_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int exit_code(pl_status s) { return s == PL_MALFORMED ? 1 : s == PL_SEMANTIC ? 2 : 3; }

void check(pl_status s) {
  if (s == PL_OK) return;
  const char* e = pl_last_error();
  std::cerr << (e ? e : R"({"error":"Internal","message":"unknown"})") << "\n";
  throw Failure{exit_code(s)};
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << Json{{"error", "MalformedInput"}, {"message", message}}.dump() << "\n";
  throw Failure{1};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) usage_error("cannot write file '" + path + "'");
}

int env_threads() {
  const char* v = std::getenv("HDA_PATHLAB_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0 || n > 1024) usage_error("HDA_PATHLAB_THREADS must be an integer in [0, 1024]");
  return static_cast<int>(n);
}

struct Model {
  pl_model* m = nullptr;
  std::string text;
  Model(const std::string& path, bool strict) {
    text = read_text(path);
    check(pl_model_load_json(text.c_str(), strict, &m));
  }
  ~Model() { pl_model_free(m); }
};

std::string digest(const pl_model* m) {
  Owned d;
  check(pl_model_digest(m, &d.p));
  return d.str();
}

Json timings() { return Json::parse(pl_last_timings()); }

std::string join(const Json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += ", ";
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

std::string homology_line(const Json& row) {
  const auto& h = row["homology"];
  std::string s = "n=" + row["length"].dump() + ": " + row["objects"].dump() + " objects, " +
                  row["morphisms"].dump() + " morphisms; betti [" + join(h["betti"]) + "]";
  bool torsion = false;
  for (const auto& t : h["torsion"]) torsion = torsion || !t.empty();
  if (torsion) s += ", torsion " + h["torsion"].dump();
  return s + ", euler " + h["euler"].dump();
}

std::string pretty(const std::string& cmd, const Json& r) {
  std::ostringstream os;
  if (cmd == "validate") {
    os << (r["valid"].get<bool>() ? "valid" : "invalid") << "; cubes by dimension [" << join(r["cubes"])
       << "]\n";
    for (const auto& v : r["violations"]) os << "  " << v["message"].get<std::string>() << "\n";
  } else if (cmd == "chains") {
    os << r["count"].dump() << " cube chains of length " << r["length"].dump() << "\n";
    if (r.contains("chains"))
      for (const auto& c : r["chains"]) os << "  (" << join(c["cubes"]) << ")\n";
  } else if (cmd == "category") {
    os << "Ch(K;" << r["length"].dump() << "): " << r["objects"].dump() << " objects, "
       << r["morphisms"].dump() << " non-identity morphisms\n";
  } else if (cmd == "homology") {
    os << homology_line(r) << "\n";
  } else if (cmd == "exec-space") {
    if (r["rows"].empty()) os << "no cube chains up to length " << r["max_length"].dump() << "\n";
    for (const auto& row : r["rows"]) os << homology_line(row) << "\n";
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Execution-space analysis of higher dimensional automata"};
  app.require_subcommand(1);
  bool pretty_out = false;
  app.add_flag("--pretty", pretty_out, "Human-readable summary instead of JSON");

  std::string model_path, path_file, dot_file, json_file, triplet_file, op, kind;
  int length = -1, max_length = -1;
  bool list = false, iterate = false;
  std::vector<int> dims;

  auto* validate = app.add_subcommand("validate", "Check the face identities of a model");
  validate->add_option("model", model_path, "Model JSON file")->required();

  auto* chains = app.add_subcommand("chains", "Count cube chains of a given length");
  chains->add_option("model", model_path, "Model JSON file")->required();
  chains->add_option("--length,-n", length, "Total dimension n")->required()->check(CLI::NonNegativeNumber);
  chains->add_flag("--list", list, "List the chains");

  auto* category = app.add_subcommand("category", "Build the cube chain category");
  category->add_option("model", model_path, "Model JSON file")->required();
  category->add_option("--length,-n", length, "Total dimension n")->required()->check(CLI::NonNegativeNumber);
  category->add_option("--dot", dot_file, "Write Graphviz output to this file");
  category->add_option("--json", json_file, "Write the category JSON to this file");

  auto* homology = app.add_subcommand("homology", "Integer homology of the nerve");
  homology->add_option("model", model_path, "Model JSON file")->required();
  homology->add_option("--length,-n", length, "Total dimension n")->required()->check(CLI::NonNegativeNumber);
  homology->add_option("--triplets", triplet_file, "Write boundary matrices as sparse triplets");

  auto* exec = app.add_subcommand("exec-space", "Homology for every length up to a bound");
  exec->add_option("model", model_path, "Model JSON file")->required();
  exec->add_option("--max-length,-N", max_length, "Largest length")->required()->check(CLI::NonNegativeNumber);

  auto* tamify = app.add_subcommand("tamify", "Deform a path to a tame one");
  tamify->add_option("model", model_path, "Model JSON file")->required();
  tamify->add_option("--path,-p", path_file, "Path JSON file")->required();
  tamify->add_flag("--iterate", iterate, "Iterate until the vertex set stabilizes");

  auto* path = app.add_subcommand("path", "Operations on a single path");
  path->add_option("op", op, "length|naturalize|vertices|tame|track|actions|progress|minimal|regular")
      ->required()
      ->check(CLI::IsMember({"length", "naturalize", "vertices", "tame", "track", "actions", "progress",
                             "minimal", "regular"}));
  path->add_option("model", model_path, "Model JSON file")->required();
  path->add_option("--path,-p", path_file, "Path JSON file")->required();

  auto* generate = app.add_subcommand("generate", "Print a generated model");
  generate->add_option("kind", kind, "cube|boundary|wedge|double-cube|swiss-flag")
      ->required()
      ->check(CLI::IsMember({"cube", "boundary", "wedge", "double-cube", "swiss-flag"}));
  generate->add_option("dims", dims, "Dimension(s)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", "MalformedInput"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  try {
    const int threads = env_threads();
    std::string echo;
    for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);

    auto sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();

    if (cmd == "generate") {
      pl_model* m = nullptr;
      check(pl_model_generate(kind.c_str(), dims.data(), dims.size(), &m));
      Owned j;
      const pl_status s = pl_model_to_json(m, &j.p);
      pl_model_free(m);
      check(s);
      std::cout << j.str() << "\n";
      return 0;
    }

    Model model(model_path, cmd != "validate");
    Owned out;
    Json extra_timings = Json::object();
    int code = 0;

    if (cmd == "validate") {
      check(pl_validate(model.m, &out.p));
    } else if (cmd == "chains") {
      check(pl_chains(model.m, length, list, &out.p));
    } else if (cmd == "category") {
      Owned dot;
      check(pl_category(model.m, length, threads, &out.p, dot_file.empty() ? nullptr : &dot.p));
      if (!dot_file.empty()) write_text(dot_file, dot.str());
      if (!json_file.empty()) write_text(json_file, Json::parse(out.str())["category"].dump(2) + "\n");
    } else if (cmd == "homology") {
      Owned trip;
      check(pl_homology(model.m, length, threads, &out.p, triplet_file.empty() ? nullptr : &trip.p));
      if (!triplet_file.empty()) write_text(triplet_file, trip.str());
    } else if (cmd == "exec-space") {
      check(pl_exec_space(model.m, max_length, threads, &out.p));
    } else if (cmd == "tamify") {
      const auto text = read_text(path_file);
      check(pl_tamify(model.m, text.c_str(), iterate, &out.p));
    } else if (cmd == "path") {
      const auto text = read_text(path_file);
      check(pl_path_op(model.m, text.c_str(), op.c_str(), &out.p));
    }

    Json result = Json::parse(out.str());
    if (cmd == "category" && (!dot_file.empty() || !json_file.empty())) result.erase("category");
    if (cmd == "validate" && !result["valid"].get<bool>()) code = 2;

    if (pretty_out) {
      std::cout << pretty(cmd, result);
    } else {
      Json report{{"command", echo},
                  {"input_digest", digest(model.m)},
                  {"timings_ms", cmd == "validate" ? extra_timings : timings()},
                  {"result", result}};
      std::cout << report.dump(2) << "\n";
    }
    return code;
  } catch (const Failure& f) {
    return f.code;
  }
}
