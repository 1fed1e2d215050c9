// Command line front end. Talks to the library exclusively through the C
// API in shorttoric.h; everything here is argument handling and formatting.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shorttoric.h"

namespace {

using nlohmann::json;

struct PosetHandle {
  st_poset* p = nullptr;
  ~PosetHandle() { st_poset_free(p); }
};

struct TextHandle {
  char* text = nullptr;
  ~TextHandle() { st_text_free(text); }
  std::string str() const { return text ? std::string(text) : std::string(); }
};

[[noreturn]] void die(st_status status) {
  // the message already leads with the error name
  std::cerr << "error: " << st_last_error_message() << "\n";
  (void)status;
  std::exit(2);
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(2);
  }
  out << text << "\n";
}

PosetHandle load_poset(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_stream(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot read " << path << "\n";
      std::exit(2);
    }
    text = read_stream(in);
  }
  PosetHandle handle;
  st_status status = st_poset_parse_json(text.c_str(), &handle.p);
  if (status != ST_OK) die(status);
  return handle;
}

// The route each invariant is computed by; reports carry these tags.
const char* route_of(const std::string& what) {
  if (what == "flag-f" || what == "flag-h" || what == "flag-L") return "chain-count-transform";
  if (what == "cd-index") return "ab-ce-cd-rewriting";
  if (what == "toric-f" || what == "toric-g" || what == "toric-h")
    return "intertwined-recurrence";
  if (what == "st") return "fundamental-recurrence";
  return "unknown";
}

std::string render_table(const json& j, int indent = 0) {
  std::ostringstream os;
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_primitive())
        os << pad << it.key() << ": " << it.value().dump() << "\n";
      else
        os << pad << it.key() << ":\n" << render_table(it.value(), indent + 2);
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive())
        os << pad << "- " << v.dump() << "\n";
      else
        os << pad << "-\n" << render_table(v, indent + 2);
    }
  } else {
    os << pad << j.dump() << "\n";
  }
  return os.str();
}

std::string render(const json& j, const std::string& format) {
  return format == "table" ? render_table(j) : j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"poset invariants: flag vectors, cd-index, toric and short toric polynomials"};
  app.require_subcommand(1);

  std::string output;
  std::string format = "json";
  app.add_option("--output", output, "write to this file instead of stdout");
  app.add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* gen = app.add_subcommand("generate", "emit a poset file for a named family");
  gen->fallthrough();
  std::string family;
  long param = 0;
  std::string dual_input;
  gen->add_option("family", family,
                  "boolean | cube | crosspolytope | polygon | chain | dual-of:<file>")
      ->required();
  gen->add_option("param", param, "rank / dimension / gon count");

  auto* comp = app.add_subcommand("compute", "compute invariants of a poset file");
  comp->fallthrough();
  std::string input;
  std::vector<std::string> what;
  comp->add_option("--input", input, "poset JSON file (default stdin)");
  comp->add_option("what", what,
                   "flag-f flag-h flag-L cd-index toric-f toric-g toric-h st")
      ->required();

  auto* ver = app.add_subcommand("verify", "run a cross-formula verification suite");
  ver->fallthrough();
  std::string suite = "all";
  long max_rank = 0;
  ver->add_option("--suite", suite,
                  "four-routes | structural | reflection | bases | dual-simplicial | table1 | "
                  "gessel | appendix | all");
  ver->add_option("--max-rank", max_rank, "lower the per-family caps");

  auto* rep = app.add_subcommand("report", "run every suite and emit the full report");
  rep->fallthrough();
  rep->add_option("--max-rank", max_rank, "lower the per-family caps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed()) {
    PosetHandle handle;
    if (family.rfind("dual-of:", 0) == 0) {
      PosetHandle base = load_poset(family.substr(8));
      st_status status = st_poset_dual(base.p, &handle.p);
      if (status != ST_OK) die(status);
    } else {
      st_status status = st_poset_generate(family.c_str(), param, &handle.p);
      if (status != ST_OK) die(status);
    }
    TextHandle text;
    st_status status = st_poset_canonical_json(handle.p, &text.text);
    if (status != ST_OK) die(status);
    write_output(text.str(), output);
    return 0;
  }

  if (comp->parsed()) {
    PosetHandle handle = load_poset(input);
    json result = json::object();
    json routes = json::object();
    for (const auto& w : what) {
      TextHandle value;
      st_status status = st_poset_compute(handle.p, w.c_str(), &value.text);
      if (status != ST_OK) die(status);
      result[w] = json::parse(value.str());
      routes[w] = route_of(w);
    }
    result["routes"] = routes;
    write_output(format == "table" ? render_table(result) : result.dump(), output);
    return 0;
  }

  if (ver->parsed()) {
    TextHandle text;
    int all_pass = 0;
    st_status status = st_run_suite(suite.c_str(), max_rank, &text.text, &all_pass);
    if (status != ST_OK) die(status);
    json j = json::parse(text.str());
    write_output(render(j, format), output);
    return all_pass ? 0 : 1;
  }

  if (rep->parsed()) {
    TextHandle text;
    int all_pass = 0;
    st_status status = st_full_report(max_rank, &text.text, &all_pass);
    if (status != ST_OK) die(status);
    json j = json::parse(text.str());
    write_output(render(j, format), output);
    return all_pass ? 0 : 1;
  }
  return 2;
}
