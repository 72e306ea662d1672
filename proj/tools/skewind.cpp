// Command-line front end. Talks to the library only through skewind.h.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewind/skewind.h"

namespace {

  using json = nlohmann::json;
  namespace fs = std::filesystem;

  enum Exit : int {
    exit_ok           = 0,
    exit_usage        = 2,
    exit_malformed    = 3,
    exit_bound        = 4,
    exit_precondition = 5,
    exit_internal     = 6,
    exit_first_check  = 10,
  };

  // Thrown to stop a command with a given exit code.
  struct Failure {
    int         code;
    std::string kind;
    std::string message;
  };

  int exit_of(skw_status s) {
    switch (s) {
      case SKW_OK:
        return exit_ok;
      case SKW_ERR_MALFORMED:
        return exit_malformed;
      case SKW_ERR_BOUND:
        return exit_bound;
      case SKW_ERR_PRECONDITION:
      case SKW_ERR_UNDEFINED:
        return exit_precondition;
      case SKW_ERR_ARGUMENT:
        return exit_usage;
      case SKW_ERR_INTERNAL:
        break;
    }
    return exit_internal;
  }

  void check(skw_status s) {
    if (s != SKW_OK) {
      throw Failure{exit_of(s), skw_last_error_kind(), skw_last_error()};
    }
  }

  // Takes ownership of a string returned by the library.
  std::string take(char* s) {
    std::string out = s == nullptr ? std::string() : std::string(s);
    skw_string_free(s);
    return out;
  }

  template <typename T, void (*Free)(T*)>
  struct Deleter {
    void operator()(T* p) const {
      Free(p);
    }
  };
  template <typename T, void (*Free)(T*)>
  using Handle = std::unique_ptr<T, Deleter<T, Free>>;

  using SkewHandle     = Handle<skw_skew_lattice, skw_skew_lattice_free>;
  using GroupoidHandle = Handle<skw_groupoid, skw_groupoid_free>;
  using SystemHandle   = Handle<skw_system, skw_system_free>;
  using AlgebraHandle  = Handle<skw_algebra, skw_algebra_free>;
  using ReportHandle   = Handle<skw_report, skw_report_free>;
  using SuiteHandle    = Handle<skw_model_suite, skw_model_suite_free>;

  std::string fnv1a64(std::string const& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  struct Run {
    std::string              command;
    std::vector<std::string> args;
    json                     inputs = json::array();
    json                     sections;
    json                     result;
    std::string              summary;

    std::string read(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Failure{exit_malformed, "malformed-input", "cannot read " + path};
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      inputs.push_back({{"path", path}, {"fnv1a64", fnv1a64(ss.str())}});
      return ss.str();
    }

    // Records a checker report; returns the exit code it implies.
    int take_report(skw_report* raw) {
      ReportHandle r(raw);
      char*        text = nullptr;
      check(skw_report_to_json(r.get(), &text));
      sections = json::parse(take(text));
      check(skw_report_summary(r.get(), &text));
      summary += take(text);
      int const k = skw_report_first_failing_section(r.get());
      return k < 0 ? exit_ok : exit_first_check + k;
    }
  };

  template <typename H, typename Load>
  H load(Run& run, std::string const& path, Load loader) {
    auto const text = run.read(path);
    typename H::pointer raw = nullptr;
    check(loader(text.c_str(), &raw));
    return H(raw);
  }

  void write_file(fs::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text << '\n')) {
      throw Failure{exit_internal, "io", "cannot write " + path.string()};
    }
  }

  std::string file_stem(std::string const& path) {
    return fs::path(path).stem().string();
  }

  struct Options {
    std::string              format = "json";
    std::optional<long long> seed;
    std::size_t              enum_n    = 0;
    std::size_t              max       = 4;
    std::size_t              max_group = 6;
    std::size_t              max_band  = 4;
    std::string              file;
    std::string              out_dir;
  };

  int enum_command(Run& run, Options const& o, bool skew) {
    char* text = nullptr;
    check(skew ? skw_enumerate_skew_lattices(o.enum_n, o.max, &text)
               : skw_enumerate_bands(o.enum_n, o.max, &text));
    auto const list = json::parse(take(text));
    run.result      = {{"order", o.enum_n}, {"count", list.size()},
                       {skew ? "skew_lattices" : "bands", list}};
    run.summary     = std::to_string(list.size()) + (skew ? " skew lattices" : " bands")
                  + " of order " + std::to_string(o.enum_n) + " up to isomorphism\n";
    return exit_ok;
  }

  int check_command(Run& run, Options const& o) {
    skw_report* r = nullptr;
    if (run.command == "check-skew") {
      auto s = load<SkewHandle>(run, o.file, skw_skew_lattice_from_json);
      check(skw_check_skew_lattice(s.get(), &r));
    } else if (run.command == "check-groupoid") {
      auto g = load<GroupoidHandle>(run, o.file, skw_groupoid_from_json);
      check(skw_check_groupoid(g.get(), &r));
    } else if (run.command == "check-system") {
      auto s = load<SystemHandle>(run, o.file, skw_system_from_json);
      check(skw_check_system(s.get(), &r));
    } else {
      auto a = load<AlgebraHandle>(run, o.file, skw_algebra_from_json);
      check(skw_check_algebra(a.get(), &r));
    }
    return run.take_report(r);
  }

  int build_algebra_command(Run& run, Options const& o) {
    auto         s   = load<SystemHandle>(run, o.file, skw_system_from_json);
    skw_algebra* raw = nullptr;
    check(skw_build_algebra(s.get(), &raw));
    AlgebraHandle a(raw);
    char*         text = nullptr;
    check(skw_algebra_to_json(a.get(), &text));
    run.result = json::parse(take(text));
    if (!o.out_dir.empty()) {
      fs::create_directories(o.out_dir);
      write_file(fs::path(o.out_dir) / (file_stem(o.file) + ".algebra.json"),
                 run.result.dump(2));
    }
    run.summary = "algebra of order " + std::to_string(run.result["order"].get<int>())
                  + " built from a verified system\n";
    return exit_ok;
  }

  int reconstruct_command(Run& run, Options const& o) {
    auto        a   = load<AlgebraHandle>(run, o.file, skw_algebra_from_json);
    skw_system* raw = nullptr;
    check(skw_reconstruct(a.get(), &raw));
    SystemHandle s(raw);
    char*        text = nullptr;
    check(skw_system_to_json(s.get(), &text));
    run.result = json::parse(take(text));
    if (!o.out_dir.empty()) {
      fs::create_directories(o.out_dir);
      write_file(fs::path(o.out_dir) / (file_stem(o.file) + ".system.json"),
                 run.result.dump(2));
    }
    run.summary = "groupoid with "
                  + std::to_string(run.result["groupoid"]["objects"].get<int>())
                  + " objects reconstructed\n";
    return exit_ok;
  }

  int roundtrip_command(Run& run, Options const& o) {
    auto const text = run.read(o.file);
    json       doc;
    try {
      doc = json::parse(text);
    } catch (json::exception const& e) {
      throw Failure{exit_malformed, "malformed-input", e.what()};
    }
    auto has = [&](char const* marker, char const* key) {
      return doc.contains(marker) || (doc.contains(key) && doc[key].is_object());
    };
    bool const system  = has("restL", "system");
    bool const algebra = has("star", "algebra");
    if (!system && !algebra) {
      throw Failure{exit_malformed, "malformed-input",
                    "file holds neither a system nor an algebra"};
    }
    run.result = json::object();
    if (system) {
      skw_system* raw = nullptr;
      check(skw_system_from_json(text.c_str(), &raw));
      SystemHandle s(raw);
      char*        iso = nullptr;
      check(skw_roundtrip_system(s.get(), &iso));
      run.result["groupoid"] = json::parse(take(iso));
      run.summary += "groupoid -> algebra -> groupoid: certified isomorphism\n";
    }
    if (algebra) {
      skw_algebra* raw = nullptr;
      check(skw_algebra_from_json(text.c_str(), &raw));
      AlgebraHandle a(raw);
      char*         iso = nullptr;
      check(skw_roundtrip_algebra(a.get(), &iso));
      run.result["algebra"] = json::parse(take(iso));
      run.summary += "algebra -> groupoid -> algebra: certified isomorphism\n";
    }
    return exit_ok;
  }

  int gen_models_command(Run& run, Options const& o) {
    skw_model_suite* raw = nullptr;
    check(skw_generate_models(o.max_group, o.max_band, &raw));
    SuiteHandle suite(raw);
    auto const  n     = skw_model_suite_size(suite.get());
    json        names = json::array();
    if (!o.out_dir.empty()) {
      fs::create_directories(o.out_dir);
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::string const name = skw_model_suite_name(suite.get(), i);
      names.push_back(name);
      if (!o.out_dir.empty()) {
        char* text = nullptr;
        check(skw_model_suite_instance_json(suite.get(), i, &text));
        std::string file = name;
        for (char& c : file) {
          if (c == '/') {
            c = '_';
          }
        }
        write_file(fs::path(o.out_dir) / (file + ".json"),
                   json::parse(take(text)).dump(2));
      }
    }
    run.result  = {{"max_group", o.max_group}, {"max_band", o.max_band},
                   {"count", n}, {"instances", names}};
    run.summary = std::to_string(n) + " models generated\n";
    return exit_ok;
  }

  int witness_anti_command(Run& run, Options const& o) {
    auto  a     = load<AlgebraHandle>(run, o.file, skw_algebra_from_json);
    int   found = 0;
    char* text  = nullptr;
    check(skw_anti_automorphism_witness(a.get(), &found, &text));
    run.result = {{"found", found != 0}};
    if (found != 0) {
      auto const w         = json::parse(take(text));
      run.result["witness"] = w;
      run.summary = "(s o t)* != t* o s* at s=" + w["s"].dump() + ", t=" + w["t"].dump()
                    + " for " + w["op"].get<std::string>() + "\n";
    } else {
      run.summary = "star reverses both products\n";
    }
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew inductive groupoids and their (2,2,1)-algebras", "skewind"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Report format on standard output")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "Reserved; every command is deterministic");

  struct Sub {
    char const* name;
    char const* help;
    enum { none, order, file, models } kind;
  };
  std::vector<Sub> const subs{
      {"enum-bands", "Bands of order N up to isomorphism", Sub::order},
      {"enum-skew", "Skew lattices of order N up to isomorphism", Sub::order},
      {"check-skew", "Check a skew lattice", Sub::file},
      {"check-groupoid", "Check a groupoid", Sub::file},
      {"check-system", "Run every groupoid-side checker on a system", Sub::file},
      {"check-algebra", "Check axioms (i)-(viii) and the plus/minus identities",
       Sub::file},
      {"build-algebra", "Pseudoproduct algebra of a verified system", Sub::file},
      {"reconstruct", "Groupoid of an algebra", Sub::file},
      {"roundtrip", "Certify the groupoid/algebra round trips", Sub::file},
      {"gen-models", "Semidirect product models", Sub::models},
      {"witness-anti", "A pair on which star is not an anti-automorphism",
       Sub::file},
  };
  for (auto const& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    switch (s.kind) {
      case Sub::order:
        sub->add_option("N", o.enum_n, "Order")->required();
        sub->add_option("--max", o.max, "Enumeration bound");
        break;
      case Sub::file:
        sub->add_option("FILE", o.file, "Input JSON")->required();
        sub->add_option("--out", o.out_dir, "Directory for output files");
        break;
      case Sub::models:
        sub->add_option("--max-group", o.max_group, "Largest group order");
        sub->add_option("--max-band", o.max_band, "Largest skew lattice order");
        sub->add_option("--out", o.out_dir, "Directory for one JSON per model");
        break;
      case Sub::none:
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  Run run;
  run.command = app.get_subcommands().front()->get_name();
  for (int i = 1; i < argc; ++i) {
    run.args.emplace_back(argv[i]);
  }

  auto const start  = std::chrono::steady_clock::now();
  int        code   = exit_ok;
  json       error  = nullptr;
  try {
    if (run.command == "enum-bands" || run.command == "enum-skew") {
      code = enum_command(run, o, run.command == "enum-skew");
    } else if (run.command.rfind("check-", 0) == 0) {
      code = check_command(run, o);
    } else if (run.command == "build-algebra") {
      code = build_algebra_command(run, o);
    } else if (run.command == "reconstruct") {
      code = reconstruct_command(run, o);
    } else if (run.command == "roundtrip") {
      code = roundtrip_command(run, o);
    } else if (run.command == "gen-models") {
      code = gen_models_command(run, o);
    } else {
      code = witness_anti_command(run, o);
    }
  } catch (Failure const& f) {
    code        = f.code;
    error       = {{"kind", f.kind}, {"message", f.message}};
    run.summary = "error (" + f.kind + "): " + f.message + "\n";
  } catch (std::exception const& e) {
    code        = exit_internal;
    error       = {{"kind", "internal"}, {"message", e.what()}};
    run.summary = std::string("internal error: ") + e.what() + "\n";
  }
  auto const elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  json report{{"command", run.command},
              {"args", run.args},
              {"inputs", run.inputs},
              {"status", !error.is_null() ? "error" : code == exit_ok ? "pass" : "fail"},
              {"exit_code", code}};
  if (!run.sections.is_null()) {
    report["sections"] = run.sections;
  }
  if (!run.result.is_null()) {
    report["result"] = run.result;
  }
  if (!error.is_null()) {
    report["error"] = error;
  }
  if (o.seed) {
    report["seed"] = *o.seed;
  }
  report["timing_ms"] = elapsed;

  if (o.format == "json") {
    std::cout << report.dump(2) << '\n';
    std::cerr << run.summary;
  } else {
    std::cout << run.summary;
  }
  return code;
}
