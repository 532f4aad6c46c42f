#include "specpos/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "specpos/catalog.hpp"
#include "specpos/census.hpp"
#include "specpos/codim.hpp"
#include "specpos/dsl.hpp"
#include "specpos/errors.hpp"
#include "specpos/report.hpp"

namespace specpos {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string property_list() {
  std::string out;
  for (Property p : all_properties()) {
    if (!out.empty()) out += ", ";
    out += property_name(p);
  }
  return out;
}

Property parse_property(const std::string& name) {
  if (auto p = property_from_string(name)) return *p;
  throw Error("unknown property '" + name + "' (expected one of: " +
              property_list() + ")");
}

// SPEC is a comma-separated list of property names, each optionally
// prefixed with '!' to require the property false.
void parse_search_spec(const std::string& spec,
                       std::vector<Property>& require_true,
                       std::vector<Property>& require_false) {
  size_t i = 0;
  while (i <= spec.size()) {
    size_t end = spec.find(',', i);
    if (end == std::string::npos) end = spec.size();
    std::string part = spec.substr(i, end - i);
    if (part.empty()) {
      throw Error("empty entry in search spec '" + spec + "'");
    }
    if (part[0] == '!') {
      require_false.push_back(parse_property(part.substr(1)));
    } else {
      require_true.push_back(parse_property(part));
    }
    if (end == spec.size()) break;
    i = end + 1;
  }
  if (require_true.empty() && require_false.empty()) {
    throw Error("empty search spec");
  }
}

std::string row_string(const std::vector<bool>& vec) {
  std::string s;
  for (bool b : vec) s += b ? 'T' : 'F';
  return s;
}

void print_census_text(std::ostream& out, int n,
                       const std::vector<CensusRow>& rows) {
  long classes = 0;
  for (const CensusRow& r : rows) classes += r.count;
  out << "census n = " << n << ": " << classes << " isomorphism "
      << (classes == 1 ? "class" : "classes") << ", " << rows.size()
      << (rows.size() == 1 ? " outcome" : " outcomes") << "\n";
  out << "columns: eqd eqc cat wbi bie dfm dad cad loc = ";
  bool first = true;
  for (const std::string& name : census_property_names()) {
    if (!first) out << ", ";
    out << name;
    first = false;
  }
  out << "\n";
  out << "eqd eqc cat wbi bie dfm dad cad loc   count\n";
  for (const CensusRow& r : rows) {
    for (bool b : r.property_vector) out << "  " << (b ? 'T' : 'F') << ' ';
    out << "  " << r.count << "\n";
  }
}

void print_census_structured(std::ostream& out, int n,
                             const std::vector<CensusRow>& rows) {
  long classes = 0;
  for (const CensusRow& r : rows) classes += r.count;
  out << "schema = specpos.census.v1\n";
  out << "n = " << n << "\n";
  out << "classes = " << classes << "\n";
  out << "properties =";
  for (const std::string& name : census_property_names()) out << " " << name;
  out << "\n";
  for (const CensusRow& r : rows) {
    out << "row = " << row_string(r.property_vector) << " " << r.count
        << "\n";
  }
}

struct Options {
  int cap = kDefaultCensusCap;
  int jobs = 1;
  std::string format = "text";
};

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Chain conditions on finite spectral spaces"};
  app.name("specpos");
  app.require_subcommand(1);

  Options opt;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
  };
  auto add_cap_jobs = [&](CLI::App* sub) {
    sub->add_option("--cap", opt.cap,
                    "Largest point count enumeration may touch")
        ->check(CLI::Range(1, kHardCensusCap))
        ->capture_default_str();
    sub->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)")
        ->check(CLI::Range(0, 1024))
        ->capture_default_str();
  };

  std::string file;
  std::string property;
  std::string name;
  std::string spec;
  int n = 0;

  CLI::App* analyze =
      app.add_subcommand("analyze", "Classify the space in a .space file");
  analyze->add_option("file", file, ".space file")->required();
  add_format(analyze);

  CLI::App* check = app.add_subcommand(
      "check",
      "Evaluate one property; exit 0 when it holds, 1 when it fails. "
      "Properties: " +
          property_list());
  check->add_option("property", property, "Property name")->required();
  check->add_option("file", file, ".space file")->required();

  CLI::App* codim = app.add_subcommand(
      "codim", "Find a codimension function or a certificate that none exists");
  codim->add_option("file", file, ".space file")->required();
  add_format(codim);

  CLI::App* catalog =
      app.add_subcommand("catalog", "Built-in example spaces");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List catalog names");
  CLI::App* catalog_show =
      catalog->add_subcommand("show", "Print a catalog space as .space text");
  catalog_show->add_option("name", name, "Catalog name")->required();
  catalog->add_subcommand(
      "verify", "Recompute every catalog entry against its frozen "
                "expectations; exit 1 on any mismatch");

  CLI::App* census_cmd = app.add_subcommand(
      "census",
      "Classify every isomorphism class of n-point spaces and tabulate "
      "the outcomes");
  census_cmd->add_option("n", n, "Point count")->required();
  add_cap_jobs(census_cmd);
  add_format(census_cmd);

  CLI::App* find_cmd = app.add_subcommand(
      "find-minimal",
      "Smallest space satisfying a comma-separated property spec "
      "('!' negates), e.g. weakly_biequidimensional,!biequidimensional");
  find_cmd->add_option("spec", spec, "Property spec")->required();
  add_cap_jobs(find_cmd);
  add_format(find_cmd);

  CLI::App* export_dot = app.add_subcommand(
      "export-dot", "Render the cover diagram as Graphviz text");
  export_dot->add_option("file", file, ".space file")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*analyze) {
      SpaceReport report = [&] {
        ParsedSpace parsed = parse_space(read_file(file));
        return analyze_space(std::move(parsed.name), std::move(parsed.poset));
      }();
      out << (opt.format == "structured" ? emit_report(report)
                                         : emit_report_text(report));
      return 0;
    }

    if (*check) {
      Property p = parse_property(property);
      ParsedSpace parsed = parse_space(read_file(file));
      bool value = evaluate_property(parsed.poset, p);
      out << property_name(p) << " = " << (value ? "true" : "false") << "\n";
      return value ? 0 : 1;
    }

    if (*codim) {
      ParsedSpace parsed = parse_space(read_file(file));
      CodimResult result = solve_codim_function(parsed.poset);
      SpaceReport partial{parsed.name, parsed.poset, AnalysisReport{},
                          result};
      if (opt.format == "structured") {
        out << "schema = specpos.codim.v1\n";
        out << "space = " << parsed.name << "\n";
        std::string full = emit_report(partial);
        size_t at = full.find("codim_function = ");
        out << full.substr(at);
      } else {
        std::string full = emit_report_text(partial);
        size_t at = full.find("codimension function: ");
        out << full.substr(at);
      }
      return 0;
    }

    if (*catalog) {
      if (*catalog->get_subcommand("list")) {
        for (const std::string& entry : catalog_names()) out << entry << "\n";
        return 0;
      }
      if (*catalog_show) {
        CatalogEntry entry = catalog_get(name);
        out << "# " << entry.name << ": " << entry.provenance << "\n";
        out << render(entry.poset, entry.name);
        return 0;
      }
      CatalogVerification v = catalog_verify_all();
      for (const CatalogMismatch& m : v.mismatches) {
        out << m.entry << ": " << m.field << " expected " << m.expected
            << ", got " << m.actual << "\n";
      }
      if (v.ok) {
        out << "catalog: ok (" << catalog_names().size() << " entries)\n";
        return 0;
      }
      out << "catalog: " << v.mismatches.size()
          << (v.mismatches.size() == 1 ? " mismatch" : " mismatches") << "\n";
      return 1;
    }

    if (*census_cmd) {
      std::vector<CensusRow> rows = census(n, opt.cap, opt.jobs);
      if (opt.format == "structured") {
        print_census_structured(out, n, rows);
      } else {
        print_census_text(out, n, rows);
      }
      return 0;
    }

    if (*find_cmd) {
      std::vector<Property> require_true;
      std::vector<Property> require_false;
      parse_search_spec(spec, require_true, require_false);
      auto result = find_minimal(require_true, require_false, opt.cap,
                                 opt.jobs);
      if (opt.format == "structured") {
        out << "schema = specpos.search.v1\n";
        out << "spec = " << spec << "\n";
        if (!result) {
          out << "result = none\n";
          out << "cap = " << opt.cap << "\n";
          return 0;
        }
        out << "result = found\n";
        out << "n = " << result->n_points << "\n";
        out << render(result->witness, "MINIMAL_WITNESS");
        return 0;
      }
      if (!result) {
        out << "no space with at most " << opt.cap
            << " points satisfies the spec\n";
        return 0;
      }
      out << "smallest example has " << result->n_points << " points:\n";
      out << render(result->witness, "MINIMAL_WITNESS");
      return 0;
    }

    if (*export_dot) {
      ParsedSpace parsed = parse_space(read_file(file));
      out << emit_hasse_dot(parsed.poset, parsed.name);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no command selected\n";
  return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace specpos
