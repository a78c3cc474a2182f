#include "coring/cli.hpp"

#include "coring/catalog.hpp"
#include "coring/checks.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace coring {

namespace {

const std::vector<std::string> kAreas = {"ring", "module", "tensor", "coring", "comodule", "cell", "adjunction"};

struct InputOptions {
  std::vector<std::string> files;
  std::string catalog;
  std::size_t corner = 3;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Files, else a named built-in catalog, else $CORING_CATALOG, else the main catalog.
Workspace load(const InputOptions& in) {
  std::vector<std::string> docs;
  if (!in.files.empty()) {
    for (const auto& f : in.files) docs.push_back(read_file(f));
  } else if (!in.catalog.empty()) {
    try {
      docs.push_back(catalog_document(in.catalog));
    } catch (const std::out_of_range& e) {
      throw InputError(e.what());
    }
  } else if (const char* env = std::getenv("CORING_CATALOG"); env && *env) {
    docs.push_back(read_file(env));
  } else {
    docs.push_back(catalog_document("main"));
  }
  ParseOptions opts;
  opts.corner_bound = in.corner;
  return parse_spec(docs, opts);
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--catalog", in.catalog, "Built-in catalog name (see `catalog --list`)");
  cmd->add_option("--corner", in.corner, "Idempotents materialized for lazily infinite rings")
      ->check(CLI::PositiveNumber);
}

int report_input_error(std::ostream& err, const std::string& what) {
  err << "error: " << what << "\n";
  return kExitInput;
}

IndexSet parse_indices(const GradedRing& r, const std::vector<std::string>& labels) {
  IndexSet s;
  for (const auto& l : labels) {
    auto i = r.find_index(l);
    if (!i) throw InputError("ring " + r.name() + " has no idempotent index '" + l + "'");
    s.push_back(*i);
  }
  return make_index_set(s);
}

template <class Map>
const typename Map::mapped_type& named(const Map& map, const std::string& name, const char* what) {
  auto it = map.find(name);
  if (it == map.end()) throw InputError(std::string("unresolved reference to ") + what + " '" + name + "'");
  return it->second;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify coring constructions over rings with enough idempotents"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "coring 1.0");

  std::string format = "text";
  bool verbose = false;

  // check
  InputOptions check_in;
  std::vector<std::string> positional, selection;
  std::string sigma;
  bool timing = false;
  std::size_t jobs = 1;
  auto* check = app.add_subcommand("check", "Run law checks over instance documents");
  check->add_option("inputs", positional, "Instance documents, or an area: " + [] {
    std::string s;
    for (const auto& a : kAreas) s += (s.empty() ? "" : ", ") + a;
    return s;
  }());
  check->add_option("--select,-s", selection, "Shell pattern over check names; repeatable");
  check->add_option("--sigma", sigma, "Run the adjunction suites for this module");
  check->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--verbose,-v", verbose, "Show every failure");
  check->add_flag("--timing", timing, "Include per-check wall time");
  check->add_option("--jobs,-j", jobs, "Checks run concurrently")->check(CLI::PositiveNumber);
  add_input_options(check, check_in);

  // construct
  InputOptions cons_in;
  std::string kind, ring, morphism, module, coring_name, output, name;
  std::vector<std::string> indices;
  auto* construct = app.add_subcommand("construct", "Build a coring and print it as an explicit document");
  construct->add_option("kind", kind, "Constructor")
      ->required()
      ->check(CLI::IsMember({"trivial", "sweedler", "split", "comatrix", "base-ext", "rees"}));
  construct->add_option("inputs", cons_in.files, "Instance documents");
  construct->add_option("--ring", ring, "Ring (trivial, split, rees)");
  construct->add_option("--morphism", morphism, "Ring morphism (sweedler)");
  construct->add_option("--module", module, "Bimodule (split)");
  construct->add_option("--sigma", sigma, "Bimodule (comatrix, base-ext)");
  construct->add_option("--coring", coring_name, "Coring over the left ring of sigma (base-ext)");
  construct->add_option("--indices", indices, "Idempotent indices (rees)")->delimiter(',');
  construct->add_option("--name", name, "Name of the coring in the output document");
  construct->add_option("--output,-o", output, "Write to a file instead of standard output");
  add_input_options(construct, cons_in);

  // catalog
  std::string catalog_name = "main";
  bool list = false;
  auto* catalog = app.add_subcommand("catalog", "Print a built-in instance document in canonical form");
  catalog->add_option("name", catalog_name, "Catalog name");
  catalog->add_flag("--list", list, "List built-in catalog names");
  std::size_t catalog_corner = 3;
  catalog->add_option("--corner", catalog_corner, "Idempotents materialized for lazily infinite rings")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*check) {
      for (const auto& p : positional) {
        if (std::find(kAreas.begin(), kAreas.end(), p) != kAreas.end()) selection.push_back(p + ".*");
        else check_in.files.push_back(p);
      }
      Workspace w = load(check_in);
      std::vector<CheckCase> cases;
      if (!sigma.empty()) {
        AdjunctionEntry entry;
        if (auto it = w.adjunctions.find(sigma); it != w.adjunctions.end()) {
          entry = it->second;
        } else {
          entry.sigma = named(w.modules, sigma, "module");
          entry.family = dual_basis_family(entry.sigma);
        }
        cases = adjunction_checks(sigma, entry);
        std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
      } else {
        cases = collect_checks(w);
      }
      auto picked = select_checks(cases, selection);
      auto outcomes = run_checks(picked, jobs);
      out << format_outcomes(outcomes, {format == "json", verbose, timing});
      return exit_code(outcomes);
    }
    if (*construct) {
      Workspace w = load(cons_in);
      CoringPtr c;
      if (kind == "trivial") {
        c = trivial_coring(named(w.rings, ring, "ring"));
      } else if (kind == "sweedler") {
        c = sweedler_coring(named(w.morphisms, morphism, "morphism"));
      } else if (kind == "split") {
        c = split_coring(named(w.rings, ring, "ring"), named(w.modules, module, "module"));
      } else if (kind == "comatrix") {
        c = comatrix_coring(named(w.modules, sigma, "module"));
      } else if (kind == "base-ext") {
        c = base_extension(named(w.modules, sigma, "module"), named(w.corings, coring_name, "coring"));
      } else {
        const RingPtr& r = named(w.rings, ring, "ring");
        c = rees_coring(r, parse_indices(*r, indices)).coring;
      }
      std::string doc = canonical_dump(coring_document(*c, name.empty() ? c->name : name));
      if (output.empty()) {
        out << doc;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!(f << doc)) throw InputError("cannot write '" + output + "'");
      }
      return kExitPass;
    }
    if (list) {
      for (const auto& n : catalog_names()) out << n << "\n";
      return kExitPass;
    }
    InputOptions in;
    in.catalog = catalog_name;
    in.corner = catalog_corner;
    out << serialize(load(in));
    return kExitPass;
  } catch (const SpecError& e) {
    return report_input_error(err, std::string(to_string(e.kind())) + ": " + e.what());
  } catch (const InvalidMorphism& e) {
    err << "error: " << e.what() << "\n" << e.report().summary() << "\n";
    return kExitInput;
  } catch (const MissingDualBasis& e) {
    return report_input_error(err, std::string("missing dual basis: ") + e.what());
  } catch (const SelectionError& e) {
    return report_input_error(err, std::string("selection: ") + e.what());
  } catch (const InputError& e) {
    return report_input_error(err, e.what());
  } catch (const std::invalid_argument& e) {
    return report_input_error(err, e.what());
  }
}

}  // namespace coring
