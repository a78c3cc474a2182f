// Acceptance suite: one line per criterion, nonzero exit if any fails or
// takes 10 s or more.

#include "coring/catalog.hpp"
#include "coring/checks.hpp"
#include "coring/cli.hpp"
#include "coring/workspace.hpp"

#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

using namespace coring;

namespace {

using Clock = std::chrono::steady_clock;

// Collects failure lines for one criterion.
struct Probe {
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

const Workspace& main_workspace() {
  static const Workspace w = parse_spec(catalog_document("main"));
  return w;
}

std::vector<CheckOutcome> run_selected(const Workspace& w, const std::string& pattern) {
  return run_checks(select_checks(collect_checks(w), {pattern}));
}

void require_all_pass(Probe& p, const std::vector<CheckOutcome>& outcomes) {
  p.require(!outcomes.empty(), "no checks selected");
  for (const auto& o : outcomes) p.require(o.report.passed(), o.name + ": " + o.report.summary());
}

std::map<std::string, std::size_t> suite_counts(const std::vector<CheckOutcome>& outcomes) {
  std::map<std::string, std::size_t> n;
  for (const auto& o : outcomes) ++n[o.name.substr(0, o.name.find(':'))];
  return n;
}

std::string arg_of(const Workspace& w, const std::string& section, const std::string& name, const std::string& key) {
  const auto& d = w.canonical.at(section).at(name);
  return d.contains(key) && d.at(key).is_string() ? d.at(key).get<std::string>() : std::string{};
}

// Every subset of `all` containing `minimal`.
std::vector<IndexSet> supersets(const IndexSet& minimal, const IndexSet& all) {
  std::vector<std::size_t> extra;
  for (auto i : all)
    if (!index_contains(minimal, i)) extra.push_back(i);
  std::vector<IndexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << extra.size()); ++mask) {
    std::vector<std::size_t> s(minimal.begin(), minimal.end());
    for (std::size_t b = 0; b < extra.size(); ++b)
      if (mask >> b & 1) s.push_back(extra[b]);
    out.push_back(make_index_set(s));
  }
  return out;
}

IndexSet grades(std::initializer_list<std::size_t> g) { return make_index_set(std::vector<std::size_t>(g)); }

// ---------------------------------------------------------------- 1

void coring_laws(Probe& p) {
  const auto& w = main_workspace();
  const std::vector<std::pair<std::string, std::string>> required = {
      {"Triv", "trivial"},        {"Sw", "sweedler"},           {"SplitQ", "split"},
      {"SplitM2", "split"},       {"Comatrix", "comatrix"},     {"BaseExt", "base_extension"},
      {"Rees", "rees"},           {"TrivPath", "trivial"},      {"SwPath", "sweedler"},
      {"SplitPath", "split"},     {"ComatrixPath", "comatrix"}, {"BaseExtPath", "base_extension"}};
  for (const auto& [name, kind] : required) p.require(w.kind_of("corings", name) == kind, name + " is not a " + kind + " coring");
  p.require(arg_of(w, "corings", "Triv", "ring") == "M2", "Triv is not over M2");
  p.require(arg_of(w, "corings", "Sw", "morphism") == "diag", "Sw is not along diag");
  p.require(arg_of(w, "corings", "Comatrix", "sigma") == "Row", "Comatrix is not on Row");
  p.require(arg_of(w, "corings", "BaseExt", "sigma") == "Row", "BaseExt is not on Row");
  p.require(arg_of(w, "corings", "Rees", "ring") == "M2", "Rees is not over M2");

  auto outcomes = run_selected(w, "coring.laws:*");
  require_all_pass(p, outcomes);
  p.require(outcomes.size() == w.corings.size(), "coring.laws does not cover every coring");
  for (const auto& [name, c] : w.corings) p.require(check_coring(*c).passed(), name + " fails check_coring");
}

// ---------------------------------------------------------------- 2

void independence_of_unity(Probe& p) {
  const auto& w = main_workspace();
  require_all_pass(p, run_selected(w, "coring.unity:*"));

  std::map<std::string, std::size_t> nontrivial;
  for (const auto& [name, c] : w.corings) {
    auto kind = w.kind_of("corings", name);
    if (kind != "sweedler" && kind != "split") continue;
    const auto& carrier = *c->carrier;
    for (std::size_t k = 0; k < carrier.dim(); ++k) {
      std::vector<Vector> values;
      if (kind == "sweedler") {
        const RingMorphism& psi = w.morphisms.at(arg_of(w, "corings", name, "morphism"));
        const auto& A = *psi.target;
        auto [a, a2] = tensor_space_of(c->carrier)->representative(k);
        auto f = sweedler_unity(psi, grades({A.basis(a).left, A.basis(a).right, A.basis(a2).left, A.basis(a2).right}));
        for (const auto& s : supersets(f, psi.source->all_indices())) values.push_back(sweedler_delta(*c, psi, a, a2, s));
      } else {
        auto e = grades({carrier.basis(k).left, carrier.basis(k).right});
        for (const auto& s : supersets(e, c->ring->all_indices())) values.push_back(split_delta(*c, k, s));
      }
      for (const auto& v : values)
        p.require(v == c->delta.matrix.column(k), name + ": Delta depends on the unity at " + carrier.basis(k).label);
      if (values.size() > 1) ++nontrivial[name];
    }
  }
  for (const auto& name : {"SwSep", "SwPathSep", "SplitM2", "SplitPath"})
    p.require(nontrivial[name] > 0, std::string(name) + " has no pair with two distinct unities");
}

// ---------------------------------------------------------------- 3

void corner_iso(Probe& p) {
  const auto& w = main_workspace();
  auto outcomes = run_selected(w, "tensor.corner_iso:*");
  require_all_pass(p, outcomes);
  p.require(outcomes.size() == w.modules.size(), "tensor.corner_iso does not cover every bimodule");
}

// ---------------------------------------------------------------- 4

void rees_counit(Probe& p) {
  auto m2 = matrix_ring(2);
  auto r = rees_coring(m2, {0});
  p.require(r.counit.rank == 4, "counit rank " + std::to_string(r.counit.rank));
  p.require(r.counit.carrier_dim == 4, "carrier dimension " + std::to_string(r.counit.carrier_dim));
  p.require(r.counit.ring_dim == 4, "ring dimension " + std::to_string(r.counit.ring_dim));
  p.require(r.counit.bijective, "counit is not bijective");
  p.require(oracle::rank(r.coring->epsilon.matrix) == 4, "independent rank of the counit is not 4");
  p.require(check_coring(*r.coring).passed(), "Rees coring fails its laws");
  require_all_pass(p, run_selected(main_workspace(), "coring.rees_counit:Rees"));
}

// ---------------------------------------------------------------- 5

void triangles(Probe& p) {
  const auto& w = main_workspace();
  p.require(w.kind_of("modules", "Row") == "right_ideal", "Row is not a right ideal");
  p.require(w.kind_of("modules", "E11A") == "corner_right_ideal", "E11A is not a corner right ideal");
  for (const auto& name : {"Row", "E11A"}) {
    const auto& entry = w.adjunctions.at(name);
    auto rep = check_triangle_identities(entry.sigma, entry.family);
    p.require(rep.passed(), rep.summary());
  }
  require_all_pass(p, run_selected(w, "adjunction.triangles:Row"));
  require_all_pass(p, run_selected(w, "adjunction.triangles:E11A"));
}

// ---------------------------------------------------------------- 6

void dual_tensor(Probe& p) {
  const auto& w = main_workspace();
  for (const auto& name : {"ColRow", "CornerE11A"}) {
    const auto& e = w.dual_tensors.at(name);
    auto res = check_dual_tensor_iso(e.w, e.sigma);
    std::string n = name;
    p.require(res.report.passed(), n + ": " + res.report.summary());
    auto s = res.iso.source->dim(), t = res.iso.target->dim();
    p.require(s == t, n + ": dimensions " + std::to_string(s) + " and " + std::to_string(t));
    p.require(s > 0, n + ": empty");
    p.require(res.rank == s && oracle::rank(res.iso.matrix) == s, n + ": not of full rank");
    p.require(check_linearity(res.iso, Side::Both).passed(), n + ": not bilinear");
  }
}

// ---------------------------------------------------------------- 7

void bicategory(Probe& p) {
  const auto& w = main_workspace();
  auto outcomes = run_selected(w, "cell.*");
  require_all_pass(p, outcomes);
  auto counts = suite_counts(outcomes);
  for (const auto& suite : {"cell.one", "cell.two", "cell.compose", "cell.unit_laws", "cell.associativity",
                            "cell.vertical", "cell.horizontal", "cell.interchange"})
    p.require(counts[suite] > 0, std::string("no ") + suite + " checks");

  std::size_t pairs = 0;
  for (const auto& [m, a] : w.cells)
    for (const auto& [n, b] : w.cells)
      if (composable(a, b)) {
        ++pairs;
        auto ab = compose_one_cells(a, b);
        p.require(check_one_cell(ab).passed(), m + " after " + n + " is not a 1-cell");
      }
  p.require(pairs == counts["cell.compose"], "cell.compose misses composable pairs");
  p.require(counts["cell.one"] == w.cells.size(), "cell.one misses cells");
  p.require(counts["cell.unit_laws"] == w.cells.size(), "cell.unit_laws misses cells");
}

// ---------------------------------------------------------------- 8

void base_extension_iso(Probe& p) {
  const auto& w = main_workspace();
  require_all_pass(p, run_selected(w, "coring.morphism:BaseExtIso"));
  p.require(w.kind_of("corings", "BaseExtT") == "base_extension", "BaseExtT is not a base extension");
  p.require(w.kind_of("corings", "TrivQ") == "trivial", "TrivQ is not trivial");
  p.require(arg_of(w, "corings", "BaseExtT", "coring") == "TrivQ", "BaseExtT is not over a trivial coring");

  auto phi = base_extension_to_comatrix(w.corings.at("BaseExtT"), w.corings.at("Comatrix"));
  p.require(check_coring_morphism(phi).passed(), "not a coring morphism");
  auto n = phi.map.source->dim();
  p.require(n == phi.map.target->dim() && n > 0, "dimensions differ");
  p.require(oracle::rank(phi.map.matrix) == n, "not bijective");
}

// ---------------------------------------------------------------- 9

void comodules(Probe& p) {
  const auto& w = main_workspace();
  auto outcomes = run_selected(w, "comodule.*");
  require_all_pass(p, outcomes);
  auto counts = suite_counts(outcomes);
  for (const auto& suite : {"comodule.laws", "comodule.corestriction", "comodule.induced"})
    p.require(counts[suite] > 0, std::string("no ") + suite + " checks");

  for (const auto& [name, c] : w.corings) {
    auto cof = cofree_comodule(regular(c->ring), c);
    p.require(check_comodule(cof).passed(), "cofree over " + name);
    auto same = corestrict(identity_morphism(c), cof);
    p.require(same.coaction.matrix == cof.coaction.matrix, "corestriction along the identity of " + name);
    auto plain = corestrict(counit_morphism(c), cof);
    p.require(plain.coaction.matrix == right_unitor_inverse(plain.module).matrix,
              "corestriction along the counit of " + name);
  }
  for (const auto& [name, cell] : w.cells) {
    auto x = induce_comodule(cell, cofree_comodule(regular(cell.target->ring), cell.target));
    p.require(check_comodule(x).passed(), "induced along " + name);
  }
}

// ---------------------------------------------------------------- 10

void fault_sensitivity(Probe& p) {
  const std::vector<std::pair<std::string, std::string>> faults = {
      {"faults/corrupted-product", "ring.laws:M2bad"},
      {"faults/swapped-legs", "coring.laws:SwSwapped"},
      {"faults/corrupted-dual-basis", "adjunction.triangles:RowBad"}};
  for (const auto& [doc, intended] : faults) {
    auto w = parse_spec(catalog_document(doc));
    auto outcomes = run_checks(collect_checks(w));
    std::vector<const CheckOutcome*> failed;
    for (const auto& o : outcomes)
      if (!o.report.passed()) failed.push_back(&o);
    p.require(failed.size() == 1, doc + ": " + std::to_string(failed.size()) + " checks failed");
    if (failed.empty()) continue;
    p.require(failed[0]->name == intended, doc + ": " + failed[0]->name + " failed instead of " + intended);
    const auto& f = failed[0]->report.failures();
    p.require(!f.empty() && !f[0].witness.empty(), doc + ": no witness");
  }
}

// ---------------------------------------------------------------- 11

void cli_determinism(Probe& p) {
  std::ostringstream out1, err1, out2, err2;
  int c1 = run_cli({"check"}, out1, err1);
  int c2 = run_cli({"check"}, out2, err2);
  p.require(c1 == kExitPass && c2 == kExitPass, "check exited " + std::to_string(c1) + ", " + std::to_string(c2));
  p.require(out1.str() == out2.str(), "reports differ between runs");
  p.require(!out1.str().empty(), "empty report");

  for (const auto& name : catalog_names()) {
    auto once = serialize(parse_spec(catalog_document(name)));
    auto twice = serialize(parse_spec(once));
    p.require(once == twice, name + ": serialization is not idempotent");
  }
}

struct Criterion {
  const char* title;
  std::function<void(Probe&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"coring laws over the catalog", coring_laws},
      {"comultiplication independent of the unity", independence_of_unity},
      {"corner isomorphisms are mutually inverse", corner_iso},
      {"Rees counit for M2 at e11 is bijective", rees_counit},
      {"triangle identities for Row and E11A", triangles},
      {"dual of a tensor product is bijective", dual_tensor},
      {"bicategory closure and 2-cell composites", bicategory},
      {"base extension of a trivial coring is the comatrix coring", base_extension_iso},
      {"comodule constructions", comodules},
      {"each fault is caught by its own check", fault_sensitivity},
      {"check output is deterministic, round trip idempotent", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Probe probe;
    auto start = Clock::now();
    try {
      criteria[i].run(probe);
    } catch (const std::exception& e) {
      probe.problems.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds >= 10) probe.problems.push_back("took " + std::to_string(seconds) + " s");
    bool ok = probe.problems.empty();
    if (!ok) ++failed;
    std::printf("%s %2zu  %s  (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].title, seconds);
    for (std::size_t k = 0; k < probe.problems.size() && k < 10; ++k) std::printf("        %s\n", probe.problems[k].c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
