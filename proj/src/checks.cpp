#include "coring/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fnmatch.h>
#include <sstream>
#include <thread>

namespace coring {

namespace {

using Runner = std::function<Report(const Workspace&, const std::string&)>;
using Applies = std::function<bool(const Workspace&, const std::string&)>;

struct Suite {
  std::string section;
  std::string check;
  Applies applies;  // empty: every object of the section
  Runner run;
};

Applies kind_in(std::string section, std::vector<std::string> kinds) {
  return [section = std::move(section), kinds = std::move(kinds)](const Workspace& w, const std::string& name) {
    return std::find(kinds.begin(), kinds.end(), w.kind_of(section, name)) != kinds.end();
  };
}

std::string arg(const Workspace& w, const std::string& section, const std::string& name, const std::string& key) {
  return w.canonical.at(section).at(name).at(key).get<std::string>();
}

bool same_coring(const CoringPtr& a, const CoringPtr& b) {
  return a == b || (same_ring(a->ring, b->ring) && same_module(a->carrier, b->carrier) &&
                    a->delta.matrix == b->delta.matrix && a->epsilon.matrix == b->epsilon.matrix);
}

bool same_cell(const OneCell& x, const OneCell& y) {
  return same_coring(x.target, y.target) && same_coring(x.source, y.source) && same_module(x.module, y.module) &&
         x.map.matrix == y.map.matrix;
}

bool horizontally_composable(const TwoCell& a, const TwoCell& b) {
  return composable(a.source, b.source) && composable(a.target, b.target);
}

Report identity_check(Report rep, const std::string& law, const LinearMap& f) {
  compare_columns(rep, law, f.matrix, Matrix::identity(f.source->dim()), *f.source);
  return rep;
}

Report corner_iso(const ModulePtr& n) {
  Report rep("tensor.corner_iso", n->name());
  const auto& a = n->left_ring();
  for (std::size_t i = 0; i < a->index_count(); ++i) {
    IndexSet e{i};
    LinearMap u = upsilon(a, e, n);
    LinearMap t = theta(a, e, n);
    std::string at = " at e_" + a->index_label(i);
    rep = identity_check(std::move(rep), "Upsilon Theta" + at, compose(u, t));
    rep = identity_check(std::move(rep), "Theta Upsilon" + at, compose(t, u));
  }
  return rep;
}

IndexSet grades(std::initializer_list<std::size_t> g) { return make_index_set(std::vector<std::size_t>(g)); }

void compare_vectors(Report& rep, const std::string& law, const Vector& x, const Vector& y, const std::string& label) {
  if (x != y) rep.fail(law, "at " + label);
}

Report unity_check(const Workspace& w, const std::string& name) {
  const CoringPtr& c = w.corings.at(name);
  Report rep("coring.unity", c->name);
  const auto& carrier = *c->carrier;
  if (w.kind_of("corings", name) == "sweedler") {
    const RingMorphism& psi = w.morphisms.at(arg(w, "corings", name, "morphism"));
    auto t = tensor_space_of(c->carrier);
    const auto& A = *psi.target;
    IndexSet all = psi.source->all_indices();
    for (std::size_t k = 0; k < carrier.dim(); ++k) {
      auto [a, a2] = t->representative(k);
      IndexSet f = sweedler_unity(psi, grades({A.basis(a).left, A.basis(a).right, A.basis(a2).left, A.basis(a2).right}));
      Vector small = sweedler_delta(*c, psi, a, a2, f);
      compare_vectors(rep, "full unity", small, sweedler_delta(*c, psi, a, a2, all), carrier.basis(k).label);
      compare_vectors(rep, "stored comultiplication", small, c->delta.matrix.column(k), carrier.basis(k).label);
    }
  } else {
    IndexSet all = c->ring->all_indices();
    for (std::size_t k = 0; k < carrier.dim(); ++k) {
      Vector small = split_delta(*c, k, grades({carrier.basis(k).left, carrier.basis(k).right}));
      compare_vectors(rep, "full unity", small, split_delta(*c, k, all), carrier.basis(k).label);
      compare_vectors(rep, "stored comultiplication", small, c->delta.matrix.column(k), carrier.basis(k).label);
    }
  }
  return rep;
}

Report rees_counit(const CoringPtr& c) {
  Report rep("coring.rees_counit", c->name);
  std::size_t r = rank(c->epsilon.matrix);
  if (r != c->carrier->dim() || r != c->ring->dim())
    rep.fail("bijectivity", "rank " + std::to_string(r) + " with carrier dimension " +
                                std::to_string(c->carrier->dim()) + " and ring dimension " +
                                std::to_string(c->ring->dim()));
  return rep;
}

Report coring_morphism_check(const Workspace& w, const std::string& name) {
  const CoringMorphism& phi = w.coring_morphisms.at(name);
  Report rep = check_coring_morphism(phi);
  if (w.kind_of("coring_morphisms", name) == "base_extension_to_comatrix") {
    std::size_t r = rank(phi.map.matrix);
    if (r != phi.source->carrier->dim() || r != phi.target->carrier->dim())
      rep.fail("bijectivity", "rank " + std::to_string(r) + " of " + std::to_string(phi.target->carrier->dim()) +
                                  " x " + std::to_string(phi.source->carrier->dim()));
  }
  return rep;
}

Report corestriction_check(const Workspace& w, const std::string& name) {
  const CoringMorphism& phi = w.coring_morphisms.at(arg(w, "comodules", name, "morphism"));
  const Comodule& x = w.comodules.at(arg(w, "comodules", name, "comodule"));
  const Comodule& y = w.comodules.at(name);
  Report rep("comodule.corestriction", y.name);
  Comodule induced = induce_comodule(morphism_one_cell(phi), x);
  rep.absorb(check_comodule_morphism(right_unitor(x.module), induced, y), "unitor from induced");
  return rep;
}

Report dual_tensor_check(const DualTensorEntry& e) { return check_dual_tensor_iso(e.w, e.sigma).report; }

const std::vector<Suite>& suites() {
  static const std::vector<Suite> table = {
      {"rings", "ring.laws", {},
       [](const Workspace& w, const std::string& n) {
         const auto& r = w.rings.at(n);
         return verify_ring(*r, r->all_indices());
       }},
      {"morphisms", "ring.morphism", {},
       [](const Workspace& w, const std::string& n) { return check_morphism(w.morphisms.at(n)); }},
      {"modules", "module.laws", {},
       [](const Workspace& w, const std::string& n) { return verify_module(*w.modules.at(n)); }},
      {"modules", "tensor.corner_iso", {},
       [](const Workspace& w, const std::string& n) { return corner_iso(w.modules.at(n)); }},
      {"corings", "coring.laws", {},
       [](const Workspace& w, const std::string& n) { return check_coring(*w.corings.at(n)); }},
      {"corings", "coring.unity", kind_in("corings", {"sweedler", "split"}), unity_check},
      {"corings", "coring.rees_counit", kind_in("corings", {"rees"}),
       [](const Workspace& w, const std::string& n) { return rees_counit(w.corings.at(n)); }},
      {"coring_morphisms", "coring.morphism", {}, coring_morphism_check},
      {"comodules", "comodule.laws", {},
       [](const Workspace& w, const std::string& n) { return check_comodule(w.comodules.at(n)); }},
      {"comodules", "comodule.corestriction", kind_in("comodules", {"corestrict"}), corestriction_check},
      {"cells", "cell.one", {},
       [](const Workspace& w, const std::string& n) { return check_one_cell(w.cells.at(n)); }},
      {"cells", "cell.unit_laws", {},
       [](const Workspace& w, const std::string& n) { return check_unit_laws(w.cells.at(n)); }},
      {"two_cells", "cell.two", {},
       [](const Workspace& w, const std::string& n) { return check_two_cell(w.two_cells.at(n)); }},
      {"dual_tensors", "adjunction.dual_tensor", {},
       [](const Workspace& w, const std::string& n) { return dual_tensor_check(w.dual_tensors.at(n)); }},
  };
  return table;
}

std::vector<std::string> names_in(const Workspace& w, const std::string& section) {
  std::vector<std::string> out;
  if (!w.canonical.contains(section)) return out;
  for (const auto& [name, def] : w.canonical.at(section).items()) out.push_back(name);
  return out;
}

// Checks over tuples of related objects.
void relational_checks(const Workspace& w, std::vector<CheckCase>& out) {
  const Workspace* wp = &w;
  for (const auto& [m, cm] : w.cells)
    for (const auto& [n, cn] : w.cells) {
      if (!composable(cm, cn)) continue;
      out.push_back({"cell.compose:" + m + "/" + n, [wp, m, n] {
                       Report rep("cell.compose", m + "/" + n);
                       rep.absorb(check_one_cell(compose_one_cells(wp->cells.at(m), wp->cells.at(n))));
                       return rep;
                     }});
      for (const auto& [p, cp] : w.cells) {
        if (!composable(cn, cp)) continue;
        out.push_back({"cell.associativity:" + m + "/" + n + "/" + p, [wp, m, n, p] {
                         return check_associativity(wp->cells.at(m), wp->cells.at(n), wp->cells.at(p));
                       }});
      }
      for (const auto& [x, cx] : w.comodules) {
        if (!same_coring(cx.coring, cm.target)) continue;
        out.push_back({"cell.induce_functoriality:" + m + "/" + n + "/" + x, [wp, m, n, x] {
                         return check_induce_functoriality(wp->cells.at(m), wp->cells.at(n), wp->comodules.at(x));
                       }});
      }
    }
  for (const auto& [c, cc] : w.cells)
    for (const auto& [x, cx] : w.comodules) {
      if (!same_coring(cx.coring, cc.target)) continue;
      out.push_back({"comodule.induced:" + c + "/" + x, [wp, c, x] {
                       Comodule induced = induce_comodule(wp->cells.at(c), wp->comodules.at(x));
                       Report rep("comodule.induced", induced.name);
                       rep.absorb(check_comodule(induced));
                       return rep;
                     }});
    }
  for (const auto& [a2, t2] : w.two_cells)
    for (const auto& [a, t] : w.two_cells) {
      if (same_cell(t.target, t2.source))
        out.push_back({"cell.vertical:" + a2 + "/" + a, [wp, a2, a] {
                         Report rep("cell.vertical", a2 + "/" + a);
                         rep.absorb(check_two_cell(compose_vertical(wp->two_cells.at(a2), wp->two_cells.at(a))));
                         return rep;
                       }});
      if (horizontally_composable(t2, t))
        out.push_back({"cell.horizontal:" + a2 + "/" + a, [wp, a2, a] {
                         Report rep("cell.horizontal", a2 + "/" + a);
                         rep.absorb(check_two_cell(compose_horizontal(wp->two_cells.at(a2), wp->two_cells.at(a))));
                         return rep;
                       }});
    }
  // (a2 | a) * (b2 | b) against (a2 * b2) | (a * b).
  for (const auto& [a, ta] : w.two_cells)
    for (const auto& [a2, ta2] : w.two_cells) {
      if (!same_cell(ta.target, ta2.source)) continue;
      for (const auto& [b, tb] : w.two_cells)
        for (const auto& [b2, tb2] : w.two_cells) {
          if (!same_cell(tb.target, tb2.source) || !horizontally_composable(ta, tb)) continue;
          std::string label = a + "/" + a2 + "/" + b + "/" + b2;
          out.push_back({"cell.interchange:" + label, [wp, a, a2, b, b2, label] {
                           const auto& get = wp->two_cells;
                           Report rep("cell.interchange", label);
                           TwoCell lhs = compose_horizontal(compose_vertical(get.at(a2), get.at(a)),
                                                            compose_vertical(get.at(b2), get.at(b)));
                           TwoCell rhs = compose_vertical(compose_horizontal(get.at(a2), get.at(b2)),
                                                          compose_horizontal(get.at(a), get.at(b)));
                           compare_columns(rep, "interchange", lhs.map.matrix, rhs.map.matrix, *lhs.map.source);
                           return rep;
                         }});
        }
    }
}

Report naturality(const AdjunctionEntry& e) {
  Report rep("adjunction.naturality", e.sigma->name());
  auto ys = test_modules(e.sigma->left_ring());
  for (const auto& y : ys)
    for (const auto& y2 : ys)
      for (const auto& f : hom_space(y, y2, Side::Right))
        rep.absorb(check_eta_naturality(e.sigma, f), "eta " + y->name() + " -> " + y2->name());
  auto xs = test_modules(e.sigma->right_ring());
  for (const auto& x : xs)
    for (const auto& x2 : xs)
      for (const auto& g : hom_space(x, x2, Side::Right))
        rep.absorb(check_zeta_naturality(e.sigma, g), "zeta " + x->name() + " -> " + x2->name());
  return rep;
}

bool malformed(const std::string& p) {
  bool escape = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (escape) {
      escape = false;
      continue;
    }
    if (p[i] == '\\') {
      escape = true;
    } else if (p[i] == '[') {
      std::size_t j = i + 1;
      if (j < p.size() && (p[j] == '!' || p[j] == '^')) ++j;
      if (j < p.size() && p[j] == ']') ++j;
      while (j < p.size() && p[j] != ']') ++j;
      if (j >= p.size()) return true;
      i = j;
    }
  }
  return escape;
}

void append_json_string(std::ostringstream& out, const std::string& s) { out << Json(s).dump(); }

}  // namespace

std::vector<CheckCase> adjunction_checks(const std::string& name, const AdjunctionEntry& entry) {
  std::vector<CheckCase> out;
  out.push_back({"adjunction.triangles:" + name, [entry] { return check_triangle_identities(entry.sigma, entry.family); }});
  out.push_back({"adjunction.eta_unity:" + name, [entry] { return check_eta_independence(entry.sigma); }});
  out.push_back({"adjunction.naturality:" + name, [entry] { return naturality(entry); }});
  if (entry.coring)
    out.push_back({"adjunction.base_extension:" + name,
                   [entry] { return check_base_extension_consistency(entry.sigma, *entry.coring); }});
  return out;
}

std::vector<CheckCase> collect_checks(const Workspace& w) {
  std::vector<CheckCase> out;
  const Workspace* wp = &w;
  for (const auto& suite : suites())
    for (const auto& name : names_in(w, suite.section)) {
      if (suite.applies && !suite.applies(w, name)) continue;
      const Runner* run = &suite.run;
      out.push_back({suite.check + ":" + name, [wp, run, name] { return (*run)(*wp, name); }});
    }
  for (const auto& [name, entry] : w.adjunctions)
    for (auto& c : adjunction_checks(name, entry)) out.push_back(std::move(c));
  relational_checks(w, out);
  std::sort(out.begin(), out.end(), [](const CheckCase& a, const CheckCase& b) { return a.name < b.name; });
  return out;
}

void validate_pattern(const std::string& pattern) {
  if (pattern.empty()) throw SelectionError("empty selection pattern");
  if (malformed(pattern)) throw SelectionError("malformed selection pattern '" + pattern + "'");
}

std::vector<CheckCase> select_checks(const std::vector<CheckCase>& all, const std::vector<std::string>& patterns) {
  for (const auto& p : patterns) validate_pattern(p);
  std::vector<CheckCase> out;
  for (const auto& c : all) {
    bool hit = patterns.empty();
    for (const auto& p : patterns)
      if (fnmatch(p.c_str(), c.name.c_str(), 0) == 0) hit = true;
    if (hit) out.push_back(c);
  }
  if (out.empty()) {
    std::string joined;
    for (const auto& p : patterns) joined += (joined.empty() ? "" : " ") + p;
    throw SelectionError(patterns.empty() ? "no checks in the workspace" : "no check matches '" + joined + "'");
  }
  return out;
}

std::vector<CheckOutcome> run_checks(const std::vector<CheckCase>& cases, std::size_t jobs) {
  std::vector<CheckOutcome> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      auto start = std::chrono::steady_clock::now();
      Report rep;
      try {
        rep = cases[i].run();
      } catch (const std::exception& e) {
        rep = Report(cases[i].name, "");
        rep.fail("exception", e.what());
      }
      rep.set_timing_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
      out[i] = {cases[i].name, std::move(rep)};
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, cases.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string format_outcomes(const std::vector<CheckOutcome>& outcomes, const FormatOptions& options) {
  std::size_t failed = 0;
  for (const auto& o : outcomes) failed += o.report.passed() ? 0 : 1;
  std::ostringstream out;
  const std::size_t cap = options.verbose ? std::string::npos : Report::kShownFailures;
  if (options.json) {
    out << "{\n  \"checks\": [";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& r = outcomes[i].report;
      out << (i ? "," : "") << "\n    {\"name\": ";
      append_json_string(out, outcomes[i].name);
      out << ", \"instance\": ";
      append_json_string(out, r.instance());
      out << ", \"passed\": " << (r.passed() ? "true" : "false") << ", \"failure_count\": " << r.total_failures();
      out << ", \"failures\": [";
      for (std::size_t k = 0; k < r.failures().size() && k < cap; ++k) {
        out << (k ? ", " : "") << "{\"law\": ";
        append_json_string(out, r.failures()[k].law);
        out << ", \"witness\": ";
        append_json_string(out, r.failures()[k].witness);
        out << "}";
      }
      out << "]";
      if (options.timing) out << ", \"timing_ms\": " << static_cast<long long>(r.timing_ms() + 0.5);
      out << "}";
    }
    out << "\n  ],\n  \"summary\": {\"checks\": " << outcomes.size() << ", \"failed\": " << failed
        << ", \"passed\": " << outcomes.size() - failed << "}\n}\n";
    return out.str();
  }
  for (const auto& o : outcomes) {
    const auto& r = o.report;
    out << (r.passed() ? "PASS " : "FAIL ") << o.name;
    if (!r.instance().empty()) out << " [" << r.instance() << "]";
    if (!r.passed()) out << " (" << r.total_failures() << " failure" << (r.total_failures() == 1 ? "" : "s") << ")";
    if (options.timing) out << " " << static_cast<long long>(r.timing_ms() + 0.5) << " ms";
    out << "\n";
    for (std::size_t k = 0; k < r.failures().size() && k < cap; ++k)
      out << "    " << r.failures()[k].law << ": " << r.failures()[k].witness << "\n";
    if (r.failures().size() > cap) out << "    ... " << r.failures().size() - cap << " more\n";
  }
  out << outcomes.size() << " checks, " << outcomes.size() - failed << " passed, " << failed << " failed\n";
  return out.str();
}

int exit_code(const std::vector<CheckOutcome>& outcomes) {
  for (const auto& o : outcomes)
    if (!o.report.passed()) return 1;
  return 0;
}

}  // namespace coring
