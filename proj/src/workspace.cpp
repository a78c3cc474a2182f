#include "coring/workspace.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace coring {

const char* to_string(SpecError::Kind kind) {
  switch (kind) {
    case SpecError::Kind::Syntax: return "syntax error";
    case SpecError::Kind::Reference: return "reference error";
    case SpecError::Kind::Dimension: return "dimension mismatch";
    case SpecError::Kind::Schema: return "schema error";
    case SpecError::Kind::Invalid: return "invalid object";
  }
  return "error";
}

std::size_t Workspace::size() const {
  return rings.size() + modules.size() + morphisms.size() + corings.size() + coring_morphisms.size() +
         comodules.size() + cells.size() + two_cells.size() + adjunctions.size() + dual_tensors.size();
}

std::string Workspace::kind_of(const std::string& section, const std::string& name) const {
  auto s = canonical.find(section);
  if (s == canonical.end()) return {};
  auto d = s->find(name);
  if (d == s->end() || !d->contains("kind")) return {};
  return (*d)["kind"].get<std::string>();
}

namespace {

const std::vector<std::string> kSections = {"rings",     "modules", "morphisms",   "corings",      "coring_morphisms",
                                            "comodules", "cells",   "two_cells",   "adjunctions",  "dual_tensors"};

[[noreturn]] void fail(SpecError::Kind kind, const std::string& what) { throw SpecError(kind, what); }

using Lookup = std::function<std::optional<std::size_t>(const std::string&)>;

std::string scalar_text(const Json& v, const std::string& ctx) {
  try {
    if (v.is_string()) return to_string(parse_scalar(v.get<std::string>()));
    if (v.is_number_integer()) return to_string(Scalar(v.get<long>()));
  } catch (const std::invalid_argument&) {
  }
  fail(SpecError::Kind::Schema, ctx + ": expected a rational string, got " + v.dump());
}

Scalar scalar_of(const Json& v, const std::string& ctx) { return parse_scalar(scalar_text(v, ctx)); }

// Field access on one definition, recording a normalized copy and rejecting
// fields nobody asked for.
class Def {
 public:
  Def(const Json& src, std::string ctx) : src_(src), ctx_(std::move(ctx)) {
    if (!src.is_object()) fail(SpecError::Kind::Schema, ctx_ + ": definition must be an object");
  }

  const std::string& ctx() const { return ctx_; }
  bool has(const std::string& key) const { return src_.contains(key); }

  const Json& raw(const std::string& key) {
    if (!src_.contains(key)) fail(SpecError::Kind::Schema, ctx_ + ": missing field '" + key + "'");
    used_.insert(key);
    return src_.at(key);
  }
  std::string str(const std::string& key) {
    const Json& v = raw(key);
    if (!v.is_string()) fail(SpecError::Kind::Schema, ctx_ + "." + key + ": expected a string");
    out[key] = v;
    return v.get<std::string>();
  }
  std::optional<std::string> opt_str(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return str(key);
  }
  std::size_t count(const std::string& key) {
    const Json& v = raw(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
      fail(SpecError::Kind::Schema, ctx_ + "." + key + ": expected a non-negative integer");
    out[key] = v.get<std::size_t>();
    return v.get<std::size_t>();
  }
  std::optional<std::size_t> opt_count(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return count(key);
  }
  std::vector<std::string> strings(const std::string& key) {
    const Json& v = raw(key);
    if (!v.is_array()) fail(SpecError::Kind::Schema, ctx_ + "." + key + ": expected an array of strings");
    std::vector<std::string> items;
    for (const auto& e : v) {
      if (!e.is_string()) fail(SpecError::Kind::Schema, ctx_ + "." + key + ": expected an array of strings");
      items.push_back(e.get<std::string>());
    }
    out[key] = v;
    return items;
  }
  Scalar scalar(const std::string& key) {
    std::string text = scalar_text(raw(key), ctx_ + "." + key);
    out[key] = text;
    return parse_scalar(text);
  }

  void finish() const {
    for (const auto& [key, value] : src_.items())
      if (!used_.count(key)) fail(SpecError::Kind::Schema, ctx_ + ": unknown field '" + key + "'");
  }

  Json out = Json::object();

 private:
  const Json& src_;
  std::string ctx_;
  std::set<std::string> used_;
};

std::size_t lookup(const Lookup& find, const std::string& label, const std::string& ctx, const char* what) {
  auto k = find(label);
  if (!k) fail(SpecError::Kind::Reference, ctx + ": unknown " + std::string(what) + " '" + label + "'");
  return *k;
}

Lookup ring_labels(const GradedRing& r) {
  return [&r](const std::string& l) { return r.find_basis(l); };
}
Lookup module_labels(const Bimodule& m) {
  return [&m](const std::string& l) { return m.find_basis(l); };
}
Lookup index_labels(const GradedRing& r) {
  return [&r](const std::string& l) { return r.find_index(l); };
}

// {label: q} as a dense vector over a basis, normalized with zero entries dropped.
Vector label_vector(const Json& j, std::size_t n, const Lookup& find, const std::string& ctx, Json& norm) {
  if (!j.is_object()) fail(SpecError::Kind::Schema, ctx + ": expected an object of coefficients");
  Vector v(n);
  norm = Json::object();
  for (const auto& [label, value] : j.items()) {
    std::size_t k = lookup(find, label, ctx, "basis label");
    v[k] += scalar_of(value, ctx + "." + label);
  }
  for (const auto& [label, value] : j.items()) {
    std::size_t k = *find(label);
    if (sgn(v[k]) != 0) norm[label] = to_string(v[k]);
  }
  return v;
}

// A rows x cols matrix as {source label: {target label: q}} or as dense rows.
Matrix label_matrix(const Json& j, std::size_t rows, std::size_t cols, const Lookup& target, const Lookup& source,
                    const std::vector<std::string>& target_names, const std::vector<std::string>& source_names,
                    const std::string& ctx, Json& norm) {
  Matrix m = Matrix::zero(rows, cols);
  if (j.is_array()) {
    if (j.size() != rows) fail(SpecError::Kind::Dimension, ctx + ": " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r) {
      if (!j[r].is_array() || j[r].size() != cols)
        fail(SpecError::Kind::Dimension, ctx + ": row " + std::to_string(r) + " does not have " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_of(j[r][c], ctx);
    }
  } else if (j.is_object()) {
    for (const auto& [src, col] : j.items()) {
      std::size_t c = lookup(source, src, ctx, "basis label");
      Json ignored;
      Vector v = label_vector(col, rows, target, ctx + "." + src, ignored);
      for (std::size_t r = 0; r < rows; ++r) m(r, c) += v[r];
    }
  } else {
    fail(SpecError::Kind::Schema, ctx + ": expected a label map or an array of rows");
  }
  norm = Json::object();
  for (std::size_t c = 0; c < cols; ++c) {
    Json col = Json::object();
    for (std::size_t r = 0; r < rows; ++r)
      if (sgn(m(r, c)) != 0) col[target_names[r]] = to_string(m(r, c));
    if (!col.empty()) norm[source_names[c]] = col;
  }
  return m;
}

std::vector<std::string> names_of(const GradedRing& r) {
  std::vector<std::string> out;
  for (const auto& b : r.basis()) out.push_back(b.label);
  return out;
}
std::vector<std::string> names_of(const Bimodule& m) {
  std::vector<std::string> out;
  for (const auto& b : m.basis()) out.push_back(b.label);
  return out;
}

LinearMap label_map(const Json& j, const ModulePtr& source, const ModulePtr& target, const std::string& ctx,
                    Json& norm) {
  Matrix m = label_matrix(j, target->dim(), source->dim(), module_labels(*target), module_labels(*source),
                          names_of(*target), names_of(*source), ctx, norm);
  return make_map(source, target, std::move(m));
}

std::size_t line_of(const std::string& text, std::size_t byte, std::size_t& column) {
  std::size_t line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return line;
}

class Resolver {
 public:
  Resolver(const Json& defs, const ParseOptions& options, Workspace& w) : defs_(defs), options_(options), w_(w) {}

  void run() {
    for (const auto& section : kSections) {
      if (!defs_.contains(section)) continue;
      for (const auto& [name, def] : defs_[section].items()) build(section, name);
    }
  }

 private:
  const Json& defs_;
  const ParseOptions& options_;
  Workspace& w_;
  std::set<std::pair<std::string, std::string>> active_;
  std::map<std::string, std::shared_ptr<LazyRing>> lazies_;

  void build(const std::string& section, const std::string& name) {
    if (section == "rings") ring(name);
    else if (section == "modules") module(name);
    else if (section == "morphisms") morphism(name);
    else if (section == "corings") coring(name);
    else if (section == "coring_morphisms") coring_morphism(name);
    else if (section == "comodules") comodule(name);
    else if (section == "cells") cell(name);
    else if (section == "two_cells") two_cell(name);
    else if (section == "adjunctions") adjunction(name);
    else if (section == "dual_tensors") dual_tensor(name);
  }

  // Shared shape of every resolver: memo lookup, cycle guard, normalized record.
  template <class Map, class Make>
  const typename Map::mapped_type& resolve(Map& map, const std::string& section, const std::string& name, Make make) {
    if (auto it = map.find(name); it != map.end()) return it->second;
    auto s = defs_.find(section);
    if (s == defs_.end() || !s->contains(name))
      fail(SpecError::Kind::Reference, "unresolved reference to " + section + " entry '" + name + "'");
    auto key = std::make_pair(section, name);
    if (active_.count(key)) fail(SpecError::Kind::Reference, "cyclic reference through " + section + " entry '" + name + "'");
    active_.insert(key);
    Def d((*s)[name], section + "." + name);
    typename Map::mapped_type value = guarded(d.ctx(), [&] { return make(d, d.str("kind")); });
    d.finish();
    active_.erase(key);
    w_.canonical[section][name] = d.out;
    return map.emplace(name, std::move(value)).first->second;
  }

  template <class F>
  static auto guarded(const std::string& ctx, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const SpecError&) {
      throw;
    } catch (const InvalidMorphism& e) {
      fail(SpecError::Kind::Invalid, ctx + ": " + e.what() + "\n" + e.report().summary());
    } catch (const MissingDualBasis& e) {
      fail(SpecError::Kind::Invalid, ctx + ": " + e.what());
    } catch (const DimensionError& e) {
      fail(SpecError::Kind::Dimension, ctx + ": " + e.what());
    } catch (const RingMismatch& e) {
      fail(SpecError::Kind::Dimension, ctx + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      fail(SpecError::Kind::Invalid, ctx + ": " + e.what());
    } catch (const std::out_of_range& e) {
      fail(SpecError::Kind::Invalid, ctx + ": " + e.what());
    }
  }

  IndexSet indices(Def& d, const std::string& key, const GradedRing& r) {
    IndexSet s;
    for (const auto& l : d.strings(key)) s.push_back(lookup(index_labels(r), l, d.ctx() + "." + key, "idempotent index"));
    return make_index_set(s);
  }

  // ------------------------------------------------------------ rings

  RingPtr ring(const std::string& name) {
    return resolve(w_.rings, "rings", name, [&](Def& d, const std::string& kind) -> RingPtr {
      if (kind == "field") return field_ring();
      if (kind == "matrix") return matrix_ring(d.count("n"), name);
      if (kind == "path") return path_ring(d, name);
      if (kind == "direct_sum") {
        std::vector<RingPtr> parts;
        for (const auto& p : d.strings("of")) parts.push_back(ring(p));
        return direct_sum(parts, name);
      }
      if (kind == "rees") {
        RingPtr base = ring(d.str("base"));
        return rees_ring(base, d.count("n"), name);
      }
      if (kind == "corner") {
        RingPtr r = ring(d.str("ring"));
        return corner(r, indices(d, "indices", *r));
      }
      if (kind == "infinite_matrix" || kind == "infinite_path") {
        std::size_t n = d.opt_count("corner").value_or(options_.corner_bound);
        auto lazy = kind == "infinite_matrix" ? infinite_matrix_ring(n) : infinite_path_algebra(n);
        lazies_[name] = lazy;
        return lazy->corner(n);
      }
      if (kind == "corrupted") {
        RingPtr r = ring(d.str("ring"));
        std::size_t a = lookup(ring_labels(*r), d.str("left"), d.ctx(), "basis label");
        std::size_t b = lookup(ring_labels(*r), d.str("right"), d.ctx(), "basis label");
        Json norm;
        Vector v = label_vector(d.raw("value"), r->dim(), ring_labels(*r), d.ctx() + ".value", norm);
        d.out["value"] = norm;
        return with_corrupted_product(*r, a, b, SparseVector::from_dense(v));
      }
      if (kind == "explicit") return explicit_ring(d, name);
      fail(SpecError::Kind::Schema, d.ctx() + ": unknown ring kind '" + kind + "'");
    });
  }

  RingPtr path_ring(Def& d, const std::string& name) {
    Quiver q;
    q.vertices = d.strings("vertices");
    const Json& arrows = d.raw("arrows");
    if (!arrows.is_array()) fail(SpecError::Kind::Schema, d.ctx() + ".arrows: expected an array");
    Json norm = Json::array();
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      Def a(arrows[k], d.ctx() + ".arrows[" + std::to_string(k) + "]");
      std::string label = a.str("label");
      auto vertex = [&](const std::string& key) {
        std::string v = a.str(key);
        auto it = std::find(q.vertices.begin(), q.vertices.end(), v);
        if (it == q.vertices.end()) fail(SpecError::Kind::Reference, a.ctx() + ": unknown vertex '" + v + "'");
        return static_cast<std::size_t>(it - q.vertices.begin());
      };
      std::size_t s = vertex("source");
      std::size_t t = vertex("target");
      a.finish();
      q.arrows.push_back({label, s, t});
      norm.push_back(a.out);
    }
    d.out["arrows"] = norm;
    return path_algebra(q, name, d.opt_count("max_length"));
  }

  RingPtr explicit_ring(Def& d, const std::string& name) {
    std::vector<std::string> idx = d.strings("indices");
    auto find_idx = [&](const std::string& l, const std::string& ctx) {
      auto it = std::find(idx.begin(), idx.end(), l);
      if (it == idx.end()) fail(SpecError::Kind::Reference, ctx + ": unknown idempotent index '" + l + "'");
      return static_cast<std::size_t>(it - idx.begin());
    };
    std::vector<GradedBasisElement> basis;
    std::map<std::string, std::size_t> pos;
    Json bnorm = Json::array();
    const Json& bj = d.raw("basis");
    if (!bj.is_array()) fail(SpecError::Kind::Schema, d.ctx() + ".basis: expected an array");
    for (std::size_t k = 0; k < bj.size(); ++k) {
      Def b(bj[k], d.ctx() + ".basis[" + std::to_string(k) + "]");
      std::string label = b.str("label");
      std::size_t l = find_idx(b.str("left"), b.ctx());
      std::size_t r = find_idx(b.str("right"), b.ctx());
      b.finish();
      if (!pos.emplace(label, basis.size()).second)
        fail(SpecError::Kind::Schema, b.ctx() + ": duplicate basis label '" + label + "'");
      basis.push_back({label, l, r});
      bnorm.push_back(b.out);
    }
    d.out["basis"] = bnorm;
    Lookup find = [&](const std::string& l) -> std::optional<std::size_t> {
      auto it = pos.find(l);
      if (it == pos.end()) return std::nullopt;
      return it->second;
    };
    const Json& ij = d.raw("idempotents");
    if (!ij.is_object()) fail(SpecError::Kind::Schema, d.ctx() + ".idempotents: expected an object");
    std::vector<std::size_t> ids(idx.size(), basis.size());
    for (const auto& [i, label] : ij.items()) {
      if (!label.is_string()) fail(SpecError::Kind::Schema, d.ctx() + ".idempotents." + i + ": expected a basis label");
      ids[find_idx(i, d.ctx() + ".idempotents")] = lookup(find, label.get<std::string>(), d.ctx() + ".idempotents", "basis label");
    }
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (ids[i] == basis.size()) fail(SpecError::Kind::Schema, d.ctx() + ": no idempotent for index '" + idx[i] + "'");
    d.out["idempotents"] = ij;
    const std::size_t n = basis.size();
    std::vector<SparseVector> products(n * n);
    Json pnorm = Json::object();
    const Json& pj = d.raw("products");
    if (!pj.is_object()) fail(SpecError::Kind::Schema, d.ctx() + ".products: expected an object");
    for (const auto& [a, row] : pj.items()) {
      std::size_t ka = lookup(find, a, d.ctx() + ".products", "basis label");
      if (!row.is_object()) fail(SpecError::Kind::Schema, d.ctx() + ".products." + a + ": expected an object");
      for (const auto& [b, value] : row.items()) {
        std::size_t kb = lookup(find, b, d.ctx() + ".products." + a, "basis label");
        Json norm;
        Vector v = label_vector(value, n, find, d.ctx() + ".products." + a + "." + b, norm);
        products[ka * n + kb] = SparseVector::from_dense(v);
        if (!norm.empty()) pnorm[a][b] = norm;
      }
    }
    d.out["products"] = pnorm;
    return std::make_shared<const GradedRing>(name, idx, std::move(basis), std::move(ids), std::move(products));
  }

  // ------------------------------------------------------------ modules

  ModulePtr module(const std::string& name) {
    return resolve(w_.modules, "modules", name, [&](Def& d, const std::string& kind) -> ModulePtr {
      if (kind == "regular") return regular(ring(d.str("ring")));
      if (kind == "right_ideal" || kind == "corner_right_ideal" || kind == "left_ideal") {
        RingPtr r = ring(d.str("ring"));
        IndexSet s = indices(d, "indices", *r);
        if (kind == "right_ideal") return right_ideal(r, s);
        if (kind == "left_ideal") return left_ideal(r, s);
        return corner_right_ideal(r, s);
      }
      if (kind == "simple_top") {
        RingPtr r = ring(d.str("ring"));
        return simple_top(r, lookup(index_labels(*r), d.str("index"), d.ctx(), "idempotent index"));
      }
      if (kind == "direct_sum") {
        auto parts = d.strings("of");
        if (parts.size() != 2) fail(SpecError::Kind::Schema, d.ctx() + ".of: expected two modules");
        return direct_sum(module(parts[0]), module(parts[1]), name);
      }
      if (kind == "tensor") {
        auto parts = d.strings("of");
        if (parts.size() != 2) fail(SpecError::Kind::Schema, d.ctx() + ".of: expected two modules");
        return tensor_module(module(parts[0]), module(parts[1]));
      }
      if (kind == "dual") return right_dual(module(d.str("module")))->module;
      if (kind == "restrict_right") return restrict_right(module(d.str("module")), morphism(d.str("morphism")));
      if (kind == "restrict_left") return restrict_left(module(d.str("module")), morphism(d.str("morphism")));
      if (kind == "corrupted") {
        ModulePtr m = module(d.str("module"));
        std::size_t b = lookup(module_labels(*m), d.str("basis"), d.ctx(), "basis label");
        std::size_t a = lookup(ring_labels(*m->right_ring()), d.str("ring_basis"), d.ctx(), "basis label");
        Json norm;
        Vector v = label_vector(d.raw("value"), m->dim(), module_labels(*m), d.ctx() + ".value", norm);
        d.out["value"] = norm;
        return with_corrupted_right_action(*m, b, a, SparseVector::from_dense(v));
      }
      if (kind == "explicit") return explicit_module(d, name);
      fail(SpecError::Kind::Schema, d.ctx() + ": unknown module kind '" + kind + "'");
    });
  }

  ModulePtr explicit_module(Def& d, const std::string& name) {
    RingPtr l = ring(d.str("left_ring"));
    RingPtr r = ring(d.str("right_ring"));
    std::vector<ModuleBasisElement> basis;
    std::map<std::string, std::size_t> pos;
    Json bnorm = Json::array();
    const Json& bj = d.raw("basis");
    if (!bj.is_array()) fail(SpecError::Kind::Schema, d.ctx() + ".basis: expected an array");
    for (std::size_t k = 0; k < bj.size(); ++k) {
      Def b(bj[k], d.ctx() + ".basis[" + std::to_string(k) + "]");
      std::string label = b.str("label");
      std::size_t li = lookup(index_labels(*l), b.str("left"), b.ctx(), "idempotent index");
      std::size_t ri = lookup(index_labels(*r), b.str("right"), b.ctx(), "idempotent index");
      b.finish();
      if (!pos.emplace(label, basis.size()).second)
        fail(SpecError::Kind::Schema, b.ctx() + ": duplicate basis label '" + label + "'");
      basis.push_back({label, li, ri});
      bnorm.push_back(b.out);
    }
    d.out["basis"] = bnorm;
    Lookup find = [&](const std::string& lb) -> std::optional<std::size_t> {
      auto it = pos.find(lb);
      if (it == pos.end()) return std::nullopt;
      return it->second;
    };
    const std::size_t n = basis.size();
    auto table = [&](const std::string& key, const Lookup& outer, const Lookup& inner, std::size_t stride,
                     bool ring_first) {
      std::vector<SparseVector> out(ring_first ? l->dim() * n : n * r->dim());
      Json norm = Json::object();
      const Json& tj = d.raw(key);
      if (!tj.is_object()) fail(SpecError::Kind::Schema, d.ctx() + "." + key + ": expected an object");
      for (const auto& [x, row] : tj.items()) {
        std::size_t kx = lookup(outer, x, d.ctx() + "." + key, "basis label");
        if (!row.is_object()) fail(SpecError::Kind::Schema, d.ctx() + "." + key + "." + x + ": expected an object");
        for (const auto& [y, value] : row.items()) {
          std::size_t ky = lookup(inner, y, d.ctx() + "." + key + "." + x, "basis label");
          Json vnorm;
          Vector v = label_vector(value, n, find, d.ctx() + "." + key + "." + x + "." + y, vnorm);
          out[kx * stride + ky] = SparseVector::from_dense(v);
          if (!vnorm.empty()) norm[x][y] = vnorm;
        }
      }
      d.out[key] = norm;
      return out;
    };
    auto left = table("left_action", ring_labels(*l), find, n, true);
    auto right = table("right_action", find, ring_labels(*r), r->dim(), false);
    return std::make_shared<const Bimodule>(name, l, r, std::move(basis), std::move(left), std::move(right));
  }

  // ------------------------------------------------------------ morphisms

  const RingMorphism& morphism(const std::string& name) {
    return resolve(w_.morphisms, "morphisms", name, [&](Def& d, const std::string& kind) -> RingMorphism {
      if (kind == "identity") {
        RingMorphism id = identity_morphism(ring(d.str("ring")));
        id.name = name;
        return id;
      }
      if (kind != "explicit") fail(SpecError::Kind::Schema, d.ctx() + ": unknown morphism kind '" + kind + "'");
      RingPtr s = ring(d.str("source"));
      RingPtr t = ring(d.str("target"));
      Json norm;
      Matrix m = label_matrix(d.raw("images"), t->dim(), s->dim(), ring_labels(*t), ring_labels(*s), names_of(*t),
                              names_of(*s), d.ctx() + ".images", norm);
      d.out["images"] = norm;
      std::vector<Vector> images;
      for (std::size_t k = 0; k < s->dim(); ++k) images.push_back(m.column(k));
      return RingMorphism{name, s, t, std::move(images)};
    });
  }

  // ------------------------------------------------------------ corings

  CoringPtr coring(const std::string& name) {
    return resolve(w_.corings, "corings", name, [&](Def& d, const std::string& kind) -> CoringPtr {
      if (kind == "trivial") return trivial_coring(ring(d.str("ring")));
      if (kind == "sweedler") return sweedler_coring(morphism(d.str("morphism")));
      if (kind == "split") {
        RingPtr r = ring(d.str("ring"));
        return split_coring(r, module(d.str("module")));
      }
      if (kind == "comatrix") return comatrix_coring(module(d.str("sigma")));
      if (kind == "base_extension") {
        ModulePtr s = module(d.str("sigma"));
        return base_extension(s, coring(d.str("coring")));
      }
      if (kind == "rees") {
        RingPtr r = ring(d.str("ring"));
        return rees_coring(r, indices(d, "indices", *r)).coring;
      }
      if (kind == "swapped") return with_swapped_legs(*coring(d.str("coring")));
      if (kind == "explicit") {
        ModulePtr c = module(d.str("carrier"));
        ModulePtr cc = tensor_module(c, c);
        const GradedRing& a = *c->right_ring();
        Json dn, en;
        Matrix delta = label_matrix(d.raw("delta"), cc->dim(), c->dim(), module_labels(*cc), module_labels(*c),
                                    names_of(*cc), names_of(*c), d.ctx() + ".delta", dn);
        Matrix eps = label_matrix(d.raw("epsilon"), a.dim(), c->dim(), ring_labels(a), module_labels(*c),
                                  names_of(a), names_of(*c), d.ctx() + ".epsilon", en);
        d.out["delta"] = dn;
        d.out["epsilon"] = en;
        return make_coring(name, c, std::move(delta), std::move(eps));
      }
      fail(SpecError::Kind::Schema, d.ctx() + ": unknown coring kind '" + kind + "'");
    });
  }

  const CoringMorphism& coring_morphism(const std::string& name) {
    return resolve(w_.coring_morphisms, "coring_morphisms", name, [&](Def& d, const std::string& kind) -> CoringMorphism {
      CoringMorphism out;
      if (kind == "identity") {
        out = identity_morphism(coring(d.str("coring")));
      } else if (kind == "counit") {
        out = counit_morphism(coring(d.str("coring")));
      } else if (kind == "base_extension_to_comatrix") {
        CoringPtr s = coring(d.str("source"));
        out = base_extension_to_comatrix(s, coring(d.str("target")));
      } else if (kind == "compose") {
        auto parts = d.strings("of");
        if (parts.size() != 2) fail(SpecError::Kind::Schema, d.ctx() + ".of: expected two morphisms");
        const CoringMorphism& psi = coring_morphism(parts[0]);
        out = compose(psi, coring_morphism(parts[1]));
      } else if (kind == "explicit") {
        CoringPtr s = coring(d.str("source"));
        CoringPtr t = coring(d.str("target"));
        Json norm;
        LinearMap f = label_map(d.raw("map"), s->carrier, t->carrier, d.ctx() + ".map", norm);
        d.out["map"] = norm;
        out = CoringMorphism{name, s, t, f};
      } else {
        fail(SpecError::Kind::Schema, d.ctx() + ": unknown coring morphism kind '" + kind + "'");
      }
      out.name = name;
      return out;
    });
  }

  const Comodule& comodule(const std::string& name) {
    return resolve(w_.comodules, "comodules", name, [&](Def& d, const std::string& kind) -> Comodule {
      Comodule out;
      if (kind == "cofree") {
        ModulePtr x = module(d.str("module"));
        out = cofree_comodule(x, coring(d.str("coring")));
      } else if (kind == "regular") {
        out = regular_comodule(coring(d.str("coring")));
      } else if (kind == "comatrix") {
        ModulePtr s = module(d.str("sigma"));
        out = comatrix_comodule(s, coring(d.str("coring")));
      } else if (kind == "corestrict") {
        const CoringMorphism& phi = coring_morphism(d.str("morphism"));
        out = corestrict(phi, comodule(d.str("comodule")));
      } else if (kind == "induce") {
        const OneCell& c = cell(d.str("cell"));
        out = induce_comodule(c, comodule(d.str("comodule")));
      } else {
        fail(SpecError::Kind::Schema, d.ctx() + ": unknown comodule kind '" + kind + "'");
      }
      out.name = name;
      return out;
    });
  }

  // ------------------------------------------------------------ cells

  const OneCell& cell(const std::string& name) {
    return resolve(w_.cells, "cells", name, [&](Def& d, const std::string& kind) -> OneCell {
      OneCell out;
      if (kind == "identity") {
        out = identity_one_cell(coring(d.str("coring")));
      } else if (kind == "collapse") {
        CoringPtr c = coring(d.str("coring"));
        out = collapse_one_cell(c, module(d.str("module")));
      } else if (kind == "morphism") {
        out = morphism_one_cell(coring_morphism(d.str("morphism")));
      } else if (kind == "comodule") {
        out = comodule_one_cell(comodule(d.str("comodule")));
      } else if (kind == "compose") {
        auto parts = d.strings("of");
        if (parts.size() != 2) fail(SpecError::Kind::Schema, d.ctx() + ".of: expected two cells");
        const OneCell& m = cell(parts[0]);
        out = compose_one_cells(m, cell(parts[1]));
      } else if (kind == "explicit") {
        CoringPtr t = coring(d.str("target"));
        CoringPtr s = coring(d.str("source"));
        ModulePtr m = module(d.str("module"));
        Json norm;
        LinearMap f = label_map(d.raw("map"), tensor_module(t->carrier, m), tensor_module(m, s->carrier),
                                d.ctx() + ".map", norm);
        d.out["map"] = norm;
        out = OneCell{name, t, s, m, f};
      } else {
        fail(SpecError::Kind::Schema, d.ctx() + ": unknown cell kind '" + kind + "'");
      }
      out.name = name;
      return out;
    });
  }

  const TwoCell& two_cell(const std::string& name) {
    return resolve(w_.two_cells, "two_cells", name, [&](Def& d, const std::string& kind) -> TwoCell {
      TwoCell out;
      if (kind == "collapse") {
        const OneCell& c = cell(d.str("cell"));
        Scalar k = d.has("scale") ? d.scalar("scale") : Scalar(1);
        out = collapse_two_cell(c, k);
      } else if (kind == "zero") {
        const OneCell& s = cell(d.str("source"));
        out = zero_two_cell(s, cell(d.str("target")));
      } else if (kind == "vertical" || kind == "horizontal") {
        auto parts = d.strings("of");
        if (parts.size() != 2) fail(SpecError::Kind::Schema, d.ctx() + ".of: expected two 2-cells");
        const TwoCell& a = two_cell(parts[0]);
        const TwoCell& b = two_cell(parts[1]);
        out = kind == "vertical" ? compose_vertical(a, b) : compose_horizontal(a, b);
      } else if (kind == "random") {
        const OneCell& s = cell(d.str("source"));
        const OneCell& t = cell(d.str("target"));
        std::mt19937 rng(static_cast<std::mt19937::result_type>(d.count("seed")));
        out = random_two_cell(s, t, rng);
      } else if (kind == "explicit") {
        const OneCell& s = cell(d.str("source"));
        const OneCell& t = cell(d.str("target"));
        Json norm;
        LinearMap f = label_map(d.raw("map"), tensor_module(s.target->carrier, s.module), t.module,
                                d.ctx() + ".map", norm);
        d.out["map"] = norm;
        out = TwoCell{name, s, t, f};
      } else {
        fail(SpecError::Kind::Schema, d.ctx() + ": unknown 2-cell kind '" + kind + "'");
      }
      out.name = name;
      return out;
    });
  }

  static TwoCell random_two_cell(const OneCell& s, const OneCell& t, std::mt19937& rng) {
    auto hom = hom_space(tensor_module(s.target->carrier, s.module), t.module, Side::Both);
    std::uniform_int_distribution<int> coeff(-3, 3);
    LinearMap f = zero_map(tensor_module(s.target->carrier, s.module), t.module);
    bool any = false;
    for (const auto& h : hom) {
      int c = coeff(rng);
      if (c == 0) continue;
      f = add(f, scale(Scalar(c), h));
      any = true;
    }
    if (!any && !hom.empty()) f = hom.front();
    return TwoCell{"random", s, t, f};
  }

  // ------------------------------------------------------------ adjunction data

  const AdjunctionEntry& adjunction(const std::string& name) {
    return resolve(w_.adjunctions, "adjunctions", name, [&](Def& d, const std::string& kind) -> AdjunctionEntry {
      if (kind != "adjunction") fail(SpecError::Kind::Schema, d.ctx() + ": unknown adjunction kind '" + kind + "'");
      AdjunctionEntry out;
      out.sigma = module(d.str("sigma"));
      out.family = dual_basis_family(out.sigma);
      if (d.has("coring")) out.coring = coring(d.str("coring"));
      if (d.has("corrupt")) {
        Def c(d.raw("corrupt"), d.ctx() + ".corrupt");
        std::size_t j = lookup(index_labels(*out.sigma->left_ring()), c.str("component"), c.ctx(), "idempotent index");
        Scalar factor = c.scalar("factor");
        c.finish();
        d.out["corrupt"] = c.out;
        out.family = corrupt_dual_basis(out.family, j, factor);
      }
      return out;
    });
  }

  const DualTensorEntry& dual_tensor(const std::string& name) {
    return resolve(w_.dual_tensors, "dual_tensors", name, [&](Def& d, const std::string& kind) -> DualTensorEntry {
      if (kind != "dual_tensor") fail(SpecError::Kind::Schema, d.ctx() + ": unknown dual tensor kind '" + kind + "'");
      ModulePtr wm = module(d.str("w"));
      return DualTensorEntry{wm, module(d.str("sigma"))};
    });
  }
};

Json parse_document(const std::string& text) {
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) return Json::object();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t column = 0;
    std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1, column);
    std::string what = e.what();
    auto colon = what.find(": ");
    auto detail = what.rfind(": ");
    fail(SpecError::Kind::Syntax, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                      (colon == std::string::npos ? what : what.substr(detail + 2)));
  }
}

// ------------------------------------------------------------ explicit documents

Json ring_json(const GradedRing& r) {
  Json d = {{"kind", "explicit"}, {"indices", r.index_labels()}};
  Json basis = Json::array();
  for (const auto& b : r.basis())
    basis.push_back({{"label", b.label}, {"left", r.index_label(b.left)}, {"right", r.index_label(b.right)}});
  d["basis"] = basis;
  Json ids = Json::object();
  for (std::size_t i = 0; i < r.index_count(); ++i) ids[r.index_label(i)] = r.basis(r.idempotent_basis(i)).label;
  d["idempotents"] = ids;
  Json products = Json::object();
  for (std::size_t a = 0; a < r.dim(); ++a)
    for (std::size_t b = 0; b < r.dim(); ++b) {
      const auto& p = r.product(a, b);
      if (p.empty()) continue;
      Json v = Json::object();
      for (const auto& [k, c] : p.entries) v[r.basis(k).label] = to_string(c);
      products[r.basis(a).label][r.basis(b).label] = v;
    }
  d["products"] = products;
  return d;
}

Json module_json(const Bimodule& m, const std::string& left_name, const std::string& right_name) {
  const auto& l = *m.left_ring();
  const auto& r = *m.right_ring();
  Json d = {{"kind", "explicit"}, {"left_ring", left_name}, {"right_ring", right_name}};
  Json basis = Json::array();
  for (const auto& b : m.basis())
    basis.push_back({{"label", b.label}, {"left", l.index_label(b.left)}, {"right", r.index_label(b.right)}});
  d["basis"] = basis;
  auto entry = [&](const SparseVector& v) {
    Json out = Json::object();
    for (const auto& [k, c] : v.entries) out[m.basis(k).label] = to_string(c);
    return out;
  };
  Json left = Json::object(), right = Json::object();
  for (std::size_t b = 0; b < l.dim(); ++b)
    for (std::size_t x = 0; x < m.dim(); ++x)
      if (!m.left_act(b, x).empty()) left[l.basis(b).label][m.basis(x).label] = entry(m.left_act(b, x));
  for (std::size_t x = 0; x < m.dim(); ++x)
    for (std::size_t a = 0; a < r.dim(); ++a)
      if (!m.right_act(x, a).empty()) right[m.basis(x).label][r.basis(a).label] = entry(m.right_act(x, a));
  d["left_action"] = left;
  d["right_action"] = right;
  return d;
}

Json matrix_json(const Matrix& m, const std::vector<std::string>& rows, const std::vector<std::string>& cols) {
  Json out = Json::object();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Json col = Json::object();
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0) col[rows[r]] = to_string(m(r, c));
    if (!col.empty()) out[cols[c]] = col;
  }
  return out;
}

}  // namespace

Workspace parse_spec(const std::vector<std::string>& documents, const ParseOptions& options) {
  Json merged = Json::object();
  for (const auto& text : documents) {
    Json doc = parse_document(text);
    if (!doc.is_object()) fail(SpecError::Kind::Schema, "document must be an object of sections");
    for (const auto& [section, entries] : doc.items()) {
      if (std::find(kSections.begin(), kSections.end(), section) == kSections.end())
        fail(SpecError::Kind::Schema, "unknown section '" + section + "'");
      if (!entries.is_object()) fail(SpecError::Kind::Schema, "section '" + section + "' must be an object");
      for (const auto& [name, def] : entries.items()) {
        if (merged[section].contains(name))
          fail(SpecError::Kind::Schema, "duplicate definition of " + section + " entry '" + name + "'");
        merged[section][name] = def;
      }
    }
  }
  Workspace w;
  Resolver(merged, options, w).run();
  return w;
}

Workspace parse_spec(const std::string& document, const ParseOptions& options) {
  return parse_spec(std::vector<std::string>{document}, options);
}

std::string canonical_dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string serialize(const Workspace& w) { return canonical_dump(w.canonical); }

Json coring_document(const Coring& c, const std::string& name) {
  const auto& ring = *c.ring;
  const auto& carrier = *c.carrier;
  Json doc = Json::object();
  doc["rings"][ring.name()] = ring_json(ring);
  doc["modules"][carrier.name()] = module_json(carrier, ring.name(), ring.name());
  auto cc = tensor_module(c.carrier, c.carrier);
  std::vector<std::string> cn, ccn, an;
  for (const auto& b : carrier.basis()) cn.push_back(b.label);
  for (const auto& b : cc->basis()) ccn.push_back(b.label);
  for (const auto& b : ring.basis()) an.push_back(b.label);
  doc["corings"][name] = {{"kind", "explicit"},
                          {"carrier", carrier.name()},
                          {"delta", matrix_json(c.delta.matrix, ccn, cn)},
                          {"epsilon", matrix_json(c.epsilon.matrix, an, cn)}};
  return doc;
}

}  // namespace coring
