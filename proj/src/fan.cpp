#include "fank/fan.hpp"

#include "fank/error.hpp"
#include "fank/polyhedral.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fank {

namespace {

bool subset(const RaySet& a, const RaySet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

RaySet meet_sets(const RaySet& a, const RaySet& b) {
  RaySet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace

std::string Fan::cell_label(const RaySet& rays) const {
  std::string s = "{";
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (i) s += ",";
    s += rays_.at(rays[i]).name;
  }
  return s + "}";
}

void Fan::build_cells(const std::vector<std::pair<RaySet, std::string>>& maximal) {
  std::map<RaySet, Cell> found;
  std::vector<RaySet> max_sets;
  for (const auto& [rs, name] : maximal) {
    std::vector<IntVector> vectors;
    for (auto r : rs) vectors.push_back(rays_.at(r).primitive);
    Cone cone = Cone::from_rays(n_, vectors);
    for (const auto& local : cone.face_sets()) {
      RaySet ids;
      for (auto i : local) ids.push_back(*find_ray(cone.rays()[i]));
      std::sort(ids.begin(), ids.end());
      if (found.count(ids)) continue;
      Cell c;
      c.rays = ids;
      c.cone = local.size() == cone.rays().size() ? cone : cone.face(local);
      found.emplace(ids, std::move(c));
    }
    max_sets.push_back(rs);
  }
  for (std::size_t k = 0; k < maximal.size(); ++k) {
    Cell& c = found.at(maximal[k].first);
    c.maximal = true;
    c.name = maximal[k].second;
  }
  std::vector<Cell> all;
  for (auto& [rs, c] : found) {
    if (c.name.empty()) c.name = cell_label(rs);
    all.push_back(std::move(c));
  }
  std::stable_sort(all.begin(), all.end(), [](const Cell& a, const Cell& b) {
    if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
    return a.rays < b.rays;
  });
  cells_ = std::move(all);
  index_.clear();
  for (std::size_t i = 0; i < cells_.size(); ++i) index_[cells_[i].rays] = i;
  maximal_.clear();
  for (const auto& rs : max_sets) maximal_.push_back(index_.at(rs));
  walls_.clear();
  for (std::size_t a = 0; a < maximal_.size(); ++a)
    for (std::size_t b = a + 1; b < maximal_.size(); ++b) {
      std::size_t m = meet(maximal_[a], maximal_[b]);
      const std::size_t da = cells_[maximal_[a]].cone.dim(), db = cells_[maximal_[b]].cone.dim();
      if (da == db && cells_[m].cone.dim() + 1 == da) walls_.push_back({a, b, m});
    }
}

Fan Fan::from_description(std::size_t n, const std::vector<NamedRay>& rays, const std::vector<ConeSpec>& cones) {
  if (n == 0) throw Error(ErrorCode::InvalidFan, "ambient dimension must be positive");
  Fan fan;
  fan.n_ = n;
  std::map<std::string, std::size_t> by_name;
  std::map<IntVector, std::size_t> by_vector;
  for (const auto& r : rays) {
    if (r.vector.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "ray " + r.name + " has " + std::to_string(r.vector.size()) +
                                                    " coordinates, expected " + std::to_string(n));
    if (is_zero(r.vector)) throw Error(ErrorCode::ZeroVector, "ray " + r.name + " is the zero vector");
    if (!by_name.emplace(r.name, fan.rays_.size()).second)
      throw Error(ErrorCode::InvalidFan, "duplicate ray name " + r.name);
    IntVector p = primitive(r.vector);
    auto [it, fresh] = by_vector.emplace(p, fan.rays_.size());
    if (!fresh)
      throw Error(ErrorCode::InvalidFan, "rays " + fan.rays_[it->second].name + " and " + r.name + " span the same ray");
    if (p != r.vector)
      fan.warnings_.push_back("ray " + r.name + " normalized from " + to_string(r.vector) + " to " + to_string(p));
    fan.rays_.push_back({r.name, p, r.vector});
  }
  if (cones.empty()) throw Error(ErrorCode::InvalidFan, "fan has no cones");

  struct Listed {
    std::string name;
    RaySet rays;
    Cone cone;
  };
  std::vector<Listed> listed;
  std::set<std::string> cone_names;
  for (const auto& spec : cones) {
    if (!cone_names.insert(spec.name).second) throw Error(ErrorCode::InvalidFan, "duplicate cone name " + spec.name);
    if (spec.rays.empty()) throw Error(ErrorCode::InvalidFan, "cone " + spec.name + " has no rays");
    RaySet ids;
    std::vector<IntVector> vectors;
    for (const auto& rn : spec.rays) {
      auto it = by_name.find(rn);
      if (it == by_name.end()) throw Error(ErrorCode::InvalidFan, "cone " + spec.name + " uses unknown ray " + rn);
      if (std::find(ids.begin(), ids.end(), it->second) != ids.end())
        throw Error(ErrorCode::InvalidFan, "duplicate ray " + rn + " in cone " + spec.name);
      ids.push_back(it->second);
      vectors.push_back(fan.rays_[it->second].primitive);
    }
    std::sort(ids.begin(), ids.end());
    Cone cone;
    try {
      cone = Cone::from_rays(n, vectors);
    } catch (const Error& e) {
      throw Error(e.code(), "cone " + spec.name + ": " + e.what());
    }
    if (cone.rays().size() != ids.size())
      for (auto id : ids)
        if (cone.ray_index(fan.rays_[id].primitive) == Cone::npos)
          throw Error(ErrorCode::InvalidFan,
                      "ray " + fan.rays_[id].name + " is not an extreme ray of cone " + spec.name);
    bool duplicate = false;
    for (const auto& l : listed)
      if (l.rays == ids) {
        fan.warnings_.push_back("cone " + spec.name + " duplicates cone " + l.name + "; dropped");
        duplicate = true;
      }
    if (!duplicate) listed.push_back({spec.name, ids, std::move(cone)});
  }

  for (std::size_t i = 0; i < listed.size(); ++i)
    for (std::size_t j = i + 1; j < listed.size(); ++j) {
      try {
        intersect(listed[i].cone, listed[j].cone);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAFace) throw;
        throw Error(ErrorCode::InvalidFan,
                    "cones " + listed[i].name + " and " + listed[j].name + " do not meet in a common face");
      }
    }

  std::vector<bool> keep(listed.size(), true);
  for (std::size_t i = 0; i < listed.size(); ++i)
    for (std::size_t j = 0; j < listed.size(); ++j)
      if (i != j && keep[i] && listed[i].rays.size() < listed[j].rays.size() && subset(listed[i].rays, listed[j].rays)) {
        fan.warnings_.push_back("cone " + listed[i].name + " is a face of cone " + listed[j].name + "; dropped");
        keep[i] = false;
      }

  std::vector<bool> used(fan.rays_.size(), false);
  for (std::size_t i = 0; i < listed.size(); ++i)
    if (keep[i])
      for (auto r : listed[i].rays) used[r] = true;
  std::vector<std::size_t> remap(fan.rays_.size(), Cone::npos);
  std::vector<FanRay> kept_rays;
  for (std::size_t r = 0; r < fan.rays_.size(); ++r) {
    if (!used[r]) {
      fan.warnings_.push_back("ray " + fan.rays_[r].name + " is not used by any cone; dropped");
      continue;
    }
    remap[r] = kept_rays.size();
    kept_rays.push_back(fan.rays_[r]);
  }
  fan.rays_ = std::move(kept_rays);
  std::vector<std::pair<RaySet, std::string>> maximal;
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (!keep[i]) continue;
    RaySet rs;
    for (auto r : listed[i].rays) rs.push_back(remap[r]);
    std::sort(rs.begin(), rs.end());
    maximal.emplace_back(rs, listed[i].name);
  }
  fan.build_cells(maximal);
  return fan;
}

Fan Fan::from_cones(std::size_t n, const std::vector<IntVector>& rays, const std::vector<RaySet>& cones) {
  std::vector<NamedRay> named;
  for (std::size_t i = 0; i < rays.size(); ++i) named.push_back({"r" + std::to_string(i + 1), rays[i]});
  std::vector<ConeSpec> specs;
  for (std::size_t k = 0; k < cones.size(); ++k) {
    ConeSpec s{"c" + std::to_string(k + 1), {}};
    for (auto i : cones[k]) s.rays.push_back(named.at(i).name);
    specs.push_back(std::move(s));
  }
  return from_description(n, named, specs);
}

Fan Fan::of_cone(const Cone& cone) {
  Fan fan;
  fan.n_ = cone.ambient();
  for (std::size_t i = 0; i < cone.rays().size(); ++i)
    fan.rays_.push_back({"r" + std::to_string(i + 1), cone.rays()[i], cone.rays()[i]});
  RaySet all(cone.rays().size());
  std::iota(all.begin(), all.end(), 0);
  fan.build_cells({{all, "sigma"}});
  return fan;
}

std::optional<std::size_t> Fan::find_cell(const RaySet& rays) const {
  auto it = index_.find(rays);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Fan::find_cell_by_vectors(const std::vector<IntVector>& vectors) const {
  RaySet ids;
  for (const auto& v : vectors) {
    auto r = find_ray(v);
    if (!r) return std::nullopt;
    ids.push_back(*r);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return find_cell(ids);
}

std::optional<std::size_t> Fan::find_cell_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Fan::find_ray(const IntVector& p) const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i].primitive == p) return i;
  return std::nullopt;
}

std::optional<std::size_t> Fan::find_ray_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Fan::meet(std::size_t a, std::size_t b) const {
  auto c = find_cell(meet_sets(cells_.at(a).rays, cells_.at(b).rays));
  if (!c) throw Error(ErrorCode::InvariantViolation, "cells " + cells_[a].name + " and " + cells_[b].name +
                                                         " meet outside the fan");
  return *c;
}

bool Fan::is_face_of(std::size_t a, std::size_t b) const { return subset(cells_.at(a).rays, cells_.at(b).rays); }

std::vector<std::size_t> Fan::faces_of(std::size_t cell) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (is_face_of(i, cell)) out.push_back(i);
  return out;
}

std::vector<std::size_t> Fan::maximal_containing(std::size_t cell) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < maximal_.size(); ++k)
    if (is_face_of(cell, maximal_[k])) out.push_back(k);
  return out;
}

Fan Fan::subfan(const std::vector<std::size_t>& generating) const {
  if (generating.empty()) throw Error(ErrorCode::EmptySubfan, "subfan needs at least one cone");
  std::vector<std::size_t> tops;
  for (auto g : generating) {
    bool covered = false;
    for (auto h : generating)
      if (h != g && is_face_of(g, h) && (cells_.at(g).rays != cells_.at(h).rays || h < g)) covered = true;
    if (!covered) tops.push_back(g);
  }
  std::sort(tops.begin(), tops.end());
  tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
  std::vector<bool> used(rays_.size(), false);
  for (auto t : tops)
    for (auto r : cells_[t].rays) used[r] = true;
  Fan sub;
  sub.n_ = n_;
  std::vector<std::size_t> remap(rays_.size(), Cone::npos);
  for (std::size_t r = 0; r < rays_.size(); ++r)
    if (used[r]) {
      remap[r] = sub.rays_.size();
      sub.rays_.push_back(rays_[r]);
    }
  // copy cells instead of recomputing their face lattices
  std::vector<bool> in_sub(cells_.size(), false);
  for (auto t : tops)
    for (auto f : faces_of(t)) in_sub[f] = true;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!in_sub[i]) continue;
    Cell c = cells_[i];
    for (auto& r : c.rays) r = remap[r];
    c.maximal = std::find(tops.begin(), tops.end(), i) != tops.end();
    sub.cells_.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < sub.cells_.size(); ++i) sub.index_[sub.cells_[i].rays] = i;
  for (auto t : tops) {
    RaySet rs = cells_[t].rays;
    for (auto& r : rs) r = remap[r];
    sub.maximal_.push_back(sub.index_.at(rs));
  }
  for (std::size_t a = 0; a < sub.maximal_.size(); ++a)
    for (std::size_t b = a + 1; b < sub.maximal_.size(); ++b) {
      std::size_t m = sub.meet(sub.maximal_[a], sub.maximal_[b]);
      const std::size_t da = sub.cells_[sub.maximal_[a]].cone.dim(), db = sub.cells_[sub.maximal_[b]].cone.dim();
      if (da == db && sub.cells_[m].cone.dim() + 1 == da) sub.walls_.push_back({a, b, m});
    }
  return sub;
}

Fan boundary(const Cone& cone) {
  Fan whole = Fan::of_cone(cone);
  std::vector<std::size_t> facets;
  for (const auto& f : cone.facet_data()) facets.push_back(*whole.find_cell(f.rays));
  if (facets.empty()) throw Error(ErrorCode::EmptySubfan, "the zero cone has no boundary");
  return whole.subfan(facets);
}

bool is_smooth_fan(const Fan& fan) {
  for (auto m : fan.maximal())
    if (!fan.cell(m).cone.is_smooth()) return false;
  return true;
}

bool is_simplicial_fan(const Fan& fan) {
  for (auto m : fan.maximal())
    if (!fan.cell(m).cone.is_simplicial()) return false;
  return true;
}

bool is_complete(const Fan& fan) {
  if (fan.maximal().empty()) return false;
  for (auto m : fan.maximal()) {
    const Cell& c = fan.cell(m);
    if (c.cone.dim() != fan.ambient()) return false;
    for (const auto& f : c.cone.facet_data()) {
      std::vector<IntVector> v;
      for (auto i : f.rays) v.push_back(c.cone.rays()[i]);
      auto cell = fan.find_cell_by_vectors(v);
      if (!cell || fan.maximal_containing(*cell).size() != 2) return false;
    }
  }
  return true;
}

bool is_polytopal(const Fan& fan) {
  if (!is_complete(fan)) throw Error(ErrorCode::Unsupported, "polytopality is only decided for complete fans");
  const std::size_t n = fan.ambient(), m = fan.maximal().size();
  LinearSystem sys;
  sys.nvars = n * m;
  auto functional_difference = [&](std::size_t a, std::size_t b, const IntVector& u) {
    RatVector row(sys.nvars);
    for (std::size_t j = 0; j < n; ++j) {
      row[a * n + j] += u[j];
      row[b * n + j] -= u[j];
    }
    return row;
  };
  for (std::size_t j = 0; j < n; ++j) {
    RatVector row(sys.nvars);
    row[j] = 1;
    sys.add_eq(row, 0);
  }
  for (const auto& w : fan.walls()) {
    const RaySet& wall = fan.cell(w.cell).rays;
    for (auto r : wall) sys.add_eq(functional_difference(w.first, w.second, fan.rays()[r].primitive), 0);
    for (auto [a, b] : {std::pair{w.first, w.second}, std::pair{w.second, w.first}})
      for (auto r : fan.maximal_cell(a).rays)
        if (!std::binary_search(wall.begin(), wall.end(), r))
          sys.add_ge(functional_difference(a, b, fan.rays()[r].primitive), 1);
  }
  return feasible_point(sys).has_value();
}

SingularityReport singularity_report(const Fan& fan) {
  SingularityReport rep;
  std::vector<bool> smooth(fan.cells().size());
  for (std::size_t i = 0; i < smooth.size(); ++i) smooth[i] = fan.cell(i).cone.is_smooth();
  for (std::size_t s = 0; s < smooth.size(); ++s) {
    if (smooth[s]) continue;
    SingularCone sc{s, true, true};
    for (std::size_t t = 0; t < smooth.size(); ++t) {
      if (t == s) continue;
      std::size_t m = fan.meet(s, t);
      if (!smooth[m]) sc.isolated = false;
      if (!smooth[t] && !fan.cell(m).rays.empty()) sc.distant = false;
    }
    rep.singular.push_back(sc);
  }
  rep.all_isolated = !rep.singular.empty();
  rep.all_distant = !rep.singular.empty();
  for (const auto& sc : rep.singular) {
    rep.all_isolated = rep.all_isolated && sc.isolated;
    rep.all_distant = rep.all_distant && sc.distant;
  }
  return rep;
}

namespace {

Integer cross2(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

void require_plane(const Fan& fan) {
  if (fan.ambient() != 2) throw Error(ErrorCode::Unsupported, "operation requires a fan in R^2");
}

// (first, second) ray ids of a 2-cone in counterclockwise order.
std::pair<std::size_t, std::size_t> oriented(const Fan& fan, const Cell& c) {
  std::size_t a = c.rays[0], b = c.rays[1];
  if (cross2(fan.rays()[a].primitive, fan.rays()[b].primitive) < 0) std::swap(a, b);
  return {a, b};
}

}  // namespace

std::vector<Clump> clump_decomposition(const Fan& fan) {
  require_plane(fan);
  if (is_complete(fan)) throw Error(ErrorCode::CompleteFan, "a complete fan has no clump decomposition");
  const std::size_t m = fan.maximal().size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!fan.cell(fan.meet(fan.maximal()[a], fan.maximal()[b])).rays.empty()) parent[find(a)] = find(b);
  std::vector<Clump> out;
  std::vector<bool> done(m, false);
  for (std::size_t a = 0; a < m; ++a) {
    if (done[a]) continue;
    std::vector<std::size_t> members;
    for (std::size_t b = 0; b < m; ++b)
      if (find(b) == find(a)) {
        members.push_back(b);
        done[b] = true;
      }
    Clump c;
    const Cell& first = fan.maximal_cell(members[0]);
    if (first.rays.size() < 2) {
      c.cones = members;
      c.rays = first.rays;
      out.push_back(std::move(c));
      continue;
    }
    std::map<std::size_t, std::size_t> by_start;
    std::set<std::size_t> ends;
    for (auto k : members) {
      auto [s, e] = oriented(fan, fan.maximal_cell(k));
      by_start[s] = k;
      ends.insert(e);
    }
    std::size_t start = Cone::npos;
    for (const auto& [s, k] : by_start)
      if (!ends.count(s)) start = s;
    if (start == Cone::npos) throw Error(ErrorCode::InvariantViolation, "cyclic clump in an incomplete fan");
    c.rays.push_back(start);
    for (auto it = by_start.find(start); it != by_start.end(); it = by_start.find(c.rays.back())) {
      c.cones.push_back(it->second);
      c.rays.push_back(oriented(fan, fan.maximal_cell(it->second)).second);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Clump cyclic_order_2d(const Fan& fan) {
  require_plane(fan);
  if (!is_complete(fan)) throw Error(ErrorCode::Unsupported, "fan is not complete");
  std::map<std::size_t, std::size_t> by_start;
  for (std::size_t k = 0; k < fan.maximal().size(); ++k) by_start[oriented(fan, fan.maximal_cell(k)).first] = k;
  std::size_t start = 0;
  for (std::size_t r = 1; r < fan.rays().size(); ++r)
    if (fan.rays()[r].primitive < fan.rays()[start].primitive) start = r;
  Clump c;
  c.rays.push_back(start);
  do {
    std::size_t k = by_start.at(c.rays.back());
    c.cones.push_back(k);
    c.rays.push_back(oriented(fan, fan.maximal_cell(k)).second);
  } while (c.rays.back() != start);
  return c;
}

namespace {

Splitting2D cut(const Clump& cycle, std::size_t i, std::size_t j) {
  // cones i..j-1 form Delta', the rest Delta''; both counterclockwise
  const std::size_t k = cycle.cones.size();
  Splitting2D s;
  for (std::size_t t = i; t < j; ++t) s.first.cones.push_back(cycle.cones[t]);
  for (std::size_t t = i; t <= j; ++t) s.first.rays.push_back(cycle.rays[t]);
  for (std::size_t t = j; t < i + k; ++t) s.second.cones.push_back(cycle.cones[t % k]);
  for (std::size_t t = j; t <= i + k; ++t) s.second.rays.push_back(cycle.rays[t % k]);
  return s;
}

}  // namespace

Splitting2D complete_2d_splitting(const Fan& fan) {
  require_plane(fan);
  if (fan.maximal().size() < 2)
    throw Error(ErrorCode::ImproperSplitting, "a fan with one maximal cone has no proper splitting");
  Clump cycle = cyclic_order_2d(fan);
  return cut(cycle, 0, (cycle.cones.size() + 1) / 2);
}

std::vector<Splitting2D> all_2d_splittings(const Fan& fan) {
  require_plane(fan);
  if (fan.maximal().size() < 2)
    throw Error(ErrorCode::ImproperSplitting, "a fan with one maximal cone has no proper splitting");
  Clump cycle = cyclic_order_2d(fan);
  std::vector<Splitting2D> out;
  const std::size_t k = cycle.cones.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) out.push_back(cut(cycle, i, j));
  return out;
}

}  // namespace fank
