#include "fank/classify.hpp"

#include "fank/error.hpp"
#include "fank/piecewise.hpp"

#include <numeric>

namespace fank {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Isomorphic: return "Isomorphic";
    case Outcome::NotIsomorphic: return "NotIsomorphic";
    case Outcome::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<Outcome> outcome_from_name(const std::string& s) {
  for (auto o : {Outcome::Isomorphic, Outcome::NotIsomorphic, Outcome::Unknown})
    if (s == outcome_name(o)) return o;
  return std::nullopt;
}

std::optional<Integer> ray_span_index(const Fan& fan) {
  std::vector<IntVector> rays;
  for (const auto& r : fan.rays()) rays.push_back(r.primitive);
  return spans_ambient(fan.ambient(), rays).index;
}

Integer odd_k1_rank(const Fan& fan) {
  if (fan.ambient() != 2) throw Error(ErrorCode::Unsupported, "the odd rank is computed for fans in R^2 only");
  if (!is_complete(fan)) throw Error(ErrorCode::Unsupported, "the odd rank is computed for complete fans only");
  return *ray_span_index(fan) - 1;
}

namespace {

std::string join_names(const Fan& fan, const std::vector<SingularCone>& cones) {
  std::string out;
  for (const auto& c : cones) out += (out.empty() ? "" : ", ") + fan.cell(c.cell).name;
  return out;
}

}  // namespace

Verdict classify(const Fan& fan) {
  Verdict v;
  const bool smooth = is_smooth_fan(fan);
  const bool complete = is_complete(fan);
  const bool plane = fan.ambient() == 2;
  SingularityReport rep = singularity_report(fan);

  if (smooth) v.certificates.push_back({"smooth-fan", "every cone is smooth"});
  if (rep.all_distant)
    v.certificates.push_back({"distant-singular-cones",
                              "singular cones " + join_names(fan, rep.singular) + " pairwise meet only at the origin"});
  if (plane && !complete) {
    std::size_t pieces = clump_decomposition(fan).size();
    v.certificates.push_back({"planar-incomplete", "incomplete fan in the plane with " + std::to_string(pieces) +
                                                       (pieces == 1 ? " clump" : " clumps")});
  }
  if (plane && complete) {
    v.span_index = ray_span_index(fan);
    v.odd_rank = *v.span_index - 1;
    if (*v.span_index == 1)
      v.certificates.push_back({"planar-span-index", "rays span the lattice (index 1)"});
  }

  if (!v.certificates.empty()) {
    v.outcome = Outcome::Isomorphic;
    v.rule = v.certificates.front().criterion;
    v.explanation = v.certificates.front().detail;
    return v;
  }
  if (plane && complete) {
    v.outcome = Outcome::NotIsomorphic;
    v.rule = "planar-span-index";
    v.explanation = "rays span a sublattice of index " + v.span_index->get_str() + "; K^1 has rank " +
                    v.odd_rank->get_str() + " (closed form derived, cross-checked by brute force)";
    return v;
  }
  v.outcome = Outcome::Unknown;
  std::string why = "fan is singular";
  std::vector<SingularCone> bad;
  for (const auto& c : rep.singular)
    if (!c.distant) bad.push_back(c);
  why += "; singular cones " + join_names(fan, bad) + " meet other singular cones away from the origin";
  why += rep.all_isolated ? " (all singular cones are isolated, a case no criterion covers)" : "";
  if (!plane) why += "; the planar criteria need dimension 2, fan has dimension " + std::to_string(fan.ambient());
  v.explanation = why;
  return v;
}

WeightData fwps_weights(const Fan& fan) {
  const std::size_t n = fan.ambient();
  if (fan.rays().size() != n + 1)
    throw Error(ErrorCode::NotFwps, "expected " + std::to_string(n + 1) + " rays, found " + std::to_string(fan.rays().size()));
  if (!is_complete(fan)) throw Error(ErrorCode::NotFwps, "fan is not complete");
  std::vector<IntVector> rows(n, IntVector(n + 1));
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = fan.rays()[j].primitive[i];
  Lattice kernel = perp_lattice(n + 1, rows);
  if (kernel.rank() != 1) throw Error(ErrorCode::NotFwps, "rays do not span R^n");
  IntVector chi = primitive(kernel.basis()[0]);
  if (chi[0] < 0) chi = -chi;
  for (const auto& c : chi)
    if (c <= 0) throw Error(ErrorCode::NotFwps, "no positive relation among the rays");
  WeightData w;
  w.weights = chi;
  std::vector<IntVector> rays;
  for (const auto& r : fan.rays()) rays.push_back(r.primitive);
  w.is_genuine_wps = spans_ambient(n, rays).spans;
  return w;
}

bool splitting_surjectivity(const Fan& fan, const Splitting2D& sp) {
  const Clump &D1 = sp.first, &D2 = sp.second;
  if (D1.rays.size() < 2 || D2.rays.size() < 2 || D1.rays.front() != D2.rays.back() || D1.rays.back() != D2.rays.front())
    throw Error(ErrorCode::ImproperSplitting, "the two clumps must meet exactly in their end rays");
  LatticeIdeal J = ideal_sum(clump_ideal(fan, D1), clump_ideal(fan, D2));
  for (std::size_t i = 0; i < fan.ambient(); ++i)
    if (!contains(LaurentPoly::constant(fan.ambient(), 1) - LaurentPoly::variable(fan.ambient(), i), J)) return false;
  return true;
}

}  // namespace fank
