#pragma once

#include "fank/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fank {

enum class Outcome { Isomorphic, NotIsomorphic, Unknown };

const char* outcome_name(Outcome o);
std::optional<Outcome> outcome_from_name(const std::string& s);

/// A sufficient (or, for the span index, decisive) criterion that holds on the fan.
struct Certificate {
  std::string criterion;  // smooth-fan | distant-singular-cones | planar-incomplete | planar-span-index
  std::string detail;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::string rule;  // criterion that decided, empty for Unknown
  std::vector<Certificate> certificates;
  std::optional<Integer> span_index;  // complete fans in the plane
  std::optional<Integer> odd_rank;    // complete fans in the plane
  std::string explanation;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict classify(const Fan& fan);

/// Index of the sublattice spanned by the primitive ray generators; nullopt below full rank.
std::optional<Integer> ray_span_index(const Fan& fan);

/// Rank of K^1 for a complete fan in the plane: span index minus one.
Integer odd_k1_rank(const Fan& fan);

struct WeightData {
  std::vector<Integer> weights;  // one per ray, in Fan::rays() order
  bool is_genuine_wps = false;
};

/// Positive primitive relation among the n+1 rays of a complete fan in R^n; throws NotFwps.
WeightData fwps_weights(const Fan& fan);

/// J_{Delta'} + J_{Delta''} is the whole augmentation ideal.
bool splitting_surjectivity(const Fan& fan, const Splitting2D& splitting);

}  // namespace fank
