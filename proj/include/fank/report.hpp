#pragma once

#include "fank/classify.hpp"
#include "fank/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fank {

inline constexpr int kReportSchema = 1;

struct MeetEntry {
  std::string with;  // other maximal cone
  std::string face;  // ray label of the common face
  bool smooth = false;
  friend bool operator==(const MeetEntry&, const MeetEntry&) = default;
};

struct SingularEntry {
  std::string cone;
  bool maximal = false;
  bool isolated = false;
  bool distant = false;
  std::vector<MeetEntry> meets;  // for maximal singular cones: intersections with the other maximal cones
  friend bool operator==(const SingularEntry&, const SingularEntry&) = default;
};

struct FanFlags {
  bool smooth = false;
  bool simplicial = false;
  bool complete = false;
  std::optional<bool> polytopal;  // decided for complete fans only
  bool all_isolated = false;
  bool all_distant = false;
  std::vector<SingularEntry> singular;
  friend bool operator==(const FanFlags&, const FanFlags&) = default;
};

struct Report {
  int schema = kReportSchema;
  std::string command;  // check | classify
  std::string source;
  std::size_t dim = 0;
  std::size_t rays = 0;
  std::size_t maximal_cones = 0;
  FanFlags flags;
  std::optional<Verdict> verdict;
  std::vector<std::string> warnings;
  double elapsed_ms = 0;
  friend bool operator==(const Report&, const Report&) = default;
};

FanFlags compute_flags(const Fan& fan);
Report make_report(const std::string& command, const std::string& source, const Fan& fan, bool with_verdict);

std::string report_to_json(const Report& r, int indent = 2);
/// Throws Parse on malformed input or a schema version other than 1.
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

}  // namespace fank
