#pragma once

#include "fank/fan.hpp"
#include "fank/piecewise.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fank {

/// Fan files:
///   dim <n>
///   ray <name> <n integers>
///   cone <name> <ray names...>
/// One statement per line, `#` starts a comment. Only maximal cones are listed.
struct FanFile {
  std::size_t dim = 0;
  std::vector<NamedRay> rays;
  std::vector<ConeSpec> cones;
};

FanFile parse_fan_file_text(std::string_view text);
Fan parse_fan(std::string_view text);
Fan load_fan(const std::filesystem::path& path);
std::string format_fan(const Fan& fan, const std::string& header = "");

/// PLP files:
///   fan <path>
///   on <cone name>: <laurent expression>
/// The path is relative to the PLP file's directory.
struct PlpFile {
  std::string fan_path;
  std::vector<std::pair<std::string, LaurentPoly>> entries;
};

PlpFile parse_plp_text(std::string_view text, std::size_t nvars);
/// Reads only the `fan` line.
std::string plp_fan_path(std::string_view text);

/// Values for every maximal cone, each exactly once.
PiecewisePoly plp_from_entries(FanPtr fan, const PlpFile& file);
/// Values for some maximal cones: a PLP on the subfan they generate.
PiecewisePoly partial_plp_from_entries(FanPtr fan, const PlpFile& file);

struct LoadedPlp {
  FanPtr fan;
  PlpFile file;
};
LoadedPlp load_plp(const std::filesystem::path& path);

std::string format_plp(const PiecewisePoly& F, const std::string& fan_path);

}  // namespace fank
