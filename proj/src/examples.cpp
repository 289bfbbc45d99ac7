#include "fank/examples.hpp"

#include "fank/error.hpp"
#include "fank/fan_io.hpp"

#include <sstream>

namespace fank {

namespace {

using Rows = std::vector<std::vector<long>>;
using Cones = std::vector<std::vector<int>>;

std::string build(const std::string& comment, std::size_t dim, const Rows& rays, const Cones& cones,
                  const std::string& ray_prefix = "r", const std::string& cone_prefix = "s") {
  std::ostringstream out;
  std::istringstream cs(comment);
  for (std::string l; std::getline(cs, l);) out << "# " << l << '\n';
  out << "dim " << dim << '\n';
  for (std::size_t i = 0; i < rays.size(); ++i) {
    out << "ray " << ray_prefix << i + 1;
    for (long x : rays[i]) out << ' ' << x;
    out << '\n';
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    out << "cone " << cone_prefix << i + 1;
    for (int r : cones[i]) out << ' ' << ray_prefix << r;
    out << '\n';
  }
  return out.str();
}

const Rows kTwelve = {{1, 0, 1},  {0, 1, 1},  {-1, 0, 1}, {0, -1, 1}, {1, 0, -1}, {0, 1, -1},
                      {-1, 0, -1}, {0, -1, -1}, {1, 0, 0},  {0, 1, 0},  {-1, 0, 0}, {0, -1, 0}};

}  // namespace

const std::vector<ExampleInfo>& example_registry() {
  static const std::vector<ExampleInfo> reg = {
      {"hirzebruch-r", "Hirzebruch surface H_r, rays (1,0),(0,1),(-1,r),(0,-1)", true},
      {"p2", "projective plane", false},
      {"wps-1-1-2", "weighted projective plane P(1,1,2)", false},
      {"fake-p2", "fake projective plane, rays (1,2),(1,-1),(-2,-1); span index 3", false},
      {"pyramid", "square pyramid over the cone C1 on a square; one singular cone", false},
      {"simplicial-distant", "complete simplicial fan with distant singular cones", false},
      {"two-distant", "two singular square cones at opposite ends; 12 rays, 18 cones", false},
      {"isolated-not-distant", "singular cones isolated but not distant", false},
      {"gt-flag3", "Gelfand-Tsetlin type fan of the flag variety of C^3", false},
  };
  return reg;
}

std::string example_text(const std::string& name, long r) {
  if (name == "hirzebruch-r" || name.rfind("hirzebruch-", 0) == 0) {
    if (name != "hirzebruch-r") {
      try {
        r = std::stol(name.substr(11));
      } catch (...) {
        throw Error(ErrorCode::UnknownExample, "unknown example " + name);
      }
    }
    if (r < 1) throw Error(ErrorCode::UnknownExample, "hirzebruch-r needs r >= 1");
    return build("Hirzebruch surface H_" + std::to_string(r), 2, {{1, 0}, {0, 1}, {-1, r}, {0, -1}},
                 {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  }
  if (name == "p2") return build("projective plane", 2, {{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 3}, {3, 1}});
  if (name == "wps-1-1-2")
    return build("weighted projective plane P(1,1,2)", 2, {{1, 0}, {-1, 2}, {0, -1}}, {{1, 2}, {2, 3}, {3, 1}});
  if (name == "fake-p2")
    return build("fake projective plane; rays span a sublattice of index 3", 2, {{1, 2}, {1, -1}, {-2, -1}},
                 {{1, 2}, {2, 3}, {3, 1}});
  if (name == "pyramid")
    return build("square pyramid: C1 is singular, every other cone is smooth", 3,
                 {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {0, 0, -1}},
                 {{1, 2, 3, 4}, {1, 2, 5}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}}, "R", "C");
  if (name == "simplicial-distant")
    return build("complete simplicial fan whose singular cones meet only at the origin", 3,
                 {{1, 0, 2}, {0, 1, 2}, {-1, -1, 1}, {0, 0, -1}}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  if (name == "two-distant")
    return build("two singular cones s1, s2 meeting only at the origin", 3, kTwelve,
                 {{1, 2, 3, 4},  {5, 6, 7, 8},  {1, 2, 9},  {2, 9, 10}, {2, 3, 10}, {3, 10, 11},
                  {3, 4, 11},    {4, 11, 12},   {1, 4, 12}, {1, 9, 12}, {5, 6, 9},  {6, 9, 10},
                  {6, 7, 10},    {7, 10, 11},   {7, 8, 11}, {8, 11, 12}, {5, 8, 12}, {5, 9, 12}});
  if (name == "isolated-not-distant")
    return build("every cone is singular; singular cones meet along smooth faces", 3, kTwelve,
                 {{1, 4, 9, 12}, {1, 2, 9, 10}, {2, 3, 10, 11}, {3, 4, 11, 12}, {5, 8, 9, 12}, {5, 6, 9, 10},
                  {6, 7, 10, 11}, {7, 8, 11, 12}, {1, 2, 3, 4}, {5, 6, 7, 8}});
  if (name == "gt-flag3")
    return build("Gelfand-Tsetlin type fan for the flag variety of C^3; s5 is the singular 4-ray cone", 3,
                 {{-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {1, 0, -1}, {0, -1, 1}},
                 {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5, 6}, {2, 4, 5}, {2, 4, 6}});
  throw Error(ErrorCode::UnknownExample, "unknown example " + name);
}

Fan example_fan(const std::string& name, long r) { return parse_fan(example_text(name, r)); }

}  // namespace fank
