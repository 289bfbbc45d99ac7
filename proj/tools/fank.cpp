// fank: decide K*_T(X_Sigma) = P_K(Sigma) for rational polyhedral fans.
#include "fank/classify.hpp"
#include "fank/error.hpp"
#include "fank/examples.hpp"
#include "fank/fan_io.hpp"
#include "fank/piecewise.hpp"
#include "fank/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace fank;

namespace {

enum Exit { kOk = 0, kNotIsomorphic = 1, kInputError = 2, kInternal = 3 };

int exit_for(const Error& e) { return e.code() == ErrorCode::InvariantViolation ? kInternal : kInputError; }

bool is_example_name(const std::string& s) {
  for (const auto& e : example_registry())
    if (e.name == s) return true;
  return s.rfind("hirzebruch-", 0) == 0;
}

// An existing file, else a bundled example name.
Fan resolve_fan(const std::string& arg, long r) {
  if (fs::exists(arg)) return load_fan(arg);
  if (is_example_name(arg)) return example_fan(arg, r);
  throw Error(ErrorCode::Parse, "no such fan file or example: " + arg);
}

std::string source_name(const std::string& arg, long r) {
  if (!fs::exists(arg) && arg == "hirzebruch-r") return "hirzebruch-" + std::to_string(r);
  return arg;
}

std::optional<std::size_t> resolve_cell(const Fan& fan, const std::string& name) {
  if (auto c = fan.find_cell_by_name(name)) return c;
  if (name.size() < 2 || name.front() != '{' || name.back() != '}') return std::nullopt;
  RaySet ids;
  std::stringstream ss(name.substr(1, name.size() - 2));
  for (std::string part; std::getline(ss, part, ',');) {
    if (part.empty()) continue;
    auto r = fan.find_ray_by_name(part);
    if (!r) return std::nullopt;
    ids.push_back(*r);
  }
  std::sort(ids.begin(), ids.end());
  return fan.find_cell(ids);
}

std::size_t require_cell(const Fan& fan, const std::string& name) {
  auto c = resolve_cell(fan, name);
  if (!c) throw Error(ErrorCode::InvalidFan, "the fan has no cone named " + name);
  return *c;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------- check / classify

int run_check(const std::string& arg, long r, bool as_json) {
  Fan fan = resolve_fan(arg, r);
  Report rep = make_report("check", source_name(arg, r), fan, false);
  std::cout << (as_json ? report_to_json(rep) + "\n" : report_to_text(rep));
  return kOk;
}

struct BatchItem {
  std::string source;
  std::optional<Report> report;
  std::string error;
  int code = kOk;
};

BatchItem classify_one(const std::string& arg, long r) {
  BatchItem item{source_name(arg, r), std::nullopt, "", kOk};
  try {
    Fan fan = resolve_fan(arg, r);
    item.report = make_report("classify", item.source, fan, true);
    if (item.report->verdict->outcome == Outcome::NotIsomorphic) item.code = kNotIsomorphic;
  } catch (const Error& e) {
    item.error = e.what();
    item.code = exit_for(e);
  } catch (const std::exception& e) {
    item.error = e.what();
    item.code = kInternal;
  }
  return item;
}

int run_classify(std::vector<std::string> inputs, const std::string& batch, long r, bool as_json, unsigned jobs) {
  if (!batch.empty()) {
    if (!fs::is_directory(batch)) throw Error(ErrorCode::Parse, "not a directory: " + batch);
    for (const auto& entry : fs::directory_iterator(batch))
      if (entry.is_regular_file() && entry.path().extension() == ".fan") inputs.push_back(entry.path().string());
    std::sort(inputs.begin(), inputs.end());
    if (inputs.empty()) throw Error(ErrorCode::Parse, "no .fan files in " + batch);
  }
  if (inputs.empty()) throw Error(ErrorCode::Parse, "nothing to classify");

  std::vector<BatchItem> results(inputs.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, inputs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < inputs.size();) results[i] = classify_one(inputs[i], r);
    });
  for (auto& th : pool) th.join();

  int code = kOk;
  const bool many = inputs.size() > 1;
  for (const auto& item : results) {
    if (item.report) {
      if (as_json)
        std::cout << report_to_json(*item.report, many ? -1 : 2) << '\n';
      else
        std::cout << report_to_text(*item.report) << (many ? "\n" : "");
    } else {
      std::cerr << "error: " << item.source << ": " << item.error << '\n';
    }
    // errors outrank a negative verdict
    if (item.code == kInternal || (item.code == kInputError && code != kInternal) || (item.code == kNotIsomorphic && code == kOk))
      code = item.code;
  }
  return code;
}

// ---------------------------------------------------------------- ideal

IntVector parse_vector(const std::string& text, std::size_t n) {
  IntVector v;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      long x = std::stol(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      v.push_back(x);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad vector '" + text + "'");
    }
  }
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector " + text + " needs " + std::to_string(n) + " entries");
  return v;
}

struct IdealArgs {
  std::size_t n = 0;
  std::vector<std::string> gens;
  std::string fan, cone;
  long r = 1;
  std::string poly;
};

LatticeIdeal ideal_from(const IdealArgs& a, std::size_t& n) {
  if (!a.fan.empty()) {
    Fan fan = resolve_fan(a.fan, a.r);
    n = fan.ambient();
    if (a.cone.empty()) throw Error(ErrorCode::Parse, "--fan needs --cone");
    return cone_ideal(fan.cell(require_cell(fan, a.cone)).cone);
  }
  if (a.n == 0) throw Error(ErrorCode::Parse, "give --dim with --gen, or --fan with --cone");
  n = a.n;
  std::vector<IntVector> gens;
  for (const auto& g : a.gens) gens.push_back(parse_vector(g, n));
  return LatticeIdeal(n, gens);
}

int run_ideal(const std::string& op, const IdealArgs& a) {
  std::size_t n = 0;
  LatticeIdeal J = ideal_from(a, n);
  LaurentPoly f = parse_laurent(a.poly, n);
  if (op == "reduce") {
    std::cout << format_laurent(reduce(f, J)) << '\n';
  } else if (op == "contains") {
    std::cout << (contains(f, J) ? "true" : "false") << '\n';
  } else {
    auto a_j = cofactors(f, J);
    for (std::size_t j = 0; j < a_j.size(); ++j)
      std::cout << "(1 - a^" << to_string(J.generators()[j]) << "): " << format_laurent(a_j[j]) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- plp

int run_plp_verify(const std::string& path) {
  LoadedPlp in = load_plp(path);
  PiecewisePoly F = plp_from_entries(in.fan, in.file);
  const Fan& fan = *in.fan;
  if (auto bad = find_incompatibility(F)) {
    std::cout << "incompatible: " << fan.maximal_cell(bad->first).name << " and " << fan.maximal_cell(bad->second).name
              << " meet in " << fan.cell(bad->meet).name << "; the difference reduces to "
              << format_laurent(bad->witness) << '\n';
    return kInputError;
  }
  std::size_t m = fan.maximal().size();
  std::cout << "valid: " << m << " maximal cones, " << m * (m - 1) / 2 << " pairs checked\n";
  return kOk;
}

int run_plp_extend(const std::string& path, const std::string& output) {
  LoadedPlp in = load_plp(path);
  PiecewisePoly partial = partial_plp_from_entries(in.fan, in.file);
  partial = plp_validate(partial.fan_ptr(), partial.values());
  PiecewisePoly E = extend_over_smooth_fan(partial, in.fan);
  if (auto bad = find_incompatibility(E)) throw Error(ErrorCode::InvariantViolation, "extension is not compatible");
  if (!equivalent(sharp_restrict(E, partial.fan_ptr()), partial))
    throw Error(ErrorCode::InvariantViolation, "extension does not restrict to the input");
  write_output(format_plp(E, in.file.fan_path), output);
  return kOk;
}

void print_membership(const std::string& what, const LaurentPoly& diff, const LatticeIdeal& J) {
  LaurentPoly r = reduce(diff, J);
  std::cout << "# check " << what << ": " << (r.is_zero() ? "reduces to 0" : "FAILS, reduces to " + format_laurent(r)) << '\n';
  if (!r.is_zero()) throw Error(ErrorCode::InvariantViolation, "preimage check failed for " + what);
}

int run_plp_preimage(const std::string& path, const std::string& cone_name) {
  LoadedPlp in = load_plp(path);
  const Fan& fan = *in.fan;
  std::map<std::size_t, LaurentPoly> given;
  for (const auto& [name, v] : in.file.entries) given[require_cell(fan, name)] = v;

  if (!cone_name.empty()) {
    std::size_t sigma = require_cell(fan, cone_name);
    const Cone& c = fan.cell(sigma).cone;
    std::vector<LaurentPoly> tuple;
    std::vector<std::size_t> facet_cells;
    for (const auto& f : c.facet_data()) {
      std::vector<IntVector> v;
      for (auto i : f.rays) v.push_back(c.rays()[i]);
      std::size_t cell = *fan.find_cell_by_vectors(v);
      auto it = given.find(cell);
      if (it == given.end()) throw Error(ErrorCode::Parse, "no value given on facet " + fan.cell(cell).name);
      tuple.push_back(it->second);
      facet_cells.push_back(cell);
    }
    if (given.size() != tuple.size()) throw Error(ErrorCode::Parse, "values must be given exactly on the facets of " + cone_name);
    LaurentPoly G = cone_boundary_preimage(tuple, c);
    std::cout << "on " << fan.cell(sigma).name << ": " << format_laurent(G) << '\n';
    for (std::size_t i = 0; i < tuple.size(); ++i)
      print_membership("on " + fan.cell(facet_cells[i]).name, G - tuple[i], cone_ideal(fan.cell(facet_cells[i]).cone));
    return kOk;
  }

  if (fan.ambient() != 2) throw Error(ErrorCode::Unsupported, "give --cone for a cone boundary preimage");
  std::vector<std::size_t> rays;
  for (const auto& [cell, v] : given) {
    if (fan.cell(cell).rays.size() != 1) throw Error(ErrorCode::Parse, "values must be given on rays, not on " + fan.cell(cell).name);
    rays.push_back(fan.cell(cell).rays[0]);
  }
  auto value_on_ray = [&](std::size_t r) { return given.at(*fan.find_cell({r})); };
  auto print_plp = [&](const PiecewisePoly& P, const char* label) {
    for (std::size_t k = 0; k < P.values().size(); ++k)
      std::cout << label << "on " << P.fan().maximal_cell(k).name << ": " << format_laurent(P.value(k)) << '\n';
  };
  auto value_at = [&](const PiecewisePoly& P, std::size_t k) -> const LaurentPoly& {
    return P.value_on_cell(*P.fan().find_cell_by_vectors(fan.maximal_cell(k).cone.rays()));
  };
  auto ray_ideal = [&](std::size_t r) { return cone_ideal(fan.cell(*fan.find_cell({r})).cone); };

  if (!is_complete(fan)) {
    for (const auto& clump : clump_decomposition(fan)) {
      std::set<std::size_t> ends{clump.rays.front(), clump.rays.back()};
      if (ends != std::set<std::size_t>(rays.begin(), rays.end())) continue;
      LaurentPoly f = value_on_ray(clump.rays.front()), g = value_on_ray(clump.rays.back());
      PiecewisePoly P = clump_boundary_preimage(f, g, fan, clump);
      print_plp(P, "");
      print_membership("at " + fan.rays()[clump.rays.front()].name, value_at(P, clump.cones.front()) - f, ray_ideal(clump.rays.front()));
      print_membership("at " + fan.rays()[clump.rays.back()].name, value_at(P, clump.cones.back()) - g, ray_ideal(clump.rays.back()));
      return kOk;
    }
    throw Error(ErrorCode::Parse, "values must sit on the two end rays of one clump");
  }
  if (rays.size() != 2) throw Error(ErrorCode::Parse, "a complete plane fan needs values on exactly two rays");
  for (const auto& sp : all_2d_splittings(fan)) {
    std::set<std::size_t> ends{sp.first.rays.front(), sp.first.rays.back()};
    if (ends != std::set<std::size_t>(rays.begin(), rays.end())) continue;
    std::size_t r1 = sp.first.rays.front(), rk = sp.first.rays.back();
    LaurentPoly f = value_on_ray(r1), g = value_on_ray(rk);
    SplitPreimage pre = complete_2d_preimage(f, g, fan, sp);
    print_plp(pre.first, "first: ");
    print_plp(pre.second, "second: ");
    print_membership("at " + fan.rays()[r1].name,
                     value_at(pre.first, sp.first.cones.front()) - value_at(pre.second, sp.second.cones.back()) - f,
                     ray_ideal(r1));
    print_membership("at " + fan.rays()[rk].name,
                     value_at(pre.first, sp.first.cones.back()) - value_at(pre.second, sp.second.cones.front()) - g,
                     ray_ideal(rk));
    return kOk;
  }
  throw Error(ErrorCode::ImproperSplitting, "no splitting has those two rays as its cut");
}

// ---------------------------------------------------------------- examples

int run_examples(const std::string& name, long r, const std::string& output) {
  if (name.empty()) {
    for (const auto& e : example_registry())
      std::cout << e.name << (e.parametric ? " (--r)" : "") << "\t" << e.summary << '\n';
    return kOk;
  }
  write_output(example_text(name, r), output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fank: equivariant K-theory of toric varieties versus piecewise Laurent polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fank 1.0");

  std::string fan_arg, batch, output, plp_path, cone_name, example_name;
  std::vector<std::string> inputs;
  bool as_json = false;
  long r = 1;
  unsigned jobs = 0;

  auto* check = app.add_subcommand("check", "property flags and singularity report");
  check->add_option("fan", fan_arg, "fan file or bundled example name")->required();
  check->add_flag("--json", as_json, "machine-readable report");
  check->add_option("--r", r, "parameter for hirzebruch-r")->check(CLI::PositiveNumber);

  auto* cls = app.add_subcommand("classify", "decide whether K*_T(X) = P_K(Sigma)");
  cls->add_option("fans", inputs, "fan files or bundled example names");
  cls->add_option("--batch", batch, "classify every .fan file in a directory");
  cls->add_option("--jobs", jobs, "worker threads for --batch (default: all cores)");
  cls->add_flag("--json", as_json, "machine-readable report (one line per fan when several)");
  cls->add_option("--r", r, "parameter for hirzebruch-r")->check(CLI::PositiveNumber);

  IdealArgs ia;
  std::string ideal_op;
  auto* ideal = app.add_subcommand("ideal", "lattice ideal membership");
  ideal->add_option("op", ideal_op, "reduce | contains | cofactors")->required()->check(CLI::IsMember({"reduce", "contains", "cofactors"}));
  ideal->add_option("poly", ia.poly, "Laurent polynomial in a1..an")->required();
  ideal->add_option("-n,--dim", ia.n, "number of variables");
  ideal->add_option("-g,--gen", ia.gens, "generator exponent, comma separated (repeatable)");
  ideal->add_option("--fan", ia.fan, "take the ideal of a cone of this fan");
  ideal->add_option("--cone", ia.cone, "cone name or {ray,...} label");
  ideal->add_option("--r", ia.r, "parameter for hirzebruch-r");

  auto* plp = app.add_subcommand("plp", "piecewise Laurent polynomials");
  plp->require_subcommand(1);
  auto* verify = plp->add_subcommand("verify", "check compatibility on every pair of maximal cones");
  verify->add_option("file", plp_path)->required();
  auto* extend = plp->add_subcommand("extend", "extend values on some cones of a smooth fan to all of it");
  extend->add_option("file", plp_path)->required();
  extend->add_option("-o,--output", output, "output PLP file (default stdout)");
  auto* pre = plp->add_subcommand("preimage", "lift boundary values to a cone, a clump or a complete plane fan");
  pre->add_option("file", plp_path)->required();
  pre->add_option("--cone", cone_name, "lift values on the facets of this cone");

  auto* ex = app.add_subcommand("examples", "list bundled example fans or write one");
  ex->add_option("name", example_name);
  ex->add_option("--r", r, "parameter for hirzebruch-r")->check(CLI::PositiveNumber);
  ex->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return run_check(fan_arg, r, as_json);
    if (*cls) return run_classify(inputs, batch, r, as_json, jobs);
    if (*ideal) return run_ideal(ideal_op, ia);
    if (*verify) return run_plp_verify(plp_path);
    if (*extend) return run_plp_extend(plp_path, output);
    if (*pre) return run_plp_preimage(plp_path, cone_name);
    if (*ex) return run_examples(example_name, r, output);
  } catch (const Error& e) {
    std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
