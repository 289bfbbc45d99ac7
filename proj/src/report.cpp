#include "fank/report.hpp"

#include "fank/error.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

namespace fank {

using nlohmann::json;

FanFlags compute_flags(const Fan& fan) {
  FanFlags f;
  f.smooth = is_smooth_fan(fan);
  f.simplicial = is_simplicial_fan(fan);
  f.complete = is_complete(fan);
  if (f.complete) f.polytopal = is_polytopal(fan);
  SingularityReport rep = singularity_report(fan);
  f.all_isolated = rep.all_isolated;
  f.all_distant = rep.all_distant;
  for (const auto& s : rep.singular) {
    const Cell& c = fan.cell(s.cell);
    SingularEntry e{c.name, c.maximal, s.isolated, s.distant, {}};
    if (c.maximal)
      for (auto m : fan.maximal()) {
        if (m == s.cell) continue;
        std::size_t meet = fan.meet(s.cell, m);
        e.meets.push_back({fan.cell(m).name, fan.cell_label(fan.cell(meet).rays), fan.cell(meet).cone.is_smooth()});
      }
    f.singular.push_back(std::move(e));
  }
  return f;
}

Report make_report(const std::string& command, const std::string& source, const Fan& fan, bool with_verdict) {
  auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = command;
  r.source = source;
  r.dim = fan.ambient();
  r.rays = fan.rays().size();
  r.maximal_cones = fan.maximal().size();
  r.flags = compute_flags(fan);
  if (with_verdict) r.verdict = classify(fan);
  r.warnings = fan.warnings();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  return Integer(j.get<std::string>());
}

json to_j(const Verdict& v) {
  json j;
  j["outcome"] = outcome_name(v.outcome);
  j["rule"] = v.rule;
  j["certificates"] = json::array();
  for (const auto& c : v.certificates) j["certificates"].push_back({{"criterion", c.criterion}, {"detail", c.detail}});
  j["span_index"] = v.span_index ? integer_json(*v.span_index) : json(nullptr);
  if (v.odd_rank)
    j["odd_rank"] = {{"value", integer_json(*v.odd_rank)}, {"derived", true},
                     {"note", "span index minus one; closed form not stated in the source, checked by brute force"}};
  else
    j["odd_rank"] = nullptr;
  j["explanation"] = v.explanation;
  return j;
}

Verdict verdict_from(const json& j) {
  Verdict v;
  auto o = outcome_from_name(j.at("outcome").get<std::string>());
  if (!o) throw Error(ErrorCode::Parse, "unknown outcome " + j.at("outcome").get<std::string>());
  v.outcome = *o;
  v.rule = j.at("rule").get<std::string>();
  for (const auto& c : j.at("certificates")) v.certificates.push_back({c.at("criterion"), c.at("detail")});
  if (!j.at("span_index").is_null()) v.span_index = integer_from(j.at("span_index"));
  if (!j.at("odd_rank").is_null()) v.odd_rank = integer_from(j.at("odd_rank").at("value"));
  v.explanation = j.at("explanation").get<std::string>();
  return v;
}

}  // namespace

std::string report_to_json(const Report& r, int indent) {
  json j;
  j["schema"] = r.schema;
  j["command"] = r.command;
  j["source"] = r.source;
  j["fan"] = {{"dim", r.dim}, {"rays", r.rays}, {"maximal_cones", r.maximal_cones}};
  json flags;
  flags["smooth"] = r.flags.smooth;
  flags["simplicial"] = r.flags.simplicial;
  flags["complete"] = r.flags.complete;
  flags["polytopal"] = r.flags.polytopal ? json(*r.flags.polytopal) : json(nullptr);
  flags["all_isolated"] = r.flags.all_isolated;
  flags["all_distant"] = r.flags.all_distant;
  flags["singular_cones"] = json::array();
  for (const auto& s : r.flags.singular) {
    json e = {{"cone", s.cone}, {"maximal", s.maximal}, {"isolated", s.isolated}, {"distant", s.distant}};
    e["meets"] = json::array();
    for (const auto& m : s.meets) e["meets"].push_back({{"with", m.with}, {"face", m.face}, {"smooth", m.smooth}});
    flags["singular_cones"].push_back(e);
  }
  j["flags"] = flags;
  j["verdict"] = r.verdict ? to_j(*r.verdict) : json(nullptr);
  j["warnings"] = r.warnings;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(indent);
}

Report report_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    Report r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != kReportSchema) throw Error(ErrorCode::Parse, "unsupported report schema " + std::to_string(r.schema));
    r.command = j.at("command").get<std::string>();
    r.source = j.at("source").get<std::string>();
    r.dim = j.at("fan").at("dim").get<std::size_t>();
    r.rays = j.at("fan").at("rays").get<std::size_t>();
    r.maximal_cones = j.at("fan").at("maximal_cones").get<std::size_t>();
    const json& f = j.at("flags");
    r.flags.smooth = f.at("smooth");
    r.flags.simplicial = f.at("simplicial");
    r.flags.complete = f.at("complete");
    if (!f.at("polytopal").is_null()) r.flags.polytopal = f.at("polytopal").get<bool>();
    r.flags.all_isolated = f.at("all_isolated");
    r.flags.all_distant = f.at("all_distant");
    for (const auto& s : f.at("singular_cones")) {
      SingularEntry e{s.at("cone"), s.at("maximal"), s.at("isolated"), s.at("distant"), {}};
      for (const auto& m : s.at("meets")) e.meets.push_back({m.at("with"), m.at("face"), m.at("smooth")});
      r.flags.singular.push_back(std::move(e));
    }
    if (!j.at("verdict").is_null()) r.verdict = verdict_from(j.at("verdict"));
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed report: ") + e.what());
  }
}

namespace {
const char* yes_no(bool b) { return b ? "true" : "false"; }
}  // namespace

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << r.source << ": dim " << r.dim << ", " << r.rays << " rays, " << r.maximal_cones << " maximal cones\n";
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  out << "smooth: " << yes_no(r.flags.smooth) << '\n';
  out << "complete: " << yes_no(r.flags.complete) << '\n';
  out << "simplicial: " << yes_no(r.flags.simplicial) << '\n';
  out << "polytopal: " << (r.flags.polytopal ? yes_no(*r.flags.polytopal) : "undecided (fan is not complete)") << '\n';
  if (r.flags.singular.empty()) {
    out << "singular cones: none\n";
  } else {
    out << "singular cones:";
    for (const auto& s : r.flags.singular) out << ' ' << s.cone;
    out << '\n';
    out << "all singular cones isolated: " << yes_no(r.flags.all_isolated) << '\n';
    out << "all singular cones distant: " << yes_no(r.flags.all_distant) << '\n';
    for (const auto& s : r.flags.singular)
      for (const auto& m : s.meets)
        if (m.face != "{}") out << "  " << s.cone << " meet " << m.with << " = " << m.face << ": " << (m.smooth ? "smooth" : "singular") << '\n';
  }
  if (r.verdict) {
    const Verdict& v = *r.verdict;
    out << "verdict: " << outcome_name(v.outcome);
    if (!v.rule.empty()) out << " (" << v.rule << ")";
    out << '\n';
    for (const auto& c : v.certificates) out << "  holds: " << c.criterion << ": " << c.detail << '\n';
    if (v.span_index) out << "span index: " << v.span_index->get_str() << '\n';
    if (v.odd_rank) out << "K^1 rank: " << v.odd_rank->get_str() << " (derived)\n";
    if (v.outcome != Outcome::Isomorphic) out << "  " << v.explanation << '\n';
  }
  return out.str();
}

}  // namespace fank
