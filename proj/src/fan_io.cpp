#include "fank/fan_io.hpp"

#include "fank/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace fank {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

Integer parse_integer(const Token& t, std::size_t line) {
  const std::string& s = t.text;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
    throw ParseError("expected an integer, found '" + s + "'", line, t.column);
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

bool valid_name(const std::string& s) {
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '\'')) return false;
  return !s.empty();
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = nl + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

FanFile parse_fan_file_text(std::string_view text) {
  FanFile file;
  std::set<std::string> ray_names, cone_names;
  std::size_t line_no = 0, last_line = 0;
  for (auto raw : split_lines(text)) {
    ++line_no;
    auto tokens = tokenize(strip_comment(raw));
    if (tokens.empty()) continue;
    last_line = line_no;
    const std::string& kw = tokens[0].text;
    if (kw == "dim") {
      if (file.dim != 0) throw ParseError("dim given twice", line_no, tokens[0].column);
      if (tokens.size() != 2) throw ParseError("expected 'dim <n>'", line_no, tokens[0].column);
      Integer n = parse_integer(tokens[1], line_no);
      if (n < 1 || n > 64) throw ParseError("dimension must be between 1 and 64", line_no, tokens[1].column);
      file.dim = n.get_ui();
    } else if (kw == "ray") {
      if (file.dim == 0) throw ParseError("ray before dim", line_no, tokens[0].column);
      if (!file.cones.empty()) throw ParseError("ray after the first cone", line_no, tokens[0].column);
      if (tokens.size() < 2 || !valid_name(tokens[1].text))
        throw ParseError("expected a ray name", line_no, tokens.size() < 2 ? raw.size() + 1 : tokens[1].column);
      if (tokens.size() != 2 + file.dim)
        throw ParseError("ray " + tokens[1].text + " needs " + std::to_string(file.dim) + " coordinates, found " +
                             std::to_string(tokens.size() - 2),
                         line_no, tokens[1].column);
      if (!ray_names.insert(tokens[1].text).second)
        throw ParseError("duplicate ray name " + tokens[1].text, line_no, tokens[1].column);
      IntVector v;
      for (std::size_t i = 2; i < tokens.size(); ++i) v.push_back(parse_integer(tokens[i], line_no));
      if (is_zero(v)) throw ParseError("ray " + tokens[1].text + " is the zero vector", line_no, tokens[1].column);
      file.rays.push_back({tokens[1].text, std::move(v)});
    } else if (kw == "cone") {
      if (file.dim == 0) throw ParseError("cone before dim", line_no, tokens[0].column);
      if (tokens.size() < 3) throw ParseError("expected 'cone <name> <ray names...>'", line_no, tokens[0].column);
      if (!valid_name(tokens[1].text)) throw ParseError("bad cone name", line_no, tokens[1].column);
      if (!cone_names.insert(tokens[1].text).second)
        throw ParseError("duplicate cone name " + tokens[1].text, line_no, tokens[1].column);
      ConeSpec spec{tokens[1].text, {}};
      std::set<std::string> seen;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        if (!ray_names.count(tokens[i].text)) throw ParseError("unknown ray " + tokens[i].text, line_no, tokens[i].column);
        if (!seen.insert(tokens[i].text).second)
          throw ParseError("duplicate ray " + tokens[i].text + " in cone " + spec.name, line_no, tokens[i].column);
        spec.rays.push_back(tokens[i].text);
      }
      file.cones.push_back(std::move(spec));
    } else {
      throw ParseError("unknown statement '" + kw + "'", line_no, tokens[0].column);
    }
  }
  if (file.dim == 0) throw ParseError("missing dim line", 0, 0);
  if (file.cones.empty()) throw ParseError("fan has no cones", last_line, 0);
  return file;
}

Fan parse_fan(std::string_view text) {
  FanFile f = parse_fan_file_text(text);
  return Fan::from_description(f.dim, f.rays, f.cones);
}

Fan load_fan(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    return parse_fan(text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path.string());
  }
}

std::string format_fan(const Fan& fan, const std::string& header) {
  std::ostringstream out;
  if (!header.empty()) {
    std::istringstream hs(header);
    for (std::string l; std::getline(hs, l);) out << "# " << l << '\n';
  }
  out << "dim " << fan.ambient() << '\n';
  for (const auto& r : fan.rays()) {
    out << "ray " << r.name;
    for (const auto& x : r.primitive) out << ' ' << x.get_str();
    out << '\n';
  }
  for (auto m : fan.maximal()) {
    const Cell& c = fan.cell(m);
    out << "cone " << c.name;
    for (auto r : c.rays) out << ' ' << fan.rays()[r].name;
    out << '\n';
  }
  return out.str();
}

std::string plp_fan_path(std::string_view text) {
  std::size_t line_no = 0;
  for (auto raw : split_lines(text)) {
    ++line_no;
    auto tokens = tokenize(strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens[0].text != "fan" || tokens.size() != 2)
      throw ParseError("expected 'fan <path>' first", line_no, tokens[0].column);
    return tokens[1].text;
  }
  throw ParseError("missing 'fan <path>' line", 0, 0);
}

PlpFile parse_plp_text(std::string_view text, std::size_t nvars) {
  PlpFile file;
  file.fan_path = plp_fan_path(text);
  std::size_t line_no = 0;
  bool seen_fan = false;
  std::set<std::string> names;
  for (auto raw : split_lines(text)) {
    ++line_no;
    std::string_view line = strip_comment(raw);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!seen_fan) {
      seen_fan = true;
      continue;
    }
    if (tokens[0].text != "on") throw ParseError("expected 'on <cone>: <value>'", line_no, tokens[0].column);
    std::size_t start = tokens[0].column - 1 + 2;
    auto colon = line.find(':', start);
    if (colon == std::string_view::npos) throw ParseError("missing ':'", line_no, line.size() + 1);
    auto name_tokens = tokenize(line.substr(start, colon - start));
    if (name_tokens.size() != 1) throw ParseError("expected one cone name before ':'", line_no, start + 1);
    std::string name = name_tokens[0].text;
    if (!names.insert(name).second) throw ParseError("cone " + name + " given twice", line_no, start + name_tokens[0].column);
    std::string_view expr = line.substr(colon + 1);
    try {
      file.entries.emplace_back(name, parse_laurent(expr, nvars));
    } catch (const ParseError& e) {
      throw ParseError("value on " + name + ": " + e.message(), line_no, e.column() ? colon + 1 + e.column() : 0);
    }
  }
  return file;
}

namespace {

std::size_t maximal_index(const Fan& fan, const std::string& name) {
  for (std::size_t k = 0; k < fan.maximal().size(); ++k)
    if (fan.maximal_cell(k).name == name) return k;
  throw Error(ErrorCode::InvalidFan, "no maximal cone named " + name);
}

}  // namespace

PiecewisePoly plp_from_entries(FanPtr fan, const PlpFile& file) {
  std::vector<std::optional<LaurentPoly>> vals(fan->maximal().size());
  for (const auto& [name, v] : file.entries) vals[maximal_index(*fan, name)] = v;
  std::vector<LaurentPoly> out;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (!vals[k]) throw Error(ErrorCode::InvalidFan, "no value given on cone " + fan->maximal_cell(k).name);
    out.push_back(*vals[k]);
  }
  return PiecewisePoly(std::move(fan), std::move(out));
}

PiecewisePoly partial_plp_from_entries(FanPtr fan, const PlpFile& file) {
  if (file.entries.empty()) throw Error(ErrorCode::EmptySubfan, "no values given");
  std::vector<std::size_t> cells;
  for (const auto& e : file.entries) cells.push_back(fan->maximal()[maximal_index(*fan, e.first)]);
  auto sub = std::make_shared<const Fan>(fan->subfan(cells));
  std::vector<LaurentPoly> out;
  for (auto m : sub->maximal()) {
    const std::string& name = sub->cell(m).name;
    for (const auto& e : file.entries)
      if (e.first == name) out.push_back(e.second);
  }
  return PiecewisePoly(sub, std::move(out));
}

LoadedPlp load_plp(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    std::filesystem::path fan_path = plp_fan_path(text);
    if (fan_path.is_relative()) fan_path = path.parent_path() / fan_path;
    auto fan = std::make_shared<const Fan>(load_fan(fan_path));
    return {fan, parse_plp_text(text, fan->ambient())};
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path.string());
  }
}

std::string format_plp(const PiecewisePoly& F, const std::string& fan_path) {
  std::ostringstream out;
  out << "fan " << fan_path << '\n';
  for (std::size_t k = 0; k < F.values().size(); ++k)
    out << "on " << F.fan().maximal_cell(k).name << ": " << format_laurent(F.value(k)) << '\n';
  return out.str();
}

}  // namespace fank
