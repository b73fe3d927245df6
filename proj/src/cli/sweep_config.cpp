#include "cli/sweep_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "cli/sweep.hpp"
#include "lerchsum/complex_literal.hpp"
#include "lerchsum/error.hpp"

namespace lerchsum::cli {

namespace {

struct Value {
  enum class Kind { string, number, boolean } kind;
  std::string text;
};

struct Entry {
  std::vector<Value> values;
  bool is_array = false;
  int line = 0;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorKind::validation, "config line " + std::to_string(line) + ": " + message);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Drops a trailing comment, ignoring '#' inside strings.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

bool bracket_balanced(std::string_view s) {
  int depth = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (quoted) continue;
    if (c == '[') ++depth;
    if (c == ']') --depth;
  }
  return depth <= 0;
}

Value parse_scalar(std::string_view token, int line) {
  token = trim(token);
  if (token.empty()) fail(line, "empty value");
  if (token.front() == '"') {
    if (token.size() < 2 || token.back() != '"') fail(line, "unterminated string");
    const auto body = token.substr(1, token.size() - 2);
    if (body.find_first_of("\"\\") != std::string_view::npos) fail(line, "escapes are not supported");
    return {Value::Kind::string, std::string(body)};
  }
  if (token == "true" || token == "false") return {Value::Kind::boolean, std::string(token)};
  double number = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), number);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "cannot parse value '" + std::string(token) + "'");
  }
  return {Value::Kind::number, std::string(token)};
}

Entry parse_value(std::string_view text, int line) {
  text = trim(text);
  Entry entry;
  entry.line = line;
  if (text.empty() || text.front() != '[') {
    entry.values.push_back(parse_scalar(text, line));
    return entry;
  }
  if (text.back() != ']') fail(line, "array must end with ']'");
  entry.is_array = true;
  const auto body = text.substr(1, text.size() - 2);
  std::size_t start = 0;
  bool quoted = false;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '"') quoted = !quoted;
    if (i == body.size() || (body[i] == ',' && !quoted)) {
      const auto item = trim(body.substr(start, i - start));
      // A trailing comma is allowed.
      if (!item.empty()) entry.values.push_back(parse_scalar(item, line));
      else if (i != body.size()) fail(line, "empty array element");
      start = i + 1;
    }
  }
  if (entry.values.empty()) fail(line, "empty grid");
  return entry;
}

const Value& scalar(const Entry& e, std::string_view key) {
  if (e.is_array) fail(e.line, std::string(key) + " must be a scalar");
  return e.values.front();
}

std::string string_value(const Entry& e, std::string_view key) {
  const Value& v = scalar(e, key);
  if (v.kind != Value::Kind::string) fail(e.line, std::string(key) + " must be a string");
  return v.text;
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view text) {
  std::map<std::string, Entry> top;
  std::map<std::string, Entry> grid;
  std::string section;

  std::istringstream lines{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    const int start_line = line_no;
    std::string logical(strip_comment(raw));
    // Arrays may continue over several lines.
    while (!bracket_balanced(logical) && std::getline(lines, raw)) {
      ++line_no;
      logical += ' ';
      logical += strip_comment(raw);
    }
    const auto line = trim(logical);
    if (line.empty()) continue;
    if (line.front() == '[' && line.find('=') == std::string_view::npos) {
      if (line != "[grid]") fail(start_line, "unknown section " + std::string(line));
      section = "grid";
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(start_line, "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) fail(start_line, "missing key");
    auto& table = section.empty() ? top : grid;
    if (table.count(key) != 0) fail(start_line, "duplicate key '" + key + "'");
    table.emplace(key, parse_value(line.substr(eq + 1), start_line));
  }

  SweepConfig config;
  const auto identity = top.find("identity");
  if (identity == top.end()) throw Error(ErrorKind::validation, "config: missing 'identity'");
  config.identity = identity_from_string(string_value(identity->second, "identity"));
  config.tol = default_tolerance(config.identity);

  for (const auto& [key, entry] : top) {
    if (key == "identity") continue;
    if (key == "tol") {
      const Value& v = scalar(entry, key);
      if (v.kind != Value::Kind::number) fail(entry.line, "tol must be a number");
      config.tol = std::stod(v.text);
      if (!(config.tol >= kMinTolerance && config.tol <= kMaxTolerance)) fail(entry.line, "tol must lie in [1e-14, 1e-2]");
    } else if (key == "output") {
      config.output_path = string_value(entry, key);
    } else if (key == "parallel") {
      const Value& v = scalar(entry, key);
      if (v.kind != Value::Kind::boolean) fail(entry.line, "parallel must be true or false");
      config.parallel = v.text == "true";
    } else if (key == "mode") {
      const std::string mode = string_value(entry, key);
      if (mode == "strict") config.mode = ValidationMode::strict;
      else if (mode == "permissive") config.mode = ValidationMode::permissive;
      else fail(entry.line, "mode must be \"strict\" or \"permissive\"");
    } else {
      fail(entry.line, "unknown key '" + key + "' (grid parameters belong under [grid])");
    }
  }

  const auto& names = parameter_names(config.identity);
  for (const auto& [key, entry] : grid) {
    if (std::find(names.begin(), names.end(), key) == names.end())
      fail(entry.line, "'" + key + "' is not a parameter of " + std::string(to_string(config.identity)));
  }
  for (const auto& name : names) {
    const auto it = grid.find(name);
    if (it == grid.end()) throw Error(ErrorKind::validation, "config: missing grid for '" + name + "'");
    std::vector<std::string> values;
    for (const Value& v : it->second.values) {
      if (v.kind == Value::Kind::boolean) fail(it->second.line, "'" + name + "' values must be numbers or strings");
      if (is_integer_parameter(name)) {
        std::int64_t n = 0;
        const auto [ptr, ec] = std::from_chars(v.text.data(), v.text.data() + v.text.size(), n);
        if (ec != std::errc() || ptr != v.text.data() + v.text.size())
          fail(it->second.line, "'" + name + "' values must be integers");
      } else if (!parse_complex_literal(v.text)) {
        fail(it->second.line, "'" + v.text + "' is not a complex literal");
      }
      values.push_back(v.text);
    }
    config.grids.emplace_back(name, std::move(values));
  }
  return config;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::validation, "cannot read config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_sweep_config(text.str());
}

}  // namespace lerchsum::cli
