#ifndef LTS_CONFIG_HPP
#define LTS_CONFIG_HPP

// Flat sectioned key-value scenario configs:
//
//   [scenario:my-run]
//   kind = decay
//   lambda_a = 0.5
//
// Keys are word characters, values run to end of line, '#' starts a comment.

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lts {

struct ConfigParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ConfigParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

struct ScenarioConfig {
  std::string name;
  std::string kind;
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const { return params.count(key) != 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }

  double get_double(const std::string& key, double fallback) const {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size())
      throw std::invalid_argument("scenario '" + name + "': parameter '" + key +
                                  "' is not a number: " + it->second);
    return v;
  }

  std::int64_t get_int(const std::string& key, std::int64_t fallback) const {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(it->second, &pos);
    if (pos != it->second.size())
      throw std::invalid_argument("scenario '" + name + "': parameter '" + key +
                                  "' is not an integer: " + it->second);
    return v;
  }

  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ','))
      out.push_back(std::stod(tok));
    if (out.empty())
      throw std::invalid_argument("scenario '" + name + "': parameter '" + key +
                                  "' is an empty list");
    return out;
  }
};

namespace detail {
inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}
}  // namespace detail

inline std::vector<ScenarioConfig> parse_config(const std::string& text) {
  std::vector<ScenarioConfig> scenarios;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  ScenarioConfig* current = nullptr;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigParseError(line_no, static_cast<int>(raw.size()),
                               "unterminated section header");
      const std::string header = detail::trim(line.substr(1, line.size() - 2));
      const std::string prefix = "scenario:";
      if (header.rfind(prefix, 0) != 0)
        throw ConfigParseError(line_no, 2, "section must be [scenario:<name>]");
      const std::string name = detail::trim(header.substr(prefix.size()));
      if (name.empty()) throw ConfigParseError(line_no, 2, "scenario name is empty");
      for (const auto& s : scenarios)
        if (s.name == name)
          throw ConfigParseError(line_no, 2, "duplicate scenario name '" + name + "'");
      scenarios.push_back(ScenarioConfig{name, "", {}});
      current = &scenarios.back();
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigParseError(line_no, static_cast<int>(raw.find(line.front())) + 1,
                             "expected key = value");
    if (current == nullptr)
      throw ConfigParseError(line_no, 1, "key before any [scenario:...] section");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigParseError(line_no, 1, "empty key");
    if (current->params.count(key))
      throw ConfigParseError(line_no, 1, "duplicate key '" + key + "'");
    if (key == "kind")
      current->kind = value;
    else
      current->params[key] = value;
  }
  for (const auto& s : scenarios)
    if (s.kind.empty())
      throw ConfigParseError(1, 1, "scenario '" + s.name + "' has no kind");
  return scenarios;
}

}  // namespace lts

#endif  // LTS_CONFIG_HPP
