#include "semiring_lab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace semiring_lab {

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    std::string key, value;
    if (eq == std::string::npos) {
      key = line;
    } else {
      key = line.substr(0, eq);
      value = line.substr(eq + 1);
    }
    auto trim = [](std::string& s) {
      while (!s.empty() && isspace(static_cast<unsigned char>(s.front())))
        s.erase(s.begin());
      while (!s.empty() && isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    };
    trim(key);
    trim(value);
    if (key.empty()) continue;
    if (eq == std::string::npos || value.empty())
      throw BadParams("config line " + std::to_string(lineno) +
                      ": expected key = value");
    long v;
    try {
      v = std::stol(value);
    } catch (...) {
      throw BadParams("config line " + std::to_string(lineno) +
                      ": value is not an integer");
    }
    if (key == "congruence_cap")
      cfg.congruence_cap = v;
    else if (key == "size_cap")
      cfg.size_cap = static_cast<int>(v);
    else if (key == "max_monoid_order")
      cfg.max_monoid_order = static_cast<int>(v);
    else if (key == "max_semiring_order")
      cfg.max_semiring_order = static_cast<int>(v);
    else if (key == "conjecture_scan_order")
      cfg.conjecture_scan_order = static_cast<int>(v);
    else if (key == "threads")
      cfg.threads = static_cast<int>(v);
    else
      throw BadParams("config line " + std::to_string(lineno) +
                      ": unknown key " + key);
    if (cfg.threads < 1) throw BadParams("threads must be at least 1");
  }
  return cfg;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Config load_config_from_env() {
  const char* path = std::getenv("SEMIRING_LAB_CONFIG");
  if (path && *path) return load_config_file(path);
  return Config{};
}

}  // namespace semiring_lab
