#pragma once

#include <map>
#include <string>
#include <vector>

#include "rpdecay/errors.hpp"

namespace rpdecay {

// Line-based "key = value" config with [section] headers. Lookups use
// "section.key"; '#' and ';' start comments.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  long get_int(const std::string& key) const;
  long get_int_or(const std::string& key, long fallback) const;
  std::vector<double> get_list(const std::string& key) const;  // comma-separated
  std::vector<double> get_list_or(const std::string& key,
                                  const std::vector<double>& fallback) const;

  void set(const std::string& key, const std::string& value);
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace rpdecay
