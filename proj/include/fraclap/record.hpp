#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fraclap::cli {

using Value = std::variant<bool, long long, double, std::string, std::vector<double>>;

/// Insertion-ordered key/value list; setting an existing key replaces it in place.
class Fields {
 public:
  void set(const std::string& key, Value v);
  const Value* find(const std::string& key) const;
  const std::vector<std::pair<std::string, Value>>& items() const { return items_; }

 private:
  std::vector<std::pair<std::string, Value>> items_;
};

struct OutputRecord {
  std::string command;
  Fields inputs;
  Fields outputs;
  Fields diagnostics;
};

/// FNV-1a over the command and serialised inputs, as 16 hex digits.
std::string input_hash(const OutputRecord& rec);

/// Reals are written with %.17g.
std::string format_real(double v);

/// One JSON object on one line, no trailing newline.
std::string to_json(const OutputRecord& rec);

/// Header row (union of flattened keys in first-seen order) followed by one line per record.
/// Keys are prefixed in., out., diag.; arrays become key[0], key[1], ...
void write_csv(std::ostream& os, const std::vector<OutputRecord>& recs);

void write_json_lines(std::ostream& os, const std::vector<OutputRecord>& recs);

}  // namespace fraclap::cli
