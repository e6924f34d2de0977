#include "fraclap/record.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "json.hpp"

namespace fraclap::cli {

void Fields::set(const std::string& key, Value v) {
  for (auto& kv : items_)
    if (kv.first == key) {
      kv.second = std::move(v);
      return;
    }
  items_.emplace_back(key, std::move(v));
}

const Value* Fields::find(const std::string& key) const {
  for (const auto& kv : items_)
    if (kv.first == key) return &kv.second;
  return nullptr;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

// JSON has no literal for non-finite numbers; those go out as strings.
std::string json_real(double v) { return std::isfinite(v) ? format_real(v) : quote(format_real(v)); }

std::string json_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return json_real(x);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return quote(x);
        } else {
          std::string s = "[";
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) s += ",";
            s += json_real(x[i]);
          }
          return s + "]";
        }
      },
      v);
}

std::string json_object(const Fields& f) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : f.items()) {
    if (!first) s += ",";
    first = false;
    s += quote(k) + ":" + json_value(v);
  }
  return s + "}";
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const std::string& prefix, const Fields& f, std::vector<std::pair<std::string, std::string>>& out) {
  for (const auto& [k, v] : f.items()) {
    const std::string key = prefix + k;
    if (const auto* arr = std::get_if<std::vector<double>>(&v)) {
      for (std::size_t i = 0; i < arr->size(); ++i)
        out.emplace_back(key + "[" + std::to_string(i) + "]", format_real((*arr)[i]));
    } else if (const auto* str = std::get_if<std::string>(&v)) {
      out.emplace_back(key, *str);
    } else {
      out.emplace_back(key, json_value(v));
    }
  }
}

}  // namespace

std::string input_hash(const OutputRecord& rec) {
  const std::string payload = rec.command + "|" + json_object(rec.inputs);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_json(const OutputRecord& rec) {
  std::string s = "{\"command\":" + quote(rec.command);
  if (!rec.inputs.items().empty()) s += ",\"inputs\":" + json_object(rec.inputs);
  if (!rec.outputs.items().empty()) s += ",\"outputs\":" + json_object(rec.outputs);
  if (!rec.diagnostics.items().empty()) s += ",\"diagnostics\":" + json_object(rec.diagnostics);
  return s + "}";
}

void write_json_lines(std::ostream& os, const std::vector<OutputRecord>& recs) {
  for (const auto& r : recs) os << to_json(r) << '\n';
}

void write_csv(std::ostream& os, const std::vector<OutputRecord>& recs) {
  std::vector<std::string> header{"command"};
  std::map<std::string, std::size_t> column;
  column["command"] = 0;
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& r : recs) {
    std::vector<std::pair<std::string, std::string>> row{{"command", r.command}};
    flatten("in.", r.inputs, row);
    flatten("out.", r.outputs, row);
    flatten("diag.", r.diagnostics, row);
    for (const auto& kv : row)
      if (column.emplace(kv.first, header.size()).second) header.push_back(kv.first);
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_cell(header[i]);
  os << '\n';
  for (const auto& row : rows) {
    std::vector<std::string> cells(header.size());
    for (const auto& [k, v] : row) cells[column[k]] = csv_cell(v);
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  }
}

}  // namespace fraclap::cli
