#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace simplexrep {

// Formats a double as a JSON number with 17 significant digits, enough to
// round-trip any binary64 value exactly.
std::string json_number(double v);

// Minimal streaming JSON writer with explicit control over number formatting
// and key order. Parsing is done with nlohmann::json; this writer exists
// because serialized files must be byte-stable and carry 17-digit doubles.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(std::size_t v) { return value(static_cast<std::uint64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& raw(std::string_view text);  // pre-formatted value
  JsonWriter& null();

  const std::string& str() const { return out_; }

 private:
  void before_value();
  std::string out_;
  std::vector<bool> needs_comma_;
  bool pending_key_ = false;
};

std::string json_escape(std::string_view s);

}  // namespace simplexrep
