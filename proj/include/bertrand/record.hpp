#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace bertrand::io {

/// %.12g — the fixed significand used for every number the tool emits, so
/// identical invocations stay byte-identical and values survive a
/// parse/re-render round trip.
std::string format_double(double v);

enum class Format { Json, Csv };

Format format_from_string(const std::string& name);  // "json" | "csv"

/// One flat output record with ordered fields. Rendered either as a single
/// JSON object per line or as a CSV row under a shared header.
class Record {
 public:
  using Value = std::variant<std::monostate, double, bool, std::string>;

  Record& add(const std::string& key, double v);
  Record& add(const std::string& key, bool v);
  Record& add(const std::string& key, const std::string& v);
  Record& add(const std::string& key, const char* v);
  Record& add_null(const std::string& key);

  const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }

  std::string json_line() const;
  std::string csv_header() const;
  std::string csv_row() const;

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

/// Streams records; emits the CSV header once, before the first row.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void write(const Record& r);

 private:
  std::ostream& out_;
  Format format_;
  bool header_written_ = false;
};

}  // namespace bertrand::io
