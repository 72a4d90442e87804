#include "bertrand/record.hpp"

#include <cstdio>
#include <stdexcept>

namespace bertrand::io {

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string escape_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Format format_from_string(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected json or csv)");
}

Record& Record::add(const std::string& key, double v) {
  fields_.emplace_back(key, Value(v));
  return *this;
}

Record& Record::add(const std::string& key, bool v) {
  fields_.emplace_back(key, Value(v));
  return *this;
}

Record& Record::add(const std::string& key, const std::string& v) {
  fields_.emplace_back(key, Value(v));
  return *this;
}

Record& Record::add(const std::string& key, const char* v) {
  fields_.emplace_back(key, Value(std::string(v)));
  return *this;
}

Record& Record::add_null(const std::string& key) {
  fields_.emplace_back(key, Value(std::monostate{}));
  return *this;
}

std::string Record::json_line() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : fields_) {
    if (!first) out += ',';
    first = false;
    out += '"' + escape_json(key) + "\":";
    if (std::holds_alternative<std::monostate>(value)) {
      out += "null";
    } else if (const double* d = std::get_if<double>(&value)) {
      out += format_double(*d);
    } else if (const bool* b = std::get_if<bool>(&value)) {
      out += *b ? "true" : "false";
    } else {
      out += '"' + escape_json(std::get<std::string>(value)) + '"';
    }
  }
  out += '}';
  return out;
}

std::string Record::csv_header() const {
  std::string out;
  bool first = true;
  for (const auto& [key, value] : fields_) {
    if (!first) out += ',';
    first = false;
    out += escape_csv(key);
  }
  return out;
}

std::string Record::csv_row() const {
  std::string out;
  bool first = true;
  for (const auto& [key, value] : fields_) {
    if (!first) out += ',';
    first = false;
    if (std::holds_alternative<std::monostate>(value)) {
      // empty field
    } else if (const double* d = std::get_if<double>(&value)) {
      out += format_double(*d);
    } else if (const bool* b = std::get_if<bool>(&value)) {
      out += *b ? "true" : "false";
    } else {
      out += escape_csv(std::get<std::string>(value));
    }
  }
  return out;
}

void RecordWriter::write(const Record& r) {
  if (format_ == Format::Json) {
    out_ << r.json_line() << '\n';
    return;
  }
  if (!header_written_) {
    out_ << r.csv_header() << '\n';
    header_written_ = true;
  }
  out_ << r.csv_row() << '\n';
}

}  // namespace bertrand::io
