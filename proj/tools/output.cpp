#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace berezin::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void JsonWriter::pre_value() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!has_items_.empty()) {
    if (has_items_.back()) out_ << ",";
    has_items_.back() = true;
    newline_indent();
  }
}

void JsonWriter::newline_indent() {
  out_ << "\n";
  for (std::size_t i = 0; i < has_items_.size(); ++i) out_ << "  ";
}

void JsonWriter::begin_object() {
  pre_value();
  out_ << "{";
  has_items_.push_back(false);
}

void JsonWriter::end_object() {
  const bool had = has_items_.back();
  has_items_.pop_back();
  if (had) newline_indent();
  out_ << "}";
}

void JsonWriter::begin_array() {
  pre_value();
  out_ << "[";
  has_items_.push_back(false);
}

void JsonWriter::end_array() {
  const bool had = has_items_.back();
  has_items_.pop_back();
  if (had) newline_indent();
  out_ << "]";
}

void JsonWriter::key(const std::string& k) {
  if (has_items_.back()) out_ << ",";
  has_items_.back() = true;
  newline_indent();
  out_ << "\"" << k << "\": ";
  pending_key_ = true;
}

void JsonWriter::number(double v) {
  pre_value();
  if (std::isfinite(v)) {
    out_ << format_double(v);
  } else {
    out_ << "null";
  }
}

void JsonWriter::number_int(long long v) {
  pre_value();
  out_ << v;
}

void JsonWriter::number_uint(std::uint64_t v) {
  pre_value();
  out_ << v;
}

void JsonWriter::boolean(bool v) {
  pre_value();
  out_ << (v ? "true" : "false");
}

void JsonWriter::string(const std::string& v) {
  pre_value();
  out_ << "\"";
  for (char c : v) {
    switch (c) {
      case '"': out_ << "\\\""; break;
      case '\\': out_ << "\\\\"; break;
      case '\n': out_ << "\\n"; break;
      case '\t': out_ << "\\t"; break;
      default: out_ << c;
    }
  }
  out_ << "\"";
}

void JsonWriter::null() {
  pre_value();
  out_ << "null";
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << ",";
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      out_ << "\"";
      for (char c : f) {
        if (c == '"') out_ << "\"\"";
        else out_ << c;
      }
      out_ << "\"";
    } else {
      out_ << f;
    }
  }
  out_ << "\r\n";
}

}  // namespace berezin::cli
