#pragma once

// Minimal JSON/CSV emitters for the CLI reports. Doubles are serialized
// with 17 significant digits so every value round-trips exactly; CSV
// follows RFC 4180 (CRLF line endings, mandatory header row).

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace berezin::cli {

// %.17g with non-finite values mapped to null/empty by the writers.
std::string format_double(double v);

class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& k);
  void number(double v);
  void number_int(long long v);
  void number_uint(std::uint64_t v);
  void boolean(bool v);
  void string(const std::string& v);
  void null();

  std::string str() const { return out_.str() + "\n"; }

 private:
  void pre_value();
  void newline_indent();

  std::ostringstream out_;
  std::vector<bool> has_items_;  // per open container
  bool pending_key_ = false;
};

class CsvWriter {
 public:
  void row(const std::vector<std::string>& fields);
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace berezin::cli
