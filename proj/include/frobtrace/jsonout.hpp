#pragma once

#include <concepts>
#include <cstdio>
#include <string>
#include <string_view>

#include "frobtrace/exact.hpp"

namespace frobtrace {

// Hand-rolled JSON emission.  Field order is insertion order and doubles are
// printed with %.12g, so identical inputs serialize byte-identically.

inline std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
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

inline std::string json_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s == "inf") return "\"inf\"";
  if (s == "-inf") return "\"-inf\"";
  if (s == "nan" || s == "-nan") return "\"nan\"";
  return s;
}

class JsonArray;

class JsonObject {
 public:
  JsonObject& field(std::string_view k, std::string_view v) {
    key(k);
    buf_ += '"';
    buf_ += json_escape(v);
    buf_ += '"';
    return *this;
  }

  JsonObject& field(std::string_view k, const char* v) { return field(k, std::string_view(v)); }

  JsonObject& field(std::string_view k, bool v) {
    key(k);
    buf_ += v ? "true" : "false";
    return *this;
  }

  JsonObject& field(std::string_view k, double v) {
    key(k);
    buf_ += json_double(v);
    return *this;
  }

  template <std::integral T>
    requires(!std::same_as<T, bool>)
  JsonObject& field(std::string_view k, T v) {
    key(k);
    buf_ += std::to_string(v);
    return *this;
  }

  JsonObject& field(std::string_view k, const Int& v) {
    key(k);
    buf_ += v.str();
    return *this;
  }

  // Pre-serialized JSON value (nested object or array).
  JsonObject& raw(std::string_view k, std::string_view json) {
    key(k);
    buf_ += json;
    return *this;
  }

  std::string str() const { return buf_ + "}"; }

 private:
  void key(std::string_view k) {
    if (!first_) buf_ += ',';
    first_ = false;
    buf_ += '"';
    buf_ += json_escape(k);
    buf_ += "\":";
  }

  std::string buf_ = "{";
  bool first_ = true;
};

class JsonArray {
 public:
  JsonArray& raw(std::string_view json) {
    sep();
    buf_ += json;
    return *this;
  }

  JsonArray& value(double v) {
    sep();
    buf_ += json_double(v);
    return *this;
  }

  template <std::integral T>
    requires(!std::same_as<T, bool>)
  JsonArray& value(T v) {
    sep();
    buf_ += std::to_string(v);
    return *this;
  }

  JsonArray& value(const Int& v) {
    sep();
    buf_ += v.str();
    return *this;
  }

  JsonArray& value(std::string_view v) {
    sep();
    buf_ += '"';
    buf_ += json_escape(v);
    buf_ += '"';
    return *this;
  }

  std::string str() const { return buf_ + "]"; }

 private:
  void sep() {
    if (!first_) buf_ += ',';
    first_ = false;
  }

  std::string buf_ = "[";
  bool first_ = true;
};

}  // namespace frobtrace
