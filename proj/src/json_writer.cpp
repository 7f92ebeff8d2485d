#include "glmfab/json_writer.hpp"

#include <cstdio>

namespace glmfab {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json Json::object() { Json j; j.kind_ = Kind::Object; return j; }
Json Json::array() { Json j; j.kind_ = Kind::Array; return j; }
Json Json::str(std::string s) { Json j; j.kind_ = Kind::String; j.string_ = std::move(s); return j; }
Json Json::real(double v) { Json j; j.kind_ = Kind::Real; j.real_ = v; return j; }
Json Json::integer(long long v) { Json j; j.kind_ = Kind::Integer; j.integer_ = v; return j; }
Json Json::boolean(bool v) { Json j; j.kind_ = Kind::Boolean; j.boolean_ = v; return j; }

Json& Json::add(const std::string& key, Json v) {
  members_.emplace_back(key, std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  items_.push_back(std::move(v));
  return *this;
}

void Json::write(std::string& out, int indent) const {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (kind_) {
    case Kind::Object: {
      if (members_.empty()) { out += "{}"; return; }
      out += "{\n";
      for (std::size_t i = 0; i < members_.size(); ++i) {
        out += pad_in + "\"" + json_escape(members_[i].first) + "\": ";
        members_[i].second.write(out, indent + 1);
        out += i + 1 < members_.size() ? ",\n" : "\n";
      }
      out += pad + "}";
      break;
    }
    case Kind::Array: {
      if (items_.empty()) { out += "[]"; return; }
      out += "[\n";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        out += pad_in;
        items_[i].write(out, indent + 1);
        out += i + 1 < items_.size() ? ",\n" : "\n";
      }
      out += pad + "]";
      break;
    }
    case Kind::String: out += "\"" + json_escape(string_) + "\""; break;
    case Kind::Real: out += format_real(real_); break;
    case Kind::Integer: out += std::to_string(integer_); break;
    case Kind::Boolean: out += boolean_ ? "true" : "false"; break;
  }
}

std::string Json::dump() const {
  std::string out;
  write(out, 0);
  out += "\n";
  return out;
}

}  // namespace glmfab
