#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace glmfab {

// Minimal JSON value tree for result output. Object keys keep insertion
// order and reals serialize with 17 significant digits, which makes the
// emitted files byte-stable across reruns — the golden-file contract.
class Json {
 public:
  static Json object();
  static Json array();
  static Json str(std::string s);
  static Json real(double v);
  static Json integer(long long v);
  static Json boolean(bool v);

  Json& add(const std::string& key, Json v);  // object insert, ordered
  Json& push(Json v);                         // array append

  // Pretty two-space-indented text with a trailing newline.
  std::string dump() const;

 private:
  enum class Kind { Object, Array, String, Real, Integer, Boolean };
  Kind kind_ = Kind::Object;
  std::string string_;
  double real_ = 0.0;
  long long integer_ = 0;
  bool boolean_ = false;
  std::vector<std::pair<std::string, Json>> members_;
  std::vector<Json> items_;

  void write(std::string& out, int indent) const;
};

std::string json_escape(const std::string& s);
std::string format_real(double v);  // %.17g

}  // namespace glmfab
