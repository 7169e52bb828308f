#include "matchmonoid/builtin.hpp"

#include <cstdlib>
#include <vector>

#include "matchmonoid/coxeter.hpp"
#include "matchmonoid/errors.hpp"

namespace matchmonoid {

namespace {

long long parse_number(const std::string& text, const std::string& spec) {
  if (text.empty()) fail(Errc::parse_error, "missing number in builtin spec: " + spec);
  char* end = nullptr;
  long long v = std::strtoll(text.c_str(), &end, 10);
  if (end == nullptr || *end != '\0')
    fail(Errc::parse_error, "malformed number '" + text + "' in builtin spec: " + spec);
  return v;
}

std::vector<std::string> split_top_level(const std::string& body,
                                         const std::string& spec) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) fail(Errc::parse_error, "unbalanced parentheses in: " + spec);
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) fail(Errc::parse_error, "unbalanced parentheses in: " + spec);
  parts.push_back(cur);
  return parts;
}

}  // namespace

PosetPtr builtin_poset(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    fail(Errc::parse_error,
         "builtin specs look like name:params (e.g. chain:4): " + spec);
  std::string name = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);

  if (name == "chain") {
    long long n = parse_number(rest, spec);
    if (n < 1) fail(Errc::bad_parameter, "chains need at least one element");
    return chain(static_cast<int>(n));
  }
  if (name == "divisors") {
    long long n = parse_number(rest, spec);
    if (n < 1) fail(Errc::bad_parameter, "divisor posets need n >= 1");
    return divisor_poset(n);
  }
  if (name == "bruhat") return bruhat_poset(static_cast<int>(parse_number(rest, spec)));
  if (name == "involutions")
    return involution_poset(static_cast<int>(parse_number(rest, spec)));
  if (name == "product") {
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
      fail(Errc::parse_error, "product takes a parenthesized list: " + spec);
    std::vector<PosetPtr> factors;
    for (const std::string& part :
         split_top_level(rest.substr(1, rest.size() - 2), spec))
      factors.push_back(builtin_poset(part));
    return product(factors);
  }
  fail(Errc::parse_error, "unknown builtin '" + name + "' in: " + spec);
}

}  // namespace matchmonoid
