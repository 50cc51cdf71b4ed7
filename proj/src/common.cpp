#include "tuttekit/common.hpp"

#include <cctype>

namespace tk {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  auto slash = s.find('/');
  auto dot = s.find('.');
  // Int's string constructor defaults to base 0, where a leading zero flags
  // octal; force base 10 so "0.9" -> "09" parses as nine.
  try {
    if (slash != std::string::npos) {
      Int num(s.substr(0, slash), 10);
      Int den(s.substr(slash + 1), 10);
      if (den == 0) throw parse_error("rational literal with zero denominator: " + s);
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    if (dot != std::string::npos) {
      std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
      bool neg = !head.empty() && head[0] == '-';
      if (neg) head = head.substr(1);
      if (head.empty()) head = "0";
      for (char c : head + tail)
        if (!std::isdigit((unsigned char)c)) throw parse_error("bad decimal literal: " + s);
      Int num(head + tail, 10);
      Rat r(num, pow_int(Int(10), tail.size()));
      r.canonicalize();
      return neg ? Rat(-r) : r;
    }
    return Rat(Int(s, 10));
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational literal: " + s);
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace tk
