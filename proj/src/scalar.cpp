#include "osalg/scalar.hpp"

#include <cctype>

#include "osalg/errors.hpp"

namespace osalg {

Scalar make_scalar(long p, long q) {
  if (q == 0) throw input_error("rational with zero denominator");
  Scalar s(p, q);
  s.canonicalize();
  return s;
}

namespace {

bool looks_like_integer(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!looks_like_integer(num) || !looks_like_integer(den))
    throw input_error("malformed rational: \"" + std::string(text) + "\"");
  Scalar s;
  if (s.set_str(std::string(num) + "/" + std::string(den), 10) != 0)
    throw input_error("malformed rational: \"" + std::string(text) + "\"");
  if (s.get_den() == 0) throw input_error("rational with zero denominator: \"" + std::string(text) + "\"");
  s.canonicalize();
  return s;
}

std::string scalar_to_string(const Scalar& s) {
  return s.get_str();
}

int scalar_sign(const Scalar& s) {
  return sgn(s);
}

}  // namespace osalg
