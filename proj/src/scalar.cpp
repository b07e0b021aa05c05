#include "qctw/scalar.hpp"

#include <sstream>

namespace qctw {

CVector identify_vector(const HVector& v) {
  const std::size_t m = v.size();
  CVector out(2 * m);
  for (std::size_t a = 0; a < m; ++a) {
    auto [u, w] = split_complex(v[a]);
    out[a] = u;
    out[m + a] = w;
  }
  return out;
}

HVector unidentify_vector(const CVector& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("unidentify_vector: odd length");
  const std::size_t m = v.size() / 2;
  HVector out(m);
  for (std::size_t a = 0; a < m; ++a) out[a] = join_complex(v[a], v[m + a]);
  return out;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& coeff, const char* unit) {
  if (is_zero(coeff)) return;
  const bool unit_only = *unit != '\0' && abs(coeff) == 1;
  if (first) {
    if (sgn(coeff) < 0) os << '-';
  } else {
    os << (sgn(coeff) < 0 ? " - " : " + ");
  }
  if (!unit_only) os << Rational(abs(coeff)).get_str();
  os << unit;
  first = false;
}

}  // namespace

std::string to_string(const Complex& c) {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, c.re, "");
  append_term(os, first, c.im, "i");
  if (first) os << '0';
  return os.str();
}

std::string to_string(const Quaternion& q) {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, q.w, "");
  append_term(os, first, q.x, "i");
  append_term(os, first, q.y, "j");
  append_term(os, first, q.z, "k");
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Complex& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

}  // namespace qctw
