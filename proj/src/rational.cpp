#include "ptp/rational.hpp"

namespace ptp {

double to_double(const Rat& r) { return r.convert_to<double>(); }

bool is_integer(const Rat& r) { return denominator(r) == 1; }

Int to_int(const Rat& r) {
  if (!is_integer(r)) throw ComputeError("expected integral rational, got " + rat_str(r));
  return numerator(r);
}

bool perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

bool perfect_square(const Rat& r, Rat* root) {
  if (r < 0) return false;
  Int rn, rd;
  if (!perfect_square(numerator(r), &rn) || !perfect_square(denominator(r), &rd)) return false;
  if (root) *root = Rat(rn, rd);
  return true;
}

std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ValidationError("bad rational literal: " + s);
  }
}

}  // namespace ptp
