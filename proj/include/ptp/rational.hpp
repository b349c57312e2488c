#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ptp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// validation errors map to CLI exit code 2, everything else to 1
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double to_double(const Rat& r);
bool is_integer(const Rat& r);
Int to_int(const Rat& r);  // throws unless integral

// nonnegative perfect squares; root receives the nonnegative square root
bool perfect_square(const Int& n, Int* root = nullptr);
bool perfect_square(const Rat& r, Rat* root = nullptr);

std::string rat_str(const Rat& r);  // "n" or "n/m"
Rat parse_rat(const std::string& s);

}  // namespace ptp
