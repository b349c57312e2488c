#pragma once

#include <map>

#include "ptp/rational.hpp"
#include "ptp/surd.hpp"

namespace ptp {

// n = sf * f^2 with sf squarefree; returns {sf, f}; n must be positive
std::pair<Int, Int> squarefree_split(Int n);

// exact element of the real field generated by square roots of rationals:
// sum of coeff * sqrt(key) over positive squarefree integer keys (key 1 is the
// rational part); closed under +, -, *
struct Radical {
  std::map<Int, Rat> terms;

  static Radical of_rat(const Rat& r);
  static Radical of_surd(const Surd& s);
  bool is_zero() const { return terms.empty(); }
  bool is_rational() const;
  Rat rational_part() const;  // throws if not rational
  double value() const;

  Radical& operator+=(const Radical& other);
  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(const Radical& a);
  friend Radical operator-(Radical a, const Radical& b) { return a += -b; }
  friend Radical operator*(const Radical& a, const Radical& b);
  friend bool operator==(const Radical&, const Radical&) = default;
};

struct RadMat {
  int rows = 0, cols = 0;
  std::vector<Radical> data;

  RadMat() = default;
  RadMat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}
  static RadMat identity(int n);
  static RadMat from_surd(const SurdMat& m);
  Radical& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const Radical& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  friend bool operator==(const RadMat&, const RadMat&) = default;
};

RadMat mul(const RadMat& a, const RadMat& b);
RadMat add(const RadMat& a, const RadMat& b);
RadMat sub(const RadMat& a, const RadMat& b);
RadMat scale(const Rat& c, const RadMat& m);
double max_abs_value(const RadMat& m);
bool is_diagonal(const RadMat& m);

}  // namespace ptp
