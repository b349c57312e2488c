#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptp/rational.hpp"

namespace ptp {

// Exact scalar of the form sign * sqrt(radicand) with radicand a nonnegative
// rational. Closed under products; sums stay exact only while the radicands
// are commensurable (their ratio is a rational square), otherwise callers
// must escalate to floating point.
struct Surd {
  int sign = 0;   // -1, 0, +1
  Rat rad = 0;    // >= 0; zero iff sign == 0

  static Surd zero() { return {}; }
  static Surd one() { return {1, 1}; }
  static Surd of_int(long long v);
  static Surd of_rat(const Rat& r);    // r -> sign(r) * sqrt(r^2)
  static Surd sqrt_of(const Rat& r);   // needs r >= 0

  bool is_zero() const { return sign == 0; }
  double value() const;
  Rat signed_square() const;                   // sign * rad
  bool rational_value(Rat* out = nullptr) const;  // true when rad is a square
  std::string str() const;                     // "0" or "s*sqrt(n/m)"

  Surd operator-() const { return {-sign, rad}; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) = default;
};

// exact sum, or nullopt when the radicands are incommensurable
std::optional<Surd> add(const Surd& a, const Surd& b);

struct SurdMat {
  int rows = 0, cols = 0;
  std::vector<Surd> a;

  SurdMat() = default;
  SurdMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  static SurdMat identity(int n);

  Surd& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Surd& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  SurdMat transposed() const;
  friend bool operator==(const SurdMat& x, const SurdMat& y) = default;
};

std::optional<SurdMat> mul(const SurdMat& x, const SurdMat& y);
SurdMat scale(const Surd& s, const SurdMat& x);

// Exact sum of rational multiples of square roots of distinct squarefree
// positive integers; radicand 1 carries the rational part and the empty map
// is zero. Unlike Surd this stays closed under addition, so orthogonal words
// and projector sums built from single radicals keep exact entries.
class SurdSum {
 public:
  SurdSum() = default;
  explicit SurdSum(const Rat& r);
  static SurdSum of(const Surd& s);
  static SurdSum sqrt_of(const Rat& r);  // needs r >= 0

  bool is_zero() const { return t_.empty(); }
  bool is_rational(Rat* out = nullptr) const;
  double value() const;
  std::string str() const;
  const std::map<Int, Rat>& terms() const { return t_; }

  SurdSum operator-() const;
  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o);
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
  friend bool operator==(const SurdSum& a, const SurdSum& b) = default;

 private:
  void add_term(const Int& f, const Rat& c);
  std::map<Int, Rat> t_;
};

// dense matrix over exact radical sums, sized for path-basis blocks
struct ExactMat {
  int rows = 0, cols = 0;
  std::vector<SurdSum> a;

  ExactMat() = default;
  ExactMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  static ExactMat identity(int n);

  SurdSum& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const SurdSum& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  ExactMat transposed() const;
  bool is_zero() const;
  friend ExactMat operator*(const ExactMat& x, const ExactMat& y);
  friend ExactMat operator+(ExactMat x, const ExactMat& y);
  friend ExactMat operator-(ExactMat x, const ExactMat& y);
  friend bool operator==(const ExactMat& x, const ExactMat& y) = default;
};

ExactMat to_exact(const SurdMat& m);

}  // namespace ptp
