#include "ptp/radical.hpp"

#include <cmath>

namespace ptp {

std::pair<Int, Int> squarefree_split(Int n) {
  if (n <= 0) throw ValidationError("squarefree split needs a positive integer");
  Int sf = 1, f = 1;
  for (Int div = 2; div * div <= n; ++div) {
    int e = 0;
    while (n % div == 0) {
      n /= div;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) f *= div;
    if (e % 2) sf *= div;
  }
  return {sf * n, f};
}

Radical Radical::of_rat(const Rat& r) {
  Radical out;
  if (r != 0) out.terms.emplace(1, r);
  return out;
}

Radical Radical::of_surd(const Surd& s) {
  Radical out;
  if (s.sign == 0 || s.rad == 0) return out;
  // sign*sqrt(n/m) = sign*sqrt(n*m)/m
  const Int n = boost::multiprecision::numerator(s.rad);
  const Int m = boost::multiprecision::denominator(s.rad);
  const auto [sf, f] = squarefree_split(n * m);
  out.terms.emplace(sf, Rat(s.sign * f, m));
  return out;
}

bool Radical::is_rational() const {
  return terms.empty() || (terms.size() == 1 && terms.begin()->first == 1);
}

Rat Radical::rational_part() const {
  if (terms.empty()) return 0;
  if (!is_rational()) throw ComputeError("radical value is irrational");
  return terms.begin()->second;
}

double Radical::value() const {
  double acc = 0;
  for (const auto& [key, coeff] : terms)
    acc += to_double(coeff) * std::sqrt(static_cast<double>(key));
  return acc;
}

Radical& Radical::operator+=(const Radical& other) {
  for (const auto& [key, coeff] : other.terms) {
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, coeff);
      continue;
    }
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

Radical operator-(const Radical& a) {
  Radical out = a;
  for (auto& [key, coeff] : out.terms) coeff = -coeff;
  return out;
}

Radical operator*(const Radical& a, const Radical& b) {
  Radical out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      const auto [sf, f] = squarefree_split(ka * kb);
      Radical term;
      term.terms.emplace(sf, ca * cb * f);
      out += term;
    }
  return out;
}

RadMat RadMat::identity(int n) {
  RadMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Radical::of_rat(1);
  return m;
}

RadMat RadMat::from_surd(const SurdMat& s) {
  RadMat m(s.rows, s.cols);
  for (int i = 0; i < s.rows; ++i)
    for (int j = 0; j < s.cols; ++j) m.at(i, j) = Radical::of_surd(s.at(i, j));
  return m;
}

RadMat mul(const RadMat& a, const RadMat& b) {
  if (a.cols != b.rows) throw ValidationError("radical matrix shapes do not match");
  RadMat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Radical& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  return out;
}

RadMat add(const RadMat& a, const RadMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ValidationError("radical matrix shapes do not match");
  RadMat out = a;
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
  return out;
}

RadMat sub(const RadMat& a, const RadMat& b) { return add(a, scale(-1, b)); }

RadMat scale(const Rat& c, const RadMat& m) {
  RadMat out = m;
  const Radical cr = Radical::of_rat(c);
  for (auto& x : out.data) x = x * cr;
  return out;
}

double max_abs_value(const RadMat& m) {
  double acc = 0;
  for (const auto& x : m.data) acc = std::max(acc, std::abs(x.value()));
  return acc;
}

bool is_diagonal(const RadMat& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (i != j && !m.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace ptp
