#include "ptp/surd.hpp"

#include <cmath>

namespace ptp {

Surd Surd::of_int(long long v) { return of_rat(Rat(v)); }

Surd Surd::of_rat(const Rat& r) {
  if (r == 0) return zero();
  return {r > 0 ? 1 : -1, r * r};
}

Surd Surd::sqrt_of(const Rat& r) {
  if (r < 0) throw ComputeError("sqrt of negative rational " + rat_str(r));
  if (r == 0) return zero();
  return {1, r};
}

double Surd::value() const { return sign * std::sqrt(to_double(rad)); }

Rat Surd::signed_square() const { return sign >= 0 ? rad : Rat(-rad); }

bool Surd::rational_value(Rat* out) const {
  Rat root;
  if (!perfect_square(rad, &root)) return false;
  if (out) *out = sign >= 0 ? root : Rat(-root);
  return true;
}

std::string Surd::str() const {
  if (sign == 0) return "0";
  std::string s = sign > 0 ? "1*sqrt(" : "-1*sqrt(";
  s += numerator(rad).str() + "/" + denominator(rad).str() + ")";
  return s;
}

Surd operator*(const Surd& a, const Surd& b) {
  if (a.sign == 0 || b.sign == 0) return Surd::zero();
  return {a.sign * b.sign, a.rad * b.rad};
}

std::optional<Surd> add(const Surd& a, const Surd& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  if (a.rad == b.rad) {
    int s = a.sign + b.sign;
    if (s == 0) return Surd::zero();
    return Surd{s > 0 ? 1 : -1, 4 * a.rad};
  }
  // a + b = (a.sign + b.sign*t) * sqrt(a.rad) when b.rad/a.rad = t^2
  Rat t;
  if (!perfect_square(Rat(b.rad / a.rad), &t)) return std::nullopt;
  Rat c = Rat(a.sign) + Rat(b.sign) * t;
  if (c == 0) return Surd::zero();
  return Surd{c > 0 ? 1 : -1, c * c * a.rad};
}

SurdMat SurdMat::identity(int n) {
  SurdMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Surd::one();
  return m;
}

SurdMat SurdMat::transposed() const {
  SurdMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::optional<SurdMat> mul(const SurdMat& x, const SurdMat& y) {
  if (x.cols != y.rows) throw ComputeError("surd matrix shape mismatch");
  SurdMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      Surd acc = Surd::zero();
      for (int k = 0; k < x.cols; ++k) {
        auto s = add(acc, x.at(i, k) * y.at(k, j));
        if (!s) return std::nullopt;
        acc = *s;
      }
      r.at(i, j) = acc;
    }
  return r;
}

SurdMat scale(const Surd& s, const SurdMat& x) {
  SurdMat r = x;
  for (auto& e : r.a) e = s * e;
  return r;
}

namespace {

// n > 0 as s*s*f with f squarefree, by trial division (operands stay small)
void squarefree_split(Int n, Int* s, Int* f) {
  *s = 1;
  *f = 1;
  for (Int i = 2; i * i <= n; ++i) {
    if (n % i != 0) continue;
    int e = 0;
    while (n % i == 0) {
      n /= i;
      ++e;
    }
    for (int k = 0; k + 1 < e; k += 2) *s *= i;
    if (e % 2 == 1) *f *= i;
  }
  *f *= n;
}

}  // namespace

SurdSum::SurdSum(const Rat& r) {
  if (r != 0) t_[Int(1)] = r;
}

SurdSum SurdSum::of(const Surd& s) {
  if (s.is_zero()) return SurdSum();
  SurdSum v = sqrt_of(s.rad);
  return s.sign > 0 ? v : -v;
}

SurdSum SurdSum::sqrt_of(const Rat& r) {
  if (r < 0) throw ComputeError("sqrt of negative rational " + rat_str(r));
  SurdSum v;
  if (r == 0) return v;
  // sqrt(a/b) = sqrt(a*b)/b, then pull the square part out of the radicand
  const Int ab = numerator(r) * denominator(r);
  Int s, f;
  squarefree_split(ab, &s, &f);
  v.t_[f] = Rat(s, denominator(r));
  return v;
}

bool SurdSum::is_rational(Rat* out) const {
  if (t_.empty()) {
    if (out) *out = 0;
    return true;
  }
  if (t_.size() == 1 && t_.begin()->first == 1) {
    if (out) *out = t_.begin()->second;
    return true;
  }
  return false;
}

double SurdSum::value() const {
  double acc = 0;
  for (const auto& [f, c] : t_) acc += to_double(c) * std::sqrt(f.convert_to<double>());
  return acc;
}

std::string SurdSum::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [f, c] : t_) {
    if (!out.empty()) out += " + ";
    out += rat_str(c);
    if (f != 1) out += "*sqrt(" + f.str() + ")";
  }
  return out;
}

void SurdSum::add_term(const Int& f, const Rat& c) {
  if (c == 0) return;
  auto it = t_.find(f);
  if (it == t_.end()) {
    t_[f] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

SurdSum SurdSum::operator-() const {
  SurdSum v = *this;
  for (auto& [f, c] : v.t_) c = -c;
  return v;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& [f, c] : o.t_) add_term(f, c);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
  for (const auto& [f, c] : o.t_) add_term(f, -c);
  return *this;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
  SurdSum v;
  for (const auto& [fa, ca] : a.t_)
    for (const auto& [fb, cb] : b.t_) {
      // both radicands squarefree, so the square part of the product is
      // exactly the shared factor
      const Int g = boost::multiprecision::gcd(fa, fb);
      v.add_term((fa / g) * (fb / g), ca * cb * Rat(g));
    }
  return v;
}

ExactMat ExactMat::identity(int n) {
  ExactMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = SurdSum(Rat(1));
  return m;
}

ExactMat ExactMat::transposed() const {
  ExactMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool ExactMat::is_zero() const {
  for (const auto& e : a)
    if (!e.is_zero()) return false;
  return true;
}

ExactMat operator*(const ExactMat& x, const ExactMat& y) {
  if (x.cols != y.rows) throw ComputeError("exact matrix shape mismatch");
  ExactMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const SurdSum& e = x.at(i, k);
      if (e.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j).is_zero()) continue;
        r.at(i, j) += e * y.at(k, j);
      }
    }
  return r;
}

ExactMat operator+(ExactMat x, const ExactMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw ComputeError("exact matrix shape mismatch");
  for (size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
  return x;
}

ExactMat operator-(ExactMat x, const ExactMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw ComputeError("exact matrix shape mismatch");
  for (size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
  return x;
}

ExactMat to_exact(const SurdMat& m) {
  ExactMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = SurdSum::of(m.a[i]);
  return r;
}

}  // namespace ptp
