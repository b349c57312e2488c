#include "ptp/wigner.hpp"

namespace ptp {

namespace {

// position (1-based) where out = in changed by delta, 0 if rows are equal,
// -1 if the rows differ in any other way
int bump_position(const Row& in, const Row& out, int delta) {
  if (in.size() != out.size()) return -1;
  int pos = 0;
  for (size_t t = 0; t < in.size(); ++t) {
    if (in[t] == out[t]) continue;
    if (pos != 0 || out[t] != in[t] + delta) return -1;
    pos = static_cast<int>(t) + 1;
  }
  return pos;
}

// l_{k,n} = m_{k,n} - k, strictly decreasing along a weakly decreasing row
long long ell(const Row& r, int k) { return r[k - 1] - k; }

int sign_factor(int i, int j) { return i <= j ? 1 : -1; }

// coefficient with the upper row changed at i and the lower row unchanged
Surd changed_unchanged(CGKind kind, const Row& upper, const Row& lower, int i) {
  const int n = static_cast<int>(upper.size());
  const long long shift = kind == CGKind::plus ? 1 : 0;
  Rat num(1), den(1);
  for (int j = 1; j <= n - 1; ++j) num *= Rat(ell(lower, j) - ell(upper, i) - shift);
  for (int j = 1; j <= n; ++j)
    if (j != i) den *= Rat(ell(upper, j) - ell(upper, i));
  if (num == 0) return Surd::zero();
  Rat ratio = num / den;
  if (ratio < 0) ratio = -ratio;
  return Surd::sqrt_of(ratio);
}

// coefficient with the upper row changed at i and the lower row at j
Surd changed_changed(CGKind kind, const Row& upper, const Row& lower, int i, int j) {
  const int n = static_cast<int>(upper.size());
  const long long shift = kind == CGKind::plus ? 1 : 0;
  const long long back = kind == CGKind::plus ? 0 : 1;
  Rat num(1), den(1);
  for (int k = 1; k <= n - 1; ++k)
    if (k != j) num *= Rat(ell(lower, k) - ell(upper, i) - shift);
  for (int k = 1; k <= n; ++k)
    if (k != i) num *= Rat(ell(upper, k) - ell(lower, j) + back);
  for (int k = 1; k <= n; ++k)
    if (k != i) den *= Rat(ell(upper, k) - ell(upper, i));
  for (int k = 1; k <= n - 1; ++k)
    if (k != j) den *= Rat(ell(lower, k) - ell(lower, j) - shift + back);
  if (num == 0) return Surd::zero();
  Rat ratio = num / den;
  if (ratio < 0) ratio = -ratio;
  Surd root = Surd::sqrt_of(ratio);
  return sign_factor(i, j) > 0 ? root : -root;
}

}  // namespace

Surd reduced_wigner(CGKind kind, const Row& upper_in, const Row& upper_out,
                    const Row& lower_in, const Row& lower_out) {
  if (upper_in.empty() || lower_in.size() + 1 != upper_in.size()) return Surd::zero();
  if (!weakly_decreasing(upper_in) || !weakly_decreasing(upper_out)) return Surd::zero();
  if (!weakly_decreasing(lower_in) || !weakly_decreasing(lower_out)) return Surd::zero();
  if (!lower_in.empty()) {
    if (!interlaces(lower_in, upper_in)) return Surd::zero();
    if (!interlaces(lower_out, upper_out)) return Surd::zero();
  }
  const int delta = cg_delta(kind);
  const int i = bump_position(upper_in, upper_out, delta);
  const int j = bump_position(lower_in, lower_out, delta);
  if (i < 0 || j < 0) return Surd::zero();
  if (i == 0 && j == 0) return Surd::one();
  if (i == 0) return Surd::zero();
  if (j == 0) return changed_unchanged(kind, upper_in, lower_in, i);
  return changed_changed(kind, upper_in, lower_in, i, j);
}

Surd cg_coefficient(CGKind kind, int x, const GTPattern& m, const GTPattern& n) {
  const int d = m.dim();
  if (n.dim() != d) throw ValidationError("coupling needs patterns of equal length");
  if (x < 1 || x > d) throw ValidationError("coupled symbol out of range");
  // rows of length < x match exactly, every longer row is bumped exactly once
  const int delta = cg_delta(kind);
  for (int j = 1; j <= d; ++j) {
    const int pos = bump_position(m.row_of_length(j), n.row_of_length(j), delta);
    if (j < x ? pos != 0 : pos <= 0) return Surd::zero();
  }
  Surd out = Surd::one();
  for (int j = d; j >= x; --j) {
    static const Row empty;
    const Row& ml = j >= 2 ? m.row_of_length(j - 1) : empty;
    const Row& nl = j >= 2 ? n.row_of_length(j - 1) : empty;
    const Surd f = reduced_wigner(kind, m.row_of_length(j), n.row_of_length(j), ml, nl);
    if (f.is_zero()) return Surd::zero();
    out = out * f;
  }
  return out;
}

}  // namespace ptp
