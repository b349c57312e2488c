#include "ptp/psi.hpp"

#include <string>

namespace ptp {

long long dense_dim_checked(int d, int n, long long cap) {
  if (d < 1) throw ValidationError("local dimension must be positive");
  long long dim = 1;
  for (int i = 0; i < n; ++i) {
    if (cap > 0 && dim > cap / d + 1) throw ValidationError("dense dimension exceeds cap");
    dim *= d;
  }
  if (cap > 0 && dim > cap)
    throw ValidationError("dense dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(cap));
  return dim;
}

std::vector<int> multi_index(long long idx, int d, int n) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(idx % d);
    idx /= d;
  }
  return digits;
}

long long flat_index(const std::vector<int>& digits, int d) {
  long long idx = 0;
  for (int x : digits) idx = idx * d + x;
  return idx;
}

SpMat psi_sparse(const BrauerDiagram& a, int d) {
  if (!valid_diagram(a)) throw ValidationError("invalid diagram");
  const int n = a.n();
  const long long dim = dense_dim_checked(d, n);

  std::vector<std::pair<int, int>> vertical;  // (out slot, in slot), 0-based
  std::vector<std::pair<int, int>> cups, caps;
  for (const auto& [u, v] : a.edges) {
    const bool ut = u < n, vt = v < n;
    if (ut && vt)
      cups.emplace_back(u, v);
    else if (!ut && !vt)
      caps.emplace_back(u - n, v - n);
    else
      vertical.emplace_back(ut ? u : v, ut ? v - n : u - n);
  }
  const int k = static_cast<int>(cups.size());
  long long free_count = 1;
  for (int i = 0; i < k; ++i) free_count *= d;

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(dim));
  std::vector<int> y(n);
  for (long long col = 0; col < dim; ++col) {
    const std::vector<int> x = multi_index(col, d, n);
    bool ok = true;
    for (const auto& [i, j] : caps)
      if (x[i] != x[j]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (const auto& [o, i] : vertical) y[o] = x[i];
    for (long long f = 0; f < free_count; ++f) {
      long long rest = f;
      for (int c = k - 1; c >= 0; --c) {
        const int val = static_cast<int>(rest % d);
        rest /= d;
        y[cups[c].first] = val;
        y[cups[c].second] = val;
      }
      trip.emplace_back(flat_index(y, d), col, 1.0);
    }
  }
  SpMat m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

Mat psi_dense(const BrauerDiagram& a, int d, long long cap_rows) {
  dense_dim_checked(d, a.n(), cap_rows);
  return Mat(psi_sparse(a, d));
}

Mat psi_dense(const DiagramCombo& x, int d, long long cap_rows) {
  const long long dim = dense_dim_checked(d, x.p + x.q, cap_rows);
  Mat acc = Mat::Zero(dim, dim);
  for (const auto& [diag, coeff] : x.terms) acc += to_double(coeff) * Mat(psi_sparse(diag, d));
  return acc;
}

}  // namespace ptp
