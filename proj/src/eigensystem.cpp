#include "qpst/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qpst/errors.hpp"

namespace qpst {
namespace {

constexpr int kMaxSweepsPerValue = 60;

// d: diagonal in, eigenvalues out (unsorted). e: off-diagonal in slots
// 0..n-2, slot n-1 is scratch. z: accumulated rotations when non-null.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, SquareMatrix* z) {
  const std::size_t n = d.size();
  const double eps = std::numeric_limits<double>::epsilon();
  if (n < 2) return;
  e[n - 1] = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxSweepsPerValue) {
        throw NumericalError("tridiagonal QL did not converge");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) {
          for (std::size_t k = 0; k < n; ++k) {
            f = (*z)(k, i + 1);
            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
            (*z)(k, i) = c * (*z)(k, i) - s * f;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

void check_input(std::span<const double> diagonal, std::span<const double> off_diagonal) {
  if (diagonal.empty()) throw InvalidArgument("empty matrix");
  if (off_diagonal.size() + 1 != diagonal.size()) {
    throw InvalidArgument("off-diagonal length must be one less than the diagonal");
  }
  for (double x : diagonal)
    if (!std::isfinite(x)) throw NumericalError("non-finite matrix entry");
  for (double x : off_diagonal)
    if (!std::isfinite(x)) throw NumericalError("non-finite matrix entry");
}

}  // namespace

EigenSystem diagonalize_tridiagonal(std::span<const double> diagonal, std::span<const double> off_diagonal) {
  check_input(diagonal, off_diagonal);
  const std::size_t n = diagonal.size();
  std::vector<double> d(diagonal.begin(), diagonal.end());
  std::vector<double> e(n, 0.0);
  std::copy(off_diagonal.begin(), off_diagonal.end(), e.begin());
  SquareMatrix z(n);
  for (std::size_t i = 0; i < n; ++i) z(i, i) = 1.0;

  ql_implicit(d, e, &z);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = SquareMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = d[src];
    // Fix the sign so the largest-magnitude component is positive.
    std::size_t pivot = 0;
    for (std::size_t r = 1; r < n; ++r)
      if (std::abs(z(r, src)) > std::abs(z(pivot, src)) + 1e-12) pivot = r;
    const double sign = z(pivot, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = sign * z(r, src);
  }
  return out;
}

EigenSystem diagonalize(const HamiltonianMatrix& h) {
  return diagonalize_tridiagonal(h.diagonal(), h.off_diagonal());
}

std::vector<double> eigenvalues(const HamiltonianMatrix& h) {
  check_input(h.diagonal(), h.off_diagonal());
  const std::size_t n = h.size();
  std::vector<double> d(h.diagonal().begin(), h.diagonal().end());
  std::vector<double> e(n, 0.0);
  std::copy(h.off_diagonal().begin(), h.off_diagonal().end(), e.begin());
  ql_implicit(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace qpst
