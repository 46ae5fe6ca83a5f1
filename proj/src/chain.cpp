#include "qpst/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpst/errors.hpp"

namespace qpst {

void validate(const ChainSpec& spec) {
  if (spec.n_sites < 2) {
    throw InvalidArgument("chain needs at least 2 sites, got " + std::to_string(spec.n_sites));
  }
  if (spec.onsite.size() != spec.n_sites) {
    throw InvalidArgument("onsite has " + std::to_string(spec.onsite.size()) + " entries, expected " +
                          std::to_string(spec.n_sites));
  }
  if (spec.couplings.size() + 1 != spec.n_sites) {
    throw InvalidArgument("couplings has " + std::to_string(spec.couplings.size()) + " entries, expected " +
                          std::to_string(spec.n_sites - 1));
  }
  for (double j : spec.couplings) {
    if (!(j > 0.0) || !std::isfinite(j)) throw InvalidArgument("couplings must be positive and finite");
  }
  for (double e : spec.onsite) {
    if (!std::isfinite(e)) throw InvalidArgument("onsite energies must be finite");
  }
  const double largest = *std::max_element(spec.couplings.begin(), spec.couplings.end());
  if (!(spec.j_max > 0.0) || std::abs(spec.j_max - largest) > 1e-12 * largest) {
    throw InvalidArgument("j_max must equal the largest coupling");
  }
}

ChainSpec make_chain(std::vector<double> couplings, std::vector<double> onsite) {
  ChainSpec spec;
  spec.n_sites = onsite.size();
  spec.couplings = std::move(couplings);
  spec.onsite = std::move(onsite);
  spec.j_max = spec.couplings.empty() ? 1.0 : *std::max_element(spec.couplings.begin(), spec.couplings.end());
  validate(spec);
  return spec;
}

ChainSpec uniform_chain(std::size_t n, std::vector<double> onsite) {
  if (n < 2) throw InvalidArgument("chain needs at least 2 sites, got " + std::to_string(n));
  if (onsite.size() != n) throw InvalidArgument("onsite length does not match n");
  return make_chain(std::vector<double>(n - 1, 1.0), std::move(onsite));
}

std::vector<double> christandl_couplings(std::size_t n, double j0) {
  if (n < 2) throw InvalidArgument("chain needs at least 2 sites, got " + std::to_string(n));
  if (!(j0 > 0.0)) throw InvalidArgument("j0 must be positive");
  std::vector<double> j(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    j[i - 1] = j0 * std::sqrt(static_cast<double>((n - i) * i));
  }
  return j;
}

ChainSpec christandl_chain(std::size_t n, double j0, bool normalize) {
  auto j = christandl_couplings(n, j0);
  if (normalize) {
    const double top = *std::max_element(j.begin(), j.end());
    for (double& x : j) x /= top;
  }
  return make_chain(std::move(j), std::vector<double>(n, 0.0));
}

std::vector<double> parabolic_onsite(std::size_t n, double eps0) {
  if (n < 2) throw InvalidArgument("chain needs at least 2 sites, got " + std::to_string(n));
  std::vector<double> eps(n);
  const double centre = (static_cast<double>(n) + 1.0) / 2.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double d = static_cast<double>(i) - centre;
    eps[i - 1] = eps0 * d * d;
  }
  return eps;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  SquareMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < a.size(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  SquareMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

double SquareMatrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

HamiltonianMatrix::HamiltonianMatrix(const ChainSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n_sites;
  dense_ = SquareMatrix(n);
  diagonal_ = spec.onsite;
  off_diagonal_ = spec.couplings;
  for (std::size_t i = 0; i < n; ++i) dense_(i, i) = spec.onsite[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    dense_(i, i + 1) = spec.couplings[i];
    dense_(i + 1, i) = spec.couplings[i];
  }
}

HamiltonianMatrix build_hamiltonian(const ChainSpec& spec) { return HamiltonianMatrix(spec); }

SquareMatrix mirror_matrix(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1.0;
  return m;
}

bool check_mirror_symmetry(const ChainSpec& spec, double tol) {
  validate(spec);
  const std::size_t n = spec.n_sites;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(spec.onsite[i] - spec.onsite[n - 1 - i]) > tol) return false;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(spec.couplings[i] - spec.couplings[n - 2 - i]) > tol) return false;
  }
  return true;
}

double mirror_commutator_norm(const HamiltonianMatrix& h) {
  const auto m = mirror_matrix(h.size());
  return (h.dense() * m - m * h.dense()).max_abs();
}

}  // namespace qpst
