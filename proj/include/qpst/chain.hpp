#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qpst {

// Physical configuration of an XY chain restricted to one excitation.
// Energies are dimensionless; uniform chains use J_max = 1.
struct ChainSpec {
  std::size_t n_sites = 0;
  std::vector<double> couplings;  // J_{i,i+1}, length n_sites - 1
  std::vector<double> onsite;     // eps_i, length n_sites
  double j_max = 1.0;             // largest coupling
};

// Throws InvalidArgument when the fields disagree with each other.
void validate(const ChainSpec& spec);

// Builds a validated spec; j_max is taken from the couplings.
ChainSpec make_chain(std::vector<double> couplings, std::vector<double> onsite);

// All couplings 1, j_max 1.
ChainSpec uniform_chain(std::size_t n, std::vector<double> onsite);

// J_{i,i+1} = j0 * sqrt((n - i) i), i = 1..n-1.
std::vector<double> christandl_couplings(std::size_t n, double j0);

// Christandl couplings with zero on-site energies. With `normalize` the
// couplings are rescaled so that the central (largest) one equals 1.
ChainSpec christandl_chain(std::size_t n, double j0 = 1.0, bool normalize = false);

// eps_i = eps0 * (i - c)^2 with c = (n + 1) / 2, i = 1..n. The symmetric
// centre keeps eps_i = eps_{n-i+1}.
std::vector<double> parabolic_onsite(std::size_t n, double eps0);

// Dense row-major square matrix, just enough for small chain operators.
class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
  std::span<const double> data() const { return data_; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
  double max_abs() const;

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Single-excitation Hamiltonian: on-site energies on the diagonal,
// couplings on the first off-diagonals, zero elsewhere.
class HamiltonianMatrix {
public:
  explicit HamiltonianMatrix(const ChainSpec& spec);

  std::size_t size() const { return dense_.size(); }
  double operator()(std::size_t row, std::size_t col) const { return dense_(row, col); }
  const SquareMatrix& dense() const { return dense_; }
  std::span<const double> diagonal() const { return diagonal_; }
  std::span<const double> off_diagonal() const { return off_diagonal_; }

private:
  SquareMatrix dense_;
  std::vector<double> diagonal_;
  std::vector<double> off_diagonal_;
};

HamiltonianMatrix build_hamiltonian(const ChainSpec& spec);

// Anti-diagonal permutation M; (M psi)_i = psi_{n-i+1}.
SquareMatrix mirror_matrix(std::size_t n);

// max_i |eps_i - eps_{N-i+1}| and |J_i - J_{N-i}| both within tol.
bool check_mirror_symmetry(const ChainSpec& spec, double tol = 0.0);

// ||HM - MH||_max.
double mirror_commutator_norm(const HamiltonianMatrix& h);

}  // namespace qpst
