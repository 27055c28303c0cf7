#pragma once

#include <vector>

#include "eapm/linalg.hpp"

namespace eapm::qudit {

namespace tol {
inline constexpr double unitarity = 1e-12;
inline constexpr double orthonormality = 1e-12;
inline constexpr double unbiasedness = 1e-10;    // | |<e|f>|^2 - 1/d |
inline constexpr double commutation = 1e-12;     // ZX - omega XZ
inline constexpr double density = 1e-10;         // hermiticity and trace deviation
inline constexpr double positivity = -1e-9;
inline constexpr double completeness = 1e-10;    // effects sum to identity
inline constexpr double trace_preserving = 1e-10;
inline constexpr double projector = 1e-10;       // M^2 - M
inline constexpr double shift_relation = 1e-10;
inline constexpr double fidelity = 1e-12;
}  // namespace tol

// Largest supported prime: keeps the d^2 x d^2 dense algebra desk-scale.
inline constexpr int max_dimension = 13;

bool is_prime(int d);
int mod_reduce(int a, int d);                 // representative in {0,...,d-1}
int mod_pow(int base, int exponent, int d);
int mod_inverse(int a, int d);                // a^(d-2) mod d, d prime

// Clock and shift pair: z_op = sum_k omega^k |k><k|, x_op = sum_k |k+1><k|.
struct WeylPair {
  int d = 0;
  ComplexMatrix x_op;
  ComplexMatrix z_op;
  Complex omega;
};

// d+1 orthonormal bases of C^d; bases[z][m] is the m-th vector of basis z.
// Basis z == d is the computational basis.
struct MubFamily {
  int d = 0;
  std::vector<std::vector<ComplexVector>> bases;
};

struct DensityMatrix {
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 1;  // 1 for single systems
  ComplexMatrix mat;
  Eigen::Index dim() const { return dim_a * dim_b; }
};

struct Povm {
  Eigen::Index d_total = 0;
  std::vector<ComplexMatrix> effects;
};

struct KrausChannel {
  std::vector<ComplexMatrix> kraus_ops;
  Eigen::Index input_dim() const;
  Eigen::Index output_dim() const;
};

struct ShiftResiduals {
  double x_forward = 0;    // X^t |e_{m,z}>  vs  omega^(z t^2 - t m) |e_{m-2zt,z}>
  double z_forward = 0;    // Z^t |e_{m,z}>  vs  |e_{m+t,z}>
  double x_conjugate = 0;  // X^t |e*_{m,z}> vs  omega^(-z t^2 + t m) |e*_{m-2zt,z}>
  double z_conjugate = 0;  // Z^t |e*_{m,z}> vs  |e*_{m-t,z}>
  double max() const;
};

WeylPair weyl_pair(int d);

// X^x0 Z^x1 acting as |l> -> omega^(l x1) |l+x0>.
ComplexMatrix encoding_unitary(const WeylPair& w, int x0, int x1);

// Odd prime d: |e_{m,z}> = (1/sqrt d) sum_l omega^(l(m+zl)) |l> for z < d,
// computational basis at z = d. For d = 2 the family is the eigenbases of
// X, XZ and Z, in that order (the phase formula is invalid at d = 2).
MubFamily mub_family(int d);

ShiftResiduals shift_relation_check(const WeylPair& w, const MubFamily& mubs,
                                    int t, int z, int m);

// d-outcome measurement on C^d x C^d built from basis z: measure the first
// factor in {|e_{c1,z}>}, the second in the conjugated basis, output
// c = c1 - c2 mod d. Effects are rank-d projectors of trace d.
Povm product_measurement(int d, int z);

DensityMatrix max_entangled(int d);
DensityMatrix isotropic(int d, double v);
DensityMatrix pure_schmidt(double theta);

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho,
                            linalg::Subsystem side);

double fidelity_phi_plus(const DensityMatrix& rho);

KrausChannel identity_channel(Eigen::Index dim);
KrausChannel unitary_channel(const ComplexMatrix& u);

// Validation helpers; throw std::invalid_argument when an invariant fails.
void validate_density(const DensityMatrix& rho);
void validate_povm(const Povm& p);
void validate_channel(const KrausChannel& ch);

}  // namespace eapm::qudit
