#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oamkit/grid.hpp"

namespace oamkit {

struct NotSelfAdjoint : std::runtime_error {
    NotSelfAdjoint() : std::runtime_error("NotSelfAdjoint: generator must be Hermitian") {}
};
struct TruncationTooSmall : std::runtime_error {
    TruncationTooSmall() : std::runtime_error("TruncationTooSmall: number-basis cutoff too low") {}
};

inline constexpr double kTruncationTailMass = 1e-10;

// Truncated number-basis state: coefficients c_0 .. c_{n_max}.
class FockState {
  public:
    static FockState from_coefficients(Eigen::VectorXcd coeffs);

    int n_max() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Eigen::VectorXcd& coefficients() const { return coeffs_; }
    bool truncation_ok() const;  // |c_{n_max}|^2 <= kTruncationTailMass

  private:
    explicit FockState(Eigen::VectorXcd c) : coeffs_(std::move(c)) {}
    Eigen::VectorXcd coeffs_;
};

// c_n proportional to alpha^n / sqrt(n!). Requires the truncation heuristic
// n_max >= |alpha|^2 + 10 sqrt(|alpha|^2 + 1); throws TruncationTooSmall.
FockState coherent_state(cplx alpha, int n_max);

// Ladder actions on coefficient vectors: (a v)_n = sqrt(n+1) v_{n+1}, etc.
Eigen::VectorXcd apply_lowering(const Eigen::VectorXcd& v);
Eigen::VectorXcd apply_raising(const Eigen::VectorXcd& v);
Eigen::VectorXcd apply_number(const Eigen::VectorXcd& v);

// Dense matrices of the truncated ladder operators (oracle-friendly).
Eigen::MatrixXcd lowering_matrix(int n_max);
Eigen::MatrixXcd number_matrix(int n_max);

struct GeneralizedReport {
    double sigma_G = 0.0;
    double comm_abs = 0.0;  // |<[G, Phi]>|
    double denom = 0.0;     // sqrt<Phi^dag Phi> + sqrt<Phi Phi^dag>
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool satisfied = true;
};

// sigma(G) >= |<[G, Phi]>| / (sqrt<Phi^dag Phi> + sqrt<Phi Phi^dag>) with
// explicit matrix actions on the truncated space. G must be Hermitian
// (throws NotSelfAdjoint); Phi is arbitrary.
GeneralizedReport check_result4_generic(const FockState& state, const Eigen::MatrixXcd& G,
                                        const Eigen::MatrixXcd& Phi, double tol = 1e-9);

// Number-phase instance G = a^dag a, Phi = a, evaluated through the ladder
// recursions on the coefficient vector (no dense matrices).
GeneralizedReport check_number_phase(const FockState& state, double tol = 1e-9);

// Seeded property run: `count` samples of (Hermitian G, arbitrary Phi, random
// unit psi) at the given dimension (2..64).
std::vector<GeneralizedReport> random_pair_property(std::uint64_t seed, int dim,
                                                    int count = 1000);

}  // namespace oamkit
