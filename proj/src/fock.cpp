#include "oamkit/fock.hpp"

#include <cmath>

#include "oamkit/random_field.hpp"

namespace oamkit {

FockState FockState::from_coefficients(Eigen::VectorXcd coeffs) {
    if (coeffs.size() < 3) throw std::runtime_error("FockState: n_max must be >= 2");
    const double n = coeffs.norm();
    if (!(n > 1e-140)) throw ZeroNorm();
    FockState st(coeffs / n);
    if (!st.truncation_ok()) throw TruncationTooSmall();
    return st;
}

bool FockState::truncation_ok() const {
    return std::norm(coeffs_[coeffs_.size() - 1]) <= kTruncationTailMass;
}

FockState coherent_state(cplx alpha, int n_max) {
    const double a2 = std::norm(alpha);
    if (n_max < a2 + 10.0 * std::sqrt(a2 + 1.0)) throw TruncationTooSmall();
    // log-space magnitudes avoid factorial overflow at large n_max
    Eigen::VectorXcd c(n_max + 1);
    const double mag = std::abs(alpha);
    const double arg = std::arg(alpha);
    double log_mag = 0.0;  // log of |alpha|^n / sqrt(n!)
    double peak = 0.0;
    std::vector<double> logs(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) log_mag += std::log(mag > 0.0 ? mag : 1e-300) - 0.5 * std::log(double(n));
        logs[n] = (mag > 0.0 || n == 0) ? log_mag : -1e300;
        peak = std::max(peak, logs[n]);
    }
    for (int n = 0; n <= n_max; ++n)
        c[n] = std::polar(std::exp(logs[n] - peak), arg * n);
    return FockState::from_coefficients(std::move(c));
}

Eigen::VectorXcd apply_lowering(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
    for (int n = 0; n + 1 < v.size(); ++n) out[n] = std::sqrt(double(n + 1)) * v[n + 1];
    return out;
}

Eigen::VectorXcd apply_raising(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
    for (int n = 1; n < v.size(); ++n) out[n] = std::sqrt(double(n)) * v[n - 1];
    return out;
}

Eigen::VectorXcd apply_number(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    for (int n = 0; n < v.size(); ++n) out[n] = double(n) * v[n];
    return out;
}

Eigen::MatrixXcd lowering_matrix(int n_max) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
    for (int n = 0; n < n_max; ++n) a(n, n + 1) = std::sqrt(double(n + 1));
    return a;
}

Eigen::MatrixXcd number_matrix(int n_max) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
    for (int n = 0; n <= n_max; ++n) m(n, n) = double(n);
    return m;
}

namespace {

GeneralizedReport report_from(const Eigen::VectorXcd& psi, const Eigen::MatrixXcd& G,
                              const Eigen::MatrixXcd& Phi, double tol) {
    const Eigen::VectorXcd g_psi = G * psi;
    const double mean_g = std::real(psi.dot(g_psi));
    const double sigma_g = (g_psi - mean_g * psi).norm();

    const Eigen::VectorXcd phi_psi = Phi * psi;
    const Eigen::VectorXcd phid_psi = Phi.adjoint() * psi;
    const cplx comm = psi.dot(G * phi_psi) - psi.dot(Phi * g_psi);

    GeneralizedReport r;
    r.sigma_G = sigma_g;
    r.comm_abs = std::abs(comm);
    r.denom = phi_psi.norm() + phid_psi.norm();
    r.lhs = sigma_g;
    r.rhs = (r.denom > 1e-300) ? r.comm_abs / r.denom : 0.0;
    r.slack = r.lhs - r.rhs;
    r.satisfied = r.slack >= -tol;
    return r;
}

}  // namespace

GeneralizedReport check_result4_generic(const FockState& state, const Eigen::MatrixXcd& G,
                                        const Eigen::MatrixXcd& Phi, double tol) {
    const int dim = state.n_max() + 1;
    if (G.rows() != dim || G.cols() != dim || Phi.rows() != dim || Phi.cols() != dim)
        throw std::runtime_error("check_result4_generic: matrix dimensions must match state");
    if ((G - G.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw NotSelfAdjoint();
    if (!state.truncation_ok()) throw TruncationTooSmall();
    return report_from(state.coefficients(), G, Phi, tol);
}

GeneralizedReport check_number_phase(const FockState& state, double tol) {
    if (!state.truncation_ok()) throw TruncationTooSmall();
    const Eigen::VectorXcd& psi = state.coefficients();
    const Eigen::VectorXcd n_psi = apply_number(psi);
    const double mean_n = std::real(psi.dot(n_psi));
    const double sigma_n = (n_psi - mean_n * psi).norm();

    const Eigen::VectorXcd a_psi = apply_lowering(psi);
    const Eigen::VectorXcd ad_psi = apply_raising(psi);
    // [n, a] acting through the recursions; equals -a exactly on the
    // truncated space, but is evaluated by composition here
    const cplx comm = psi.dot(apply_number(a_psi)) - psi.dot(apply_lowering(n_psi));

    GeneralizedReport r;
    r.sigma_G = sigma_n;
    r.comm_abs = std::abs(comm);
    r.denom = a_psi.norm() + ad_psi.norm();
    r.lhs = sigma_n;
    r.rhs = (r.denom > 1e-300) ? r.comm_abs / r.denom : 0.0;
    r.slack = r.lhs - r.rhs;
    r.satisfied = r.slack >= -tol;
    return r;
}

std::vector<GeneralizedReport> random_pair_property(std::uint64_t seed, int dim, int count) {
    if (dim < 2 || dim > 64) throw std::runtime_error("random_pair_property: dim must be in [2, 64]");
    GaussianRng rng(seed);
    auto random_matrix = [&](int d) {
        Eigen::MatrixXcd m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) = cplx{rng.next(), rng.next()};
        return m;
    };
    std::vector<GeneralizedReport> out;
    out.reserve(count);
    for (int t = 0; t < count; ++t) {
        Eigen::MatrixXcd g = random_matrix(dim);
        g = ((g + g.adjoint()) / 2.0).eval();
        const Eigen::MatrixXcd phi = random_matrix(dim);
        Eigen::VectorXcd psi(dim);
        for (int i = 0; i < dim; ++i) psi[i] = cplx{rng.next(), rng.next()};
        psi.normalize();
        out.push_back(report_from(psi, g, phi, 1e-9));
    }
    return out;
}

}  // namespace oamkit
