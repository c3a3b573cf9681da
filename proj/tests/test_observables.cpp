#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_helpers.hpp"
#include "upb/observables.hpp"

using namespace upb;
using Catch::Approx;

namespace {

SteadyState make_state(Eigen::MatrixXcd rho, FockBasis basis) {
    SteadyState st;
    st.rho = std::move(rho);
    st.basis = std::move(basis);
    return st;
}

// Diagonal mixture with weights proportional to w(state).
template <typename WeightFn>
SteadyState diagonal_state(const FockBasis& basis, WeightFn w) {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
    double z = 0.0;
    for (int i = 0; i < basis.size(); ++i) {
        const double wi = w(basis.state(i));
        rho(i, i) = wi;
        z += wi;
    }
    rho /= z;
    return make_state(std::move(rho), basis);
}

// Truncated product of coherent states |alpha1, alpha2> with the phonon in
// vacuum.
SteadyState coherent_product(const FockBasis& basis, Complex alpha1, Complex alpha2) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(basis.size());
    auto coeff = [](Complex alpha, int n) {
        Complex c(1.0, 0.0);
        for (int k = 1; k <= n; ++k) c *= alpha / std::sqrt(double(k));
        return c;
    };
    for (int i = 0; i < basis.size(); ++i) {
        const FockState& s = basis.state(i);
        if (s.nm != 0) continue;
        psi(i) = coeff(alpha1, s.n1) * coeff(alpha2, s.n2);
    }
    psi /= psi.norm();
    return make_state(psi * psi.adjoint(), basis);
}

} // namespace

TEST_CASE("expectation values", "[observables]") {
    const FockBasis basis(3, 2);
    std::mt19937 rng(55);

    SECTION("identity gives the trace") {
        const SteadyState st = make_state(upb::testing::random_density(basis.size(), rng), basis);
        REQUIRE(std::abs(expectation(st, sparse_identity(basis.size())) - Complex(1.0, 0.0)) <
                1e-12);
    }
    SECTION("vacuum occupation is zero") {
        Eigen::MatrixXcd vac = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
        vac(0, 0) = 1.0;
        const SteadyState st = make_state(std::move(vac), basis);
        const ModeOperators ops = mode_operators(basis);
        REQUIRE(std::abs(expectation(st, SpMat(SpMat(ops.a1.adjoint()) * ops.a1))) == 0.0);
    }
    SECTION("hermitian observables give real values, matching the dense trace") {
        for (int k = 0; k < 5; ++k) {
            const Eigen::MatrixXcd rho = upb::testing::random_density(basis.size(), rng);
            const Eigen::MatrixXcd h = upb::testing::random_hermitian(basis.size(), rng);
            const Complex got = expectation(rho, h.sparseView());
            const Complex want = (rho * h).trace();
            REQUIRE(std::abs(got - want) < 1e-12);
            REQUIRE(std::abs(got.imag()) <= 1e-10);
        }
    }
    SECTION("dimension mismatch rejected") {
        const SteadyState st = make_state(Eigen::MatrixXcd::Identity(3, 3), FockBasis(1, 0));
        REQUIRE_THROWS_AS(expectation(st, sparse_identity(5)), std::invalid_argument);
    }
}

TEST_CASE("g2 of reference states", "[observables]") {
    SECTION("coherent product state is Poissonian") {
        const FockBasis basis(14, 1);
        const SteadyState st = coherent_product(basis, Complex(0.3, 0.1), Complex(0.2, 0.0));
        REQUIRE(g2_zero(st, 1) == Approx(1.0).epsilon(1e-6));
        REQUIRE(g2_zero(st, 2) == Approx(1.0).epsilon(1e-6));
    }
    SECTION("single-photon state is perfectly antibunched") {
        const FockBasis basis(2, 1);
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
        const int one = basis.index_of(1, 0, 0);
        rho(one, one) = 1.0;
        const SteadyState st = make_state(std::move(rho), basis);
        REQUIRE(g2_zero(st, 1) == 0.0);
    }
    SECTION("thermal mode gives 2") {
        const FockBasis basis(14, 0);
        const double nbar = 0.1;
        const double x = nbar / (nbar + 1.0);
        const SteadyState st =
            diagonal_state(basis, [&](const FockState& s) {
                return s.n2 == 0 ? std::pow(x, s.n1) : 0.0;
            });
        REQUIRE(g2_zero(st, 1) == Approx(2.0).epsilon(1e-6));
    }
    SECTION("population-sum oracle on a random diagonal mixture") {
        const FockBasis basis(4, 2);
        std::mt19937 rng(77);
        std::uniform_real_distribution<double> u(0.05, 1.0);
        std::vector<double> w(static_cast<std::size_t>(basis.size()));
        for (auto& v : w) v = u(rng);
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
        double z = 0.0;
        for (int i = 0; i < basis.size(); ++i) z += w[static_cast<std::size_t>(i)];
        for (int i = 0; i < basis.size(); ++i) rho(i, i) = w[static_cast<std::size_t>(i)] / z;
        const SteadyState st = make_state(std::move(rho), basis);

        double n1 = 0.0, m4 = 0.0;
        for (int i = 0; i < basis.size(); ++i) {
            const double p = st.rho(i, i).real();
            const int n = basis.state(i).n1;
            n1 += n * p;
            m4 += double(n) * (n - 1) * p;
        }
        REQUIRE(g2_zero(st, 1) == Approx(m4 / (n1 * n1)).epsilon(1e-12));
    }
    SECTION("undefined below the occupation guard") {
        const FockBasis basis(2, 1);
        Eigen::MatrixXcd vac = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
        vac(0, 0) = 1.0;
        const SteadyState st = make_state(std::move(vac), basis);
        REQUIRE_THROWS_AS(g2_zero(st, 1), UndefinedCorrelationError);
    }
    SECTION("matches the densely formed quartic operator") {
        const FockBasis basis(3, 2);
        std::mt19937 rng(88);
        const SteadyState st =
            make_state(upb::testing::random_density(basis.size(), rng), basis);
        const Eigen::MatrixXcd a1 = Eigen::MatrixXcd(mode_operators(basis).a1);
        const Eigen::MatrixXcd quartic = a1.adjoint() * a1.adjoint() * a1 * a1;
        const double m4 = (st.rho * quartic).trace().real();
        const double occ = (st.rho * (a1.adjoint() * a1)).trace().real();
        REQUIRE(g2_zero(st, 1) == Approx(m4 / (occ * occ)).epsilon(1e-10));
    }
}

TEST_CASE("phonon-conditioned g2", "[observables]") {
    SECTION("projector commutes with the photon operators") {
        const FockBasis basis(3, 2);
        const ModeOperators ops = mode_operators(basis);
        const Eigen::MatrixXcd p0 = Eigen::MatrixXcd(zero_phonon_projector(basis));
        const Eigen::MatrixXcd a1 = Eigen::MatrixXcd(ops.a1);
        REQUIRE((p0 * a1 - a1 * p0).cwiseAbs().maxCoeff() == 0.0);
    }
    SECTION("state supported on the zero-phonon subspace reduces to g2") {
        const FockBasis basis(4, 2);
        const SteadyState st = coherent_product(basis, Complex(0.4, 0.0), Complex(0.1, 0.2));
        REQUIRE(g2_zero_phonon(st) == Approx(g2_zero(st, 1)).epsilon(1e-12));
    }
    SECTION("degenerate projector on a phonon-free basis") {
        const FockBasis basis(5, 0);
        const SteadyState st = coherent_product(basis, Complex(0.5, 0.1), Complex(0.0, 0.0));
        REQUIRE(g2_zero_phonon(st) == Approx(g2_zero(st, 1)).epsilon(1e-12));
    }
    SECTION("conditioned statistics differ from the unconditioned ones") {
        // Zero-phonon sector carries a single photon, one-phonon sector a
        // two-photon component; conditioning must remove the latter.
        const FockBasis basis(2, 1);
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
        rho(basis.index_of(1, 0, 0), basis.index_of(1, 0, 0)) = 0.6;
        rho(basis.index_of(2, 0, 1), basis.index_of(2, 0, 1)) = 0.4;
        const SteadyState st = make_state(std::move(rho), basis);

        const double n_all = 0.6 * 1 + 0.4 * 2;
        const double m4_all = 0.4 * 2.0;
        REQUIRE(g2_zero(st, 1) == Approx(m4_all / (n_all * n_all)).epsilon(1e-12));
        REQUIRE(g2_zero_phonon(st) == 0.0);
    }
}

TEST_CASE("observable set", "[observables]") {
    const FockBasis basis(3, 1);
    const SteadyState st = coherent_product(basis, Complex(0.3, 0.0), Complex(0.2, 0.0));
    const ObservableSet o = compute_observables(st);
    REQUIRE(o.n1 >= -1e-10);
    REQUIRE(o.n2 >= -1e-10);
    REQUIRE(o.n_m >= -1e-10);
    REQUIRE(o.g2 >= 0.0);
    REQUIRE(o.n_m == Approx(0.0).margin(1e-12));
    REQUIRE(o.g2 == Approx(observable_value(st, Observable::g2)));
    REQUIRE(o.g2_zero_phonon == Approx(observable_value(st, Observable::g2_zero_phonon)));
}
