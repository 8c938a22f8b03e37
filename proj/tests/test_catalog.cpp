#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "carwb/catalog.hpp"

using namespace carwb;

namespace {
constexpr double pi = std::numbers::pi;
const Complex im{0.0, 1.0};

Mat mat2(Complex a, Complex b, Complex c, Complex d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}
}  // namespace

TEST_CASE("disk_rep formulas") {
    CHECK(approx_equal(disk_rep(0.0, 1.7).generators[0], mat2(0, 0, 1, 0), 1e-15));
    Mat a = disk_rep(0.25, 0.0).generators[0];
    CHECK(op_norm(a.adjoint() * a + a * a.adjoint() - identity(2)) <= 1e-12);
    CHECK_THROWS_AS(disk_rep(0.7, 0.0), ParamOutOfRange);
    CHECK_THROWS_AS(disk_rep(0.2, -1.0), ParamOutOfRange);
}

TEST_CASE("disk_char values") {
    CHECK(std::abs(disk_char(0.0).generators[0](0, 0) - 1.0 / std::sqrt(2.0)) <= 1e-15);
    CHECK(std::abs(disk_char(pi).generators[0](0, 0) + 1.0 / std::sqrt(2.0)) <= 1e-15);
    for (double phi : {0.3, 2.0, 5.9}) {
        Complex a = disk_char(phi).generators[0](0, 0);
        CHECK(std::abs(std::norm(a) + std::norm(a) - 1.0) <= 1e-14);
    }
}

TEST_CASE("v_matrix value, unitarity, diagonalization") {
    Mat v0 = v_matrix(0.0);
    CHECK(approx_equal(v0, mat2(1, -1, 1, 1) / std::sqrt(2.0), 1e-15));
    for (double phi : {0.0, 1.0, 3.5, 6.0}) {
        Mat v = v_matrix(phi);
        CHECK(op_norm(v * v.adjoint() - identity(2)) <= 1e-12);
        Mat d = v.adjoint() * disk_rep(0.5, phi).generators[0] * v;
        CHECK(std::abs(d(0, 1)) <= 1e-12);
        CHECK(std::abs(d(1, 0)) <= 1e-12);
        Complex h = std::exp(im * (phi / 2.0)) / std::sqrt(2.0);
        CHECK(std::abs(d(0, 0) - h) <= 1e-12);
        CHECK(std::abs(d(1, 1) + h) <= 1e-12);
    }
}

TEST_CASE("wtcar_rep reduces to the disk at d = 1") {
    Representation w = wtcar_rep(1, 0.4, 0.3, 2.0);
    Representation d = disk_rep(0.3, 2.0);
    CHECK(approx_equal(w.generators[0], d.generators[0], 1e-15));
}

TEST_CASE("wtcar_rep tensor structure at d = 2") {
    Representation w = wtcar_rep(2, 0.5, 0.0, 0.0);
    Mat dmu = mat2(1, 0, 0, -0.5);
    Mat e21 = mat2(0, 0, 1, 0);
    CHECK(approx_equal(w.generators[0], kron(e21, identity(2)), 1e-15));
    CHECK(approx_equal(w.generators[1], kron(dmu, e21), 1e-15));
    CHECK(residual(w.presentation, w.generators) <= 1e-12);
}

TEST_CASE("wtcar_char formulas") {
    CHECK(approx_equal(wtcar_char(1, 0.3, 1.0).generators[0], disk_char(1.0).generators[0],
                       1e-15));
    Representation c = wtcar_char(2, 0.3, 0.0);
    CHECK(approx_equal(c.generators[1], mat2(1, 0, 0, -0.3) / std::sqrt(2.0), 1e-15));
    CHECK(approx_equal(c.generators[0], mat2(0, 0, 1, 0), 1e-15));
    CHECK(residual(c.presentation, c.generators) <= 1e-12);
}

TEST_CASE("wcar_rep case a at |y| = 1") {
    Representation rep = wcar_rep(Complex(0, 1), 0.0, 0.0, 0.0, 0.0);
    CHECK(rep.dim() == 2);
    CHECK(approx_equal(rep.generators[0], mat2(0, 0, 1, 0), 1e-15));
    CHECK(approx_equal(rep.generators[1], mat2(0, im, 0, 0), 1e-15));
    const auto& g = rep.generators;
    CHECK(op_norm(g[0] * g[1] + g[1] * g[0] - im * identity(2)) <= 1e-14);
}

TEST_CASE("wcar_rep case b1 entries") {
    double y = 0.5;
    Representation rep = wcar_rep(y, 0.25, 0.9 /*ignored*/, 1.0, 2.0 /*ignored*/);
    CHECK(rep.dim() == 2);
    Mat a1 = rep.generators[0];
    CHECK(std::abs(a1(0, 1) - std::exp(im * 1.0) * 0.5) <= 1e-14);  // sqrt((1-|y|)/2) = 0.5
    CHECK(std::abs(a1(1, 0) - std::sqrt(0.75)) <= 1e-14);
    CHECK(residual(rep.presentation, rep.generators) <= 1e-12);
    CHECK(rep.source->family == Family::WCAR_B1);
}

TEST_CASE("wcar_rep interior 4-dim case") {
    Representation rep = wcar_rep(0.3, 0.1, 0.2, 1.0, 2.0);
    CHECK(rep.dim() == 4);
    CHECK(rep.source->family == Family::WCAR_B21);
    CHECK(residual(preset(PresetName::WCAR_Y, {.d = 2, .y = 0.3}), rep.generators) <= 1e-10);
}

TEST_CASE("wcar_rep case b2.2 and parameter validation") {
    Representation rep = wcar_rep(0.3, 0.1, 0.5, 1.0, 2.0);
    CHECK(rep.dim() == 2);
    CHECK(rep.source->family == Family::WCAR_B22);
    CHECK(residual(rep.presentation, rep.generators) <= 1e-12);

    CHECK_THROWS_AS(wcar_rep(0.0, 0.1, 0.2, 0.0, 0.0), ParamOutOfRange);
    CHECK_THROWS_AS(wcar_rep(0.5, 0.3, 0.2, 0.0, 0.0), ParamOutOfRange);  // x1 > (1-|y|)/2
    CHECK_THROWS_AS(wcar_rep(1.5, 0.0, 0.0, 0.0, 0.0), ParamOutOfRange);
}

TEST_CASE("wcar_zero_rep dispatch") {
    Representation fock = wcar_zero_rep(0.0, 0.0, 1.0, 2.0);
    CHECK(approx_equal(fock.generators[0], kron(mat2(0, 0, 1, 0), identity(2)), 1e-15));
    CHECK(approx_equal(fock.generators[1], kron(mat2(1, 0, 0, -1), mat2(0, 0, 1, 0)), 1e-15));
    CHECK(residual(fock.presentation, fock.generators) <= 1e-12);

    Representation r2a = wcar_zero_rep(0.5, 0.2, 0.0, 0.7);
    CHECK(r2a.dim() == 2);
    CHECK(approx_equal(r2a.generators[0], mat2(1, 0, 0, -1) / std::sqrt(2.0), 1e-15));
    CHECK(r2a.source->family == Family::WCARZ_2A);

    Representation r3 = wcar_zero_rep(0.5, 0.5, 0.5, 1.5);
    CHECK(approx_equal(r3.generators[0],
                       std::exp(im * 0.5) / std::sqrt(2.0) * mat2(1, 0, 0, -1), 1e-15));
    CHECK(approx_equal(r3.generators[1], mat2(0, std::exp(im * 1.5), 1, 0) / std::sqrt(2.0),
                       1e-15));
    CHECK(r3.source->family == Family::WCARZ_3);
    // phi1 is reduced modulo pi
    Representation r3b = wcar_zero_rep(0.5, 0.5, 0.5 + pi, 1.5);
    CHECK(approx_equal(r3b.generators[0], r3.generators[0], 1e-12));
}

TEST_CASE("global_rep coincides with the y = 0 tensor form at r1 = 0") {
    Representation g = global_rep(0.0, 0.2, 0.3, 1.0 /*phi*/, 0.4, 0.5);
    Representation z = wcar_zero_rep(0.2, 0.3, 0.4, 0.5);
    CHECK(approx_equal(g.generators[0], z.generators[0], 1e-15));
    CHECK(approx_equal(g.generators[1], z.generators[1], 1e-15));
}

TEST_CASE("global_rep squared second generator on the r1 = 1, x1 = 1/2 edge") {
    for (double phi : {0.0, 1.0})
        for (double phi1 : {0.0, 2.0}) {
            Representation g = global_rep(1.0, 0.5, 0.3, phi, phi1, 1.1);
            Mat sq = g.generators[1] * g.generators[1];
            Complex expected = -std::exp(im * (2.0 * phi - phi1)) / 2.0;
            CHECK(op_norm(sq - expected * identity(4)) <= 1e-12);
        }
}

TEST_CASE("global_rep central anticommutator value") {
    Representation g = global_rep(0.5, 0.1, 0.3, 0.0, 0.0, 0.0);
    Mat ac = g.generators[0] * g.generators[1] + g.generators[1] * g.generators[0];
    CHECK(op_norm(ac - Complex(0.4, 0.0) * identity(4)) <= 1e-12);
}

TEST_CASE("centrality of the anticommutator across the global family") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        double r1 = u01(rng), x1 = 0.5 * u01(rng), x2 = 0.5 * u01(rng);
        double phi = 2 * pi * u01(rng) * 0.999, phi1 = 2 * pi * u01(rng) * 0.999,
               phi2 = 2 * pi * u01(rng) * 0.999;
        Representation g = global_rep(r1, x1, x2, phi, phi1, phi2);
        Mat ac = g.generators[0] * g.generators[1] + g.generators[1] * g.generators[0];
        Complex lambda = ac(0, 0);
        CHECK(op_norm(ac - lambda * identity(4)) <= 1e-10);
        Complex expected = r1 * (1.0 - 2.0 * x1) * std::exp(im * phi);
        CHECK(std::abs(lambda - expected) <= 1e-12);
    }
}

TEST_CASE("b-parameter consistency in the interior case") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        double r = 0.1 + 0.8 * u01(rng);
        Complex y = r * std::exp(im * (2 * pi * u01(rng) * 0.999));
        double x1 = (1.0 - r) / 2.0 * 0.9 * u01(rng);
        double x2 = 0.49 * u01(rng);
        Representation rep =
            wcar_rep(y, x1, x2, 2 * pi * u01(rng) * 0.999, 2 * pi * u01(rng) * 0.999);
        REQUIRE(rep.dim() == 4);
        Mat b1 = rep.generators[1].topLeftCorner(2, 2);
        double expected = 1.0 - std::norm(y) / ((1 - 2 * x1) * (1 - 2 * x1));
        CHECK(op_norm(b1.adjoint() * b1 + b1 * b1.adjoint() - expected * identity(2)) <= 1e-10);
    }
}

TEST_CASE("lemma12_params at r1 = 1") {
    for (double phi : {0.0, 0.7})
        for (double phi1 : {0.0, 2.5}) {
            Lemma12Params lp = lemma12_params(1.0, 0.2, phi, phi1, 1.3);
            CHECK(std::abs(lp.z + std::exp(im * (2 * phi - phi1)) / 2.0) <= 1e-14);
            CHECK(lp.t == doctest::Approx(0.5).epsilon(1e-9));
            CHECK(std::abs(wrap_angle(lp.psi - (2 * phi - phi1 + pi))) <= 1e-9);
        }
}

TEST_CASE("lemma12_params near r1 = 0") {
    double x2 = 0.3, phi2 = 1.2;
    Lemma12Params lp = lemma12_params(1e-8, x2, 0.4, 0.9, phi2);
    CHECK(std::abs(lp.z - std::exp(im * phi2) * std::sqrt(x2 * (1 - x2))) <= 1e-14);
    CHECK(lp.t == doctest::Approx(x2).epsilon(1e-12));
    CHECK(lp.psi == doctest::Approx(phi2).epsilon(1e-12));
}

TEST_CASE("lemma12_params quadratic root") {
    Lemma12Params lp = lemma12_params(0.5, 0.0, 0.0, 0.0, 2.2);
    CHECK(std::abs(lp.z - Complex(-0.125, 0.0)) <= 1e-15);
    double t_expected = (1.0 - std::sqrt(1.0 - 4.0 * 0.015625)) / 2.0;
    CHECK(lp.t == doctest::Approx(t_expected).epsilon(1e-14));
    CHECK(lp.psi == doctest::Approx(pi).epsilon(1e-12));
    CHECK(lp.t <= 0.5);
    CHECK(lp.t * (1 - lp.t) == doctest::Approx(std::norm(lp.z)).epsilon(1e-12));
    CHECK_THROWS_AS(lemma12_params(0.0, 0.2, 0.0, 0.0, 0.0), ParamOutOfRange);
}

TEST_CASE("canonical_params examples") {
    ParamPoint p;
    p.family = Family::DISK2;
    p.x = 0.0;
    p.phi = 2.7;
    ParamPoint c = canonical_params(p);
    CHECK(c.x == 0.0);
    CHECK(c.phi == 0.0);

    ParamPoint b1;
    b1.family = Family::WCAR_B1;
    b1.y = 0.5;
    b1.x1 = 0.25;
    b1.x2 = 0.3;
    b1.phi1 = 1.0;
    b1.phi2 = 2.0;
    ParamPoint cb1 = canonical_params(b1);
    CHECK(cb1.x1 == doctest::Approx(0.25));
    CHECK(cb1.x2 == 0.0);
    CHECK(cb1.phi1 == doctest::Approx(1.0));
    CHECK(cb1.phi2 == 0.0);

    ParamPoint z1;
    z1.family = Family::WCARZ_1;
    z1.x1 = 0.2;
    z1.x2 = 0.0;
    z1.phi1 = 1.0;
    z1.phi2 = 5.0;
    ParamPoint cz = canonical_params(z1);
    CHECK(cz.x1 == doctest::Approx(0.2));
    CHECK(cz.x2 == 0.0);
    CHECK(cz.phi1 == doctest::Approx(1.0));
    CHECK(cz.phi2 == 0.0);
}

TEST_CASE("canonical_params is idempotent") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto angle = [&] { return 2 * pi * u01(rng) * 0.999; };
    for (int trial = 0; trial < 50; ++trial) {
        ParamPoint p;
        switch (trial % 5) {
            case 0:
                p.family = Family::DISK2;
                p.x = trial % 10 == 0 ? 0.0 : 0.5 * u01(rng);
                p.phi = angle();
                break;
            case 1:
                p.family = Family::WCAR_B21;
                p.y = 0.4;
                p.x1 = 0.3 * u01(rng);
                p.x2 = 0.5 * u01(rng);
                p.phi1 = angle();
                p.phi2 = angle();
                break;
            case 2:
                p.family = Family::WCARZ_3;
                p.phi1 = angle();
                p.phi2 = angle();
                break;
            case 3:
                p.family = Family::GLOBAL;
                p.r1 = u01(rng);
                p.x1 = trial % 2 ? 0.5 : 0.5 * u01(rng);
                p.x2 = 0.5 * u01(rng);
                p.phi = angle();
                p.phi1 = angle();
                p.phi2 = angle();
                break;
            case 4:
                p.family = Family::WCAR_A;
                p.y = std::exp(im * angle());
                p.x1 = 0.0;
                break;
        }
        ParamPoint once = canonical_params(p);
        ParamPoint twice = canonical_params(once);
        CHECK(approx_equal(once, twice, 1e-9));
    }
}

TEST_CASE("norm bound across sampled families") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto angle = [&] { return 2 * pi * u01(rng) * 0.999; };
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Representation> reps = {
            disk_rep(0.5 * u01(rng), angle()),
            disk_char(angle()),
            wtcar_rep(2, 0.3 + 0.4 * u01(rng), 0.5 * u01(rng), angle()),
            wcar_rep(0.5, 0.25 * u01(rng), 0.5 * u01(rng), angle(), angle()),
            wcar_zero_rep(0.5 * u01(rng), 0.5 * u01(rng), angle(), angle()),
            global_rep(u01(rng), 0.5 * u01(rng), 0.5 * u01(rng), angle(), angle(), angle()),
        };
        for (const auto& rep : reps) {
            for (const auto& g : rep.generators) CHECK(op_norm(g) <= 1.0 + 1e-12);
            CHECK(residual(rep.presentation, rep.generators) <= 1e-10);
        }
    }
}
