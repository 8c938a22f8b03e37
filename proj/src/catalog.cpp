#include "carwb/catalog.hpp"

#include <cmath>
#include <numbers>

namespace carwb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBoundaryTol = 1e-12;  // case-dispatch tolerance on defining equalities

const Complex kI{0.0, 1.0};

Mat m2(double x, double phi) {
    Mat m(2, 2);
    m << 0.0, std::exp(kI * phi) * std::sqrt(x), std::sqrt(1.0 - x), 0.0;
    return m;
}

Mat diag2(Complex a, Complex b) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Mat e21() {
    Mat m = Mat::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

// The off-diagonal factor of the y-term of the 4-dim families.
Mat kmat(double x1, double phi1) {
    Mat m(2, 2);
    m << 0.0, std::sqrt(1.0 - x1), -std::exp(-kI * phi1) * std::sqrt(x1), 0.0;
    return m;
}

void check_range(double v, double lo, double hi, const char* what) {
    if (!(v >= lo - 1e-12 && v <= hi + 1e-12))
        throw ParamOutOfRange(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
}

void check_angle(double phi, const char* what) {
    if (!(phi >= 0.0 && phi < kTwoPi))
        throw ParamOutOfRange(std::string(what) + " must lie in [0, 2pi)");
}

bool near(double a, double b) { return std::abs(a - b) <= kBoundaryTol; }

}  // namespace

double wrap_angle(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::DISK2: return "DISK2";
        case Family::DISK1: return "DISK1";
        case Family::WTCAR2d: return "WTCAR2d";
        case Family::WTCAR1d: return "WTCAR1d";
        case Family::WCAR_A: return "WCAR_A";
        case Family::WCAR_B1: return "WCAR_B1";
        case Family::WCAR_B21: return "WCAR_B21";
        case Family::WCAR_B22: return "WCAR_B22";
        case Family::WCARZ_1: return "WCARZ_1";
        case Family::WCARZ_2A: return "WCARZ_2A";
        case Family::WCARZ_2B: return "WCARZ_2B";
        case Family::WCARZ_3: return "WCARZ_3";
        case Family::GLOBAL: return "GLOBAL";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::DISK2, Family::DISK1, Family::WTCAR2d, Family::WTCAR1d,
                     Family::WCAR_A, Family::WCAR_B1, Family::WCAR_B21, Family::WCAR_B22,
                     Family::WCARZ_1, Family::WCARZ_2A, Family::WCARZ_2B, Family::WCARZ_3,
                     Family::GLOBAL})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

namespace {

bool angle_eq(double a, double b, double tol) {
    double d = std::abs(wrap_angle(a) - wrap_angle(b));
    return d <= tol || d >= kTwoPi - tol;
}

}  // namespace

bool approx_equal(const ParamPoint& p, const ParamPoint& q, double tol) {
    if (p.family != q.family || p.d != q.d) return false;
    return std::abs(p.x - q.x) <= tol && std::abs(p.x1 - q.x1) <= tol &&
           std::abs(p.x2 - q.x2) <= tol && std::abs(p.r1 - q.r1) <= tol &&
           std::abs(p.mu - q.mu) <= tol && std::abs(p.y - q.y) <= tol &&
           angle_eq(p.phi, q.phi, tol) && angle_eq(p.phi1, q.phi1, tol) &&
           angle_eq(p.phi2, q.phi2, tol);
}

Representation disk_rep(double x, double phi) {
    check_range(x, 0.0, 0.5, "x");
    check_angle(phi, "phi");
    Representation rep;
    rep.generators = {m2(x, phi)};
    rep.presentation = preset(PresetName::DISK_NORMALIZED);
    ParamPoint p;
    p.family = Family::DISK2;
    p.x = x;
    p.phi = phi;
    rep.source = p;
    return rep;
}

Representation disk_char(double phi) {
    phi = wrap_angle(phi);
    Representation rep;
    Mat a(1, 1);
    a(0, 0) = std::exp(kI * phi) / std::sqrt(2.0);
    rep.generators = {a};
    rep.presentation = preset(PresetName::DISK_NORMALIZED);
    ParamPoint p;
    p.family = Family::DISK1;
    p.phi = phi;
    rep.source = p;
    return rep;
}

Mat v_matrix(double phi) {
    Mat v(2, 2);
    Complex h = std::exp(kI * (phi / 2.0));
    v << h, -h, 1.0, 1.0;
    return v / std::sqrt(2.0);
}

Representation wtcar_rep(int d, double mu, double x, double phi) {
    if (d < 1) throw ParamOutOfRange("d must be a positive integer");
    if (!(mu > 0.0 && mu < 1.0)) throw ParamOutOfRange("mu must lie in (0, 1)");
    check_range(x, 0.0, 0.5, "x");
    check_angle(phi, "phi");

    const Mat dmu = diag2(1.0, -mu);
    const Mat id2 = identity(2);
    Representation rep;
    for (int i = 1; i <= d; ++i) {
        Mat a(1, 1);
        a(0, 0) = 1.0;
        for (int j = 1; j < i; ++j) a = kron(a, dmu);
        a = kron(a, i < d ? e21() : m2(x, phi));
        for (int j = i + 1; j <= d; ++j) a = kron(a, id2);
        rep.generators.push_back(std::move(a));
    }
    rep.presentation = preset(PresetName::WTCAR, {.d = d, .mu = mu});
    ParamPoint p;
    p.family = Family::WTCAR2d;
    p.d = d;
    p.mu = mu;
    p.x = x;
    p.phi = phi;
    rep.source = p;
    return rep;
}

Representation wtcar_char(int d, double mu, double phi) {
    if (d < 1) throw ParamOutOfRange("d must be a positive integer");
    if (!(mu > 0.0 && mu < 1.0)) throw ParamOutOfRange("mu must lie in (0, 1)");
    check_angle(phi, "phi");

    const Mat dmu = diag2(1.0, -mu);
    const Mat id2 = identity(2);
    Representation rep;
    for (int i = 1; i < d; ++i) {
        Mat a(1, 1);
        a(0, 0) = 1.0;
        for (int j = 1; j < i; ++j) a = kron(a, dmu);
        a = kron(a, e21());
        for (int j = i + 1; j < d; ++j) a = kron(a, id2);
        rep.generators.push_back(std::move(a));
    }
    Mat ad(1, 1);
    ad(0, 0) = std::exp(kI * phi) / std::sqrt(2.0);
    for (int j = 1; j < d; ++j) ad = kron(ad, dmu);
    rep.generators.push_back(std::move(ad));

    rep.presentation = preset(PresetName::WTCAR, {.d = d, .mu = mu});
    ParamPoint p;
    p.family = Family::WTCAR1d;
    p.d = d;
    p.mu = mu;
    p.phi = phi;
    rep.source = p;
    return rep;
}

Representation wcar_rep(Complex y, double x1, double x2, double phi1, double phi2) {
    const double r = std::abs(y);
    if (r > 1.0 + 1e-12) throw ParamOutOfRange("|y| must not exceed 1");
    if (r <= 0.0) throw ParamOutOfRange("y must be nonzero (the y = 0 catalog is separate)");
    check_angle(phi1, "phi1");
    check_angle(phi2, "phi2");

    Representation rep;
    rep.presentation = preset(PresetName::WCAR_Y, {.d = 2, .y = y});
    ParamPoint p;
    p.y = y;
    p.x1 = x1;
    p.x2 = x2;
    p.phi1 = phi1;
    p.phi2 = phi2;

    if (near(r, 1.0)) {
        // a) 2-dim; remaining parameters are ignored
        Mat a1 = e21();
        Mat a2 = Mat::Zero(2, 2);
        a2(0, 1) = y;
        rep.generators = {a1, a2};
        p.family = Family::WCAR_A;
        p.x1 = p.x2 = p.phi1 = p.phi2 = 0.0;
        rep.source = p;
        return rep;
    }

    check_range(x1, 0.0, (1.0 - r) / 2.0, "x1");
    check_range(x2, 0.0, 0.5, "x2");

    if (near(x1, (1.0 - r) / 2.0)) {
        // b1) 2-dim; x2, phi2 are ignored
        const Complex u = y / r;
        Mat a1(2, 2), a2(2, 2);
        a1 << 0.0, std::exp(kI * phi1) * std::sqrt((1.0 - r) / 2.0),
            std::sqrt((1.0 + r) / 2.0), 0.0;
        a2 << 0.0, u * std::sqrt((1.0 + r) / 2.0),
            -std::exp(-kI * phi1) * u * std::sqrt((1.0 - r) / 2.0), 0.0;
        rep.generators = {a1, a2};
        p.family = Family::WCAR_B1;
        p.x1 = (1.0 - r) / 2.0;
        p.x2 = p.phi2 = 0.0;
        rep.source = p;
        return rep;
    }

    const double beta = std::sqrt(std::max(0.0, 1.0 - r * r / ((1.0 - 2.0 * x1) * (1.0 - 2.0 * x1))));
    const Complex c = y / (1.0 - 2.0 * x1);

    if (near(x2, 0.5)) {
        // b2.2) 2-dim
        Mat a1 = m2(x1, phi1);
        Mat a2(2, 2);
        Complex s = std::exp(kI * phi2) / std::sqrt(2.0) * beta;
        a2 << s, c * std::sqrt(1.0 - x1), -std::exp(-kI * phi1) * c * std::sqrt(x1), -s;
        rep.generators = {a1, a2};
        p.family = Family::WCAR_B22;
        p.x2 = 0.5;
        rep.source = p;
        return rep;
    }

    // b2.1) 4-dim
    Mat a1 = kron(m2(x1, phi1), identity(2));
    Mat a2 = beta * kron(diag2(1.0, -1.0), m2(x2, phi2)) + kron(c * kmat(x1, phi1), identity(2));
    rep.generators = {a1, a2};
    p.family = Family::WCAR_B21;
    rep.source = p;
    return rep;
}

Representation wcar_zero_rep(double x1, double x2, double phi1, double phi2) {
    check_range(x1, 0.0, 0.5, "x1");
    check_range(x2, 0.0, 0.5, "x2");
    check_angle(phi1, "phi1");
    check_angle(phi2, "phi2");

    Representation rep;
    rep.presentation = preset(PresetName::WCAR_Y, {.d = 2, .y = 0.0});
    ParamPoint p;
    p.x1 = x1;
    p.x2 = x2;
    p.phi1 = phi1;
    p.phi2 = phi2;

    const bool b1 = near(x1, 0.5);
    const bool b2 = near(x2, 0.5);
    if (!b1 && !b2) {
        // 1) 4-dim
        rep.generators = {kron(m2(x1, phi1), identity(2)), kron(diag2(1.0, -1.0), m2(x2, phi2))};
        p.family = Family::WCARZ_1;
    } else if (b1 && !b2) {
        // 2a) 2-dim
        rep.generators = {std::exp(kI * phi1) / std::sqrt(2.0) * diag2(1.0, -1.0), m2(x2, phi2)};
        p.family = Family::WCARZ_2A;
        p.x1 = 0.5;
    } else if (!b1 && b2) {
        // 2b) 2-dim
        rep.generators = {m2(x1, phi1), std::exp(kI * phi2) / std::sqrt(2.0) * diag2(1.0, -1.0)};
        p.family = Family::WCARZ_2B;
        p.x2 = 0.5;
    } else {
        // 3) 2-dim, phi1 modulo pi
        p.phi1 = std::fmod(phi1, std::numbers::pi);
        Mat a2(2, 2);
        a2 << 0.0, std::exp(kI * phi2), 1.0, 0.0;
        rep.generators = {std::exp(kI * p.phi1) / std::sqrt(2.0) * diag2(1.0, -1.0),
                          a2 / std::sqrt(2.0)};
        p.family = Family::WCARZ_3;
        p.x1 = p.x2 = 0.5;
    }
    rep.source = p;
    return rep;
}

Representation global_rep(double r1, double x1, double x2, double phi, double phi1,
                          double phi2) {
    check_range(r1, 0.0, 1.0, "r1");
    check_range(x1, 0.0, 0.5, "x1");
    check_range(x2, 0.0, 0.5, "x2");
    check_angle(phi, "phi");
    check_angle(phi1, "phi1");
    check_angle(phi2, "phi2");

    const double beta = std::sqrt(std::max(0.0, 1.0 - r1 * r1));
    Mat a1 = kron(m2(x1, phi1), identity(2));
    Mat a2 = beta * kron(diag2(1.0, -1.0), m2(x2, phi2)) +
             kron(r1 * std::exp(kI * phi) * kmat(x1, phi1), identity(2));

    Representation rep;
    rep.generators = {a1, a2};
    rep.presentation =
        preset(PresetName::WCAR_Y, {.d = 2, .y = r1 * (1.0 - 2.0 * x1) * std::exp(kI * phi)});
    ParamPoint p;
    p.family = Family::GLOBAL;
    p.r1 = r1;
    p.x1 = x1;
    p.x2 = x2;
    p.phi = phi;
    p.phi1 = phi1;
    p.phi2 = phi2;
    rep.source = p;
    return rep;
}

Lemma12Params lemma12_params(double r1, double x2, double phi, double phi1, double phi2) {
    if (!(r1 > 0.0 && r1 <= 1.0 + 1e-12)) throw ParamOutOfRange("r1 must lie in (0, 1]");
    check_range(x2, 0.0, 0.5, "x2");

    Lemma12Params out;
    out.z = std::exp(kI * phi2) * (1.0 - r1 * r1) * std::sqrt(x2 * (1.0 - x2)) -
            r1 * r1 * std::exp(kI * (2.0 * phi - phi1)) / 2.0;
    const double mod = std::abs(out.z);
    if (mod > 0.5 + 1e-9)
        throw InvalidModulus("lemma12_params: |z| exceeds 1/2; parameters out of range");
    const double disc = std::max(0.0, 1.0 - 4.0 * mod * mod);
    out.t = (1.0 - std::sqrt(disc)) / 2.0;
    out.psi = mod <= 1e-12 ? 0.0 : wrap_angle(std::arg(out.z));
    return out;
}

ParamPoint canonical_params(const ParamPoint& p) {
    ParamPoint q = p;
    q.phi = wrap_angle(q.phi);
    q.phi1 = wrap_angle(q.phi1);
    q.phi2 = wrap_angle(q.phi2);
    const double tol = kBoundaryTol;

    switch (p.family) {
        case Family::DISK2:
        case Family::WTCAR2d:
            check_range(q.x, 0.0, 0.5, "x");
            if (q.x <= tol) q.phi = 0.0;
            break;
        case Family::DISK1:
        case Family::WTCAR1d:
            break;
        case Family::WCAR_A:
            q.x1 = q.x2 = q.phi1 = q.phi2 = 0.0;
            break;
        case Family::WCAR_B1:
        case Family::WCAR_B21:
        case Family::WCAR_B22: {
            const double r = std::abs(q.y);
            if (!(r > 0.0 && r <= 1.0 + 1e-12)) throw ParamOutOfRange("|y| must lie in (0, 1]");
            if (p.family == Family::WCAR_B1) q.x1 = (1.0 - r) / 2.0;
            if (p.family == Family::WCAR_B22) q.x2 = 0.5;
            if (std::abs(q.x1 - (1.0 - r) / 2.0) <= tol) {
                q.x2 = 0.0;
                q.phi2 = 0.0;
            }
            if (q.x1 <= tol) q.phi1 = 0.0;
            if (q.x2 <= tol) q.phi2 = 0.0;
            break;
        }
        case Family::WCARZ_1:
        case Family::WCARZ_2A:
        case Family::WCARZ_2B:
        case Family::WCARZ_3:
            if (p.family == Family::WCARZ_2A || p.family == Family::WCARZ_3) q.x1 = 0.5;
            if (p.family == Family::WCARZ_2B || p.family == Family::WCARZ_3) q.x2 = 0.5;
            if (p.family == Family::WCARZ_3) q.phi1 = std::fmod(q.phi1, std::numbers::pi);
            if (q.x1 <= tol) q.phi1 = 0.0;
            if (q.x2 <= tol) q.phi2 = 0.0;
            break;
        case Family::GLOBAL: {
            check_range(q.r1, 0.0, 1.0, "r1");
            check_range(q.x1, 0.0, 0.5, "x1");
            check_range(q.x2, 0.0, 0.5, "x2");
            if (std::abs(q.x1 - 0.5) <= tol && q.r1 > tol) {
                // reduce the x1 = 1/2 slice to its r1 = 0 normal form
                Lemma12Params lp = lemma12_params(q.r1, q.x2, q.phi, q.phi1, q.phi2);
                q.r1 = 0.0;
                q.phi = 0.0;
                q.x2 = lp.t;
                q.phi2 = lp.psi;
            }
            if (q.r1 <= tol) q.phi = 0.0;
            if (std::abs(q.r1 - 1.0) <= tol) {
                q.x2 = 0.0;
                q.phi2 = 0.0;
            }
            if (q.x1 <= tol) q.phi1 = 0.0;
            if (q.x2 <= tol) q.phi2 = 0.0;
            break;
        }
    }
    return q;
}

Representation rep_for(const ParamPoint& p) {
    switch (p.family) {
        case Family::DISK2: return disk_rep(p.x, p.phi);
        case Family::DISK1: return disk_char(p.phi);
        case Family::WTCAR2d: return wtcar_rep(p.d, p.mu, p.x, p.phi);
        case Family::WTCAR1d: return wtcar_char(p.d, p.mu, p.phi);
        case Family::WCAR_A: return wcar_rep(p.y, 0.0, 0.0, 0.0, 0.0);
        case Family::WCAR_B1:
            return wcar_rep(p.y, (1.0 - std::abs(p.y)) / 2.0, p.x2, p.phi1, p.phi2);
        case Family::WCAR_B21: return wcar_rep(p.y, p.x1, p.x2, p.phi1, p.phi2);
        case Family::WCAR_B22: return wcar_rep(p.y, p.x1, 0.5, p.phi1, p.phi2);
        case Family::WCARZ_1: return wcar_zero_rep(p.x1, p.x2, p.phi1, p.phi2);
        case Family::WCARZ_2A: return wcar_zero_rep(0.5, p.x2, p.phi1, p.phi2);
        case Family::WCARZ_2B: return wcar_zero_rep(p.x1, 0.5, p.phi1, p.phi2);
        case Family::WCARZ_3: return wcar_zero_rep(0.5, 0.5, p.phi1, p.phi2);
        case Family::GLOBAL: return global_rep(p.r1, p.x1, p.x2, p.phi, p.phi1, p.phi2);
    }
    throw DomainError("rep_for: unknown family");
}

}  // namespace carwb
