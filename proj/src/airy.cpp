#include "bomol/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "bomol/errors.hpp"
#include "bomol/roots.hpp"

namespace bomol {

namespace {

constexpr double kAi0 = 0.355028053887817239260063186004;   // Ai(0)
constexpr double kAip0 = -0.258819403792806798405183560189; // Ai'(0)

constexpr double kSeriesLo = -2.5;
constexpr double kSeriesHi = 2.5;
constexpr double kAsym = 9.0;
constexpr double kAnchorStep = 0.5;

AiryPair maclaurin(long double x) {
    // Ai = Ai(0) f + Ai'(0) g with f, g the even/odd-in-x^3 solutions of y'' = x y.
    const long double x3 = x * x * x;
    long double f = 1.0L, g = x, fp = 0.0L, gp = 1.0L;
    long double tf = 1.0L, tg = x, tfp = x * x / 2.0L, tgp = 1.0L;
    fp = tfp;
    for (int k = 1; k < 60; ++k) {
        tf *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
        tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
        if (k >= 2) {
            tfp *= x3 / ((3.0L * k - 3.0L) * (3.0L * k - 1.0L));
            fp += tfp;
        }
        tgp *= x3 / ((3.0L * k - 2.0L) * (3.0L * k));
        f += tf;
        g += tg;
        gp += tgp;
        if (std::fabs(tf) + std::fabs(tg) + std::fabs(tgp) + std::fabs(tfp) < 1e-22L) break;
    }
    return {static_cast<double>(kAi0 * f + kAip0 * g), static_cast<double>(kAi0 * fp + kAip0 * gp)};
}

// u_k, v_k of the standard Airy asymptotic series.
struct AsymCoeffs {
    std::array<long double, 40> u{}, v{};
    AsymCoeffs() {
        u[0] = v[0] = 1.0L;
        for (int k = 1; k < 40; ++k) {
            u[k] = u[k - 1] * (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) /
                   ((2.0L * k - 1.0L) * 216.0L * k);
            v[k] = -u[k] * (6.0L * k + 1.0L) / (6.0L * k - 1.0L);
        }
    }
};

const AsymCoeffs& coeffs() {
    static const AsymCoeffs c;
    return c;
}

AiryPair asym_positive(long double x) {
    const auto& c = coeffs();
    const long double zeta = 2.0L / 3.0L * x * std::sqrt(x);
    long double su = 0.0L, sv = 0.0L, p = 1.0L;
    long double last = 1e300L;
    for (int k = 0; k < 40; ++k) {
        const long double tu = c.u[k] * p;
        if (std::fabs(tu) > last) break;
        last = std::fabs(tu);
        su += tu;
        sv += c.v[k] * p;
        p *= -1.0L / zeta;
    }
    const long double pref = std::exp(-zeta) / (2.0L * std::sqrt(std::numbers::pi_v<long double>));
    const long double q = std::sqrt(std::sqrt(x));
    return {static_cast<double>(pref / q * su), static_cast<double>(-pref * q * sv)};
}

AiryPair asym_negative(long double x) {
    const auto& c = coeffs();
    const long double y = -x;
    const long double zeta = 2.0L / 3.0L * y * std::sqrt(y);
    long double pu = 0.0L, qu = 0.0L, pv = 0.0L, qv = 0.0L;
    long double p = 1.0L;
    long double last = 1e300L;
    for (int k = 0; k < 40; ++k) {
        const long double tu = c.u[k] * p;
        if (std::fabs(tu) > last) break;
        last = std::fabs(tu);
        const long double sgn = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;
        if (k % 2 == 0) {
            pu += sgn * tu;
            pv += sgn * c.v[k] * p;
        } else {
            qu += sgn * tu;
            qv += sgn * c.v[k] * p;
        }
        p /= zeta;
    }
    const long double th = zeta - std::numbers::pi_v<long double> / 4.0L;
    const long double cs = std::cos(th), sn = std::sin(th);
    const long double q = std::sqrt(std::sqrt(y));
    const long double rp = 1.0L / std::sqrt(std::numbers::pi_v<long double>);
    return {static_cast<double>(rp / q * (cs * pu + sn * qu)),
            static_cast<double>(rp * q * (sn * pv - cs * qv))};
}

// Taylor step for y'' = x y from x0 by h.
void taylor_step(long double x0, long double y, long double yp, long double h, long double& y1,
                 long double& yp1) {
    if (h == 0.0L) {
        y1 = y;
        yp1 = yp;
        return;
    }
    long double cm1 = 0.0L, c0 = y, c1 = yp;
    long double hk = 1.0L;
    long double sum = c0, dsum = c1;
    // c_{k+2} (k+2)(k+1) = x0 c_k + c_{k-1}
    long double ck_2 = cm1, ck_1 = c0, ck = c1;  // c_{k-2}, c_{k-1}, c_k with k = 1
    hk = h;
    sum += c1 * h;
    for (int k = 2; k < 80; ++k) {
        const long double cn = (x0 * ck_1 + ck_2) / (static_cast<long double>(k) * (k - 1));
        dsum += k * cn * hk;  // hk = h^{k-1}
        hk *= h;
        sum += cn * hk;
        ck_2 = ck_1;
        ck_1 = ck;
        ck = cn;
        if (k > 10 && std::fabs(cn * hk) < 1e-24L * (std::fabs(sum) + 1e-300L) &&
            std::fabs(k * cn * hk / h) < 1e-24L * (std::fabs(dsum) + 1e-300L))
            break;
    }
    y1 = sum;
    yp1 = dsum;
}

struct AnchorTable {
    // Anchors at kSeriesHi + j*step .. kAsym (positive side) and kSeriesLo - j*step .. -kAsym.
    static constexpr int kCount = static_cast<int>((kAsym - kSeriesHi) / kAnchorStep) + 1;
    std::array<long double, kCount> pos_y{}, pos_yp{}, neg_y{}, neg_yp{};
    AnchorTable() {
        // Backward from the asymptotic region: Ai is dominant in that direction.
        AiryPair a = asym_positive(kAsym);
        long double y = a.ai, yp = a.aip;
        pos_y[kCount - 1] = y;
        pos_yp[kCount - 1] = yp;
        for (int j = kCount - 1; j > 0; --j) {
            long double x0 = kSeriesHi + j * kAnchorStep;
            long double y1 = 0, yp1 = 0, ym = y, ypm = yp;
            // two half steps keep the series short
            taylor_step(x0, ym, ypm, -kAnchorStep / 2, y1, yp1);
            taylor_step(x0 - kAnchorStep / 2, y1, yp1, -kAnchorStep / 2, ym, ypm);
            y = ym;
            yp = ypm;
            pos_y[j - 1] = y;
            pos_yp[j - 1] = yp;
        }
        // Forward into the oscillatory region from the series.
        a = maclaurin(kSeriesLo);
        y = a.ai;
        yp = a.aip;
        neg_y[0] = y;
        neg_yp[0] = yp;
        for (int j = 1; j < kCount; ++j) {
            long double x0 = kSeriesLo - (j - 1) * kAnchorStep;
            long double y1 = 0, yp1 = 0, ym = 0, ypm = 0;
            taylor_step(x0, y, yp, -kAnchorStep / 2, y1, yp1);
            taylor_step(x0 - kAnchorStep / 2, y1, yp1, -kAnchorStep / 2, ym, ypm);
            y = ym;
            yp = ypm;
            neg_y[j] = y;
            neg_yp[j] = yp;
        }
    }
};

const AnchorTable& anchors() {
    static const AnchorTable t;
    return t;
}

AiryPair from_anchor(long double x0, long double y, long double yp, long double x) {
    long double y1 = 0, yp1 = 0;
    taylor_step(x0, y, yp, x - x0, y1, yp1);
    return {static_cast<double>(y1), static_cast<double>(yp1)};
}

} // namespace

AiryPair airy(double x) {
    if (std::isnan(x)) return {x, x};
    if (x >= kAsym) {
        if (x > 105.0) return {0.0, -0.0};
        return asym_positive(x);
    }
    if (x <= -kAsym) return asym_negative(x);
    if (x >= kSeriesLo && x <= kSeriesHi) return maclaurin(x);
    const auto& t = anchors();
    if (x > 0.0) {
        const int j = static_cast<int>(std::lround((x - kSeriesHi) / kAnchorStep));
        return from_anchor(kSeriesHi + j * kAnchorStep, t.pos_y[j], t.pos_yp[j], x);
    }
    const int j = static_cast<int>(std::lround((kSeriesLo - x) / kAnchorStep));
    return from_anchor(kSeriesLo - j * kAnchorStep, t.neg_y[j], t.neg_yp[j], x);
}

double airy_ai(double x) { return airy(x).ai; }
double airy_ai_prime(double x) { return airy(x).aip; }

namespace {

double zero_near(double guess, bool prime) {
    auto f = [prime](double x) { return prime ? airy_ai_prime(x) : airy_ai(x); };
    double lo = guess - 0.3, hi = guess + 0.3;
    RootResult r = find_root_bracketed(f, lo, hi, 1e-300);
    double x = r.root;
    // Newton polish; Ai'' = x Ai.
    for (int i = 0; i < 3; ++i) {
        const AiryPair p = airy(x);
        const double step = prime ? p.aip / (x * p.ai) : p.ai / p.aip;
        if (!std::isfinite(step)) break;
        x -= step;
        if (std::fabs(step) < 1e-17 * std::fabs(x)) break;
    }
    return x;
}

} // namespace

double airy_zero(int k) {
    if (k < 1) throw DomainError("airy_zero: k must be >= 1");
    const double t = 3.0 * std::numbers::pi * (4.0 * k - 1.0) / 8.0;
    const double t2 = 1.0 / (t * t);
    const double guess = -std::pow(t, 2.0 / 3.0) * (1.0 + 5.0 / 48.0 * t2 - 5.0 / 36.0 * t2 * t2);
    return zero_near(guess, false);
}

double airy_prime_zero(int k) {
    if (k < 1) throw DomainError("airy_prime_zero: k must be >= 1");
    if (k == 1) return zero_near(-1.0188, true);
    const double t = 3.0 * std::numbers::pi * (4.0 * k - 3.0) / 8.0;
    const double t2 = 1.0 / (t * t);
    const double guess = -std::pow(t, 2.0 / 3.0) * (1.0 - 7.0 / 48.0 * t2 + 35.0 / 288.0 * t2 * t2);
    return zero_near(guess, true);
}

} // namespace bomol
