#include "planargen/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace planargen {

Series2::Series2(int nu, int nv)
    : nu_(nu), nv_(nv), c_(static_cast<std::size_t>((nu + 1) * (nv + 1)), 0.0) {
    if (nu < 0 || nv < 0)
        throw std::invalid_argument("Series2: negative order");
}

double Series2::egf(int i, int j) const {
    double f = 1.0;
    for (int k = 2; k <= i; ++k)
        f *= k;
    return at(i, j) * f;
}

Series2 Series2::constant(int nu, int nv, double c) {
    Series2 s(nu, nv);
    s.at(0, 0) = c;
    return s;
}

Series2 Series2::u_var(int nu, int nv) {
    Series2 s(nu, nv);
    if (nu >= 1)
        s.at(1, 0) = 1.0;
    return s;
}

Series2 Series2::v_var(int nu, int nv) {
    Series2 s(nu, nv);
    if (nv >= 1)
        s.at(0, 1) = 1.0;
    return s;
}

Series2& Series2::operator+=(const Series2& o) {
    for (int i = 0; i <= nu_; ++i)
        for (int j = 0; j <= nv_; ++j)
            at(i, j) += o.at(i, j);
    return *this;
}

Series2& Series2::operator-=(const Series2& o) {
    for (int i = 0; i <= nu_; ++i)
        for (int j = 0; j <= nv_; ++j)
            at(i, j) -= o.at(i, j);
    return *this;
}

Series2& Series2::operator*=(double s) {
    for (double& c : c_)
        c *= s;
    return *this;
}

Series2 operator*(const Series2& a, const Series2& b) {
    int nu = std::min(a.nu_, b.nu_), nv = std::min(a.nv_, b.nv_);
    Series2 r(nu, nv);
    for (int i1 = 0; i1 <= nu; ++i1)
        for (int j1 = 0; j1 <= nv; ++j1) {
            double x = a.at(i1, j1);
            if (x == 0.0)
                continue;
            for (int i2 = 0; i1 + i2 <= nu; ++i2)
                for (int j2 = 0; j1 + j2 <= nv; ++j2)
                    r.at(i1 + i2, j1 + j2) += x * b.at(i2, j2);
        }
    return r;
}

Series2 Series2::shift_down_v() const {
    Series2 r(nu_, std::max(nv_ - 1, 0));
    for (int i = 0; i <= nu_; ++i) {
        if (at(i, 0) != 0.0)
            throw std::invalid_argument("shift_down_v: nonzero v^0 coefficient");
        for (int j = 1; j <= nv_; ++j)
            r.at(i, j - 1) = at(i, j);
    }
    return r;
}

Series2 Series2::diff_u() const {
    Series2 r(nu_, nv_);
    for (int i = 1; i <= nu_; ++i)
        for (int j = 0; j <= nv_; ++j)
            r.at(i - 1, j) = i * at(i, j);
    return r;
}

Series2 Series2::diff_v() const {
    Series2 r(nu_, nv_);
    for (int i = 0; i <= nu_; ++i)
        for (int j = 1; j <= nv_; ++j)
            r.at(i, j - 1) = j * at(i, j);
    return r;
}

Series2 Series2::integrate_u() const {
    Series2 r(nu_, nv_);
    for (int i = 0; i < nu_; ++i)
        for (int j = 0; j <= nv_; ++j)
            r.at(i + 1, j) = at(i, j) / (i + 1);
    return r;
}

Series2 Series2::integrate_v() const {
    Series2 r(nu_, nv_);
    for (int i = 0; i <= nu_; ++i)
        for (int j = 0; j < nv_; ++j)
            r.at(i, j + 1) = at(i, j) / (j + 1);
    return r;
}

Series2 Series2::truncated(int nu, int nv) const {
    Series2 r(nu, nv);
    for (int i = 0; i <= nu; ++i)
        for (int j = 0; j <= nv; ++j)
            r.at(i, j) = at(i, j);
    return r;
}

double Series2::max_abs_diff(const Series2& o) const {
    double d = 0.0;
    for (int i = 0; i <= std::max(nu_, o.nu_); ++i)
        for (int j = 0; j <= std::max(nv_, o.nv_); ++j)
            d = std::max(d, std::abs(at(i, j) - o.at(i, j)));
    return d;
}

namespace {

void require_u_valuation(const Series2& a, const char* who) {
    for (int j = 0; j <= a.nv(); ++j)
        if (a.at(0, j) != 0.0)
            throw std::invalid_argument(std::string(who) + ": argument has u^0 terms");
}

}  // namespace

Series2 exp_series(const Series2& a) {
    require_u_valuation(a, "exp_series");
    Series2 r = Series2::constant(a.nu(), a.nv(), 1.0);
    Series2 term = r;
    for (int k = 1; k <= a.nu(); ++k) {
        term = term * a * (1.0 / k);
        r += term;
    }
    return r;
}

Series2 inv_one_plus(const Series2& a) {
    require_u_valuation(a, "inv_one_plus");
    Series2 r = Series2::constant(a.nu(), a.nv(), 1.0);
    Series2 term = r;
    for (int k = 1; k <= a.nu(); ++k) {
        term = term * a * -1.0;
        r += term;
    }
    return r;
}

Series2 compose_v(const Series2& f, const Series2& g) {
    for (int i = 0; i <= g.nu(); ++i)
        if (g.at(i, 0) != 0.0)
            throw std::invalid_argument("compose_v: inner series has v^0 terms");
    int nu = std::min(f.nu(), g.nu()), nv = g.nv();
    Series2 r(nu, nv);
    Series2 power = Series2::constant(nu, nv, 1.0);
    for (int j = 0; j <= std::min(f.nv(), nv); ++j) {
        Series2 fj(nu, nv);
        for (int i = 0; i <= nu; ++i)
            fj.at(i, 0) = f.at(i, j);
        r += fj * power;
        power = power * g;
    }
    return r;
}

Series2 compose_u(const Series2& f, const Series2& g) {
    require_u_valuation(g, "compose_u");
    int nu = g.nu(), nv = std::min(f.nv(), g.nv());
    Series2 r(nu, nv);
    Series2 power = Series2::constant(nu, nv, 1.0);
    for (int i = 0; i <= std::min(f.nu(), nu); ++i) {
        Series2 fi(nu, nv);
        for (int j = 0; j <= nv; ++j)
            fi.at(0, j) = f.at(i, j);
        r += fi * power;
        power = power * g;
    }
    return r;
}

SeriesBundle expand_series(int n, int m) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("expand_series: orders must be positive");
    SeriesBundle s;
    // trees and 3-connected maps in (z, w); two spare w-orders for the division by w
    int mw = m + 2;
    Series2 z = Series2::u_var(n, mw), w = Series2::v_var(n, mw);
    Series2 a(n, mw), b(n, mw);
    for (int it = 0; it <= n + 1; ++it) {
        Series2 wb = w + b;
        a = z * wb * wb;
        Series2 wa = w + a;
        b = wa * wa;
    }
    s.R_black = a.truncated(n, m);
    s.R_white = b.truncated(n, m);
    Series2 w2 = w * w;
    Series2 a_hat = a - z * w2 * w2;
    Series2 a_as = a - z * w2;
    Series2 b_as = 2.0 * w * a_hat + a * a;
    s.K_under = (a_as + b_as).truncated(n, m);

    Series2 q = (a + b).shift_down_v();  // (a + b)/w
    Series2 bw = b.shift_down_v();       // b/w
    // 1/(1+q)^3 with q of v-valuation >= 1: geometric series in q
    int nv1 = mw - 1;
    Series2 qq = q.truncated(n, nv1);
    Series2 inv = Series2::constant(n, nv1, 1.0), term = inv;
    for (int k = 1; k <= nv1; ++k) {
        term = term * qq * -1.0;
        inv += term;
    }
    Series2 inv3 = inv * inv * inv;
    Series2 one1 = Series2::constant(n, nv1, 1.0);
    Series2 bw1 = bw.truncated(n, nv1);
    Series2 last = bw1 * (one1 + bw1) * (one1 + bw1) * inv3;  // b (w+b)^2 / (w+a+b)^3
    Series2 zw = (z * w).truncated(n, mw);
    Series2 first = w * inv_one_plus(zw);
    Series2 second(n, mw);
    for (int j = 1; j <= mw; ++j)
        second.at(0, j) = (j % 2 == 1) ? 1.0 : -1.0;  // w/(1+w)
    Series2 g3 = first + second - w;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= nv1; ++j)
            g3.at(i, j) -= last.at(i, j);
    s.G3_arrow = (0.5 * g3).truncated(n, m);

    // networks in (z, y)
    Series2 zn = Series2::u_var(n, m), y = Series2::v_var(n, m);
    Series2 onen = Series2::constant(n, m, 1.0);
    Series2 g3z = s.G3_arrow.diff_u();
    Series2 g3w = s.G3_arrow.diff_v();
    Series2 D(n, m), S(n, m), H(n, m), P(n, m);
    for (int it = 0; it <= n + m + 2; ++it) {
        S = zn * D * D * inv_one_plus(zn * D);
        H = compose_v(s.G3_arrow, D);
        Series2 e = exp_series(S + H);
        D = (onen + y) * e - onen;
    }
    Series2 e = exp_series(S + H);
    P = (onen + y) * e - (onen + y) - (S + H);
    s.D = D;
    s.S = S;
    s.P = P;
    s.H = H;

    // derived network system iterated as written
    Series2 hz = compose_v(g3z, D), hw = compose_v(g3w, D);
    Series2 yPH = y + P + H;
    Series2 Dp(n, m), Sp(n, m), Pp(n, m), Hp(n, m);
    for (int it = 0; it <= 2 * (n + m + 2); ++it) {
        Hp = hz + Dp * hw;
        Pp = (Sp + Hp) * (y * e + (e - onen));
        Sp = (Pp + Hp) * zn * D + yPH * D + yPH * zn * Dp;
        Dp = Sp + Pp + Hp;
    }
    s.D_prime = Dp;

    // 2-connected, connected and planar in (x, y)
    // (1+D)/(1+y) by the geometric series in y
    Series2 inv1y(n, m);
    for (int j = 0; j <= m; ++j)
        inv1y.at(0, j) = (j % 2 == 0) ? 1.0 : -1.0;
    Series2 ratio = (onen + D) * inv1y;
    s.G2 = 0.5 * zn * zn * ratio.integrate_v();
    s.G2_prime = s.G2.diff_u();
    Series2 F = onen;
    for (int it = 0; it <= n + 1; ++it)
        F = exp_series(compose_u(s.G2_prime, zn * F));
    s.G1_prime = F;
    s.G1 = F.integrate_u();
    s.G = exp_series(s.G1);
    s.G3 = (0.5 * zn * zn * s.G3_arrow.truncated(n, m)).integrate_v();
    return s;
}

}  // namespace planargen
