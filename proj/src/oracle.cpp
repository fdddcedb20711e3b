#include "planargen/oracle.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>

#include "planargen/jet.hpp"

namespace planargen {

namespace {

using boost::math::quadrature::tanh_sinh;

template <class R>
R tolerance_for(int digits) {
    using std::pow;
    R t = pow(R(10), -digits);
    R floor = 64 * std::numeric_limits<R>::epsilon();
    return t < floor ? floor : t;
}

// ---------------------------------------------------------------- trees

// minimal root of a = z (w + (w + a)^2)^2, Newton from the left
template <class R>
R tree_root(const R& z, const R& w, const R& tol, R a = R(0)) {
    for (int it = 0; it < 4000; ++it) {
        R s = w + a;
        R t = w + s * s;
        R g = z * t * t - a;
        if (g <= 0)
            return a;
        R gp = 4 * z * t * s - 1;
        if (gp >= 0)
            throw OutsideDomain("tree system: no solution at this (z, w)");
        R step = -g / gp;
        a += step;
        if (step <= tol * a)
            return a;
    }
    throw NumericError("tree system: Newton iteration did not converge");
}

// two Newton steps in T-arithmetic from the real root give exact
// first and second derivatives
template <class T, class R>
T tree_lift(const T& z, const T& w, const R& a0) {
    T a(a0);
    for (int k = 0; k < 2; ++k) {
        T s = w + a;
        T t = w + s * s;
        T g = z * t * t - a;
        T gp = T(4) * z * t * s - T(1);
        a = a - g / gp;
    }
    return a;
}

template <class T>
struct TreeExpr {
    T a, b, a_hat, b_hat, a_as, b_as, k_under;
};

template <class T>
TreeExpr<T> tree_expr(const T& z, const T& w, const T& a) {
    TreeExpr<T> e;
    e.a = a;
    e.b = (w + a) * (w + a);
    T w2 = w * w;
    e.a_hat = a - z * w2 * w2;
    e.a_as = a - z * w2;
    e.b_hat = w + T(2) * w * a + a * a;
    e.b_as = T(2) * w * e.a_hat + a * a;
    e.k_under = e.a_as + e.b_as;
    return e;
}

// edge-rooted 3-connected planar graphs, rational in the tree series
template <class T>
T g3_expr(const T& z, const T& w, const T& a, const T& b) {
    using R = std::decay_t<decltype(value_of(w))>;
    if (value_of(w) < R(1e-30)) {
        T w2 = w * w;
        return z * z * w2 * w2 * w / T(2);
    }
    T s = w + a + b;
    T wb = w + b;
    return (w / (T(1) + z * w) + w / (T(1) + w) - w - b * wb * wb / (s * s * s)) / T(2);
}

// ---------------------------------------------------------------- networks

template <class T>
struct NetExpr {
    T D, S, P, H, phi;
};

template <class T, class R>
NetExpr<T> net_expr(const T& z, const T& y, const T& D, const R& a0) {
    NetExpr<T> e;
    T a = tree_lift(z, D, a0);
    T b = (D + a) * (D + a);
    e.D = D;
    e.H = g3_expr(z, D, a, b);
    e.S = z * D * D / (T(1) + z * D);
    T u = e.S + e.H;
    T eu = exp(u);
    e.phi = (T(1) + y) * eu - T(1) - D;
    e.P = (T(1) + y) * eu - (T(1) + y) - u;
    return e;
}

template <class R>
struct NetPoint {
    R D{0}, a{0};
};

// minimal root of 1 + D = (1 + y) exp(S(D) + H(D))
template <class R>
NetPoint<R> network_root(const R& z, const R& y, const R& tol) {
    NetPoint<R> p;
    for (int it = 0; it < 4000; ++it) {
        p.a = tree_root(z, p.D, tol, p.a);
        auto e = net_expr(Jet<R>(z), Jet<R>(y), Jet<R>::var_a(p.D), p.a);
        R phi = e.phi.v;
        R dphi = e.phi.a;
        if (phi <= 0)
            return p;
        if (dphi >= 0)
            throw OutsideDomain("network equation: no solution at this (z, y)");
        R step = -phi / dphi;
        p.D += step;
        if (step <= tol * p.D) {
            p.a = tree_root(z, p.D, tol, p.a);
            return p;
        }
    }
    throw NumericError("network equation: Newton iteration did not converge");
}

// network series as jets in (z, y)
template <class R>
NetExpr<Jet<R>> network_jet(const R& z, const R& y, const NetPoint<R>& p) {
    using J = Jet<R>;
    J zj = J::var_a(z), yj = J::var_b(y);
    R dphi = net_expr(J(z), J(y), J::var_a(p.D), p.a).phi.a;
    J D(p.D);
    for (int k = 0; k < 3; ++k) {
        auto e = net_expr(zj, yj, D, p.a);
        D = D - e.phi / J(dphi);
    }
    return net_expr(zj, yj, D, p.a);
}

template <class R>
tanh_sinh<R>& integrator() {
    static tanh_sinh<R> ts(15);
    return ts;
}

template <class R, class F>
R integrate(F&& f, const R& lo, const R& hi, const R& tol) {
    if (hi <= lo)
        return R(0);
    R err = 0, l1 = 0;
    std::size_t levels = 0;
    R sqrt_tol = tol;
    R result = integrator<R>().integrate(f, lo, hi, sqrt_tol, &err, &l1, &levels);
    using std::abs;
    R scale = l1 > 0 ? l1 : R(1);
    if (err > 1e6 * tol * scale)
        throw NumericError("quadrature failed to reach tolerance");
    return result;
}

template <class R>
struct G2Point {
    R G2{0}, G2p{0}, G2pp{0};
};

// G2 = int z^2 (1+D)/(2(1+t)), G2' and G2'' by z-differentiation under the integral
template <class R>
G2Point<R> g2_integrals(const R& z, const R& y, const R& tol, bool second = true) {
    std::map<R, std::array<R, 3>> cache;
    auto net = [&](const R& t) -> const std::array<R, 3>& {
        auto it = cache.find(t);
        if (it != cache.end())
            return it->second;
        auto p = network_root(z, t, tol);
        auto e = network_jet(z, t, p);
        return cache.emplace(t, std::array<R, 3>{e.D.v, e.D.a, e.D.aa}).first->second;
    };
    G2Point<R> g;
    g.G2 = integrate<R>([&](R t) {
        auto& n = net(t);
        return z * z * (1 + n[0]) / (2 * (1 + t));
    }, R(0), y, tol);
    g.G2p = integrate<R>([&](R t) {
        auto& n = net(t);
        return (z * (1 + n[0]) + z * z * n[1] / 2) / (1 + t);
    }, R(0), y, tol);
    if (!second)
        return g;
    g.G2pp = integrate<R>([&](R t) {
        auto& n = net(t);
        return ((1 + n[0]) + 2 * z * n[1] + z * z * n[2] / 2) / (1 + t);
    }, R(0), y, tol);
    return g;
}

// ---------------------------------------------------------------- connected

template <class R>
struct ConnPoint {
    R z{0};
    G2Point<R> g;
};

// minimal root of z = x exp(G2'(z, y)), Newton from z0 (left of the root)
template <class R>
ConnPoint<R> connected_root(const R& x, const R& y, const R& tol, R z = R(0)) {
    using std::exp;
    for (int it = 0; it < 400; ++it) {
        network_root(z, y, tol);
        auto g = g2_integrals(z, y, tol);
        R e = exp(g.G2p);
        R psi = x * e - z;
        if (psi <= 0)
            return {z, g};
        R dpsi = x * e * g.G2pp - 1;
        if (dpsi >= 0)
            throw OutsideDomain("connected fixed point: beyond the singularity");
        R step = -psi / dpsi;
        z += step;
        if (step <= tol * z) {
            network_root(z, y, tol);
            return {z, g2_integrals(z, y, tol)};
        }
    }
    throw NumericError("connected fixed point: Newton iteration did not converge");
}

// largest z at which the network system is solvable at y
template <class R>
R network_radius(const R& y, const R& tol) {
    R lo = 0, hi = R(0.05);
    auto ok = [&](const R& z) {
        try {
            network_root(z, y, tol);
            return true;
        } catch (const OutsideDomain&) {
            return false;
        }
    };
    for (int k = 0; ok(hi); ++k) {
        if (k > 200)
            throw NumericError("network radius: bracket expansion failed");
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > tol * hi) {
        R mid = (lo + hi) / 2;
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

// bisection on x with the connected probe; slow near the singularity
template <class R>
R rho_bisect(const R& y, const R& tol) {
    R lo = 0, hi = R(0.04);
    R z_lo = 0;
    auto probe = [&](const R& x) {
        try {
            auto c = connected_root(x, y, tol, z_lo);
            z_lo = c.z;
            return true;
        } catch (const NumericError&) {
            // includes quadrature stalls against the network singularity
            return false;
        }
    };
    for (int k = 0; ; ++k) {
        if (k > 200)
            throw NumericError("rho_g: no divergence found while expanding the bracket");
        if (!probe(hi))
            break;
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > tol * hi) {
        R mid = (lo + hi) / 2;
        if (probe(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// the connected fixed point either reaches the network radius first
// (then x = R exp(-G2'(R))) or has a branch point below it
template <class R>
R rho_impl(const R& y, const R& tol) {
    using std::exp;
    R radius = network_radius(y, tol);
    R below = radius * (1 - R(1e-6));
    auto near = g2_integrals(below, y, tol);
    if (below * near.G2pp >= 1)
        return rho_bisect(y, tol);
    auto g = g2_integrals(radius, y, tol, false);
    return radius * exp(-g.G2p);
}

template <class R>
R mu_impl(const R& y, const R& tol) {
    using std::exp;
    using std::log;
    R h = R(1e-4);
    R up = rho_impl(y * exp(h), tol);
    R dn = rho_impl(y * exp(-h), tol);
    return -(log(up) - log(dn)) / (2 * h);
}

template <class F>
auto with_real(int digits, F&& f) {
    if (digits < 4 || digits > max_digits)
        throw ParameterError("digits must lie in [4, " + std::to_string(max_digits) + "]");
    if (digits <= 18)
        return f.template operator()<long double>();
    return f.template operator()<quad>();
}

template <class R>
R cast(const quad& v) { return static_cast<R>(v); }

template <class R>
quad lift(const R& v) { return quad(v); }

template <class R>
Partials partials(const Jet<R>& j) {
    return {lift(j.v), lift(j.a), lift(j.b)};
}

template <class R>
std::pair<R, R> unrooted_impl(const R& z, const R& w, const R& tol) {
    using J = Jet<R>;
    R K = integrate<R>([&](R t) {
        R a = tree_root(z, t, tol);
        return tree_expr(z, t, tree_lift(z, t, a)).k_under;
    }, R(0), w, tol);
    R Kz = integrate<R>([&](R t) {
        R a = tree_root(z, t, tol);
        J zj = J::var_a(z);
        return tree_expr(zj, J(t), tree_lift(zj, J(t), a)).k_under.a;
    }, R(0), w, tol);
    return {K, Kz};
}

template <class R>
void fill_trees(OracleTable& t, const R& z, const R& w, const R& tol) {
    R a = tree_root(z, w, tol);
    auto e = tree_expr(z, w, tree_lift(z, w, a));
    t.z = lift(z);
    t.w = lift(w);
    t.R_black = lift(e.a);
    t.R_white = lift(e.b);
    t.R_black_hat = lift(e.a_hat);
    t.R_white_hat = lift(e.b_hat);
    t.R_black_as = lift(e.a_as);
    t.R_white_as = lift(e.b_as);
    t.K_under = lift(e.k_under);
    auto [K, Kz] = unrooted_impl(z, w, tol);
    t.K = lift(K);
    t.K_prime = lift(Kz);
    using J = Jet<R>;
    J zj = J::var_a(z), wj = J::var_b(w);
    J aj = tree_lift(zj, wj, a);
    J bj = (wj + aj) * (wj + aj);
    J g3 = g3_expr(zj, wj, aj, bj);
    t.G3 = lift(g3.v);
    t.G3_z = lift(g3.a);
    t.G3_w = lift(g3.b);
}

template <class R>
void fill_networks(OracleTable& t, const R& z, const R& y, const R& tol) {
    auto p = network_root(z, y, tol);
    auto e = network_jet(z, y, p);
    t.y = lift(y);
    t.D = lift(e.D.v);
    t.S = lift(e.S.v);
    t.P = lift(e.P.v);
    t.H = lift(e.H.v);
    t.D1 = lift(e.D.a);
    t.S1 = lift(e.S.a);
    t.P1 = lift(e.P.a);
    t.H1 = lift(e.H.a);
    fill_trees(t, z, e.D.v, tol);
    t.G2_arrow = lift((1 + e.D.v) / (1 + y));
    t.G2_arrow_prime = lift(e.D.a / (1 + y));
    t.G2_under = lift(z * z * (1 + e.D.v) / (2 * (1 + y)));
    t.G2_under_prime = lift((z * z * e.D.a / (1 + y) + 2 * z * (1 + e.D.v) / (1 + y)) / 2);
}

template <class R>
void fill_all(OracleTable& t, const R& x, const R& y, const R& tol) {
    using std::exp;
    auto c = connected_root(x, y, tol);
    fill_networks(t, c.z, y, tol);
    t.x = lift(x);
    t.G2_prime = lift(c.g.G2p);
    t.G2_dprime = lift(c.g.G2pp);
    R g1p = exp(c.g.G2p);
    R den = 1 - x * g1p * c.g.G2pp;
    if (den <= 0)
        throw OutsideDomain("connected series: beyond the singularity");
    R g1pp = g1p * g1p * c.g.G2pp / den;
    R g1 = c.z - c.z * c.g.G2p + c.g.G2;
    R g = exp(g1);
    t.G1 = lift(g1);
    t.G1_prime = lift(g1p);
    t.G1_dprime = lift(g1pp);
    t.G = lift(g);
    t.G_prime = lift(g1p * g);
    t.G_dprime = lift(g1pp * g + g1p * g1p * g);
}

bool close(const quad& a, const quad& b, double rel) {
    quad scale = std::max(abs(a), abs(b));
    if (scale < quad(1e-300))
        return true;
    return abs(a - b) <= quad(rel) * scale;
}

}  // namespace

TreeBlock tree_series(quad zq, quad wq, int digits) {
    return with_real(digits, [&]<class R>() {
        R tol = tolerance_for<R>(digits);
        R z = cast<R>(zq), w = cast<R>(wq);
        R a = tree_root(z, w, tol);
        using J = Jet<R>;
        auto e = tree_expr(J::var_a(z), J::var_b(w), tree_lift(J::var_a(z), J::var_b(w), a));
        TreeBlock b;
        b.R_black = partials(e.a);
        b.R_white = partials(e.b);
        b.R_black_hat = partials(e.a_hat);
        b.R_white_hat = partials(e.b_hat);
        b.R_black_as = partials(e.a_as);
        b.R_white_as = partials(e.b_as);
        b.K_under = partials(e.k_under);
        return b;
    });
}

G3Values g3_values(quad zq, quad wq, int digits) {
    return with_real(digits, [&]<class R>() {
        R tol = tolerance_for<R>(digits);
        R z = cast<R>(zq), w = cast<R>(wq);
        R a = tree_root(z, w, tol);
        using J = Jet<R>;
        J zj = J::var_a(z), wj = J::var_b(w);
        J aj = tree_lift(zj, wj, a);
        J bj = (wj + aj) * (wj + aj);
        J g = g3_expr(zj, wj, aj, bj);
        return G3Values{lift(g.v), lift(g.a), lift(g.b), lift(g.aa), lift(g.ab), lift(g.bb)};
    });
}

NetworkValues network_values(quad zq, quad yq, int digits) {
    return with_real(digits, [&]<class R>() {
        R tol = tolerance_for<R>(digits);
        R z = cast<R>(zq), y = cast<R>(yq);
        auto e = network_jet(z, y, network_root(z, y, tol));
        NetworkValues n;
        n.D = lift(e.D.v);
        n.S = lift(e.S.v);
        n.P = lift(e.P.v);
        n.H = lift(e.H.v);
        n.D1 = lift(e.D.a);
        n.S1 = lift(e.S.a);
        n.P1 = lift(e.P.a);
        n.H1 = lift(e.H.a);
        n.D2 = lift(e.D.aa);
        return n;
    });
}

TwoConnectedValues two_connected_values(quad zq, quad yq, int digits) {
    return with_real(digits, [&]<class R>() {
        R tol = tolerance_for<R>(digits);
        R z = cast<R>(zq), y = cast<R>(yq);
        auto e = network_jet(z, y, network_root(z, y, tol));
        auto g = g2_integrals(z, y, tol);
        TwoConnectedValues v;
        R arrow = (1 + e.D.v) / (1 + y);
        R arrow_p = e.D.a / (1 + y);
        v.G2_arrow = lift(arrow);
        v.G2_arrow_prime = lift(arrow_p);
        v.G2_under = lift(z * z * arrow / 2);
        v.G2_under_prime = lift((z * z * arrow_p + 2 * z * arrow) / 2);
        v.G2 = lift(g.G2);
        v.G2_prime = lift(g.G2p);
        v.G2_dprime = lift(g.G2pp);
        return v;
    });
}

std::pair<quad, quad> tree_unrooted(quad zq, quad wq, int digits) {
    return with_real(digits, [&]<class R>() {
        R tol = tolerance_for<R>(digits);
        auto [K, Kz] = unrooted_impl(cast<R>(zq), cast<R>(wq), tol);
        return std::pair<quad, quad>{lift(K), lift(Kz)};
    });
}

ConnectedValues connected_values(quad xq, quad yq, int digits) {
    return with_real(digits, [&]<class R>() {
        using std::exp;
        R tol = tolerance_for<R>(digits);
        R x = cast<R>(xq), y = cast<R>(yq);
        auto c = connected_root(x, y, tol);
        R g1p = exp(c.g.G2p);
        R den = 1 - x * g1p * c.g.G2pp;
        if (den <= 0)
            throw OutsideDomain("connected series: beyond the singularity");
        ConnectedValues v;
        v.z = lift(c.z);
        v.G1_prime = lift(g1p);
        v.G1_dprime = lift(g1p * g1p * c.g.G2pp / den);
        v.G1 = lift(c.z - c.z * c.g.G2p + c.g.G2);
        return v;
    });
}

PlanarValues planar_values(quad xq, quad yq, int digits) {
    auto c = connected_values(xq, yq, digits);
    PlanarValues p;
    p.G = exp(c.G1);
    p.G_prime = c.G1_prime * p.G;
    p.G_dprime = c.G1_dprime * p.G + c.G1_prime * p.G_prime;
    return p;
}

quad rho_g(quad yq, int digits) {
    if (!(yq > 0))
        throw ParameterError("rho_g: y must be positive");
    return with_real(digits, [&]<class R>() {
        return lift(rho_impl(cast<R>(yq), tolerance_for<R>(digits)));
    });
}

quad mu_of_y(quad yq, int digits) {
    return with_real(digits, [&]<class R>() {
        return lift(mu_impl(cast<R>(yq), tolerance_for<R>(digits)));
    });
}

quad y_of_mu(double mu, int digits) {
    if (!(mu > 1.0 && mu < 3.0))
        throw ParameterError("y_of_mu: mu must lie in (1, 3)");
    double target = mu;
    auto mu_at = [&](double ly) {
        return static_cast<double>(mu_of_y(quad(std::exp(ly)), digits));
    };
    double lo = 0.0, hi = 0.0;
    double m0 = mu_at(0.0);
    if (std::abs(m0 - target) < 1e-7)
        return quad(1);
    double mlo = m0, mhi = m0;
    if (m0 < target) {
        hi = 1.0;
        while ((mhi = mu_at(hi)) < target) {
            lo = hi;
            mlo = mhi;
            hi *= 2.0;
            if (hi > 64.0)
                throw NumericError("y_of_mu: bracket expansion failed");
        }
    } else {
        lo = -1.0;
        while ((mlo = mu_at(lo)) > target) {
            hi = lo;
            mhi = mlo;
            lo *= 2.0;
            if (lo < -64.0)
                throw NumericError("y_of_mu: bracket expansion failed");
        }
    }
    // Illinois regula falsi in log y; mu is increasing in y
    double flo = mlo - target, fhi = mhi - target;
    int side = 0;
    for (int it = 0; it < 200; ++it) {
        double mid = (lo * fhi - hi * flo) / (fhi - flo);
        if (!(mid > lo && mid < hi))
            mid = 0.5 * (lo + hi);
        double f = mu_at(mid) - target;
        if (std::abs(f) < 1e-7 || hi - lo < 1e-13)
            return quad(std::exp(mid));
        if (f < 0) {
            lo = mid;
            flo = f;
            if (side == -1)
                fhi *= 0.5;
            side = -1;
        } else {
            hi = mid;
            fhi = f;
            if (side == 1)
                flo *= 0.5;
            side = 1;
        }
    }
    throw NumericError("y_of_mu: root search did not converge");
}

OracleTable tree_table(quad zq, quad wq, int digits) {
    OracleTable t;
    t.digits = digits;
    with_real(digits, [&]<class R>() {
        fill_trees(t, cast<R>(zq), cast<R>(wq), tolerance_for<R>(digits));
        return 0;
    });
    return t;
}

OracleTable network_table(quad zq, quad yq, int digits) {
    OracleTable t;
    t.digits = digits;
    with_real(digits, [&]<class R>() {
        R tol = tolerance_for<R>(digits);
        R z = cast<R>(zq), y = cast<R>(yq);
        fill_networks(t, z, y, tol);
        auto g = g2_integrals(z, y, tol);
        t.G2_prime = lift(g.G2p);
        t.G2_dprime = lift(g.G2pp);
        return 0;
    });
    return t;
}

OracleTable evaluate_table(quad xq, quad yq, int digits) {
    OracleTable t;
    t.digits = digits;
    with_real(digits, [&]<class R>() {
        fill_all(t, cast<R>(xq), cast<R>(yq), tolerance_for<R>(digits));
        return 0;
    });
    return t;
}

std::pair<TuningResult, OracleTable> build_table(long long n, std::optional<double> mu, int digits) {
    if (n < 1)
        throw ParameterError("build_table: n must be at least 1");
    TuningResult r;
    r.n = n;
    r.mu = mu;
    r.y = mu ? y_of_mu(*mu, std::min(digits, 18)) : quad(1);
    r.rho = rho_g(r.y, digits);
    r.x_n = (1 - quad(1) / (2 * quad(n))) * r.rho;
    OracleTable t = evaluate_table(r.x_n, r.y, digits);
    check_identities(t, std::pow(10.0, -digits / 2.0));
    return {r, t};
}

void check_identities(const OracleTable& t, double rel) {
    auto require = [&](bool ok, const char* what) {
        if (!ok)
            throw NumericError(std::string("oracle identity failed: ") + what);
    };
    rel = std::max(rel, 1e-15);
    require(close(t.G2_arrow, (1 + t.D) / (1 + t.y), rel), "G2_arrow = (1+D)/(1+y)");
    require(close(t.G2_under, t.z * t.z * t.G2_arrow / 2, rel), "G2_under = z^2 G2_arrow / 2");
    require(close(t.D, t.y + t.S + t.P + t.H, rel), "D = y+S+P+H");
    require(close(t.S, (t.y + t.P + t.H) * t.z * t.D, rel), "S = (y+P+H) z D");
    quad u = t.S + t.H;
    require(close(t.P, t.y * (exp(u) - 1) + (exp(u) - 1 - u), rel), "P = y exp>=1 + exp>=2");
    require(close(t.w, t.D, rel), "w = D");
    require(close(t.H, t.G3, rel), "H = G3(z, D)");
    require(close(t.D1, t.S1 + t.P1 + t.H1, rel), "D' = S'+P'+H'");
    if (t.x > 0) {
        require(close(t.z, t.x * t.G1_prime, rel), "z = x G1'");
        require(close(t.G, exp(t.G1), rel), "G = exp(G1)");
    }
}

}  // namespace planargen
