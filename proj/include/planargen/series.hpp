// Truncated bivariate power series and the low-order expansions of every
// generating function in the pipeline. Used as a coefficient oracle.
#pragma once

#include <vector>

namespace planargen {

// sum c(i,j) u^i v^j for i <= nu, j <= nv
class Series2 {
public:
    Series2() = default;
    Series2(int nu, int nv);

    int nu() const { return nu_; }
    int nv() const { return nv_; }
    double& at(int i, int j) { return c_[static_cast<std::size_t>(i * (nv_ + 1) + j)]; }
    double at(int i, int j) const {
        if (i < 0 || j < 0 || i > nu_ || j > nv_)
            return 0.0;
        return c_[static_cast<std::size_t>(i * (nv_ + 1) + j)];
    }
    // coefficient times i!, the count when u is an exponential variable
    double egf(int i, int j) const;

    static Series2 constant(int nu, int nv, double c);
    static Series2 u_var(int nu, int nv);
    static Series2 v_var(int nu, int nv);

    Series2& operator+=(const Series2& o);
    Series2& operator-=(const Series2& o);
    Series2& operator*=(double s);
    friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
    friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
    friend Series2 operator*(Series2 a, double s) { return a *= s; }
    friend Series2 operator*(double s, Series2 a) { return a *= s; }
    friend Series2 operator*(const Series2& a, const Series2& b);

    // divides by v; requires all v^0 coefficients zero
    Series2 shift_down_v() const;
    // d/du, d/dv, integral in u or v from 0
    Series2 diff_u() const;
    Series2 diff_v() const;
    Series2 integrate_u() const;
    Series2 integrate_v() const;
    Series2 truncated(int nu, int nv) const;
    double max_abs_diff(const Series2& o) const;

private:
    int nu_ = 0, nv_ = 0;
    std::vector<double> c_;
};

// exp(a) for a series with every u^0 coefficient zero
Series2 exp_series(const Series2& a);
// 1/(1 + a) for a series with every u^0 coefficient zero
Series2 inv_one_plus(const Series2& a);
// f(u, g(u,v)) where g has every v^0 coefficient zero
Series2 compose_v(const Series2& f, const Series2& g);
// f(g(u,v), v) where g has every u^0 coefficient zero
Series2 compose_u(const Series2& f, const Series2& g);

// Expansions to order n in the vertex variable and m in the edge variable.
// Vertex variable first: (z,w) for trees and 3-connected maps,
// (z,y) for networks, (x,y) for graph classes.
struct SeriesBundle {
    Series2 R_black, R_white, K_under;  // (z, w)
    Series2 G3_arrow;                   // (z, w)
    Series2 D, S, P, H, D_prime;        // (z, y)
    Series2 G3, G2, G2_prime, G1, G1_prime, G;  // (x, y)
};

SeriesBundle expand_series(int n, int m);

}  // namespace planargen
