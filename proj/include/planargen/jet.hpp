// Second-order forward-mode jets in two variables. Used to lift real
// fixed-point solutions to first and second partial derivatives.
#pragma once

#include <cmath>

namespace planargen {

template <class R>
struct Jet {
    R v{0}, a{0}, b{0}, aa{0}, ab{0}, bb{0};

    Jet() = default;
    Jet(R value) : v(value) {}  // NOLINT: constants promote implicitly

    static Jet var_a(R value) {
        Jet j(value);
        j.a = 1;
        return j;
    }
    static Jet var_b(R value) {
        Jet j(value);
        j.b = 1;
        return j;
    }

    Jet& operator+=(const Jet& o) {
        v += o.v; a += o.a; b += o.b; aa += o.aa; ab += o.ab; bb += o.bb;
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        v -= o.v; a -= o.a; b -= o.b; aa -= o.aa; ab -= o.ab; bb -= o.bb;
        return *this;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }
    Jet& operator/=(const Jet& o) { return *this = *this / o; }

    friend Jet operator+(Jet x, const Jet& y) { return x += y; }
    friend Jet operator-(Jet x, const Jet& y) { return x -= y; }
    friend Jet operator-(const Jet& x) { return Jet(0) - x; }

    friend Jet operator*(const Jet& x, const Jet& y) {
        Jet r;
        r.v = x.v * y.v;
        r.a = x.a * y.v + x.v * y.a;
        r.b = x.b * y.v + x.v * y.b;
        r.aa = x.aa * y.v + 2 * x.a * y.a + x.v * y.aa;
        r.ab = x.ab * y.v + x.a * y.b + x.b * y.a + x.v * y.ab;
        r.bb = x.bb * y.v + 2 * x.b * y.b + x.v * y.bb;
        return r;
    }

    // h = f(x) given f, f', f'' at x.v
    Jet chain(R f0, R f1, R f2) const {
        Jet r;
        r.v = f0;
        r.a = f1 * a;
        r.b = f1 * b;
        r.aa = f1 * aa + f2 * a * a;
        r.ab = f1 * ab + f2 * a * b;
        r.bb = f1 * bb + f2 * b * b;
        return r;
    }

    friend Jet operator/(const Jet& x, const Jet& y) {
        R inv = 1 / y.v;
        return x * y.chain(inv, -inv * inv, 2 * inv * inv * inv);
    }
};

template <class R>
Jet<R> exp(const Jet<R>& x) {
    using std::exp;
    R e = exp(x.v);
    return x.chain(e, e, e);
}

template <class R>
Jet<R> log(const Jet<R>& x) {
    using std::log;
    R inv = 1 / x.v;
    return x.chain(log(x.v), inv, -inv * inv);
}

template <class R>
const R& value_of(const R& x) { return x; }

template <class R>
const R& value_of(const Jet<R>& x) { return x.v; }

}  // namespace planargen
