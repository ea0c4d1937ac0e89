#pragma once

// Double-double arithmetic (about 32 significant digits) for the short
// recursions whose terms cancel heavily in binary64.

#include <cmath>

#include "zetakit/numerics.hpp"

namespace zk::dd {

struct Real {
    double hi = 0.0, lo = 0.0;

    Real() = default;
    Real(double x) : hi(x) {}
    Real(double h, double l) : hi(h), lo(l) {}
};

inline Real quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline Real two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline Real two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline Real operator+(Real a, Real b) {
    Real s = two_sum(a.hi, b.hi);
    Real t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline Real operator-(Real a) { return {-a.hi, -a.lo}; }
inline Real operator-(Real a, Real b) { return a + (-b); }

inline Real operator*(Real a, Real b) {
    Real p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline Real operator/(Real a, Real b) {
    double q1 = a.hi / b.hi;
    Real r = a - Real(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - Real(q2) * b;
    double q3 = r.hi / b.hi;
    return Real(quick_two_sum(q1, q2)) + Real(q3);
}

struct Complex {
    Real re, im;

    Complex() = default;
    Complex(cplx z) : re(z.real()), im(z.imag()) {}
    Complex(Real r, Real i) : re(r), im(i) {}

    cplx hi() const { return {re.hi, im.hi}; }
    cplx lo() const { return {re.lo, im.lo}; }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, Real k) { return {a.re * k, a.im * k}; }
inline Complex operator/(const Complex& a, Real k) { return {a.re / k, a.im / k}; }
inline Complex operator/(const Complex& a, const Complex& b) {
    Real den = b.re * b.re + b.im * b.im;
    return Complex{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im} / den;
}

inline Complex from_parts(cplx hi, cplx lo) { return {Real(hi.real()) + Real(lo.real()), Real(hi.imag()) + Real(lo.imag())}; }

}  // namespace zk::dd
