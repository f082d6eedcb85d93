#pragma once

#include <vector>

#include "bicon/error.hpp"

namespace bicon {

// Truncated multivariate Taylor expansion ("jet") of a scalar quantity in n
// variables: the value plus all partial derivatives up to `order` (0..3).
// The order-2 and order-3 blocks are stored dense (n*n and n*n*n) and are kept
// exactly symmetric: the write accessors mirror every entry to all index
// permutations, so downstream symmetry arguments hold bit-for-bit.
//
// Arithmetic follows the truncated Taylor ring:
//   (f+g), (f-g) componentwise;
//   (f*g) by the Leibniz rule through third order;
//   compose(u, f0..f3) by Faa di Bruno for a univariate outer function.
// Binary operations require equal variable counts and truncate the result to
// the smaller operand order. Coefficients above a jet's order read as zero.
class Jet {
public:
    Jet() = default;
    Jet(int n, int order);  // zero jet

    static Jet constant(int n, int order, double v);
    // Jet of the coordinate function x^var at a point where x^var = value.
    static Jet seed(int n, int order, int var, double value);

    int vars() const { return n_; }
    int order() const { return order_; }

    double value() const { return v_; }
    double& value() { return v_; }

    double d1(int a) const { return order_ >= 1 ? g_[static_cast<std::size_t>(a)] : 0.0; }
    double d2(int a, int b) const {
        return order_ >= 2 ? h_[static_cast<std::size_t>(a) * n_ + b] : 0.0;
    }
    double d3(int a, int b, int c) const {
        return order_ >= 3 ? t_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c] : 0.0;
    }

    void set_d1(int a, double v);
    void set_d2(int a, int b, double v);     // mirrors to (b,a)
    void set_d3(int a, int b, int c, double v);  // mirrors to all six orders

    bool finite() const;
    double max_abs_coeff() const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator*(double s, const Jet& a);
    friend Jet operator*(const Jet& a, double s) { return s * a; }
    friend Jet operator/(const Jet& a, const Jet& b);
    Jet& operator+=(const Jet& b) { *this = *this + b; return *this; }
    Jet& operator-=(const Jet& b) { *this = *this - b; return *this; }

    friend bool identical(const Jet& a, const Jet& b);  // bitwise comparison

    // Chain rule for f(u) given f and its first three derivatives at u.value().
    friend Jet compose(const Jet& u, double f0, double f1, double f2, double f3);
    // Partial derivative jet in one coordinate direction; order drops by one.
    // Throws DimensionError on an order-0 jet.
    friend Jet derivative(const Jet& u, int direction);

private:
    int n_ = 0;
    int order_ = 0;
    double v_ = 0.0;
    std::vector<double> g_;  // n            (order >= 1)
    std::vector<double> h_;  // n*n          (order >= 2, symmetric)
    std::vector<double> t_;  // n*n*n        (order >= 3, totally symmetric)

    static void check_same(const Jet& a, const Jet& b);
};

Jet recip(const Jet& u);  // 1/u, u.value() != 0

Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet tan(const Jet& u);
Jet exp(const Jet& u);
Jet log(const Jet& u);   // u.value() > 0
Jet sqrt(const Jet& u);  // u.value() > 0

Jet pow_int(const Jet& u, long long k);  // exact repeated multiplication
Jet pow_real(const Jet& u, double q);    // u.value() > 0

// Inverse of an n-by-n matrix of jets (row-major storage). The value part is
// inverted by LU with partial pivoting; derivative blocks follow from the
// correction series X = X0 * sum_m (-(A - value(A)) X0)^m, which terminates
// exactly at the jet order because the derivative part is nilpotent in the
// truncated ring. Throws SingularError when |det| <= singular_rel_tol *
// (max |entry value|)^n.
std::vector<Jet> matrix_inverse(const std::vector<Jet>& a, int n,
                                double singular_rel_tol = 1e-12);

}  // namespace bicon
