#include "bicon/jet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bicon {

namespace {

inline std::size_t i2(int n, int a, int b) {
    return static_cast<std::size_t>(a) * n + b;
}

inline std::size_t i3(int n, int a, int b, int c) {
    return (static_cast<std::size_t>(a) * n + b) * n + c;
}

// Writes v to every permutation of (a,b,c) in a dense n^3 array.
inline void mirror3(std::vector<double>& t, int n, int a, int b, int c, double v) {
    t[i3(n, a, b, c)] = v;
    t[i3(n, a, c, b)] = v;
    t[i3(n, b, a, c)] = v;
    t[i3(n, b, c, a)] = v;
    t[i3(n, c, a, b)] = v;
    t[i3(n, c, b, a)] = v;
}

}  // namespace

Jet::Jet(int n, int order) : n_(n), order_(order) {
    if (n < 1 || order < 0 || order > 3)
        throw DimensionError("jet requires 1 <= vars and 0 <= order <= 3, got vars=" +
                             std::to_string(n) + " order=" + std::to_string(order));
    if (order >= 1) g_.assign(static_cast<std::size_t>(n), 0.0);
    if (order >= 2) h_.assign(static_cast<std::size_t>(n) * n, 0.0);
    if (order >= 3) t_.assign(static_cast<std::size_t>(n) * n * n, 0.0);
}

Jet Jet::constant(int n, int order, double v) {
    Jet j(n, order);
    j.v_ = v;
    return j;
}

Jet Jet::seed(int n, int order, int var, double value) {
    Jet j(n, order);
    j.v_ = value;
    if (order >= 1) j.g_[static_cast<std::size_t>(var)] = 1.0;
    return j;
}

void Jet::set_d1(int a, double v) {
    if (order_ < 1) throw DimensionError("set_d1 on an order-0 jet");
    g_[static_cast<std::size_t>(a)] = v;
}

void Jet::set_d2(int a, int b, double v) {
    if (order_ < 2) throw DimensionError("set_d2 on a jet of order < 2");
    h_[i2(n_, a, b)] = v;
    h_[i2(n_, b, a)] = v;
}

void Jet::set_d3(int a, int b, int c, double v) {
    if (order_ < 3) throw DimensionError("set_d3 on a jet of order < 3");
    mirror3(t_, n_, a, b, c, v);
}

bool Jet::finite() const {
    if (!std::isfinite(v_)) return false;
    for (double x : g_) if (!std::isfinite(x)) return false;
    for (double x : h_) if (!std::isfinite(x)) return false;
    for (double x : t_) if (!std::isfinite(x)) return false;
    return true;
}

double Jet::max_abs_coeff() const {
    double m = std::abs(v_);
    for (double x : g_) m = std::max(m, std::abs(x));
    for (double x : h_) m = std::max(m, std::abs(x));
    for (double x : t_) m = std::max(m, std::abs(x));
    return m;
}

void Jet::check_same(const Jet& a, const Jet& b) {
    if (a.n_ != b.n_)
        throw DimensionError("jet variable counts differ: " + std::to_string(a.n_) +
                             " vs " + std::to_string(b.n_));
}

Jet operator+(const Jet& a, const Jet& b) {
    Jet::check_same(a, b);
    const int o = std::min(a.order_, b.order_);
    const int n = a.n_;
    Jet r(n, o);
    r.v_ = a.v_ + b.v_;
    if (o >= 1)
        for (std::size_t i = 0; i < r.g_.size(); ++i) r.g_[i] = a.g_[i] + b.g_[i];
    if (o >= 2)
        for (std::size_t i = 0; i < r.h_.size(); ++i) r.h_[i] = a.h_[i] + b.h_[i];
    if (o >= 3)
        for (std::size_t i = 0; i < r.t_.size(); ++i) r.t_[i] = a.t_[i] + b.t_[i];
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    Jet::check_same(a, b);
    const int o = std::min(a.order_, b.order_);
    const int n = a.n_;
    Jet r(n, o);
    r.v_ = a.v_ - b.v_;
    if (o >= 1)
        for (std::size_t i = 0; i < r.g_.size(); ++i) r.g_[i] = a.g_[i] - b.g_[i];
    if (o >= 2)
        for (std::size_t i = 0; i < r.h_.size(); ++i) r.h_[i] = a.h_[i] - b.h_[i];
    if (o >= 3)
        for (std::size_t i = 0; i < r.t_.size(); ++i) r.t_[i] = a.t_[i] - b.t_[i];
    return r;
}

Jet operator-(const Jet& a) {
    Jet r = a;
    r.v_ = -r.v_;
    for (double& x : r.g_) x = -x;
    for (double& x : r.h_) x = -x;
    for (double& x : r.t_) x = -x;
    return r;
}

Jet operator*(double s, const Jet& a) {
    Jet r = a;
    r.v_ *= s;
    for (double& x : r.g_) x *= s;
    for (double& x : r.h_) x *= s;
    for (double& x : r.t_) x *= s;
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet::check_same(a, b);
    const int o = std::min(a.order_, b.order_);
    const int n = a.n_;
    Jet r(n, o);
    r.v_ = a.v_ * b.v_;
    if (o >= 1) {
        for (int i = 0; i < n; ++i)
            r.g_[i] = a.g_[i] * b.v_ + b.g_[i] * a.v_;
    }
    if (o >= 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = a.h_[i2(n, i, j)] * b.v_ + b.h_[i2(n, i, j)] * a.v_ +
                                 (a.g_[i] * b.g_[j] + b.g_[i] * a.g_[j]);
                r.h_[i2(n, i, j)] = v;
                r.h_[i2(n, j, i)] = v;
            }
    }
    if (o >= 3) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                for (int k = j; k < n; ++k) {
                    // Leibniz: third derivative splits into 3+1 distributions
                    // of the three directions over the two factors.
                    const double v =
                        a.t_[i3(n, i, j, k)] * b.v_ + b.t_[i3(n, i, j, k)] * a.v_ +
                        (a.h_[i2(n, i, j)] * b.g_[k] + a.h_[i2(n, i, k)] * b.g_[j] +
                         a.h_[i2(n, j, k)] * b.g_[i]) +
                        (b.h_[i2(n, i, j)] * a.g_[k] + b.h_[i2(n, i, k)] * a.g_[j] +
                         b.h_[i2(n, j, k)] * a.g_[i]);
                    mirror3(r.t_, n, i, j, k, v);
                }
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b) {
    return a * recip(b);
}

bool identical(const Jet& a, const Jet& b) {
    return a.n_ == b.n_ && a.order_ == b.order_ && a.v_ == b.v_ &&
           a.g_ == b.g_ && a.h_ == b.h_ && a.t_ == b.t_;
}

Jet compose(const Jet& u, double f0, double f1, double f2, double f3) {
    const int n = u.n_;
    const int o = u.order_;
    Jet r(n, o);
    r.v_ = f0;
    if (o >= 1) {
        for (int i = 0; i < n; ++i) r.g_[i] = f1 * u.g_[i];
    }
    if (o >= 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = f1 * u.h_[i2(n, i, j)] + f2 * u.g_[i] * u.g_[j];
                r.h_[i2(n, i, j)] = v;
                r.h_[i2(n, j, i)] = v;
            }
    }
    if (o >= 3) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                for (int k = j; k < n; ++k) {
                    const double v =
                        f1 * u.t_[i3(n, i, j, k)] +
                        f2 * (u.h_[i2(n, i, j)] * u.g_[k] + u.h_[i2(n, i, k)] * u.g_[j] +
                              u.h_[i2(n, j, k)] * u.g_[i]) +
                        f3 * u.g_[i] * u.g_[j] * u.g_[k];
                    mirror3(r.t_, n, i, j, k, v);
                }
    }
    return r;
}

Jet derivative(const Jet& u, int direction) {
    if (u.order_ < 1)
        throw DimensionError("derivative of an order-0 jet");
    const int n = u.n_;
    Jet r(n, u.order_ - 1);
    r.v_ = u.g_[static_cast<std::size_t>(direction)];
    if (r.order_ >= 1)
        for (int i = 0; i < n; ++i) r.g_[i] = u.h_[i2(n, direction, i)];
    if (r.order_ >= 2)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.h_[i2(n, i, j)] = u.t_[i3(n, direction, i, j)];
    return r;
}

Jet recip(const Jet& u) {
    const double v = u.value();
    if (v == 0.0) throw DomainError("division by zero");
    const double iv = 1.0 / v;
    return compose(u, iv, -iv * iv, 2.0 * iv * iv * iv, -6.0 * iv * iv * iv * iv);
}

Jet sin(const Jet& u) {
    const double s = std::sin(u.value()), c = std::cos(u.value());
    return compose(u, s, c, -s, -c);
}

Jet cos(const Jet& u) {
    const double s = std::sin(u.value()), c = std::cos(u.value());
    return compose(u, c, -s, -c, s);
}

Jet tan(const Jet& u) {
    const double T = std::tan(u.value());
    const double s2 = 1.0 + T * T;  // sec^2
    return compose(u, T, s2, 2.0 * T * s2, s2 * (2.0 + 6.0 * T * T));
}

Jet exp(const Jet& u) {
    const double e = std::exp(u.value());
    return compose(u, e, e, e, e);
}

Jet log(const Jet& u) {
    const double v = u.value();
    if (v <= 0.0) throw DomainError("log of a non-positive value " + std::to_string(v));
    const double iv = 1.0 / v;
    return compose(u, std::log(v), iv, -iv * iv, 2.0 * iv * iv * iv);
}

Jet sqrt(const Jet& u) {
    const double v = u.value();
    if (v <= 0.0) throw DomainError("sqrt of a non-positive value " + std::to_string(v));
    const double s = std::sqrt(v);
    return compose(u, s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v));
}

Jet pow_int(const Jet& u, long long k) {
    if (k == 0) return Jet::constant(u.vars(), u.order(), 1.0);
    Jet base = k > 0 ? u : recip(u);
    if (k < 0) k = -k;
    if (k > 1024) throw DomainError("integer exponent too large: " + std::to_string(k));
    Jet r = Jet::constant(u.vars(), u.order(), 1.0);
    Jet p = base;
    while (k > 0) {
        if (k & 1) r = r * p;
        k >>= 1;
        if (k) p = p * p;
    }
    return r;
}

Jet pow_real(const Jet& u, double q) {
    const double v = u.value();
    if (v <= 0.0)
        throw DomainError("non-integer power of a non-positive value " + std::to_string(v));
    const double f0 = std::pow(v, q);
    return compose(u, f0, q * f0 / v, q * (q - 1.0) * f0 / (v * v),
                   q * (q - 1.0) * (q - 2.0) * f0 / (v * v * v));
}

std::vector<Jet> matrix_inverse(const std::vector<Jet>& a, int n, double singular_rel_tol) {
    if (n < 1 || a.size() != static_cast<std::size_t>(n) * n)
        throw DimensionError("matrix_inverse: bad shape");
    const int nv = a[0].vars();
    const int o = a[0].order();

    // Value-part inverse by Gauss-Jordan with partial pivoting.
    std::vector<double> m(static_cast<std::size_t>(n) * n), inv(static_cast<std::size_t>(n) * n, 0.0);
    double max_entry = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i2(n, i, j)] = a[i2(n, i, j)].value();
            max_entry = std::max(max_entry, std::abs(m[i2(n, i, j)]));
        }
    for (int i = 0; i < n; ++i) inv[i2(n, i, i)] = 1.0;
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(m[i2(n, row, col)]) > std::abs(m[i2(n, piv, col)])) piv = row;
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(m[i2(n, col, j)], m[i2(n, piv, j)]);
                std::swap(inv[i2(n, col, j)], inv[i2(n, piv, j)]);
            }
            det = -det;
        }
        const double d = m[i2(n, col, col)];
        det *= d;
        if (d == 0.0) { det = 0.0; break; }
        const double id = 1.0 / d;
        for (int j = 0; j < n; ++j) {
            m[i2(n, col, j)] *= id;
            inv[i2(n, col, j)] *= id;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            const double f = m[i2(n, row, col)];
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                m[i2(n, row, j)] -= f * m[i2(n, col, j)];
                inv[i2(n, row, j)] -= f * inv[i2(n, col, j)];
            }
        }
    }
    double det_scale = 1.0;
    for (int i = 0; i < n; ++i) det_scale *= max_entry;
    if (std::abs(det) <= singular_rel_tol * det_scale || det == 0.0)
        throw SingularError("singular matrix: |det| = " + std::to_string(std::abs(det)) +
                            " <= " + std::to_string(singular_rel_tol * det_scale));

    // Jets: X = X0 * (I + A(I + A(I + A))) with A = -(a - value(a)) X0.
    auto mat_mul = [&](const std::vector<Jet>& A, const std::vector<Jet>& B) {
        std::vector<Jet> out(static_cast<std::size_t>(n) * n, Jet(nv, o));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Jet acc(nv, o);
                for (int k = 0; k < n; ++k) acc += A[i2(n, i, k)] * B[i2(n, k, j)];
                out[i2(n, i, j)] = acc;
            }
        return out;
    };
    std::vector<Jet> X0(static_cast<std::size_t>(n) * n, Jet(nv, o));
    std::vector<Jet> D(static_cast<std::size_t>(n) * n, Jet(nv, o));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            X0[i2(n, i, j)] = Jet::constant(nv, o, inv[i2(n, i, j)]);
            D[i2(n, i, j)] = a[i2(n, i, j)] - Jet::constant(nv, o, a[i2(n, i, j)].value());
        }
    std::vector<Jet> A = mat_mul(D, X0);
    for (Jet& x : A) x = -x;
    std::vector<Jet> S(static_cast<std::size_t>(n) * n, Jet(nv, o));
    auto set_identity = [&](std::vector<Jet>& M) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M[i2(n, i, j)] = Jet::constant(nv, o, i == j ? 1.0 : 0.0);
    };
    set_identity(S);
    for (int step = 0; step < o; ++step) {
        S = mat_mul(A, S);
        for (int i = 0; i < n; ++i) S[i2(n, i, i)] += Jet::constant(nv, o, 1.0);
    }
    return mat_mul(X0, S);
}

}  // namespace bicon
