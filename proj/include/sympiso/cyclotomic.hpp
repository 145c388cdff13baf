#pragma once

// Exact elements of cyclotomic fields Q(zeta_m): polynomials in zeta_m with
// rational coefficients, canonically reduced modulo the m-th cyclotomic
// polynomial. Values of different conductors combine by embedding into the
// lcm conductor (zeta_m = zeta_M^(M/m)).

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace sympiso {

namespace detail {

// Cyclotomic polynomial Phi_m as integer coefficients (index = degree),
// computed by the divisor recursion Phi_m = (x^m - 1) / prod_{e|m, e<m} Phi_e.
inline const std::vector<int64_t>& cyclotomic_poly(uint32_t m) {
    static std::map<uint32_t, std::vector<int64_t>> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // local recursion with the lock held; conductors are tiny
    auto compute = [](auto&& self, uint32_t n, std::map<uint32_t, std::vector<int64_t>>& c)
        -> const std::vector<int64_t>& {
        auto found = c.find(n);
        if (found != c.end()) return found->second;
        std::vector<int64_t> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1; // x^n - 1
        for (uint32_t e = 1; e < n; ++e) {
            if (n % e != 0) continue;
            const auto& phi = self(self, e, c);
            // exact polynomial division num /= phi (phi is monic)
            std::vector<int64_t> q(num.size() - phi.size() + 1, 0);
            std::vector<int64_t> r = num;
            for (size_t i = q.size(); i-- > 0;) {
                int64_t lead = r[i + phi.size() - 1];
                q[i] = lead;
                if (lead == 0) continue;
                for (size_t j = 0; j < phi.size(); ++j) r[i + j] -= lead * phi[j];
            }
            num = q;
        }
        return c.emplace(n, std::move(num)).first->second;
    };
    return compute(compute, m, cache);
}

inline uint32_t euler_phi_deg(uint32_t m) {
    return static_cast<uint32_t>(cyclotomic_poly(m).size() - 1);
}

} // namespace detail

class Cyclotomic {
  public:
    Cyclotomic() : m_(1), c_(1, Rat(0)) {}

    static Cyclotomic rational(const Rat& r) {
        Cyclotomic z;
        z.c_[0] = r;
        return z;
    }
    static Cyclotomic zero() { return rational(Rat(0)); }
    static Cyclotomic one() { return rational(Rat(1)); }

    // zeta_m^j
    static Cyclotomic root_of_unity(uint32_t m, int64_t j) {
        if (m == 0) throw domain_error("conductor must be positive");
        int64_t e = ((j % int64_t(m)) + m) % m;
        std::vector<Rat> poly(size_t(e) + 1, Rat(0));
        poly[size_t(e)] = Rat(1);
        return Cyclotomic(m, reduce(m, std::move(poly)));
    }

    uint32_t conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    Rat rational_part() const { return c_[0]; } // constant coordinate

    Cyclotomic embedded(uint32_t M) const {
        if (M == m_) return *this;
        if (M % m_ != 0) throw domain_error("conductor does not divide target");
        uint32_t step = M / m_;
        std::vector<Rat> poly(size_t(m_ - 1) * step + 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) poly[i * step] = c_[i];
        return Cyclotomic(M, reduce(M, std::move(poly)));
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        uint32_t M = std::lcm(a.m_, b.m_);
        Cyclotomic x = a.embedded(M), y = b.embedded(M);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        uint32_t M = std::lcm(a.m_, b.m_);
        Cyclotomic x = a.embedded(M), y = b.embedded(M);
        std::vector<Rat> prod(x.c_.size() + y.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (size_t j = 0; j < y.c_.size(); ++j) {
                if (y.c_[j].is_zero()) continue;
                prod[i + j] += x.c_[i] * y.c_[j];
            }
        }
        return Cyclotomic(M, reduce(M, std::move(prod)));
    }
    friend Cyclotomic operator*(const Rat& r, const Cyclotomic& a) {
        Cyclotomic x = a;
        for (auto& c : x.c_) c *= r;
        return x;
    }
    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

    // Complex conjugation zeta -> zeta^(-1).
    Cyclotomic conj() const {
        std::vector<Rat> poly(m_, Rat(0));
        bool any = false;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            poly[(m_ - i) % m_] += c_[i];
            any = true;
        }
        if (!any) return Cyclotomic(m_, std::vector<Rat>(detail::euler_phi_deg(m_), Rat(0)));
        return Cyclotomic(m_, reduce(m_, std::move(poly)));
    }

    // Multiplicative inverse via the multiplication-matrix linear system.
    Cyclotomic inverse() const {
        if (is_zero()) throw domain_error("inverse of zero cyclotomic");
        size_t deg = c_.size();
        // columns: this * zeta^j expressed on the power basis
        std::vector<std::vector<Rat>> aug(deg, std::vector<Rat>(deg + 1, Rat(0)));
        for (size_t j = 0; j < deg; ++j) {
            Cyclotomic col = *this * root_of_unity(m_, int64_t(j));
            col = col.embedded(m_);
            for (size_t i = 0; i < deg; ++i) aug[i][j] = col.c_[i];
        }
        aug[0][deg] = Rat(1); // solve M x = e_0
        // Gaussian elimination
        size_t row = 0;
        std::vector<size_t> piv_col(deg, SIZE_MAX);
        for (size_t col = 0; col < deg && row < deg; ++col) {
            size_t sel = SIZE_MAX;
            for (size_t r = row; r < deg; ++r)
                if (!aug[r][col].is_zero()) { sel = r; break; }
            if (sel == SIZE_MAX) continue;
            std::swap(aug[row], aug[sel]);
            Rat inv = Rat(1) / aug[row][col];
            for (size_t j = col; j <= deg; ++j) aug[row][j] *= inv;
            for (size_t r = 0; r < deg; ++r) {
                if (r == row || aug[r][col].is_zero()) continue;
                Rat f = aug[r][col];
                for (size_t j = col; j <= deg; ++j) aug[r][j] -= f * aug[row][j];
            }
            piv_col[row] = col;
            ++row;
        }
        std::vector<Rat> x(deg, Rat(0));
        for (size_t r = 0; r < row; ++r) x[piv_col[r]] = aug[r][deg];
        Cyclotomic result(m_, std::move(x));
        if (!(result * *this == one())) throw domain_error("cyclotomic inverse failed");
        return result;
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        uint32_t M = std::lcm(a.m_, b.m_);
        return a.embedded(M).c_ == b.embedded(M).c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string str() const {
        if (is_rational()) return c_[0].str();
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].str();
            if (i > 0) s += "*z" + std::to_string(m_) + "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

  private:
    uint32_t m_;
    std::vector<Rat> c_; // length = deg Phi_m

    Cyclotomic(uint32_t m, std::vector<Rat> coeffs) : m_(m), c_(std::move(coeffs)) {}

    static std::vector<Rat> reduce(uint32_t m, std::vector<Rat> poly) {
        const auto& phi = detail::cyclotomic_poly(m);
        size_t deg = phi.size() - 1;
        if (poly.size() < deg) poly.resize(deg, Rat(0));
        for (size_t i = poly.size(); i-- > deg;) {
            if (poly[i].is_zero()) continue;
            Rat lead = poly[i];
            poly[i] = Rat(0);
            for (size_t j = 0; j < deg; ++j)
                if (phi[j] != 0) poly[i - deg + j] -= lead * Rat(phi[j]);
        }
        poly.resize(deg);
        return poly;
    }
};

// chi(x) = zeta_c^(u*x) with the canonical integer lift of u*x.
inline Cyclotomic char_eval(const Character& chi, const RingElement& x) {
    if (chi.spec() != x.spec) throw domain_error("character/element ring mismatch");
    uint32_t c = chi.spec().characteristic();
    RingElement ux = chi.u * x;
    return Cyclotomic::root_of_unity(c, ux.lift());
}

// sqrt(d) as an exact cyclotomic, for d = 2 or an odd prime (Gauss sums).
inline Cyclotomic cyclotomic_sqrt(uint32_t d) {
    if (d == 2) {
        // zeta_8 + zeta_8^(-1) = sqrt(2)
        return Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, -1);
    }
    if (is_prime(d) && d % 2 == 1) {
        Cyclotomic g = Cyclotomic::zero();
        for (uint32_t t = 0; t < d; ++t) g += Cyclotomic::root_of_unity(d, int64_t(t) * t);
        if (d % 4 == 1) return g;
        // g = i*sqrt(d); multiply by -i
        return Cyclotomic::root_of_unity(4, -1) * g;
    }
    throw domain_error("sqrt as cyclotomic only for d = 2 or odd prime");
}

} // namespace sympiso
