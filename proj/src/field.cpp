#include "agt/field.hpp"

#include <stdexcept>

#include "agt/errors.hpp"

namespace agt {

namespace {

constexpr int kMaxQ = 1024; // tables are q×q

// factor q as p^m with p prime; m = 0 signals failure
std::pair<int, int> prime_power(int q) {
    if (q < 2) return {0, 0};
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {q, 1};
    int m = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    return rest == 1 ? std::pair{p, m} : std::pair{0, 0};
}

using Poly = std::vector<int>; // coefficients, index = degree, mod p

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce by the monic modulus
    int m = static_cast<int>(modulus.size()) - 1;
    for (int d = static_cast<int>(prod.size()) - 1; d >= m; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i) {
            int idx = d - m + i;
            prod[idx] = ((prod[idx] - c * modulus[i]) % p + p) % p;
        }
    }
    prod.resize(m);
    return prod;
}

// trial division by every monic polynomial of degree 1..deg/2
bool is_irreducible(const Poly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            g[d] = 1;
            long long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            // does g divide f? long division remainder check
            Poly rem(f);
            for (int k = deg; k >= d; --k) {
                int lead = rem[k];
                if (lead == 0) continue;
                rem[k] = 0;
                for (int i = 0; i < d; ++i) {
                    int idx = k - d + i;
                    rem[idx] = ((rem[idx] - lead * g[i]) % p + p) % p;
                }
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (rem[i] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

// least monic irreducible of degree m over F_p, ordered by
// (c_{m-1}, ..., c_0) ascending
Poly least_irreducible(int p, int m) {
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        Poly f(m + 1, 0);
        f[m] = 1;
        // code spells (c_{m-1}, ..., c_0) with c_0 least significant
        long long c = code;
        for (int i = 0; i < m; ++i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

Poly decode(int e, int p, int m) {
    Poly out(m, 0);
    for (int i = 0; i < m; ++i) {
        out[i] = e % p;
        e /= p;
    }
    return out;
}

int encode(const Poly& f, int p) {
    int e = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) e = e * p + f[i];
    return e;
}

} // namespace

FiniteField::FiniteField(int q) : q_(q) {
    auto [p, m] = prime_power(q);
    if (m == 0) throw std::invalid_argument("field order must be a prime power");
    if (q > kMaxQ) throw bound_error("field order too large for table construction");
    p_ = p;
    m_ = m;
    if (m_ == 1) {
        modulus_ = {0, 1}; // plain x
    } else {
        modulus_ = least_irreducible(p_, m_);
    }
    add_.assign(q_, std::vector<int>(q_));
    mul_.assign(q_, std::vector<int>(q_));
    neg_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly fa = decode(a, p_, m_);
        for (int b = 0; b < q_; ++b) {
            Poly fb = decode(b, p_, m_);
            Poly sum(m_);
            for (int i = 0; i < m_; ++i) sum[i] = (fa[i] + fb[i]) % p_;
            add_[a][b] = encode(sum, p_);
            mul_[a][b] = encode(poly_mul_mod(fa, fb, modulus_, p_), p_);
        }
        Poly neg(m_);
        for (int i = 0; i < m_; ++i) neg[i] = (p_ - fa[i]) % p_;
        neg_[a] = encode(neg, p_);
    }
    inv_.assign(q_, -1);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a][b] == one()) inv_[a] = b;
    for (int a = 1; a < q_; ++a) {
        if (inv_[a] < 0) throw std::logic_error("table is not a field");
        squares_.insert(mul_[a][a]);
    }
}

int FiniteField::check(int a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("field element out of range");
    return a;
}

int FiniteField::inv(int a) const {
    check(a);
    if (a == 0) throw std::invalid_argument("zero is not invertible");
    return inv_[a];
}

int FiniteField::pow(int a, long long e) const {
    check(a);
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

bool is_prime_power(int q) { return prime_power(q).second > 0; }

} // namespace agt
