#pragma once

#include <set>
#include <vector>

namespace agt {

// Finite field with q = p^m elements. Elements are encoded as 0..q-1: for
// prime q these are residues; otherwise base-p digit strings spelling the
// coefficients of a polynomial residue (digit i = coefficient of x^i) modulo
// the lexicographically least monic irreducible of degree m. Everything is
// table-driven, so q is capped at desk scale.
class FiniteField {
public:
    explicit FiniteField(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int m() const { return m_; }
    int one() const { return 1 % q_; }

    int add(int a, int b) const { return add_[check(a)][check(b)]; }
    int mul(int a, int b) const { return mul_[check(a)][check(b)]; }
    int neg(int a) const { return neg_[check(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const;
    int pow(int a, long long e) const;

    // nonzero squares
    const std::set<int>& squares() const { return squares_; }

    // coefficients c_0..c_m of the monic modulus polynomial (m = 1: plain x)
    const std::vector<int>& modulus() const { return modulus_; }

private:
    int check(int a) const;

    int q_, p_, m_;
    std::vector<std::vector<int>> add_, mul_;
    std::vector<int> neg_, inv_;
    std::vector<int> modulus_;
    std::set<int> squares_;
};

bool is_prime_power(int q);

} // namespace agt
