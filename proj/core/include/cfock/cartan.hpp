#pragma once

#include <compare>
#include <vector>

namespace cfock {

// Generalised Cartan matrix of affine type C with node set {0..n}, n >= 2:
// a_ii = 2, a_{1,0} = a_{n-1,n} = -2, a_ij = -1 for the remaining pairs with
// |i-j| = 1, and 0 otherwise.  For n = 2 the two special rules stack and the
// middle row reads (-2, 2, -2).
int cartan_entry(int i, int j, int n);

// Symmetrising factors s_0 = s_n = 2, s_i = 1 otherwise; s_i*a_ij = s_j*a_ji.
int s_value(int i, int n);

// Element of the weight lattice, stored by its pairings with the coroot
// basis h_0..h_n and the scaling element d.
struct WeightVector {
    std::vector<long> h;  // h[i] = <h_i, w>, size n+1
    long d = 0;           // <d, w>

    WeightVector& operator+=(const WeightVector& rhs);
    WeightVector& operator-=(const WeightVector& rhs);
    WeightVector& operator*=(long c);
    friend WeightVector operator+(WeightVector lhs, const WeightVector& rhs) { return lhs += rhs; }
    friend WeightVector operator-(WeightVector lhs, const WeightVector& rhs) { return lhs -= rhs; }
    friend WeightVector operator*(long c, WeightVector w) { return w *= c; }
    bool operator==(const WeightVector&) const = default;
    auto operator<=>(const WeightVector&) const = default;  // lexicographic; useful as a map key
};

WeightVector fundamental_weight(int k, int n);  // <h_i, L_k> = delta_ik, <d, L_k> = 0
WeightVector simple_root(int j, int n);         // <h_i, a_j> = a_ij, <d, a_j> = delta_j0

// Integer coweight c_0 h_0 + ... + c_n h_n + c_d d, pairing with weights.
struct Coweight {
    std::vector<long> h;  // coefficient of h_i, size n+1
    long d = 0;           // coefficient of d

    long pair(const WeightVector& w) const;
};

Coweight coweight_h(int i, int n);  // h_i
Coweight coweight_d(int n);         // d

}  // namespace cfock
