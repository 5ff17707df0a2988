#pragma once

#include "ghl/geometry.hpp"

#include <string>
#include <vector>

namespace ghl {

// Levi-Civita derivatives at the base point: J-part D^1 J .. D^{s+2} J,
// curvature part Rm .. D^s Rm. Slot 0 of D^k Q is the last direction taken.
template <class K>
struct DerivativeTuple {
    int s = 0;
    std::vector<MultiTensor<RatFun<K>>> J;  // J[i] = D^{i+1} J
    std::vector<MultiTensor<RatFun<K>>> Rm; // Rm[i] = D^i Rm
};

template <class K>
DerivativeTuple<K> hermitian_s_tuple(const Geometry<K>& g, int s);

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

// (i) pair symmetry and (ii) first Bianchi of Rm; (vii) alternation of D^2 J
// against the curvature, D^2J(X,Y) - D^2J(Y,X) = -[Rm(X,Y), J]
template <class K>
std::vector<IdentityCheck> check_tuple_identities(const Geometry<K>& g, const DerivativeTuple<K>& tup);

// basis of u(m) inside so(2m) for I e_{2k} = e_{2k+1}
template <class K>
std::vector<Mat<K>> unitary_basis(int m);
template <class K>
std::vector<Mat<K>> orthogonal_basis(int n);

struct SingerResult {
    std::vector<int> dims; // dim j(0), dim j(1), ...
    int k_Jg = -1;         // first k with dim j(k) = dim j(k+1); -1 if not reached
    bool stabilized() const { return k_Jg >= 0; }
};

// Requires a spec without free parameters.
template <class K>
SingerResult singer(const Geometry<K>& g, int kmax);

template <class K>
struct KillingGenerator {
    Vec<K> v;
    Mat<K> A;
};

// [(v,A),(w,B)] = (Aw - Bv, [A,B] + Rm(v,w))
template <class K>
KillingGenerator<K> nomizu_bracket(const KillingGenerator<K>& a, const KillingGenerator<K>& b,
                                   const std::vector<Mat<K>>& Rm);

template <class K>
struct KillingAlgebra {
    std::vector<KillingGenerator<K>> basis;
    std::vector<int> dims; // solution dimension per truncation order
    int order = -1;        // order at which the dimension stabilized
    bool closed = false;   // under the Nomizu bracket
    bool jacobi = false;
    bool transitive = false; // v-components span the tangent space
    int dim() const { return static_cast<int>(basis.size()); }
    bool ok() const { return order >= 0 && closed && jacobi && transitive; }
};

// Requires a spec without free parameters. max_order bounds the truncation.
template <class K>
KillingAlgebra<K> killing_generators(const Geometry<K>& g, int max_order);

// Rm with entries as constants of K
template <class K>
std::vector<Mat<K>> constant_curvature(const Geometry<K>& g);

} // namespace ghl
