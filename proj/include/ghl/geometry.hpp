#pragma once

#include "ghl/spec.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghl {

// Violated theorem-level identity: a defect in the engine, not in the input.
struct EngineError : std::logic_error {
    using std::logic_error::logic_error;
};

struct MetricFlags {
    bool integrable = false;
    bool almost_kahler = false;
    bool balanced = false;
};

struct AuditReport {
    bool torsion_identity = true;   // 2<Gamma(X,Y),Z> = T(X,Y,Z) - T(Y,Z,X) + T(Z,X,Y)
    bool curvature_identity = true; // Omega - Rm = (D_Y Gamma)_X - (D_X Gamma)_Y - [Gamma_X, Gamma_Y]
    double torsion_residual = 0;
    double curvature_residual = 0;
    bool ok() const { return torsion_identity && curvature_identity; }
};

enum class Connection { LeviCivita, Gauduchon };

// All invariants of one spec. Quantities live on the complement with local
// indices 0..2m-1 and the standard structure I e_{2k} = e_{2k+1}. Matrices
// use column action: M(z, y) = <M e_y, e_z>. Pair-indexed arrays use x*2m+y.
// The Gauduchon parameter is the polynomial variable "t" unless a value is
// fixed at construction.
template <class K>
class Geometry {
public:
    using S = RatFun<K>;
    using M = Mat<S>;
    using V = Vec<S>;
    using Tensor = MultiTensor<S>;

    explicit Geometry(const BracketSpec<K>& spec, std::optional<K> t = std::nullopt);

    const BracketSpec<K>& spec() const { return spec_; }
    int q() const { return spec_.q; }
    int m() const { return spec_.m; }
    int n() const { return n_; }
    const S& t() const { return t_; }
    bool symbolic_t() const { return !t_value_.has_value(); }

    const SplitBracket<K>& split() const { return split_; }
    const M& J() const { return J_; }
    // ad(Z_i) restricted to the complement
    const std::vector<M>& isotropy_action() const { return ad_; }

    const std::vector<V>& nijenhuis() const { return N_; }
    const KForm<S>& F() const { return F_; }
    const KForm<S>& F_plus() const { return Fplus_; }
    const KForm<S>& F_minus() const { return Fminus_; }

    const std::vector<M>& levi_civita() const { return S_; }
    const std::vector<M>& gauduchon() const { return A_; }
    // A^t for another value of the parameter (t-linear: A0 + t A1)
    std::vector<M> gauduchon_at(const S& t) const;

    const M& Rm(int x, int y) const { return Rm_[x * n_ + y]; }
    const M& Omega(int x, int y) const { return Om_[x * n_ + y]; }
    const V& T(int x, int y) const { return T_[x * n_ + y]; }
    const std::vector<M>& Rm_all() const { return Rm_; }
    const std::vector<M>& Omega_all() const { return Om_; }
    const std::vector<V>& T_all() const { return T_; }

    const KForm<S>& rho1() const { return rho1_; }
    const KForm<S>& rho2() const { return rho2_; }
    const S& scal() const { return scal_; }
    const KForm<S>& lee() const { return lee_; }
    // tr T^t(X, .) for the engine's t
    KForm<S> torsion_trace() const;

    const MetricFlags& flags() const { return flags_; }

    AuditReport audit() const;

    // curvature / connection applied to arbitrary vectors
    M curvature(const V& X, const V& Y) const;
    M connection(Connection c, const V& X) const;
    // g(Rm(X,Y)X, Y), optionally divided by |X|^2|Y|^2 - <X,Y>^2
    S sectional(const V& X, const V& Y, bool normalize = false) const;

    Tensor J_tensor() const { return Tensor::from_endomorphism(J_); }
    Tensor metric_tensor() const { return Tensor::from_bilinear(M::identity(n_)); }
    // Rm as a two-slot End-valued tensor
    Tensor Rm_tensor() const;
    // [Q, DQ, ..., D^order Q]
    std::vector<Tensor> derivative_chain(const Tensor& Q, Connection c, int order) const;

private:
    S fp(int a, int b, int c) const;  // internal F+ (9-term form)
    S fm(int a, int b, int c) const;  // internal F- (N-cyclic form)

    BracketSpec<K> spec_;
    int n_;
    S t_;
    std::optional<K> t_value_;
    SplitBracket<K> split_;
    M J_;
    std::vector<M> ad_;
    std::vector<V> N_;
    KForm<S> F_, Fplus_, Fminus_, Fp_int_, Fm_int_;
    std::vector<M> S_, A0_, A1_, A_;
    std::vector<M> Rm_, Om_;
    std::vector<V> T_;
    KForm<S> rho1_, rho2_, lee_;
    S scal_;
    MetricFlags flags_;
};

// lift a form on the complement to the whole algebra (indices shifted by q)
template <class S>
KForm<S> lift_form(const KForm<S>& f, int q) {
    KForm<S> r(f.dim() + q, f.degree());
    for (auto& [idx, v] : f.components()) {
        Index j = idx;
        for (auto& x : j) x += q;
        r.set(j, v);
    }
    return r;
}

} // namespace ghl
