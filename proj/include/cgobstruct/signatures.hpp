#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "cgobstruct/knots.hpp"

namespace cgo {

/// An eigenvalue could not be certified nonzero, even at extended precision.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ξ_m^a = exp(2πi·a/m), stored with a/m reduced to lowest terms and 0 <= a < m.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(std::int64_t numerator, std::int64_t order);

    static RootOfUnity minus_one() { return {1, 2}; }

    std::int64_t numerator() const { return num_; }
    /// Multiplicative order of the root.
    std::int64_t order() const { return order_; }
    bool is_one() const { return num_ == 0; }
    double angle() const;  // in [0, 2π)
    std::complex<double> value() const;
    RootOfUnity pow(std::int64_t k) const;
    RootOfUnity conj() const { return pow(-1); }

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t order_ = 1;
};

/// Hermitian tridiagonal matrix; the subdiagonal is the conjugate of `super`.
struct HermitianTridiagonal {
    std::vector<double> diagonal;
    std::vector<std::complex<double>> super;

    std::size_t dimension() const { return diagonal.size(); }
    double inf_norm() const;
    Eigen::MatrixXcd dense() const;
};

/// Genus-(q-1)/2 Seifert matrix of T(2,q): -1 on the diagonal, 1 on the superdiagonal.
Eigen::MatrixXi seifert_matrix_T2(std::int64_t q);

/// (1-ω)V + (1-ω̄)Vᵀ for the Seifert matrix of T(2,q), q odd >= 3.
HermitianTridiagonal levine_tristram_form(std::int64_t q, const RootOfUnity& omega);

/// True iff ω is a root of Δ_{T(2,q)}, i.e. ω^q = -1 and ω != -1. Exact.
bool is_alexander_root(std::int64_t q, const RootOfUnity& omega);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    int signature() const { return positive - negative; }
};

/// Exponent e of the eigenvalue acceptance threshold 10^-e · max(1, ‖H‖∞).
/// Defaults to 8; CG_OBSTRUCT_PRECISION overrides it.
int tolerance_exponent();

/// Inertia of the Levine-Tristram form of T(2,q) at ω. q = 1 and ω = 1 give
/// the zero inertia by convention.
Inertia lt_inertia(std::int64_t q, const RootOfUnity& omega);
int lt_signature(std::int64_t q, const RootOfUnity& omega);
int lt_nullity(std::int64_t q, const RootOfUnity& omega);

/// σ_K(ω) via the cabling rule σ_piece(ω) = σ_{T(2,p)}(ω) + σ_{T(2,q')}(ω²).
int knot_signature(const GAKnot& knot, const RootOfUnity& omega);
int signature_at_minus_one(const GAKnot& knot);

struct SignatureSample {
    RootOfUnity point;  // the root actually evaluated
    double angle = 0.0;
    bool perturbed = false;  // moved half a step off an Alexander root
    int signature = 0;
};

/// σ_K at exp(iπj/resolution) for j = 1..resolution-1, nudged by half a step
/// whenever the sample point (or its square, for companions) is an Alexander root.
std::vector<SignatureSample> signature_function_samples(const GAKnot& knot, std::int64_t resolution);

}  // namespace cgo
