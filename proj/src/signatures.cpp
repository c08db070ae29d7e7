#include "cgobstruct/signatures.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <numeric>
#include <string>
#include <tuple>

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cgo {

namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

void require_odd_positive(std::int64_t q)
{
    if (q < 1 || q % 2 == 0) throw InputError("torus parameter q must be odd and >= 1, got " + std::to_string(q));
}

// Number of eigenvalues strictly below x of the real symmetric tridiagonal
// matrix with diagonal d and squared off-diagonals e2 (Sturm count via LDLᵀ pivots).
int count_below(const std::vector<HighFloat>& d, const std::vector<HighFloat>& e2, const HighFloat& x)
{
    static const HighFloat tiny("1e-45");
    int count = 0;
    HighFloat pivot = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        pivot = d[i] - x - (i == 0 ? HighFloat(0) : e2[i - 1] / pivot);
        if (pivot == 0) pivot = -tiny;
        if (pivot < 0) ++count;
    }
    return count;
}

// Extended-precision inertia for near-singular forms.
Inertia high_precision_inertia(std::int64_t q, const RootOfUnity& omega)
{
    const auto v = seifert_matrix_T2(q);
    const HighFloat phi = 2 * boost::math::constants::pi<HighFloat>() * omega.numerator() / omega.order();
    const HighFloat re = 1 - cos(phi);  // 1 - ω = re - i·im
    const HighFloat im = sin(phi);
    const auto n = static_cast<std::size_t>(v.rows());
    std::vector<HighFloat> d(n);
    std::vector<HighFloat> e2(n ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int vi = v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
        d[i] = 2 * re * vi;
        if (i + 1 < n) {
            const int up = v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1));
            const int lo = v(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i));
            // (1-ω)·up + (1-ω̄)·lo
            HighFloat real = re * (up + lo);
            HighFloat imag = -im * up + im * lo;
            e2[i] = real * real + imag * imag;
        }
    }
    auto inertia_at = [&](const HighFloat& eps) {
        int neg = count_below(d, e2, -eps);
        int nonpos = count_below(d, e2, eps);
        return Inertia{static_cast<int>(n) - nonpos, neg, nonpos - neg};
    };
    Inertia fine = inertia_at(HighFloat("1e-30"));
    Inertia coarse = inertia_at(HighFloat("1e-20"));
    if (fine.positive != coarse.positive || fine.negative != coarse.negative)
        throw PrecisionError("Levine-Tristram form of T(2," + std::to_string(q) + ") at exp(2πi·" +
                             std::to_string(omega.numerator()) + "/" + std::to_string(omega.order()) +
                             ") has an eigenvalue that cannot be certified");
    return fine;
}

}  // namespace

RootOfUnity::RootOfUnity(std::int64_t numerator, std::int64_t order)
{
    if (order <= 0) throw InputError("root of unity order must be positive");
    std::int64_t a = numerator % order;
    if (a < 0) a += order;
    std::int64_t g = std::gcd(a, order);
    num_ = a / g;
    order_ = order / g;
}

double RootOfUnity::angle() const
{
    return 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(order_);
}

std::complex<double> RootOfUnity::value() const { return std::polar(1.0, angle()); }

RootOfUnity RootOfUnity::pow(std::int64_t k) const
{
    __int128 a = static_cast<__int128>(num_) * k % order_;
    return RootOfUnity(static_cast<std::int64_t>(a), order_);
}

double HermitianTridiagonal::inf_norm() const
{
    double best = 0.0;
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        double row = std::abs(diagonal[i]);
        if (i < super.size()) row += std::abs(super[i]);
        if (i > 0) row += std::abs(super[i - 1]);
        best = std::max(best, row);
    }
    return best;
}

Eigen::MatrixXcd HermitianTridiagonal::dense() const
{
    const auto n = static_cast<Eigen::Index>(diagonal.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = diagonal[static_cast<std::size_t>(i)];
        if (i + 1 < n) {
            m(i, i + 1) = super[static_cast<std::size_t>(i)];
            m(i + 1, i) = std::conj(super[static_cast<std::size_t>(i)]);
        }
    }
    return m;
}

Eigen::MatrixXi seifert_matrix_T2(std::int64_t q)
{
    if (q < 3 || q % 2 == 0) throw InputError("Seifert matrix of T(2,q) needs odd q >= 3, got " + std::to_string(q));
    const auto n = static_cast<Eigen::Index>(q - 1);
    Eigen::MatrixXi v = Eigen::MatrixXi::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i, i) = -1;
        if (i + 1 < n) v(i, i + 1) = 1;
    }
    return v;
}

HermitianTridiagonal levine_tristram_form(std::int64_t q, const RootOfUnity& omega)
{
    const auto v = seifert_matrix_T2(q);
    const std::complex<double> a = 1.0 - omega.value();
    const std::complex<double> b = std::conj(a);
    const auto n = static_cast<std::size_t>(v.rows());
    HermitianTridiagonal h;
    h.diagonal.resize(n);
    h.super.resize(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        h.diagonal[i] = (a * static_cast<double>(v(ii, ii)) + b * static_cast<double>(v(ii, ii))).real();
        if (i + 1 < n) h.super[i] = a * static_cast<double>(v(ii, ii + 1)) + b * static_cast<double>(v(ii + 1, ii));
    }
    return h;
}

bool is_alexander_root(std::int64_t q, const RootOfUnity& omega)
{
    require_odd_positive(q);
    if (omega == RootOfUnity::minus_one()) return false;
    const __int128 twice = static_cast<__int128>(2) * q * omega.numerator();
    if (twice % omega.order() != 0) return false;
    return (twice / omega.order()) % 2 == 1;
}

int tolerance_exponent()
{
    static const int exponent = [] {
        if (const char* env = std::getenv("CG_OBSTRUCT_PRECISION")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v > 0 && v < 300) return static_cast<int>(v);
        }
        return 8;
    }();
    return exponent;
}

Inertia lt_inertia(std::int64_t q, const RootOfUnity& omega)
{
    require_odd_positive(q);
    if (q == 1 || omega.is_one()) return {};

    const auto h = levine_tristram_form(q, omega);
    const auto n = static_cast<Eigen::Index>(h.dimension());
    // A diagonal unitary similarity turns the hermitian band into a real
    // symmetric tridiagonal with off-diagonals |super|.
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n - 1);
    for (Eigen::Index i = 0; i < n; ++i) diag(i) = h.diagonal[static_cast<std::size_t>(i)];
    for (Eigen::Index i = 0; i + 1 < n; ++i) sub(i) = std::abs(h.super[static_cast<std::size_t>(i)]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) return high_precision_inertia(q, omega);

    const double tau = std::pow(10.0, -tolerance_exponent()) * std::max(1.0, h.inf_norm());
    Inertia out;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ev = solver.eigenvalues()(i);
        if (std::abs(ev) <= tau) return high_precision_inertia(q, omega);
        (ev > 0 ? out.positive : out.negative) += 1;
    }
    return out;
}

int lt_signature(std::int64_t q, const RootOfUnity& omega) { return lt_inertia(q, omega).signature(); }

int lt_nullity(std::int64_t q, const RootOfUnity& omega)
{
    require_odd_positive(q);
    if (q == 1 || omega.is_one()) return 0;
    // Roots of Δ_{T(2,q)} have order dividing 2q.
    if (omega.order() > 1 && std::gcd(omega.order(), 2 * q) == 1) return 0;
    return lt_inertia(q, omega).zero;
}

int knot_signature(const GAKnot& knot, const RootOfUnity& omega)
{
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, int> memo;
    auto sig = [&](std::int64_t q, const RootOfUnity& w) {
        auto [it, fresh] = memo.try_emplace({q, w.numerator(), w.order()}, 0);
        if (fresh) it->second = lt_signature(q, w);
        return it->second;
    };
    const RootOfUnity squared = omega.pow(2);
    int total = 0;
    for (const auto& pc : knot.pieces())
        total += to_int(pc.sign) * (sig(pc.cable_p, omega) + sig(pc.companion_q, squared));
    return total;
}

int signature_at_minus_one(const GAKnot& knot) { return knot_signature(knot, RootOfUnity::minus_one()); }

std::vector<SignatureSample> signature_function_samples(const GAKnot& knot, std::int64_t resolution)
{
    if (resolution < 1) throw InputError("signature sampling resolution must be >= 1");
    auto hits_root = [&](const RootOfUnity& w) {
        const RootOfUnity w2 = w.pow(2);
        for (const auto& pc : knot.pieces())
            if (is_alexander_root(pc.cable_p, w) || is_alexander_root(pc.companion_q, w2)) return true;
        return false;
    };
    std::vector<SignatureSample> out;
    out.reserve(static_cast<std::size_t>(resolution > 1 ? resolution - 1 : 0));
    for (std::int64_t j = 1; j < resolution; ++j) {
        SignatureSample s;
        s.point = RootOfUnity(j, 2 * resolution);  // exp(iπ j / resolution)
        if (hits_root(s.point)) {
            s.point = RootOfUnity(2 * j + 1, 4 * resolution);
            s.perturbed = true;
        }
        s.angle = s.point.angle();
        s.signature = knot_signature(knot, s.point);
        out.push_back(s);
    }
    return out;
}

}  // namespace cgo
