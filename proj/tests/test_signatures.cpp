#include <doctest.h>

#include <numeric>

#include "cgobstruct/knot_parse.hpp"
#include "cgobstruct/signatures.hpp"
#include "oracles.hpp"

using namespace cgo;

TEST_CASE("roots of unity reduce to lowest terms")
{
    CHECK(RootOfUnity(2, 6) == RootOfUnity(1, 3));
    CHECK(RootOfUnity(-1, 3) == RootOfUnity(2, 3));
    CHECK(RootOfUnity(7, 7).is_one());
    CHECK(RootOfUnity(3, 6) == RootOfUnity::minus_one());
    CHECK(RootOfUnity(1, 5).pow(2) == RootOfUnity(2, 5));
    CHECK(RootOfUnity(1, 5).conj() == RootOfUnity(4, 5));
    CHECK_THROWS_AS(RootOfUnity(1, 0), InputError);
}

TEST_CASE("Seifert matrix of T(2,q)")
{
    const auto v3 = seifert_matrix_T2(3);
    CHECK(v3(0, 0) == -1);
    CHECK(v3(0, 1) == 1);
    CHECK(v3(1, 0) == 0);
    CHECK(v3(1, 1) == -1);
    CHECK_THROWS_AS(seifert_matrix_T2(4), InputError);
    CHECK_THROWS_AS(seifert_matrix_T2(1), InputError);

    // sign(V + Vᵀ) = -(q-1)
    for (std::int64_t q = 3; q <= 15; q += 2) {
        const auto v = seifert_matrix_T2(q);
        Eigen::MatrixXd sym = (v + v.transpose()).cast<double>();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
        int sig = 0;
        for (Eigen::Index i = 0; i < sym.rows(); ++i) sig += es.eigenvalues()(i) > 0 ? 1 : -1;
        CHECK(sig == -(q - 1));
    }
}

TEST_CASE("det(tV - Vᵀ) matches the Alexander polynomial of T(2,q)")
{
    // evaluate at a few integers t and compare with (t^q + 1)/(t + 1)
    for (std::int64_t q = 3; q <= 9; q += 2) {
        const Eigen::MatrixXd v = seifert_matrix_T2(q).cast<double>();
        for (double t : {2.0, 3.0, -2.0}) {
            Eigen::MatrixXd m = t * v - v.transpose();
            const double det = m.determinant();
            const double expected = (std::pow(t, static_cast<double>(q)) + 1) / (t + 1);
            CHECK(std::abs(std::abs(det) - std::abs(expected)) < 1e-6 * std::abs(expected));
        }
    }
}

TEST_CASE("Levine-Tristram signature examples")
{
    CHECK(lt_signature(3, RootOfUnity(1, 3)) == -2);
    CHECK(lt_signature(3, RootOfUnity(1, 7)) == 0);
    CHECK(lt_signature(1, RootOfUnity(2, 5)) == 0);
    for (std::int64_t q = 1; q <= 21; q += 2) CHECK(lt_signature(q, RootOfUnity::minus_one()) == -(q - 1));
    CHECK(lt_signature(5, RootOfUnity(1, 1)) == 0);

    CHECK(lt_nullity(3, RootOfUnity(5, 83)) == 0);
    CHECK(lt_nullity(3, RootOfUnity(1, 6)) == 1);
    CHECK(lt_nullity(1, RootOfUnity(1, 6)) == 0);
    CHECK(lt_nullity(9, RootOfUnity(1, 6)) == 1);  // Δ_{T(2,9)} contains the trefoil factor
    CHECK_THROWS_AS(lt_signature(4, RootOfUnity(1, 3)), InputError);
}

TEST_CASE("exact Alexander-root test")
{
    CHECK(is_alexander_root(3, RootOfUnity(1, 6)));
    CHECK(is_alexander_root(3, RootOfUnity(5, 6)));
    CHECK_FALSE(is_alexander_root(3, RootOfUnity::minus_one()));
    CHECK_FALSE(is_alexander_root(3, RootOfUnity(1, 3)));
    CHECK_FALSE(is_alexander_root(1, RootOfUnity(1, 2)));
    for (std::int64_t q = 3; q <= 15; q += 2)
        for (std::int64_t m = 1; m <= 40; ++m)
            for (std::int64_t a = 0; a < m; ++a)
                CHECK(is_alexander_root(q, RootOfUnity(a, m)) == (oracle::svd_nullity(q, a, m) > 0));
}

TEST_CASE("eigenvalue count agrees with the closed form and the Sturm oracle")
{
    for (std::int64_t q = 1; q <= 15; q += 2) {
        for (std::int64_t m = 1; m <= 50; ++m) {
            for (std::int64_t a = 0; a < m; ++a) {
                const RootOfUnity w(a, m);
                const auto in = lt_inertia(q, w);
                const auto cf = oracle::closed_form_inertia(q, a, m);
                const auto st = oracle::sturm_inertia(q, a, m);
                CHECK(in.signature() == cf.signature());
                CHECK(in.signature() == st.signature());
                CHECK(in.zero == cf.zero);
                CHECK(lt_nullity(q, w) == oracle::svd_nullity(q, a, m));
            }
        }
    }
}

TEST_CASE("signature properties")
{
    for (std::int64_t q = 3; q <= 15; q += 2) {
        for (std::int64_t m = 2; m <= 50; ++m) {
            for (std::int64_t a = 1; a < m; ++a) {
                const RootOfUnity w(a, m);
                const RootOfUnity wc(m - a, m);
                CHECK(lt_signature(q, w) == lt_signature(q, wc));
                CHECK(lt_nullity(q, w) == lt_nullity(q, wc));
                if (lt_nullity(q, w) == 0) CHECK(lt_signature(q, w) % 2 == 0);
                if (std::gcd(m, 2 * q) == 1) CHECK(lt_nullity(q, w) == 0);
            }
        }
        // zero before the first jump at angle π/q: angles 2πa/m < π/q  <=>  2qa < m
        const std::int64_t m = 4000;
        for (std::int64_t a = 1; 2 * q * a < m; a += 7) CHECK(lt_signature(q, RootOfUnity(a, m)) == 0);
    }
}

TEST_CASE("near-singular evaluations escalate instead of guessing")
{
    // an exact Alexander root: the double path sees a ~0 eigenvalue and the
    // extended-precision count must report it as a zero of the form
    const auto in = lt_inertia(15, RootOfUnity(1, 30));
    CHECK(in.zero == 1);
    const auto cf = oracle::closed_form_inertia(15, 1, 30);
    CHECK(in.positive == cf.positive);
    CHECK(in.negative == cf.negative);
    // a point extremely close to the root is still nonsingular and is classified exactly
    const auto near = lt_inertia(15, RootOfUnity(100000001, 3000000000LL));
    const auto ncf = oracle::closed_form_inertia(15, 100000001, 3000000000LL);
    CHECK(near.signature() == ncf.signature());
    CHECK(near.zero == 0);
}

TEST_CASE("knot signatures")
{
    CHECK(signature_at_minus_one(build_family(83, 103, 17, 11, 13)) == 0);
    CHECK(signature_at_minus_one(parse_knot("T(2,5)")) == -4);
    CHECK(signature_at_minus_one(parse_knot("T(2,17;2,83)")) == -82);
    const auto k = parse_knot("T(2,3;2,7) # T(2,5) # -T(2,9;2,11)");
    CHECK(signature_at_minus_one(k.connect(k.mirrored())) == 0);
    CHECK(knot_signature(parse_knot("T(2,3)"), RootOfUnity(1, 5)) == -2);  // angle 2π/5 > π/3
    CHECK(knot_signature(parse_knot("T(2,3)"), RootOfUnity(1, 7)) == 0);
}

TEST_CASE("signature function sampling")
{
    const auto tref = signature_function_samples(parse_knot("T(2,3)"), 2);
    REQUIRE(tref.size() == 1);
    CHECK(tref[0].point == RootOfUnity(1, 4));
    CHECK(tref[0].signature == -2);  // angle π/2 lies past the jump at π/3

    // resolution 3 hits the Alexander root exp(iπ/3) and moves half a step
    const auto hit = signature_function_samples(parse_knot("T(2,3)"), 3);
    REQUIRE(hit.size() == 2);
    CHECK(hit[0].perturbed);
    CHECK(hit[0].point == RootOfUnity(3, 12));
    CHECK(hit[0].signature == -2);

    // companions are evaluated at ω²: T(2,3;2,7) has a jump where ω² = exp(iπ/3)
    const auto cab = parse_knot("T(2,3;2,7)");
    for (const auto& s : signature_function_samples(cab, 60)) {
        const auto w = s.point;
        const auto torus = oracle::closed_form_inertia(7, w.numerator(), w.order()).signature();
        const auto w2 = w.pow(2);
        const auto comp = oracle::closed_form_inertia(3, w2.numerator(), w2.order()).signature();
        CHECK(s.signature == torus + comp);
    }

    const auto k = parse_knot("T(2,3;2,7) # T(2,5) # -T(2,9;2,11)");
    for (const auto& s : signature_function_samples(k.connect(k.mirrored()), 500)) CHECK(s.signature == 0);
    CHECK_THROWS_AS(signature_function_samples(k, 0), InputError);
}
