#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtilt/chebyshev.hpp"
#include "qtilt/laurent.hpp"
#include "qtilt/presentation.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace qtilt;

namespace {

Int choose(long long n, long long k) {
    if (k < 0 || k > n) {
        return Int(0);
    }
    Int num(1);
    Int den(1);
    for (long long i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return num / den;
}

ClassVector unit_class() {
    ClassVector v;
    v.summands[TwistLabel{}] = Int(1);
    return v;
}

}  // namespace

TEST_CASE("recursive families, first members") {
    CHECK(cheb_p(0) == cheb_monomial(0, 0, 0));
    CHECK(cheb_p(1) == cheb_monomial(1, 0, 0));
    CHECK(cheb_p(2) == cheb_monomial(2, 0, 0) - cheb_monomial(0, 1, 0));
    CHECK(cheb_p(3) == cheb_monomial(3, 0, 0) - Int(2) * cheb_monomial(1, 1, 0));
    CHECK(cheb_q(4) == cheb_monomial(4, 0, 0) - Int(3) * cheb_monomial(2, 0, 1) +
                           cheb_monomial(0, 0, 2));
    CHECK(dickson_g(2) == cheb_monomial(2, 0, 0) - Int(2) * cheb_monomial(0, 1, 0));
    CHECK(dickson_g(3) == cheb_monomial(3, 0, 0) - Int(3) * cheb_monomial(1, 1, 0));
    CHECK(dickson_h(2) == cheb_monomial(2, 0, 0) - Int(2) * cheb_monomial(0, 0, 1));
}

TEST_CASE("closed form of the recursive families") {
    // P_r = sum_k (-1)^k C(r-k, k) dq^k omega^(r-2k), and the same for Q_r
    // with d in place of dq.
    for (long long r = 0; r <= 60; ++r) {
        ChebPoly p_want;
        ChebPoly q_want;
        for (long long k = 0; 2 * k <= r; ++k) {
            const Int c = (k % 2 == 0 ? Int(1) : Int(-1)) * choose(r - k, k);
            p_want += cheb_monomial(r - 2 * k, k, 0, c);
            q_want += cheb_monomial(r - 2 * k, 0, k, c);
        }
        CHECK(cheb_p(r) == p_want);
        CHECK(cheb_q(r) == q_want);
    }
}

TEST_CASE("derivative and doubling identities") {
    CHECK(omega_derivative(dickson_g(3)) == Int(3) * cheb_p(2));
    CHECK(cheb_p(5) == dickson_g(3) * cheb_p(2));
    for (long long ell = 2; ell <= 13; ++ell) {
        for (long long p : {2, 3, 5, 7, 11, 13}) {
            if (ell % p == 0) {
                continue;
            }
            const IdentityReport rep = verify_identities(Params{ell, p});
            CHECK(rep.g_derivative);
            CHECK(rep.h_derivative);
            CHECK(rep.p_doubling);
            CHECK(rep.q_doubling);
            CHECK(rep.pass());
        }
    }
}

TEST_CASE("determinant rescaling") {
    CHECK(scale_d_degrees(cheb_q(2), 3) ==
          cheb_monomial(2, 0, 0) - cheb_monomial(0, 0, 3));
    CHECK(scale_d_degrees(dickson_h(2), 2) ==
          cheb_monomial(2, 0, 0) - Int(2) * cheb_monomial(0, 0, 2));
    CHECK(scale_d_degrees(cheb_p(4), 5) == cheb_p(4));   // no d degrees present
    CHECK(scale_d_degrees(cheb_q(5), 1) == cheb_q(5));
    CHECK_THROWS_AS(scale_d_degrees(cheb_q(2), 0), std::invalid_argument);
}

TEST_CASE("omega helpers") {
    const ChebPoly f = cheb_q(4);
    CHECK(omega_degree(f) == 4);
    CHECK(omega_degree(ChebPoly{}) == -1);
    CHECK(omega_coefficient(f, 2) == -Int(3) * cheb_monomial(0, 0, 1));
    CHECK(omega_coefficient(f, 3) == ChebPoly{});
    CHECK(substitute_omega_int(cheb_p(2), 3) ==
          cheb_monomial(0, 0, 0, Int(9)) - cheb_monomial(0, 1, 0));
    CHECK(substitute_omega_int(cheb_p(3), 0) == ChebPoly{});
    CHECK(substitute_omega_int(cheb_p(6), 0) == -cheb_monomial(0, 3, 0));
}

TEST_CASE("torus realization") {
    for (long long r = 0; r <= 40; ++r) {
        CHECK(substitute_torus(cheb_p(r), 2) == weyl_character(Weight{r, 0}));
        CHECK(substitute_torus(cheb_p(r), 7) == weyl_character(Weight{r, 0}));
    }
    for (long long ell = 2; ell <= 13; ++ell) {
        CHECK(substitute_torus(dickson_g(ell), ell) ==
              monomial_character(ell, 0) + monomial_character(0, ell));
    }
    // dq and d land on the determinant characters at their scales.
    CHECK(substitute_torus(cheb_monomial(0, 1, 0), 3) == monomial_character(1, 1));
    CHECK(substitute_torus(cheb_monomial(0, 0, 1), 3) == monomial_character(3, 3));
}

TEST_CASE("squarefreeness in omega") {
    CHECK(squarefree_in_omega(cheb_p(2)));
    CHECK(squarefree_in_omega(cheb_monomial(1, 0, 0) * cheb_p(2)));
    CHECK(squarefree_in_omega(cheb_monomial(0, 3, 0)));   // constants count
    CHECK(!squarefree_in_omega(ChebPoly{}));              // zero does not
    const ChebPoly lin = cheb_monomial(1, 0, 0) - cheb_monomial(0, 1, 0);
    CHECK(squarefree_in_omega(lin));
    CHECK(!squarefree_in_omega(lin * lin));
    CHECK(!squarefree_in_omega(cheb_monomial(2, 0, 0)));
    for (long long m = 2; m <= 13; ++m) {
        CHECK(squarefree_in_omega(cheb_p(m - 1)));
        CHECK(squarefree_in_omega(cheb_q(m - 1)));
    }
}

TEST_CASE("laurent polynomial ring") {
    const LaurentPoly x = laurent_monomial(1);
    const LaurentPoly one = laurent_monomial(0);
    CHECK((x + one) * (x - one) == laurent_monomial(2) - one);
    CHECK(shifted(x + one, -1) == one + laurent_monomial(-1));
    CHECK((x + one).min_degree() == 0);
    CHECK((x + one).max_degree() == 1);
    CHECK_THROWS_AS(LaurentPoly{}.min_degree(), std::domain_error);
    CHECK(is_integral(x + one));
    CHECK(!is_integral(laurent_monomial(0, Rat(1, 2))));
    CHECK(divides(x - one, laurent_monomial(2) - one));
    CHECK(!divides(x - one, x + one));
    CHECK(div_exact(laurent_monomial(2) - one, x - one) == x + one);
    CHECK_THROWS_AS(div_exact(x + one, x - one), std::domain_error);
    // x^k is a unit, so it divides everything.
    CHECK(divides(laurent_monomial(-3), x + one));
}

TEST_CASE("extended gcd in the laurent ring") {
    const LaurentPoly one = laurent_monomial(0);
    const LaurentPoly a = laurent_monomial(2) - one;       // x^2 - 1
    const LaurentPoly b = laurent_monomial(3) - one;       // x^3 - 1
    const auto [g, s, t] = extended_gcd(a, b);
    CHECK(g == laurent_monomial(1) - one);                 // x - 1
    CHECK(s * a + t * b == g);
    {
        const auto [g2, s2, t2] = extended_gcd(a, LaurentPoly{});
        CHECK(g2 == a);   // already monic with nonzero constant term
        CHECK(s2 * a == g2);
    }
    {
        // Coprime inputs reach the unit ideal.
        const auto [g3, s3, t3] = extended_gcd(laurent_monomial(1) - one,
                                               laurent_monomial(1) + one);
        CHECK(g3 == one);
        CHECK(s3 * (laurent_monomial(1) - one) + t3 * (laurent_monomial(1) + one) == one);
    }
    {
        const auto [g4, s4, t4] = extended_gcd(LaurentPoly{}, LaurentPoly{});
        CHECK(g4.is_zero());
    }
}

TEST_CASE("laurent modules decide membership with witnesses") {
    const LaurentPoly one = laurent_monomial(0);
    const LaurentPoly x = laurent_monomial(1);
    {
        LaurentModule mod;
        mod.add_generator({{0, x - one}});
        mod.add_generator({{0, x + one}});
        CHECK(mod.generator_count() == 2);
        std::map<std::size_t, LaurentPoly> combo;
        REQUIRE(mod.contains({{0, one}}, &combo));
        LaurentPoly rebuilt;
        if (combo.count(0)) rebuilt += combo[0] * (x - one);
        if (combo.count(1)) rebuilt += combo[1] * (x + one);
        CHECK(rebuilt == one);
    }
    {
        // The diagonal submodule of rank two does not contain (1, 0).
        LaurentModule mod;
        mod.add_generator({{0, one}, {1, one}});
        CHECK(mod.contains({{0, one}, {1, one}}));
        CHECK(!mod.contains({{0, one}}));
        CHECK(mod.contains({{0, x}, {1, x}}));
    }
    {
        // Zero vector is always a member; combos may be empty.
        LaurentModule mod;
        CHECK(mod.contains({}));
        CHECK(!mod.contains({{3, one}}));
    }
}

TEST_CASE("rank over the fraction field") {
    const LaurentPoly one = laurent_monomial(0);
    const LaurentPoly x = laurent_monomial(1);
    CHECK(rank_over_fraction_field({{one, x}, {x, x * x}}) == 1);
    CHECK(rank_over_fraction_field({{one, LaurentPoly{}}, {LaurentPoly{}, x}}) == 2);
    CHECK(rank_over_fraction_field({{LaurentPoly{}}}) == 0);
    CHECK(rank_over_fraction_field({}) == 0);
    CHECK(rank_over_fraction_field({{x - one, x + one}}) == 1);
}

TEST_CASE("presentation polynomials") {
    PresentationPoly f(2);
    f.add_term({1, 0}, 0, 0, Int(2));
    f.add_term({0, 1}, -1, 0, Int(1));
    CHECK(!f.is_zero());
    CHECK_THROWS_AS(f.add_term({1}, 0, 0, Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(f.add_term({-1, 0}, 0, 0, Int(1)), std::invalid_argument);

    const PresentationPoly x = presentation_variable(2, 0);
    const PresentationPoly y = presentation_variable(2, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK(inject_cheb(cheb_p(2), 2, 0) ==
          x * x - presentation_constant(2, 1, 0, Int(1)));
    CHECK(inject_cheb(cheb_p(2), 2, 1) ==
          y * y - presentation_constant(2, 1, 0, Int(1)));
    CHECK(derivative_x(x * x * y, 0) ==
          presentation_constant(2, 0, 0, Int(2)) * x * y);
    CHECK(derivative_x(x * x * y, 1) == x * x);
    CHECK(derivative_x(presentation_constant(2, 3, 0, Int(5)), 0).is_zero());
}

TEST_CASE("evaluation at rational points") {
    const PresentationPoly x = presentation_variable(2, 0);
    const PresentationPoly y = presentation_variable(2, 1);
    const PresentationPoly f =
        x * x * y - presentation_constant(2, -1, 1, Int(3));
    CHECK(evaluate_poly(f, {Rat(2), Rat(5)}, Rat(1, 2), Rat(1)) ==
          Rat(4 * 5) - Rat(3) * Rat(2));
    CHECK(evaluate_poly(PresentationPoly(2), {Rat(1), Rat(1)}, Rat(1), Rat(1)) == Rat(0));
}

TEST_CASE("kernel generator shapes") {
    {
        const auto gens = kernel_generators(0, Params{2, 3});
        REQUIRE(gens.size() == 2);
        const PresentationPoly xq = presentation_variable(2, 0);
        const PresentationPoly x0 = presentation_variable(2, 1);
        CHECK(gens[0] == xq * x0 - xq * xq * xq +
                             presentation_constant(2, 1, 0, Int(2)) * xq);
        CHECK(gens[1] == presentation_constant(2, 2, 0, Int(1)) -
                             presentation_constant(2, 0, 1, Int(1)));
        CHECK(gens[1] == det_relation(0, Params{2, 3}));
    }
    {
        // Level-one classical relation uses the plain determinant.
        const auto gens = kernel_generators(1, Params{3, 2});
        REQUIRE(gens.size() == 3);
        const PresentationPoly x0 = presentation_variable(3, 1);
        const PresentationPoly x1 = presentation_variable(3, 2);
        CHECK(gens[1] == x0 * x1 - x0 * x0 * x0 +
                             presentation_constant(3, 0, 1, Int(2)) * x0);
    }
    {
        // Level-two classical relation carries the squared determinant.
        const auto gens = kernel_generators(2, Params{3, 2});
        REQUIRE(gens.size() == 4);
        const PresentationPoly x1 = presentation_variable(4, 2);
        const PresentationPoly x2 = presentation_variable(4, 3);
        CHECK(gens[2] == x1 * x2 - x1 * x1 * x1 +
                             presentation_constant(4, 0, 2, Int(2)) * x1);
    }
    CHECK(kernel_generators(-1, Params{2, 3}).empty());
    CHECK(det_relation_literal(0, Params{2, 3}) ==
          presentation_constant(2, 2, 0, Int(1)) - presentation_constant(2, 0, 2, Int(1)));
}

TEST_CASE("evaluation map fixtures") {
    const Params P{2, 3};
    const PresentationPoly xq = presentation_variable(2, 0);
    const PresentationPoly x0 = presentation_variable(2, 1);
    {
        ClassVector want;
        want.summands[TwistLabel{Weight{1, 0}, {}}] = Int(1);
        CHECK(phi_image(xq, P) == want);
    }
    {
        ClassVector want;
        want.summands[TwistLabel{Weight{2, 0}, {}}] = Int(1);
        CHECK(phi_image(xq * xq, P) == want);
    }
    {
        ClassVector want;
        want.summands[TwistLabel{Weight{1, 0}, {Weight{1, 0}}}] = Int(1);
        CHECK(phi_image(xq * x0, P) == want);
    }
    {
        // Cube of the quantum generator: one mixed class plus twice the
        // determinant twist of the generator itself.
        ClassVector want;
        want.summands[TwistLabel{Weight{1, 0}, {Weight{1, 0}}}] = Int(1);
        want.summands[TwistLabel{Weight{2, 1}, {}}] = Int(2);
        CHECK(phi_image(xq * xq * xq, P) == want);
    }
    {
        ClassVector want;
        want.summands[TwistLabel{Weight{1, 1}, {}}] = Int(1);
        CHECK(phi_image(presentation_constant(2, 1, 0, Int(1)), P) == want);
    }
    {
        ClassVector want;
        want.summands[TwistLabel{Weight{0, 0}, {Weight{1, 1}}}] = Int(1);
        CHECK(phi_image(presentation_constant(2, 0, 1, Int(1)), P) == want);
    }
    CHECK(phi_image(presentation_constant(2, 0, 0, Int(1)), P) == unit_class());
    CHECK(phi_image(PresentationPoly(2), P) == ClassVector{});
}

TEST_CASE("evaluation map is a ring homomorphism") {
    const Params P{2, 3};
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long long> exp_of(0, 2);
    std::uniform_int_distribution<long long> det_of(-1, 1);
    std::uniform_int_distribution<int> coeff_of(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        PresentationPoly f(3);
        PresentationPoly g(3);
        for (int term = 0; term < 3; ++term) {
            f.add_term({exp_of(rng), exp_of(rng), exp_of(rng)}, det_of(rng), det_of(rng),
                       Int(coeff_of(rng)));
            g.add_term({exp_of(rng), exp_of(rng), exp_of(rng)}, det_of(rng), det_of(rng),
                       Int(coeff_of(rng)));
        }
        const ClassVector fi = phi_image(f, P);
        const ClassVector gi = phi_image(g, P);
        CHECK(phi_image(f + g, P) == [&] {
            ClassVector sum = fi;
            add_scaled(sum, gi, Int(1));
            return sum;
        }());
        CHECK(phi_image(f * g, P) == multiply(fi, gi, P));
    }
}

TEST_CASE("kernel verification") {
    for (const Params& P :
         {Params{2, 3}, Params{2, 5}, Params{3, 2}, Params{3, 5}, Params{4, 3},
          Params{4, 5}, Params{5, 2}, Params{5, 3}}) {
        for (long long n = 0; n <= 2; ++n) {
            const KernelReport rep = verify_kernel(n, P);
            CHECK(rep.n == n);
            REQUIRE(rep.generator_vanishes.size() == static_cast<std::size_t>(n) + 2);
            for (bool ok : rep.generator_vanishes) {
                CHECK(ok);
            }
            CHECK(rep.det_checked);
            CHECK(rep.det_relation_vanishes);
            CHECK(!rep.literal_det_relation_vanishes);
            CHECK(rep.pass());
        }
    }
    const KernelReport empty = verify_kernel(-1, Params{2, 3});
    CHECK(empty.generator_vanishes.empty());
    CHECK(!empty.det_checked);
    CHECK(empty.pass());
}

TEST_CASE("spanning probe") {
    for (long long n : {-1LL, 0LL, 1LL}) {
        const SurjectivityReport rep = surjectivity_probe(n, Params{2, 3}, 10);
        CHECK(rep.pass());
        CHECK(rep.reached == rep.targets);
        CHECK(rep.reached_integrally == rep.targets);
        CHECK(rep.unreached.empty());
        CHECK(rep.rational_only.empty());
        CHECK(rep.targets > 0);
        CHECK(rep.monomials >= rep.targets);
    }
    const SurjectivityReport rep = surjectivity_probe(0, Params{3, 2}, 12);
    CHECK(rep.pass());
    CHECK(rep.reached_integrally == rep.targets);
}

TEST_CASE("reducedness evidence") {
    for (const Params& P : {Params{2, 3}, Params{3, 2}, Params{5, 2}, Params{13, 2}}) {
        const RadicalEvidence ev = radical_evidence(0, P);
        CHECK(ev.exact);
        CHECK(ev.radical);
    }
    {
        const RadicalEvidence ev = radical_evidence(1, Params{2, 3}, 5, 12);
        CHECK(!ev.exact);
        CHECK(ev.samples == 12);
        CHECK(ev.full_rank == 12);
        CHECK(ev.radical);
        CHECK(ev.seed == 5);
        // Same seed, same verdict and counters: the sampling is deterministic.
        const RadicalEvidence again = radical_evidence(1, Params{2, 3}, 5, 12);
        CHECK(again.full_rank == ev.full_rank);
        CHECK(again.radical == ev.radical);
    }
    CHECK(radical_evidence(1, Params{3, 2}, 7, 8).radical);
    CHECK_THROWS_AS(radical_evidence(2, Params{2, 3}), std::invalid_argument);
}

TEST_CASE("zero-divisor probe") {
    {
        // Shift zero at even ell: the probe honestly reports a zero divisor.
        const ZeroDivisorProbe pr = nonzerodivisor_probe(0, 2);
        CHECK(!pr.poly_nonzero);
        CHECK(pr.truncation_checked);
        CHECK(!pr.truncation_injective);
        CHECK(!pr.nonzerodivisor);
    }
    CHECK(!nonzerodivisor_probe(0, 4).nonzerodivisor);
    CHECK(nonzerodivisor_probe(0, 3).nonzerodivisor);
    CHECK(nonzerodivisor_probe(1, 2).nonzerodivisor);
    {
        // Large ell relies on the polynomial criterion alone.
        const ZeroDivisorProbe pr = nonzerodivisor_probe(0, 7);
        CHECK(pr.poly_nonzero);
        CHECK(!pr.truncation_checked);
        CHECK(pr.nonzerodivisor);
    }
    // Where both criteria run they agree, so the exact truncation check
    // backs up the polynomial one.
    for (long long ell = 2; ell <= 5; ++ell) {
        for (long long b = -6; b <= 6; ++b) {
            const ZeroDivisorProbe pr = nonzerodivisor_probe(b, ell);
            CHECK(pr.truncation_checked);
            CHECK(pr.truncation_injective == pr.poly_nonzero);
            CHECK(pr.nonzerodivisor == pr.poly_nonzero);
        }
    }
}
