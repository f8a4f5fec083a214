#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "subfac/approx.hpp"
#include "subfac/classify.hpp"
#include "subfac/coxeter.hpp"

using namespace subfac;

namespace {

Cyc half() { return Cyc(Rational(1) / 2); }

bool mentions(const CaseCertificate& cert, const std::string& needle) {
    return std::any_of(cert.checks.begin(), cert.checks.end(), [&](const std::string& s) {
        return s.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("trace multiplication formula") {
    Cyc sq2 = Cyc::sqrt_of(2);
    Cyc trP = (Cyc(2) - sq2) * half();               // 1/(2 + sqrt(2))
    Cyc trPeQ = (sq2 * Cyc(3) - Cyc(4)) * half();    // 1/(4 + 3 sqrt(2))
    Cyc got = trace_multiplication_formula(trP, trP, trPeQ);
    CHECK(got == sq2 * half());
    CHECK(got == (Cyc(4) + sq2 * Cyc(3)) * trP * trP);

    // symmetric in the first two arguments
    Cyc a = Cyc(Rational(1) / 2), b = Cyc(Rational(1) / 3), c = Cyc(Rational(1) / 7);
    CHECK(trace_multiplication_formula(a, b, c) == trace_multiplication_formula(b, a, c));

    // saturated product trace means the projections multiply to e_N
    CHECK(trace_multiplication_formula(a, b, a * b) == Cyc(1));

    CHECK_THROWS_AS(trace_multiplication_formula(a, b, Cyc(0)), std::invalid_argument);
    CHECK_THROWS_AS(trace_multiplication_formula(Cyc(2), b, c), std::invalid_argument);
    CHECK_THROWS_AS(trace_multiplication_formula(a, Cyc(0) - b, c), std::invalid_argument);
}

TEST_CASE("lambda from a dual trace") {
    Cyc sq2 = Cyc::sqrt_of(2);
    Cyc alpha = Cyc(2) + sq2;

    // tr(e_PbarQbar) = 2/(2 + sqrt(2)) gives lambda = 1 - 1/sqrt(2)
    CHECK(lambda_angle(alpha, Cyc(2) - sq2) == (Cyc(2) - sq2) * half());

    // saturated dual trace gives a commuting pair
    CHECK(lambda_angle(alpha, Cyc(1)) == Cyc(0));

    // tr(e_PbarQbar) = 1/sqrt(2) gives lambda = 3 - 2 sqrt(2)
    CHECK(lambda_angle(alpha, sq2 * half()) == Cyc(3) - sq2 * Cyc(2));

    CHECK_THROWS_AS(lambda_angle(Cyc(1), half()), std::invalid_argument);
    CHECK_THROWS_AS(lambda_angle(alpha, Cyc(0)), std::invalid_argument);
    CHECK_THROWS_AS(lambda_angle(alpha, Cyc(2)), std::invalid_argument);
}

TEST_CASE("cocommuting dimension formula") {
    CHECK(cocommuting_dim_formula(Cyc(3), Cyc(2), Cyc(6)) == Cyc(5));

    // on the beta = alpha - 1 line the value is beta^2 + beta - 1
    for (const Cyc& beta : {Cyc(2), Cyc(3), Cyc(Rational(7) / 2), Cyc(2) + Cyc::sqrt_of(2)}) {
        Cyc alpha = beta + Cyc(1);
        CHECK(cocommuting_dim_formula(alpha, beta, alpha * beta) ==
              beta * beta + beta - Cyc(1));
    }

    // symmetric point beta = alpha evaluates to alpha^2
    Cyc a = Cyc(2) + Cyc::sqrt_of(2);
    CHECK(cocommuting_dim_formula(a, a, a * a) == a * a);

    CHECK_THROWS_AS(cocommuting_dim_formula(Cyc(3), Cyc(2), Cyc(2)), std::invalid_argument);
    CHECK_THROWS_AS(cocommuting_dim_formula(Cyc(0), Cyc(2), Cyc(6)), std::invalid_argument);
}

TEST_CASE("admissible index values") {
    Cyc sq2 = Cyc::sqrt_of(2);
    Cyc sq3 = Cyc::sqrt_of(3);

    auto r8 = admissible_index(Cyc(2) + sq2);
    CHECK(r8.admissible);
    CHECK(r8.n == 8);

    auto r12 = admissible_index(Cyc(2) + sq3);
    CHECK(r12.admissible);
    CHECK(r12.n == 12);

    auto r6 = admissible_index(Cyc(3));
    CHECK(r6.admissible);
    CHECK(r6.n == 6);

    CHECK(admissible_index(Cyc(4)).witness == ">=4");
    CHECK(admissible_index(Cyc(6)).witness == ">=4");

    auto small = admissible_index(Cyc(2) - sq3);
    CHECK(!small.admissible);
    CHECK(small.witness == "not greater than 1");

    auto gap = admissible_index((Cyc(7) + Cyc::sqrt_of(33)) * Cyc(Rational(1) / 4));
    CHECK(!gap.admissible);
    CHECK(gap.n == 6);
    CHECK(gap.witness.find("strictly between") == 0);

    auto low_gap = admissible_index((Cyc(5) + Cyc::sqrt_of(5)) * Cyc(Rational(1) / 5));
    CHECK(!low_gap.admissible);
    CHECK(low_gap.n == 3);

    // just below 4 but not on the ladder within the search bound
    mpz_class big = 1;
    for (int i = 0; i < 30; ++i) big *= 10;
    Rational tiny = Rational(1) / Rational(big);
    CHECK_THROWS_AS(admissible_index(Cyc(Rational(4) - tiny)), std::runtime_error);
}

TEST_CASE("Bratteli obstruction search") {
    ObstructionResult d = a11_obstruction();
    CHECK(!d.feasible);
    CHECK(d.bound == 196);
    CHECK(d.best_m == 3);
    CHECK(d.best_n == 3);
    CHECK(d.best_value == 336);

    ObstructionResult relaxed = a11_obstruction(400);
    CHECK(relaxed.feasible);
    CHECK(relaxed.best_value == 336);
}

TEST_CASE("graph supertransitivity from walk counts") {
    CoxeterGraph e6 = build_graph(Kind::E, 6);
    std::vector<int> sts;
    for (int u : e6.univalent()) sts.push_back(graph_supertransitivity(e6, u));
    CHECK(*std::max_element(sts.begin(), sts.end()) == 2);
    CHECK(*std::min_element(sts.begin(), sts.end()) == 1);

    CoxeterGraph a7 = build_graph(Kind::A, 7);
    CHECK(graph_supertransitivity(a7, 0) == 6);

    CoxeterGraph a11 = build_graph(Kind::A, 11);
    CHECK(graph_supertransitivity(a11, 0, 8) == 8);

    CoxeterGraph d5 = build_graph(Kind::D, 5);
    CHECK(graph_supertransitivity(d5, 2) == 2);

    CHECK_THROWS_AS(graph_supertransitivity(a7, 9), std::invalid_argument);
}

TEST_CASE("fixed-point polynomials and monotonicity") {
    CHECK(fixed_point_poly(3, 0) ==
          Poly::from_rationals({Rational(2), Rational(-7), Rational(2)}));
    CHECK(fixed_point_poly(4, 1) ==
          Poly::from_rationals({Rational(2), Rational(-4), Rational(-2), Rational(1)}));
    CHECK(fixed_point_poly(2, 0) ==
          Poly::from_rationals({Rational(1), Rational(-4), Rational(1)}));

    for (int b = 2; b <= 4; ++b) {
        for (int c = 0; c <= 1; ++c) {
            Poly sh = monotonicity_shift(b, c);
            bool positive_slope = false;
            for (int j = 0; j <= sh.degree(); ++j) {
                REQUIRE(sh.c[size_t(j)].is_rational());
                Rational cj = sh.c[size_t(j)].rational_value();
                CHECK(cj >= 0);
                if (j >= 1 && cj > 0) positive_slope = true;
            }
            CHECK(positive_slope);
        }
    }

    // the surviving case sits exactly on the boundary: the derivative of
    // f - x vanishes at x = 2 and is positive beyond
    Poly sh21 = monotonicity_shift(2, 1);
    CHECK(sh21.c[0].is_zero());
    CHECK(sh21 == Poly::from_rationals({Rational(0), Rational(8), Rational(8), Rational(2)}));

    CHECK_THROWS_AS(fixed_point_poly(5, 0), std::invalid_argument);
}

TEST_CASE("noncocommuting enumeration") {
    ClassificationReport rep = enumerate_noncocommuting();
    CHECK(rep.branch == "noncocommuting");
    REQUIRE(rep.cases.size() == 6);

    std::vector<std::string> labels;
    for (const auto& c : rep.cases) labels.push_back(c.label);
    std::vector<std::string> want = {"b=2,c=0", "b=2,c=1", "b=3,c=0",
                                     "b=3,c=1", "b=4,c=0", "b=4,c=1"};
    CHECK(labels == want);

    int survivors = 0;
    for (const auto& c : rep.cases) {
        CHECK(!c.checks.empty());
        if (c.survives) ++survivors;
    }
    CHECK(survivors == 1);

    const CaseCertificate& e6case = rep.cases[0];
    CHECK(e6case.reason == EliminationReason::bratteli_obstruction);
    CHECK(mentions(e6case, "A11, D7, E6"));
    CHECK(mentions(e6case, "axiom (external)"));

    const CaseCertificate& sur = rep.cases[1];
    CHECK(sur.survives);
    CHECK(sur.reason == EliminationReason::survivor);
    Cyc sq2 = Cyc::sqrt_of(2);
    REQUIRE(sur.indices.size() == 1);
    CHECK(sur.indices[0] == Cyc(6) + sq2 * Cyc(4));
    REQUIRE(sur.data.has_value());
    CHECK(sur.data->alpha == Cyc(2) + sq2);
    CHECK(sur.data->beta == sur.data->alpha);
    CHECK(sur.data->tr_ePQ.value() == sq2 * half());
    CHECK(sur.data->tr_ePeQ.value() == (sq2 * Cyc(3) - Cyc(4)) * half());
    CHECK(sur.data->tr_ePeQ.value() == (Cyc(4) + sq2 * Cyc(3)).inverse());
    CHECK(sur.fixed_point.eval(sur.data->alpha).is_zero());
    CHECK(!sur.data->cocommuting.value());

    CHECK(rep.cases[2].reason == EliminationReason::inadmissible_index);
    CHECK(rep.cases[3].reason == EliminationReason::pimsner_popa);
    CHECK(rep.cases[4].reason == EliminationReason::pimsner_popa);
    CHECK(rep.cases[5].reason == EliminationReason::inadmissible_index);
    CHECK(mentions(rep.cases[5], "strictly between 4cos^2(pi/6) and 4cos^2(pi/7)"));
}

TEST_CASE("cocommuting branch") {
    ClassificationReport rep = cocommuting_branch();
    CHECK(rep.branch == "cocommuting");
    REQUIRE(rep.cases.size() == 3);

    CHECK(rep.cases[0].reason == EliminationReason::pimsner_popa);
    CHECK(mentions(rep.cases[0], "1 - 1/x^2"));

    CHECK(rep.cases[1].reason == EliminationReason::duality_contradiction);
    CHECK(mentions(rep.cases[1], "3 + sqrt(5)"));
    CHECK(mentions(rep.cases[1], "neither is an integer"));

    const CaseCertificate& sur = rep.cases[2];
    CHECK(sur.survives);
    REQUIRE(sur.indices.size() == 1);
    CHECK(sur.indices[0] == Cyc(6));
    REQUIRE(sur.data.has_value());
    CHECK(sur.data->alpha == Cyc(3));
    CHECK(sur.data->beta == Cyc(2));
    CHECK(sur.data->gamma == Cyc(6));
    CHECK(sur.data->cocommuting.value());
    CHECK(mentions(sur, "discrepancy"));
    CHECK(mentions(sur, "S3"));
}

TEST_CASE("four equiangular projections") {
    CHECK(four_equiangular_projections() == Cyc(Rational(1) / 3));
}

TEST_CASE("numeric grid search for four equiangular projections") {
    // rank-one projections onto the lines spanned by v_1 = (1, 0) and
    // v_k = (sqrt(a), e^{i t_k} sqrt(1-a)); the first trace condition pins
    // tr(p_1 p_k) = a, and the remaining three conditions are scanned here
    bool found = false;
    for (int ia = 2; ia <= 90; ++ia) {
        double a = ia / 100.0;
        for (int i3 = 1; i3 < 72; ++i3) {
            double t3 = 2.0 * M_PI * i3 / 72.0;
            for (int i4 = i3 + 1; i4 < 72; ++i4) {
                double t4 = 2.0 * M_PI * i4 / 72.0;
                auto offset = [&](double s, double t) {
                    std::complex<double> z =
                        a + (1.0 - a) * std::exp(std::complex<double>(0.0, t - s));
                    return std::fabs(std::norm(z) - a);
                };
                double residual = offset(0.0, t3) + offset(0.0, t4) + offset(t3, t4);
                if (residual < 0.03) {
                    found = true;
                    CHECK(std::fabs(a - 1.0 / 3.0) < 0.05);
                }
            }
        }
    }
    CHECK(found);
}

TEST_CASE("quadrilateral data validation") {
    Cyc sq2 = Cyc::sqrt_of(2);
    QuadData q;
    q.alpha = Cyc(2) + sq2;
    q.beta = q.alpha;
    q.gamma = q.alpha * q.alpha;
    q.tr_eP = q.alpha.inverse();
    validate(q);

    QuadData bad = q;
    bad.gamma = Cyc(6);
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);

    QuadData badtrace = q;
    badtrace.tr_ePQ = Cyc(0);
    CHECK_THROWS_AS(validate(badtrace), std::invalid_argument);

    QuadData bigtrace = q;
    bigtrace.tr_ePQ = Cyc(2);
    CHECK_THROWS_AS(validate(bigtrace), std::invalid_argument);
}
