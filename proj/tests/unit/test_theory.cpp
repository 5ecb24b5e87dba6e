#include <doctest.h>

#include <cmath>
#include <vector>

#include "extal/model_file.hpp"
#include "extal/rng.hpp"
#include "extal/theory.hpp"

using namespace extal;

namespace {

LetterLawSummary identity_uniform_law() {
    GenerativeParams p = builtin_identity_keep90().params;
    return joint_letter_law(p);
}

LetterLawSummary uniform_independent_law() {
    return product_letter_law(std::vector<double>{0.25, 0.25, 0.25, 0.25});
}

}  // namespace

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.8) == doctest::Approx(0.7219280948873623).epsilon(1e-12));
    CHECK(binary_entropy(0.2) == doctest::Approx(binary_entropy(0.8)).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(-0.01), DomainError);
    CHECK_THROWS_AS(binary_entropy(1.01), DomainError);
}

TEST_CASE("joint law of the identity channel on a uniform ancestor") {
    const LetterLawSummary s = identity_uniform_law();
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            CHECK(s.joint[a][b] == doctest::Approx(a == b ? 0.25 : 0.0).epsilon(1e-14));
        }
    }
    CHECK(s.p0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.q_bar == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.p_bar == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(s.q == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(s.rho == doctest::Approx(16.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("joint law of the uniform channel (independence special case)") {
    GenerativeParams p = builtin_independent_uniform().params;
    const LetterLawSummary s = joint_letter_law(p);
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            CHECK(s.joint[a][b] == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
        }
    }
    CHECK(s.p0 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(s.q_bar == doctest::Approx(s.q).epsilon(1e-12));
    CHECK(s.rho == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-letter worked law") {
    GenerativeParams p;
    p.alphabet = Alphabet("AB");
    p.ancestor_dist = {0.5, 0.5};
    p.channel = {{0.9, 0.1}, {0.1, 0.9}};
    p.keep_prob = 1.0;
    p.target_len = 1;
    const LetterLawSummary s = joint_letter_law(p);
    CHECK(s.joint[0][0] == doctest::Approx(0.41).epsilon(1e-12));
    CHECK(s.joint[0][1] == doctest::Approx(0.09).epsilon(1e-12));
    CHECK(s.joint[1][0] == doctest::Approx(0.09).epsilon(1e-12));
    CHECK(s.joint[1][1] == doctest::Approx(0.41).epsilon(1e-12));
    CHECK(s.p0 == doctest::Approx(0.82).epsilon(1e-12));
}

TEST_CASE("independence reduction for random product laws") {
    Rng rng(808);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> dist(4);
        double sum = 0.0;
        for (auto& v : dist) {
            v = 0.05 + rng.next_double();
            sum += v;
        }
        for (auto& v : dist) v /= sum;
        const LetterLawSummary s = product_letter_law(dist);
        CHECK(s.q_bar == doctest::Approx(s.q).epsilon(1e-12));
        CHECK(s.rho * (s.p_bar * s.q) == doctest::Approx(s.p0 * s.q_bar).epsilon(1e-12));
    }
}

TEST_CASE("condition evaluator") {
    SUBCASE("uniform independent law is not satisfied") {
        const ConditionReport r = condition_lhs(uniform_independent_law(), 0.6544);
        // direct arithmetic: -2g + (1-g) log2(9/16) + 2h(g) at g = 0.6544
        const double g = 0.6544;
        const double expected =
            g * std::log2(0.25) + (1 - g) * std::log2(0.5625) + 2 * binary_entropy(g);
        CHECK(r.lhs == doctest::Approx(expected).epsilon(1e-12));
        CHECK(r.lhs == doctest::Approx(0.2644800334).epsilon(1e-9));
        CHECK_FALSE(r.satisfied);
        CHECK(r.terms[2] == 0.0);  // rho = 1
    }
    SUBCASE("identity channel at gamma 1 gives exactly -2") {
        const ConditionReport r = condition_lhs(identity_uniform_law(), 1.0);
        CHECK(r.lhs == -2.0);
        CHECK(r.satisfied);
        CHECK(r.terms[0] == -2.0);
        CHECK(r.terms[1] == 0.0);
        CHECK(r.terms[2] == 0.0);
        CHECK(r.terms[3] == 0.0);
    }
    SUBCASE("entropy forces the gamma = 1/2 shape") {
        const LetterLawSummary s = identity_uniform_law();
        const ConditionReport r = condition_lhs(s, 0.5);
        const double expected = 0.5 * std::log2(s.p_bar) + 0.5 * std::log2(s.q * s.q_bar) +
                                0.5 * std::log2(std::max(s.rho, 1.0)) + 2.0;
        CHECK(r.lhs == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("term decomposition") {
        for (double g : {0.1, 0.3, 0.6544, 0.9, 1.0}) {
            const ConditionReport r = condition_lhs(uniform_independent_law(), g);
            CHECK(r.lhs ==
                  doctest::Approx(r.terms[0] + r.terms[1] + r.terms[2] + r.terms[3]).epsilon(1e-12));
        }
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(condition_lhs(uniform_independent_law(), 0.0), DomainError);
        CHECK_THROWS_AS(condition_lhs(uniform_independent_law(), 1.5), DomainError);
        CHECK_THROWS_AS(condition_lhs(uniform_independent_law(), -0.2), DomainError);
    }
    SUBCASE("lhs decreases in gamma near 1 for the identity-channel law") {
        const LetterLawSummary s = identity_uniform_law();
        const double a = condition_lhs(s, 0.90).lhs;
        const double b = condition_lhs(s, 0.95).lhs;
        const double c = condition_lhs(s, 1.00).lhs;
        CHECK(a > b);
        CHECK(b > c);
    }
}

TEST_CASE("gamma estimation") {
    SUBCASE("point mass distribution estimates exactly 1") {
        const IndependentSpec spec{Alphabet::dna(), {1.0, 0.0, 0.0, 0.0}};
        const GammaEstimate est = estimate_gamma(GeneratorSpec{spec}, 50, 5, 9);
        CHECK(est.mean == 1.0);
        CHECK(est.stddev == 0.0);
    }
    SUBCASE("deterministic in the seed") {
        const IndependentSpec spec{Alphabet::dna(), {0.25, 0.25, 0.25, 0.25}};
        const GammaEstimate a = estimate_gamma(GeneratorSpec{spec}, 200, 5, 77);
        const GammaEstimate b = estimate_gamma(GeneratorSpec{spec}, 200, 5, 77);
        CHECK(a.values == b.values);
        CHECK(a.mean == b.mean);
    }
    SUBCASE("related beats independent on paired streams") {
        GenerativeParams identity = builtin_identity_keep90().params;
        const IndependentSpec uniform{Alphabet::dna(), {0.25, 0.25, 0.25, 0.25}};
        const GammaEstimate rel = estimate_gamma(GeneratorSpec{identity}, 300, 8, 21);
        const GammaEstimate ind = estimate_gamma(GeneratorSpec{uniform}, 300, 8, 21);
        CHECK(rel.mean > ind.mean);
    }
}

TEST_CASE("quantile is the linear-interpolation estimator") {
    const std::vector<double> v{4.0, 1.0, 3.0, 2.0};
    CHECK(quantile(v, 0.5) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(quantile(v, 0.25) == doctest::Approx(1.75).epsilon(1e-12));
    CHECK(quantile(v, 0.75) == doctest::Approx(3.25).epsilon(1e-12));
    CHECK(quantile({5.0, 1.0, 9.0}, 0.5) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(quantile({7.0}, 0.0) == 7.0);
    CHECK(quantile({7.0}, 1.0) == 7.0);
    CHECK_THROWS_AS(quantile({}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(quantile({1.0}, 1.5), DomainError);
}

TEST_CASE("scaling experiment shape and determinism") {
    const std::vector<LabeledModel> models{
        {"related", GeneratorSpec{builtin_related_default().params}},
        {"independent", GeneratorSpec{IndependentSpec{Alphabet::dna(), {0.25, 0.25, 0.25, 0.25}}}},
    };
    const std::vector<int> ns{30, 60};

    CHECK_THROWS_AS(scaling_experiment(models, std::vector<int>{60, 30}, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaling_experiment(models, std::vector<int>{}, 2, 1), std::invalid_argument);

    const ScalingResult a = scaling_experiment(models, ns, 3, 11);
    const ScalingResult b = scaling_experiment(models, ns, 3, 11);
    REQUIRE(a.rows.size() == 12);
    REQUIRE(a.aggregates.size() == 4);
    for (std::size_t k = 0; k < a.rows.size(); ++k) {
        CHECK(a.rows[k].model == b.rows[k].model);
        CHECK(a.rows[k].seed == b.rows[k].seed);
        CHECK(a.rows[k].lcs == b.rows[k].lcs);
        CHECK(a.rows[k].vertical == b.rows[k].vertical);
    }

    // ordering by (model, n, rep)
    CHECK(a.rows[0].model == "related");
    CHECK(a.rows[0].n == 30);
    CHECK(a.rows[2].rep == 2);
    CHECK(a.rows[3].n == 60);
    CHECK(a.rows[6].model == "independent");

    SUBCASE("single n produces aggregates without ratios") {
        const ScalingResult single = scaling_experiment(models, std::vector<int>{40}, 2, 5);
        CHECK(single.aggregates.size() == 2);
        CHECK(single.aggregates[0].n == 40);
        CHECK(single.aggregates[0].count == 2);
    }
}
