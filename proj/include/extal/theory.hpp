#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "extal/errors.hpp"
#include "extal/genmodel.hpp"
#include "extal/lcs.hpp"
#include "extal/rng.hpp"
#include "extal/stats.hpp"

namespace extal {

/// h(t) = -t log2 t - (1-t) log2 (1-t), with 0 log2 0 := 0.
inline double binary_entropy(double t) {
    if (!(t >= 0.0) || t > 1.0) {
        throw DomainError("binary_entropy argument " + std::to_string(t) + " outside [0, 1]");
    }
    double h = 0.0;
    if (t > 0.0) h -= t * std::log2(t);
    if (t < 1.0) h -= (1.0 - t) * std::log2(1.0 - t);
    return h;
}

/// Joint law of one (X-letter, Y-letter) pair at a survived ancestor
/// position, with the scalar summaries entering the relatedness condition.
struct LetterLawSummary {
    std::vector<std::vector<double>> joint;  // J[a][b] = P(X=a, Y=b)
    std::vector<double> marginal;            // p(a) = P(X=a)
    double p_bar = 0.0;                      // max_a p(a)
    double q = 0.0;                          // 1 - min_a p(a)
    double p0 = 0.0;                         // P(X=Y) = sum_a J[a][a]
    double q_bar = 0.0;                      // 1 - min_{a,b} P(X=a | Y=b)
    double rho = 0.0;                        // p0 q_bar / (p_bar q)
};

namespace detail {

inline LetterLawSummary summarize_joint(std::vector<std::vector<double>> joint) {
    const std::size_t k = joint.size();
    double total = 0.0;
    for (const auto& row : joint) {
        for (double v : row) {
            if (v < -prob_sum_tol) throw std::invalid_argument("joint law has a negative entry");
            total += v;
        }
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("joint law must sum to 1 (got " + std::to_string(total) + ")");
    }

    LetterLawSummary s;
    s.joint = std::move(joint);
    s.marginal.assign(k, 0.0);
    std::vector<double> col(k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            s.marginal[a] += s.joint[a][b];
            col[b] += s.joint[a][b];
        }
        s.p0 += s.joint[a][a];
    }
    s.p_bar = *std::max_element(s.marginal.begin(), s.marginal.end());
    s.q = 1.0 - *std::min_element(s.marginal.begin(), s.marginal.end());

    // conditionals skip letters b that Y never produces
    double min_cond = 1.0;
    bool any_col = false;
    for (std::size_t b = 0; b < k; ++b) {
        if (col[b] <= 0.0) continue;
        any_col = true;
        for (std::size_t a = 0; a < k; ++a) {
            min_cond = std::min(min_cond, s.joint[a][b] / col[b]);
        }
    }
    if (!any_col) throw DegenerateLawError("q_bar", "every Y-letter has zero probability");
    s.q_bar = 1.0 - min_cond;

    if (s.p_bar <= 0.0) throw DegenerateLawError("p_bar", "all X-letters have zero probability");
    if (s.q <= 0.0) {
        throw DegenerateLawError("q", "min_a p(a) = 1; condition terms are undefined");
    }
    s.rho = s.p0 * s.q_bar / (s.p_bar * s.q);
    return s;
}

}  // namespace detail

/// J[a][b] = sum_z ancestor(z) channel[z][a] channel[z][b].
inline LetterLawSummary joint_letter_law(const GenerativeParams& params) {
    GenerativeParams checked = params;
    if (checked.target_len < 1) checked.target_len = 1;  // law does not involve lengths
    checked.validate();
    const std::size_t k = static_cast<std::size_t>(params.alphabet.size());
    std::vector<std::vector<double>> joint(k, std::vector<double>(k, 0.0));
    for (std::size_t z = 0; z < k; ++z) {
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                joint[a][b] += params.ancestor_dist[z] * params.channel[z][a] * params.channel[z][b];
            }
        }
    }
    return detail::summarize_joint(std::move(joint));
}

/// Product law J = dist (x) dist: the independent-pair special case.
inline LetterLawSummary product_letter_law(std::span<const double> dist) {
    const std::size_t k = dist.size();
    std::vector<std::vector<double>> joint(k, std::vector<double>(k, 0.0));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) joint[a][b] = dist[a] * dist[b];
    }
    return detail::summarize_joint(std::move(joint));
}

struct ConditionReport {
    double gamma_r = 0.0;
    std::array<double, 4> terms{};  // gamma log2 p_bar | (1-gamma) log2(q q_bar)
                                    // | min(1-gamma, gamma) log2(max(rho, 1)) | 2 h(gamma)
    double lhs = 0.0;
    bool satisfied = false;
    LetterLawSummary summary;
};

/// Relatedness condition: the four terms as written, with min/max for the
/// lattice operations. A zero coefficient zeroes its term without evaluating
/// the log.
inline ConditionReport condition_lhs(const LetterLawSummary& summary, double gamma_r) {
    if (!(gamma_r > 0.0) || gamma_r > 1.0) {
        throw DomainError("gamma_R = " + std::to_string(gamma_r) + " outside (0, 1]");
    }
    ConditionReport r;
    r.gamma_r = gamma_r;
    r.summary = summary;

    r.terms[0] = gamma_r * std::log2(summary.p_bar);
    const double co = 1.0 - gamma_r;
    if (co == 0.0) {
        r.terms[1] = 0.0;
    } else {
        const double qq = summary.q * summary.q_bar;
        if (qq <= 0.0) throw DegenerateLawError("q_bar", "q * q_bar = 0 with nonzero coefficient");
        r.terms[1] = co * std::log2(qq);
    }
    const double wedge = std::min(co, gamma_r);
    r.terms[2] = wedge == 0.0 ? 0.0 : wedge * std::log2(std::max(summary.rho, 1.0));
    r.terms[3] = 2.0 * binary_entropy(gamma_r);

    r.lhs = r.terms[0] + r.terms[1] + r.terms[2] + r.terms[3];
    r.satisfied = r.lhs < 0.0;
    return r;
}

struct IndependentSpec {
    Alphabet alphabet = Alphabet::dna();
    std::vector<double> dist;
};

using GeneratorSpec = std::variant<GenerativeParams, IndependentSpec>;

inline RelatedPair generate_pair(const GeneratorSpec& spec, int n, std::uint64_t stream_seed) {
    if (const auto* related = std::get_if<GenerativeParams>(&spec)) {
        GenerativeParams p = *related;
        p.target_len = n;
        p.seed = stream_seed;
        return generate_related_pair(p);
    }
    const auto& ind = std::get<IndependentSpec>(spec);
    return generate_independent_pair(ind.alphabet, ind.dist, n, stream_seed);
}

struct GammaEstimate {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation
    int n = 0;
    int reps = 0;
    std::vector<double> values;  // L/n per replicate, in replicate order
};

/// Mean and spread of L/n over seeded replicates; replicate r runs on stream
/// (seed, r), independent of the model so paired-seed comparisons line up.
inline GammaEstimate estimate_gamma(const GeneratorSpec& spec, int n, int reps,
                                    std::uint64_t seed,
                                    std::uint64_t budget = default_cell_budget) {
    if (n < 1 || reps < 1) throw std::invalid_argument("n and reps must be >= 1");
    GammaEstimate est;
    est.n = n;
    est.reps = reps;
    est.values.reserve(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        const RelatedPair pair = generate_pair(spec, n, derive_stream(seed, static_cast<std::uint64_t>(r)));
        est.values.push_back(static_cast<double>(lcs_length(pair.x, pair.y, budget)) /
                             static_cast<double>(n));
    }
    double sum = 0.0;
    for (double v : est.values) sum += v;
    est.mean = sum / static_cast<double>(reps);
    double ss = 0.0;
    for (double v : est.values) ss += (v - est.mean) * (v - est.mean);
    est.stddev = reps > 1 ? std::sqrt(ss / static_cast<double>(reps - 1)) : 0.0;
    return est;
}

/// Linear-interpolation quantile (R type 7) of an unsorted sample.
inline double quantile(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("quantile of empty sample");
    if (!(p >= 0.0) || p > 1.0) throw DomainError("quantile p outside [0, 1]");
    std::sort(values.begin(), values.end());
    const double h = static_cast<double>(values.size() - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

struct LabeledModel {
    std::string label;
    GeneratorSpec spec;
};

struct ScalingRow {
    std::string model;
    int n = 0;
    int rep = 0;
    std::uint64_t seed = 0;
    int lcs = 0;
    int vertical = 0;
    int horizontal = 0;
    int stretch = 0;
    int uniq = 0;
};

struct ScalingAggregate {
    std::string model;
    int n = 0;
    int count = 0;
    double median_l = 0.0;
    double median_v = 0.0;
    double q1_v = 0.0;
    double q3_v = 0.0;
    double median_h = 0.0;
};

struct ScalingResult {
    std::vector<ScalingRow> rows;        // ordered by (model, n, rep)
    std::vector<ScalingAggregate> aggregates;
};

/// Seeded generate-and-compare sweep over (model, n, rep); the stream for a
/// row is derived from (seed, model index, n, rep).
inline ScalingResult scaling_experiment(std::span<const LabeledModel> models,
                                        std::span<const int> n_list, int reps,
                                        std::uint64_t seed,
                                        std::uint64_t budget = default_cell_budget) {
    if (models.empty()) throw std::invalid_argument("no models given");
    if (n_list.empty()) throw std::invalid_argument("n_list is empty");
    for (std::size_t t = 1; t < n_list.size(); ++t) {
        if (n_list[t] <= n_list[t - 1]) throw std::invalid_argument("n_list must be ascending");
    }
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");

    ScalingResult out;
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
        for (int n : n_list) {
            std::vector<double> ls, vs, hs;
            for (int r = 0; r < reps; ++r) {
                const std::uint64_t stream = derive_stream(seed, mi, static_cast<std::uint64_t>(n),
                                                           static_cast<std::uint64_t>(r));
                const RelatedPair pair = generate_pair(models[mi].spec, n, stream);
                const HomologyReport rep = compare(pair.x, pair.y, budget);
                out.rows.push_back(ScalingRow{models[mi].label, n, r, stream, rep.lcs, rep.vertical,
                                              rep.horizontal, rep.nonuniq_stretch, rep.uniq_points});
                ls.push_back(rep.lcs);
                vs.push_back(rep.vertical);
                hs.push_back(rep.horizontal);
            }
            out.aggregates.push_back(ScalingAggregate{models[mi].label, n, reps,
                                                      quantile(ls, 0.5), quantile(vs, 0.5),
                                                      quantile(vs, 0.25), quantile(vs, 0.75),
                                                      quantile(hs, 0.5)});
        }
    }
    return out;
}

}  // namespace extal
