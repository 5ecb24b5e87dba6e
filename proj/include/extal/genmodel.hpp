#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "extal/alphabet.hpp"
#include "extal/errors.hpp"
#include "extal/rng.hpp"
#include "extal/sequence.hpp"

namespace extal {

inline constexpr double prob_sum_tol = 1e-12;

enum class ModelTag { related, independent };

/// Hidden common-ancestor model: i.i.d. ancestor letters, one shared
/// letter-mutation channel applied independently to each copy, and
/// independent Bernoulli(keep_prob) survival per letter.
struct GenerativeParams {
    Alphabet alphabet = Alphabet::dna();
    std::vector<double> ancestor_dist;               // law of the ancestor letter
    std::vector<std::vector<double>> channel;        // channel[z][a] = P(z mutates to a)
    double keep_prob = 1.0;                          // P(letter survives deletion)
    int target_len = 0;
    std::uint64_t seed = 0;

    void validate() const {
        const std::size_t k = static_cast<std::size_t>(alphabet.size());
        auto check_dist = [&](std::span<const double> d, const std::string& name) {
            if (d.size() != k) {
                throw std::invalid_argument(name + " must have " + std::to_string(k) + " entries");
            }
            double sum = 0.0;
            for (double v : d) {
                if (v < 0.0) throw std::invalid_argument(name + " has a negative entry");
                sum += v;
            }
            if (std::abs(sum - 1.0) > prob_sum_tol) {
                throw std::invalid_argument(name + " must sum to 1 (got " + std::to_string(sum) + ")");
            }
        };
        check_dist(ancestor_dist, "ancestor_dist");
        if (channel.size() != k) {
            throw std::invalid_argument("channel must have " + std::to_string(k) + " rows");
        }
        for (std::size_t z = 0; z < k; ++z) {
            check_dist(channel[z], "channel row " + std::to_string(z));
        }
        if (!(keep_prob > 0.0) || keep_prob > 1.0) {
            throw std::invalid_argument("keep_prob must be in (0, 1]");
        }
        if (target_len < 1) throw std::invalid_argument("target_len must be >= 1");
        if (static_cast<double>(target_len) / keep_prob > 1e9) {
            throw DegenerateModelError("expected ancestor length " +
                                       std::to_string(static_cast<double>(target_len) / keep_prob) +
                                       " exceeds 1e9");
        }
    }
};

struct RelatedPair {
    Sequence x;
    Sequence y;
    std::int64_t ancestor_len_used = 0;
    ModelTag tag = ModelTag::related;
};

/// Draws from the common-ancestor model until both kept sequences hold
/// target_len letters, then truncates each to exactly target_len. Every
/// ancestor position consumes exactly five draws (ancestor letter, X letter,
/// Y letter, X keep, Y keep) so prefixes never depend on which side fills
/// first.
inline RelatedPair generate_related_pair(const GenerativeParams& params) {
    params.validate();
    const int n = params.target_len;
    Rng rng(params.seed);

    std::string xs, ys;
    xs.reserve(static_cast<std::size_t>(n));
    ys.reserve(static_cast<std::size_t>(n));
    std::int64_t used = 0;
    while (static_cast<int>(xs.size()) < n || static_cast<int>(ys.size()) < n) {
        ++used;
        const int z = rng.categorical(params.ancestor_dist);
        const int a = rng.categorical(params.channel[static_cast<std::size_t>(z)]);
        const int b = rng.categorical(params.channel[static_cast<std::size_t>(z)]);
        const bool keep_x = rng.bernoulli(params.keep_prob);
        const bool keep_y = rng.bernoulli(params.keep_prob);
        if (keep_x && static_cast<int>(xs.size()) < n) xs.push_back(params.alphabet.symbol(a));
        if (keep_y && static_cast<int>(ys.size()) < n) ys.push_back(params.alphabet.symbol(b));
    }

    RelatedPair out;
    out.x = Sequence{"sim_x", std::move(xs)};
    out.y = Sequence{"sim_y", std::move(ys)};
    out.ancestor_len_used = used;
    out.tag = ModelTag::related;
    return out;
}

/// Two i.i.d. sequences of length n from dist, on independent sub-streams
/// (seed, 1) and (seed, 2).
inline RelatedPair generate_independent_pair(const Alphabet& alphabet,
                                             std::span<const double> dist, int n,
                                             std::uint64_t seed) {
    if (dist.size() != static_cast<std::size_t>(alphabet.size())) {
        throw std::invalid_argument("dist size does not match alphabet");
    }
    double sum = 0.0;
    for (double v : dist) {
        if (v < 0.0) throw std::invalid_argument("dist has a negative entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > prob_sum_tol) throw std::invalid_argument("dist must sum to 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");

    RelatedPair out;
    out.tag = ModelTag::independent;
    out.ancestor_len_used = n;
    Rng rx(derive_stream(seed, 1));
    Rng ry(derive_stream(seed, 2));
    std::string xs, ys;
    xs.reserve(static_cast<std::size_t>(n));
    ys.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) xs.push_back(alphabet.symbol(rx.categorical(dist)));
    for (int t = 0; t < n; ++t) ys.push_back(alphabet.symbol(ry.categorical(dist)));
    out.x = Sequence{"sim_x", std::move(xs)};
    out.y = Sequence{"sim_y", std::move(ys)};
    return out;
}

}  // namespace extal
