#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "extal/errors.hpp"
#include "extal/genmodel.hpp"

namespace extal {

struct ModelFile {
    std::string name;
    GenerativeParams params;
};

/// Model description: {"name": ..., "alphabet": "ACGT", "ancestor_dist":
/// [...], "channel": [[...], ...] or flat row-major [...], "keep_prob": p}.
inline ModelFile parse_model_json(const std::string& text, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(origin + ": not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw ParseError(origin + ": top level must be an object");

    auto require = [&](const char* field) -> const nlohmann::json& {
        if (!doc.contains(field)) {
            throw ParseError(origin + ": missing field \"" + field + "\"");
        }
        return doc.at(field);
    };

    ModelFile out;
    out.name = doc.value("name", "");

    const auto& alpha = require("alphabet");
    if (!alpha.is_string() || alpha.get<std::string>().size() < 2) {
        throw ParseError(origin + ": \"alphabet\" must be a string of at least 2 symbols");
    }
    try {
        out.params.alphabet = Alphabet(alpha.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(origin + ": \"alphabet\": " + e.what());
    }
    const std::size_t k = static_cast<std::size_t>(out.params.alphabet.size());

    const auto& dist = require("ancestor_dist");
    if (!dist.is_array() || dist.size() != k) {
        throw ParseError(origin + ": \"ancestor_dist\" must be an array of " + std::to_string(k) +
                         " numbers");
    }
    for (const auto& v : dist) {
        if (!v.is_number()) throw ParseError(origin + ": \"ancestor_dist\" entries must be numbers");
        out.params.ancestor_dist.push_back(v.get<double>());
    }

    const auto& chan = require("channel");
    if (!chan.is_array()) throw ParseError(origin + ": \"channel\" must be an array");
    if (!chan.empty() && chan.front().is_array()) {
        if (chan.size() != k) {
            throw ParseError(origin + ": \"channel\" must have " + std::to_string(k) + " rows");
        }
        for (const auto& row : chan) {
            if (!row.is_array() || row.size() != k) {
                throw ParseError(origin + ": every \"channel\" row must have " + std::to_string(k) +
                                 " numbers");
            }
            std::vector<double> r;
            for (const auto& v : row) {
                if (!v.is_number()) throw ParseError(origin + ": \"channel\" entries must be numbers");
                r.push_back(v.get<double>());
            }
            out.params.channel.push_back(std::move(r));
        }
    } else {
        if (chan.size() != k * k) {
            throw ParseError(origin + ": flat \"channel\" must have " + std::to_string(k * k) +
                             " numbers (row-major)");
        }
        for (std::size_t z = 0; z < k; ++z) {
            std::vector<double> r;
            for (std::size_t a = 0; a < k; ++a) {
                const auto& v = chan.at(z * k + a);
                if (!v.is_number()) throw ParseError(origin + ": \"channel\" entries must be numbers");
                r.push_back(v.get<double>());
            }
            out.params.channel.push_back(std::move(r));
        }
    }

    const auto& keep = require("keep_prob");
    if (!keep.is_number()) throw ParseError(origin + ": \"keep_prob\" must be a number");
    out.params.keep_prob = keep.get<double>();

    out.params.target_len = 1;  // callers set the real length per run
    try {
        out.params.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(origin + ": " + e.what());
    }
    return out;
}

inline ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    ModelFile m = parse_model_json(buf.str(), path);
    if (m.name.empty()) {
        std::string stem = path;
        if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
            stem = stem.substr(slash + 1);
        if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0)
            stem = stem.substr(0, dot);
        m.name = stem;
    }
    return m;
}

inline nlohmann::json model_to_json(const ModelFile& model) {
    nlohmann::json doc;
    doc["name"] = model.name;
    doc["alphabet"] = model.params.alphabet.symbols();
    doc["ancestor_dist"] = model.params.ancestor_dist;
    doc["channel"] = model.params.channel;
    doc["keep_prob"] = model.params.keep_prob;
    return doc;
}

// Built-in models, usable anywhere a model file path is accepted.

inline ModelFile builtin_related_default() {
    ModelFile m;
    m.name = "related-default";
    m.params.alphabet = Alphabet::dna();
    m.params.ancestor_dist = {0.25, 0.25, 0.25, 0.25};
    m.params.channel = {{0.85, 0.05, 0.05, 0.05},
                        {0.05, 0.85, 0.05, 0.05},
                        {0.05, 0.05, 0.85, 0.05},
                        {0.05, 0.05, 0.05, 0.85}};
    m.params.keep_prob = 0.95;
    m.params.target_len = 1;
    return m;
}

inline ModelFile builtin_independent_uniform() {
    ModelFile m;
    m.name = "independent-uniform";
    m.params.alphabet = Alphabet::dna();
    m.params.ancestor_dist = {0.25, 0.25, 0.25, 0.25};
    // uniform channel rows: mutation output ignores the ancestor, so the two
    // copies are independent
    m.params.channel = {{0.25, 0.25, 0.25, 0.25},
                        {0.25, 0.25, 0.25, 0.25},
                        {0.25, 0.25, 0.25, 0.25},
                        {0.25, 0.25, 0.25, 0.25}};
    m.params.keep_prob = 0.95;
    m.params.target_len = 1;
    return m;
}

inline ModelFile builtin_identity_keep90() {
    ModelFile m;
    m.name = "identity-keep090";
    m.params.alphabet = Alphabet::dna();
    m.params.ancestor_dist = {0.25, 0.25, 0.25, 0.25};
    m.params.channel = {{1.0, 0.0, 0.0, 0.0},
                        {0.0, 1.0, 0.0, 0.0},
                        {0.0, 0.0, 1.0, 0.0},
                        {0.0, 0.0, 0.0, 1.0}};
    m.params.keep_prob = 0.9;
    m.params.target_len = 1;
    return m;
}

/// Resolves a --model argument: built-in name first, then filesystem path.
inline ModelFile resolve_model(const std::string& name_or_path) {
    if (name_or_path == "related-default") return builtin_related_default();
    if (name_or_path == "independent-uniform") return builtin_independent_uniform();
    if (name_or_path == "identity-keep090") return builtin_identity_keep90();
    return load_model_file(name_or_path);
}

}  // namespace extal
