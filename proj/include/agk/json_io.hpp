#pragma once

#include <string>

#include <json.hpp>

#include "agk/affine.hpp"
#include "agk/generators.hpp"
#include "agk/harness.hpp"
#include "agk/matrix.hpp"
#include "agk/vectordecomp.hpp"

namespace agk {

using nlohmann::json;

// Matrix <-> {"n": 3, "rows": [[...], [...], [...]]}

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.dim()}, {"rows", std::move(rows)}};
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows"))
        throw std::invalid_argument("matrix JSON: expected {\"n\": ..., \"rows\": [[...]]}");
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix JSON: empty rows");
    const std::size_t n = rows.size();
    if (j.contains("n") && j.at("n").get<std::size_t>() != n)
        throw std::invalid_argument("matrix JSON: n does not match row count");
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("matrix JSON: matrix is not square");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = row.at(k).get<double>();
    }
    return m;
}

// AffineElement <-> {"translation": [...], "matrix": {...}}

inline json to_json(const AffineElement& g) {
    return json{{"translation", g.translation}, {"matrix", to_json(g.linear)}};
}

inline AffineElement affine_from_json(const json& j) {
    if (!j.is_object() || !j.contains("translation") || !j.contains("matrix"))
        throw std::invalid_argument(
            "element JSON: expected {\"translation\": [...], \"matrix\": {...}}");
    Vec x = j.at("translation").get<Vec>();
    Matrix a = matrix_from_json(j.at("matrix"));
    if (x.size() != a.dim())
        throw std::invalid_argument("element JSON: translation/matrix dimension mismatch");
    return AffineElement(std::move(x), std::move(a));
}

// Generator letters; coordinate indices are 1-based in JSON.

inline json to_json(const GeneratorLetter& letter, std::size_t n) {
    json out;
    std::visit(
        [&](const auto& l) {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, PlanarRotation>) {
                out = json{{"kind", "planar-rotation"},
                           {"i", l.i + 1},
                           {"j", l.j + 1},
                           {"theta", l.theta}};
            } else if constexpr (std::is_same_v<L, Transvection>) {
                out = json{{"kind", "transvection"},
                           {"i", l.i + 1},
                           {"j", l.j + 1},
                           {"lambda", l.lambda}};
            } else if constexpr (std::is_same_v<L, ScalarDiagonal>) {
                out = json{{"kind", "scalar"}, {"lambda", l.lambda}};
            } else if constexpr (std::is_same_v<L, BlockGenerator>) {
                out = json{{"kind", "block"},
                           {"position", l.position == BlockPosition::UPPER ? "upper" : "lower"},
                           {"matrix", to_json(l.b)}};
            } else {
                out = json{{"kind", "commutator-pair"},
                           {"g", to_json(l.g)},
                           {"h", to_json(l.h)}};
            }
        },
        letter);
    (void)n;
    return out;
}

inline GeneratorLetter letter_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "planar-rotation")
        return PlanarRotation(j.at("i").get<std::size_t>() - 1, j.at("j").get<std::size_t>() - 1,
                              j.at("theta").get<double>());
    if (kind == "transvection")
        return Transvection(j.at("i").get<std::size_t>() - 1, j.at("j").get<std::size_t>() - 1,
                            j.at("lambda").get<double>());
    if (kind == "scalar") return ScalarDiagonal{j.at("lambda").get<double>()};
    if (kind == "block")
        return BlockGenerator(j.at("position").get<std::string>() == "upper" ? BlockPosition::UPPER
                                                                             : BlockPosition::LOWER,
                              matrix_from_json(j.at("matrix")));
    if (kind == "commutator-pair")
        return CommutatorPair{matrix_from_json(j.at("g")), matrix_from_json(j.at("h"))};
    throw std::invalid_argument("letter JSON: unknown kind " + kind);
}

inline json to_json(const GeneratorWord& w) {
    json letters = json::array();
    for (const auto& l : w.letters) letters.push_back(to_json(l, w.target_dim));
    return json{{"n", w.target_dim}, {"letters", std::move(letters)}};
}

inline GeneratorWord word_from_json(const json& j) {
    GeneratorWord w(j.at("n").get<std::size_t>());
    for (const json& l : j.at("letters")) w.letters.push_back(letter_from_json(l));
    return w;
}

inline json to_json(const SphereSumWitness& w) {
    return json{{"y", w.y}, {"z", w.z}, {"radius", w.radius}};
}

inline json to_json(const VerificationReport& r) {
    return json{{"property", property_name(r.property)}, {"n", r.n},
                {"trials", r.trials},                    {"failures", r.failures},
                {"max_error", r.max_error},              {"witnesses", r.witnesses}};
}

}  // namespace agk
