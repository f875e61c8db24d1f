#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "derivation.hpp"
#include "syntax.hpp"

// Derivation interchange:
//   {"rule": "<Rule>",
//    "sequent": {"antecedent": ["<regex text>", ...], "consequent": "<word>"},
//    "position": <int> | [<int>, <int>],     (omitted for axioms)
//    "premises": [ ... ]}

namespace dsmatch {

/// Raised when a proof document is not well-formed (bad JSON, missing field, unknown rule, bad regex).
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline nlohmann::json to_json(const Derivation& d) {
    nlohmann::json ante = nlohmann::json::array();
    for (const Regex& r : d.conclusion.antecedent) ante.push_back(render(r));

    nlohmann::json j;
    j["rule"] = std::string(rule_name(d.rule));
    j["sequent"] = {{"antecedent", std::move(ante)}, {"consequent", d.conclusion.consequent}};
    if (const auto* i = std::get_if<std::size_t>(&d.position)) {
        j["position"] = *i;
    } else if (const auto* s = std::get_if<Split>(&d.position)) {
        j["position"] = nlohmann::json::array({s->antecedent, s->word});
    }
    nlohmann::json premises = nlohmann::json::array();
    for (const Derivation& p : d.premises) premises.push_back(to_json(p));
    j["premises"] = std::move(premises);
    return j;
}

namespace detail {

inline std::size_t index_field(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw SchemaError(where + ": expected a non-negative integer");
    return v.get<std::size_t>();
}

inline Derivation from_json_at(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path + ": node is not an object");
    for (const char* key : {"rule", "sequent", "premises"}) {
        if (!j.contains(key)) throw SchemaError(path + ": missing \"" + key + "\"");
    }

    Derivation d;
    if (!j["rule"].is_string()) throw SchemaError(path + ": \"rule\" is not a string");
    const auto rule = rule_from_name(j["rule"].get<std::string>());
    if (!rule) throw SchemaError(path + ": unknown rule \"" + j["rule"].get<std::string>() + "\"");
    d.rule = *rule;

    const nlohmann::json& seq = j["sequent"];
    if (!seq.is_object() || !seq.contains("antecedent") || !seq.contains("consequent")) {
        throw SchemaError(path + ": \"sequent\" needs \"antecedent\" and \"consequent\"");
    }
    if (!seq["antecedent"].is_array()) throw SchemaError(path + ": \"antecedent\" is not an array");
    for (const nlohmann::json& item : seq["antecedent"]) {
        if (!item.is_string()) throw SchemaError(path + ": antecedent entries must be strings");
        try {
            d.conclusion.antecedent.push_back(parse(item.get<std::string>()));
        } catch (const ParseError& e) {
            throw SchemaError(path + ": bad regex \"" + item.get<std::string>() + "\": " + e.what());
        }
    }
    if (!seq["consequent"].is_string()) throw SchemaError(path + ": \"consequent\" is not a string");
    d.conclusion.consequent = seq["consequent"].get<std::string>();
    if (!is_valid_word(d.conclusion.consequent)) throw SchemaError(path + ": consequent has non-alphabet characters");

    if (j.contains("position")) {
        const nlohmann::json& pos = j["position"];
        if (pos.is_array()) {
            if (pos.size() != 2) throw SchemaError(path + ": split position must have two entries");
            d.position = Split{index_field(pos[0], path + ".position[0]"), index_field(pos[1], path + ".position[1]")};
        } else {
            d.position = index_field(pos, path + ".position");
        }
    }

    if (!j["premises"].is_array()) throw SchemaError(path + ": \"premises\" is not an array");
    std::size_t k = 0;
    for (const nlohmann::json& p : j["premises"]) d.premises.push_back(from_json_at(p, path + "/" + std::to_string(k++)));
    return d;
}

inline void render_tree_into(const Derivation& d, std::size_t depth, std::string& out) {
    out.append(2 * depth, ' ');
    out += rule_name(d.rule);
    out += "  ";
    out += render(d.conclusion);
    out += '\n';
    for (const Derivation& p : d.premises) render_tree_into(p, depth + 1, out);
}

}  // namespace detail

/// Structural decoding only; rule validity is check_derivation's job.
inline Derivation from_json(const nlohmann::json& j) { return detail::from_json_at(j, "root"); }

inline Derivation parse_proof(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return from_json(j);
}

/// One node per line, conclusion first, premises indented by two spaces per level.
inline std::string render_tree(const Derivation& d) {
    std::string out;
    detail::render_tree_into(d, 0, out);
    return out;
}

}  // namespace dsmatch
