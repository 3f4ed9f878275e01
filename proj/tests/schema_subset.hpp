// Validator for the subset of JSON Schema draft-07 used by the shipped
// report schema: $ref into definitions, type, enum, const, required,
// properties, additionalProperties (boolean form), items (single schema),
// allOf, and if/then.  Returns an error description or nullopt.
#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace schema_subset {

using nlohmann::json;

inline bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

inline std::optional<std::string> validate(const json& root, const json& schema,
                                           const json& value, const std::string& where) {
    if (schema.is_boolean()) {
        if (schema.get<bool>()) return std::nullopt;
        return where + ": schema forbids this value";
    }
    if (!schema.is_object()) return where + ": unsupported schema node";

    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) return where + ": unsupported $ref " + ref;
        std::string name = ref.substr(prefix.size());
        if (!root.contains("definitions") || !root["definitions"].contains(name))
            return where + ": dangling $ref " + ref;
        return validate(root, root["definitions"][name], value, where);
    }

    if (schema.contains("const") && value != schema["const"])
        return where + ": value differs from const";

    if (schema.contains("enum")) {
        bool hit = false;
        for (const json& cand : schema["enum"]) hit = hit || value == cand;
        if (!hit) return where + ": value not in enum";
    }

    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), value);
        } else {
            for (const json& one : t) ok = ok || type_matches(one.get<std::string>(), value);
        }
        if (!ok) return where + ": wrong type";
    }

    if (value.is_object()) {
        if (schema.contains("required"))
            for (const json& name : schema["required"])
                if (!value.contains(name.get<std::string>()))
                    return where + ": missing required " + name.get<std::string>();
        const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props && props->contains(it.key())) {
                if (auto err = validate(root, (*props)[it.key()], it.value(),
                                        where + "." + it.key()))
                    return err;
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"].is_boolean() &&
                       !schema["additionalProperties"].get<bool>()) {
                return where + ": unexpected property " + it.key();
            }
        }
    }

    if (value.is_array() && schema.contains("items") && schema["items"].is_object()) {
        std::size_t i = 0;
        for (const json& item : value) {
            if (auto err = validate(root, schema["items"], item,
                                    where + "[" + std::to_string(i) + "]"))
                return err;
            ++i;
        }
    }

    if (schema.contains("allOf")) {
        for (const json& sub : schema["allOf"])
            if (auto err = validate(root, sub, value, where)) return err;
    }

    if (schema.contains("if")) {
        bool cond = !validate(root, schema["if"], value, where).has_value();
        if (cond && schema.contains("then")) {
            if (auto err = validate(root, schema["then"], value, where)) return err;
        }
        if (!cond && schema.contains("else")) {
            if (auto err = validate(root, schema["else"], value, where)) return err;
        }
    }

    return std::nullopt;
}

inline std::optional<std::string> validate_report(const json& schema, const json& report) {
    return validate(schema, schema, report, "$");
}

}  // namespace schema_subset
