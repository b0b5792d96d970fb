// Minimal structural JSON-schema checker used by the serialization tests:
// supports the subset the shipped schemas use (type, properties, required,
// items, $ref into #/definitions). Returns the first violation as a path
// string, or an empty string on success.
#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "null") return value.is_null();
  return false;
}

inline std::string validate(const json& value, const json& schema,
                            const json& root, const std::string& path) {
  if (schema.contains("$ref")) {
    std::string ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) return path + ": unsupported $ref " + ref;
    return validate(value, root["definitions"][ref.substr(prefix.size())],
                    root, path);
  }
  if (schema.contains("type") &&
      !type_matches(value, schema["type"].get<std::string>()))
    return path + ": expected " + schema["type"].get<std::string>();
  if (schema.contains("required"))
    for (const auto& key : schema["required"]) {
      std::string k = key.get<std::string>();
      if (!value.contains(k)) return path + ": missing required '" + k + "'";
    }
  if (schema.contains("properties") && value.is_object())
    for (auto it = schema["properties"].begin();
         it != schema["properties"].end(); ++it)
      if (value.contains(it.key())) {
        std::string err =
            validate(value[it.key()], it.value(), root, path + "." + it.key());
        if (!err.empty()) return err;
      }
  if (schema.contains("items") && value.is_array())
    for (std::size_t i = 0; i < value.size(); ++i) {
      std::string err = validate(value[i], schema["items"], root,
                                 path + "[" + std::to_string(i) + "]");
      if (!err.empty()) return err;
    }
  return "";
}

inline std::string validate_against_file(const json& value,
                                         const std::string& schema_path) {
  std::ifstream in(schema_path);
  if (!in) return "cannot open schema " + schema_path;
  json schema = json::parse(in);
  return validate(value, schema, schema, "$");
}

}  // namespace schema_check
