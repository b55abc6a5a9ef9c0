#pragma once

// Just enough JSON-schema validation to check the shipped schema files
// against produced documents: type, required, properties, items, enum,
// minimum, minItems/maxItems, pattern, and $ref (both #/definitions/... and
// sibling files).

#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

namespace moco::testing {

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

class SchemaValidator {
public:
  explicit SchemaValidator(std::string schema_dir) : dir_(std::move(schema_dir)) {}

  void validate_file(const Json& instance, const std::string& schema_file) {
    Json schema = load_json_file(dir_ + "/" + schema_file);
    validate(instance, schema, schema, schema_file);
  }

private:
  void fail(const std::string& where, const std::string& what) {
    throw std::runtime_error("schema violation at " + where + ": " + what);
  }

  void validate(const Json& inst, const Json& schema, const Json& root, std::string where) {
    if (schema.contains("$ref")) {
      std::string ref = schema.at("$ref").get<std::string>();
      if (ref.rfind("#/definitions/", 0) == 0) {
        validate(inst, root.at("definitions").at(ref.substr(14)), root, where + "->" + ref);
      } else {
        Json other = load_json_file(dir_ + "/" + ref);
        validate(inst, other, other, where + "->" + ref);
      }
      return;
    }
    if (schema.contains("type")) {
      std::string type = schema.at("type").get<std::string>();
      bool ok = (type == "object" && inst.is_object()) || (type == "array" && inst.is_array()) ||
                (type == "string" && inst.is_string()) ||
                (type == "integer" && inst.is_number_integer()) ||
                (type == "number" && inst.is_number()) ||
                (type == "boolean" && inst.is_boolean());
      if (!ok) fail(where, "expected type " + type + ", got " + std::string(inst.type_name()));
    }
    if (schema.contains("enum")) {
      bool ok = false;
      for (const auto& v : schema.at("enum"))
        if (v == inst) ok = true;
      if (!ok) fail(where, "value not in enum");
    }
    if (schema.contains("pattern") && inst.is_string()) {
      std::regex re(schema.at("pattern").get<std::string>());
      if (!std::regex_match(inst.get<std::string>(), re))
        fail(where, "string '" + inst.get<std::string>() + "' does not match pattern");
    }
    if (schema.contains("minimum") && inst.is_number_integer()) {
      if (inst.get<std::int64_t>() < schema.at("minimum").get<std::int64_t>())
        fail(where, "below minimum");
    }
    if (inst.is_object()) {
      if (schema.contains("required"))
        for (const auto& key : schema.at("required"))
          if (!inst.contains(key.get<std::string>()))
            fail(where, "missing required key '" + key.get<std::string>() + "'");
      if (schema.contains("properties"))
        for (const auto& [key, sub] : schema.at("properties").items())
          if (inst.contains(key)) validate(inst.at(key), sub, root, where + "." + key);
    }
    if (inst.is_array()) {
      if (schema.contains("minItems") && inst.size() < schema.at("minItems").get<std::size_t>())
        fail(where, "too few items");
      if (schema.contains("maxItems") && inst.size() > schema.at("maxItems").get<std::size_t>())
        fail(where, "too many items");
      if (schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& el : inst)
          validate(el, schema.at("items"), root, where + "[" + std::to_string(i++) + "]");
      }
    }
  }

  std::string dir_;
};

}  // namespace moco::testing
