// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "specdoc.hpp"

#include <fstream>
#include <sstream>

#include "expr.hpp"

namespace dpr {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::pair<int, int> parse_index_pair(const std::string& key) {
  std::size_t comma = key.find(',');
  if (comma == std::string::npos)
    fail(Errc::parse_error, "index key '" + key + "' must look like \"i,j\"");
  try {
    int i = std::stoi(key.substr(0, comma));
    int j = std::stoi(key.substr(comma + 1));
    return {i, j};
  } catch (const std::exception&) {
    fail(Errc::parse_error, "index key '" + key + "' must hold two integers");
  }
}

Scalar scalar_from_json(const json& v, const Field& f) {
  if (v.is_number_integer()) return Scalar::from_int(f, v.get<long>());
  if (v.is_string()) return Scalar::parse(v.get<std::string>(), f);
  fail(Errc::parse_error, "scalar entries must be integers or number strings");
}

}  // namespace

Field field_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q") return Field::rationals();
    fail(Errc::parse_error, "unknown field name '" + s + "' (use \"Q\" or {\"Fp\": p})");
  }
  if (j.is_object() && j.contains("Fp")) {
    if (!j["Fp"].is_number_unsigned() && !j["Fp"].is_number_integer())
      fail(Errc::parse_error, "\"Fp\" wants a positive integer");
    long p = j["Fp"].get<long>();
    if (p < 2 || p >= (1L << 31)) fail(Errc::parse_error, "prime out of range");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  fail(Errc::parse_error, "field must be \"Q\" or {\"Fp\": p}");
}

ordered_json field_to_json(const Field& f) {
  if (f.is_prime_field()) return ordered_json{{"Fp", f.characteristic()}};
  return ordered_json("Q");
}

RingSpec ring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("vars"))
    fail(Errc::parse_error, "ring document needs \"field\" and \"vars\"");
  Field f = field_from_json(j.at("field"));
  std::vector<std::string> names;
  for (const auto& v : j.at("vars")) {
    if (!v.is_string()) fail(Errc::parse_error, "\"vars\" must be a list of identifiers");
    names.push_back(v.get<std::string>());
  }
  std::map<std::pair<int, int>, std::string> entries;
  if (j.contains("delta")) {
    if (!j.at("delta").is_object())
      fail(Errc::parse_error, "\"delta\" must map \"i,j\" keys to expressions");
    for (const auto& [key, value] : j.at("delta").items()) {
      auto [i, in_j] = parse_index_pair(key);
      if (!value.is_string()) fail(Errc::parse_error, "delta entries must be expression strings");
      // File keys are 1-based.
      entries[{i - 1, in_j - 1}] = value.get<std::string>();
    }
  }
  return make_ring_spec(f, names, entries);
}

ordered_json ring_to_json(const RingSpec& spec) {
  ordered_json j;
  j["field"] = field_to_json(spec.field());
  j["vars"] = spec.names();
  ordered_json delta = ordered_json::object();
  for (int i = 1; i < spec.nvars(); ++i) {
    for (int jj = 0; jj < i; ++jj) {
      if (!spec.has_delta(i, jj)) continue;
      delta[std::to_string(i + 1) + "," + std::to_string(jj + 1)] = spec.delta(i, jj).to_string();
    }
  }
  j["delta"] = std::move(delta);
  return j;
}

LieAlgebra lie_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("dim"))
    fail(Errc::parse_error, "Lie document needs \"field\" and \"dim\"");
  Field f = field_from_json(j.at("field"));
  if (!j.at("dim").is_number_integer()) fail(Errc::parse_error, "\"dim\" must be an integer");
  int dim = j.at("dim").get<int>();
  std::map<std::pair<int, int>, std::vector<Scalar>> brackets;
  if (j.contains("brackets")) {
    if (!j.at("brackets").is_object())
      fail(Errc::parse_error, "\"brackets\" must map \"i,j\" keys to coordinate vectors");
    for (const auto& [key, value] : j.at("brackets").items()) {
      auto [bi, bj] = parse_index_pair(key);
      if (!value.is_array())
        fail(Errc::parse_error, "bracket '" + key + "' must be a coordinate vector");
      std::vector<Scalar> coords;
      for (const auto& c : value) coords.push_back(scalar_from_json(c, f));
      brackets[{bi - 1, bj - 1}] = std::move(coords);
    }
  }
  return LieAlgebra::create(f, dim, brackets);
}

SpecDocument load_spec_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("spec document is not valid JSON: ") + e.what());
  }
  SpecDocument doc;
  if (j.is_object() && (j.contains("dim") || j.contains("brackets"))) {
    doc.kind = SpecDocument::Kind::lie;
    doc.lie = lie_from_json(j);
    if (doc.lie->is_valid() && doc.lie->is_adapted_flag()) doc.ring = doc.lie->to_ring_spec();
    return doc;
  }
  doc.kind = SpecDocument::Kind::ring;
  doc.ring = ring_from_json(j);
  return doc;
}

SpecDocument load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_argument, "cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_spec_document(buf.str());
}

std::optional<LieAlgebra> lie_from_ring(const RingSpec& spec) {
  if (!spec.is_valid() || !spec.linear_homogeneous()) return std::nullopt;
  std::map<std::pair<int, int>, std::vector<Scalar>> brackets;
  for (int i = 1; i < spec.nvars(); ++i) {
    for (int j = 0; j < i; ++j) {
      if (!spec.has_delta(i, j)) continue;
      std::vector<Scalar> coords(spec.nvars(), Scalar::zero(spec.field()));
      for (const auto& [m, c] : spec.delta(i, j).terms()) coords[m.top_var()] = c;
      brackets[{i, j}] = std::move(coords);
    }
  }
  LieAlgebra L = LieAlgebra::create(spec.field(), spec.nvars(), brackets);
  if (!L.is_valid()) return std::nullopt;
  return L;
}

}  // namespace dpr
