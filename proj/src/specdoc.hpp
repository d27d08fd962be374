// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_SPECDOC_HPP
#define DPR_SPECDOC_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "lie.hpp"
#include "ring.hpp"

namespace dpr {

/// Parsed spec file. Ring documents carry {"field", "vars", "delta"}; Lie
/// documents carry {"field", "dim", "brackets"} and compile to a ring when
/// the basis is adapted.
struct SpecDocument {
  enum class Kind { ring, lie };
  Kind kind = Kind::ring;
  std::optional<RingSpec> ring;     // absent for non-adapted Lie bases
  std::optional<LieAlgebra> lie;
};

Field field_from_json(const nlohmann::json& j);
nlohmann::ordered_json field_to_json(const Field& f);

RingSpec ring_from_json(const nlohmann::json& j);
nlohmann::ordered_json ring_to_json(const RingSpec& spec);

LieAlgebra lie_from_json(const nlohmann::json& j);

SpecDocument load_spec_document(const std::string& text);
SpecDocument load_spec_file(const std::string& path);

/// Lie algebra read off a valid table whose entries are all homogeneous
/// linear; empty when the table has any other shape.
std::optional<LieAlgebra> lie_from_ring(const RingSpec& spec);

}  // namespace dpr

#endif
