// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DPR_EXPR_HPP
#define DPR_EXPR_HPP

#include <map>
#include <string>
#include <vector>

#include "ring.hpp"

namespace dpr {

/// Parses `expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' nat)?; base := number | ident | '(' expr ')' | '-' base`
/// into a normal-form element. `*` is the ring product (non-commutative,
/// left-associative); syntax errors report a 0-based character position.
Poly parse_expression(const std::string& text, const RingSpec& spec);

/// Comma-separated list of expressions; empty items are rejected.
std::vector<Poly> parse_expression_list(const std::string& text, const RingSpec& spec);

/// Builds a ring from derivation entries written as expressions. Entry (i, j)
/// is parsed in the subring on variables below i, so rows may reference any
/// previously defined commutation behavior. Keys are 0-based with j < i.
RingSpec make_ring_spec(const Field& field, const std::vector<std::string>& names,
                        const std::map<std::pair<int, int>, std::string>& delta_exprs);

}  // namespace dpr

#endif
