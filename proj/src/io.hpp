// SPDX-License-Identifier: Apache-2.0

// JSON documents: input divisors and fans, computed results.
//
// Rationals travel as strings "a/b" (or "a"), integers as JSON numbers when
// they fit in 64 bits and as decimal strings otherwise.

#ifndef TCHOW_IO_HPP
#define TCHOW_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "build.hpp"
#include "chow.hpp"
#include "effcone.hpp"

namespace tchow::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Throws Error(Parse) on malformed text.
Json parse_text(const std::string& text);

Rat parse_rational(const Json& j);
std::string rational_string(const Rat& q);
Json int_json(const Int& v);

/// Explicit data, or a {downgrade: ...} / {bundle: ...} constructor stanza.
MarkedFansyDivisor parse_divisor(const Json& doc);
/// {rank, rays, cones} given bare, under "fan", or under "downgrade".
Fan parse_fan(const Json& doc);
std::optional<IntMatrix> parse_basis_change(const Json& doc);
KlyachkoBundle parse_bundle(const Json& stanza);

/// Canonical explicit document; parse_divisor inverts it.
Json divisor_json(const MarkedFansyDivisor& x);
Json fan_json(const Fan& f);

Json cone_json(const Cone& c);
/// Null divisor: the generators are toric orbit closures.
Json generator_json(const CycleGenerator& g, const MarkedFansyDivisor* x);
Json counts_json(const Counts& c);
Json validation_json(const ValidationReport& r);
Json presentation_json(const ChowPresentation& p, const MarkedFansyDivisor* x);
Json eff_json(const EffConeReport& r, const MarkedFansyDivisor& x);
/// Per-k comparison of the downgrade pipeline with the toric oracle; "agree" at top level.
Json crosscheck_json(const Fan& f, const std::optional<IntMatrix>& basis_change);

/// Two-space indented text, no trailing newline.
std::string dump(const Json& j);

}  // namespace tchow::io

#endif
