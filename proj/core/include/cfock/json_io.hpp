#pragma once

#include "cfock/crystal.hpp"
#include "cfock/fock.hpp"

#include <map>
#include <optional>
#include <string>

namespace cfock {

// Canonical JSON serialisation: fixed key order and canonical element order,
// so equal values always serialise to equal bytes.  Parsers throw
// std::invalid_argument on malformed input.

// {"1": 1, "-1": 1} for q + q^-1; coefficients too wide for 64 bits are
// emitted as decimal strings, and both forms are accepted on input.
std::string to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

// {"h": [..], "d": m}
std::string to_json(const WeightVector& w);
WeightVector weight_from_json(const std::string& text);

// {"n": 2, "charge": 0, "columns": [4,2,2,1,1]}; absent n/charge fields fall
// back to the hints (a present field wins over its hint).
std::string to_json(const Diagram& y);
Diagram diagram_from_json(const std::string& text, std::optional<int> n_hint = std::nullopt,
                          std::optional<int> charge_hint = std::nullopt);

// [{"diagram": {...}, "coeff": {...}}, ...] in canonical diagram order
std::string to_json(const Combination& v);
Combination combination_from_json(const std::string& text, int n, int charge);

// {"checked": m, "failures": [{"diagram": ..., "relation": ..., "detail": ...}]}
std::string to_json(const Report& r);

// {"root": {...}, "nodes": [...], "edges": [{"src": a, "i": c, "dst": b}]}
std::string to_json(const CrystalGraph& g);
CrystalGraph graph_from_json(const std::string& text);

// [{"weight": {...}, "count": m}, ...] in increasing weight order
std::string to_json(const std::map<WeightVector, long>& table);

// digraph with nodes labelled "k;d1,d2,...", emitted in canonical order
std::string to_dot(const CrystalGraph& g);

// human-readable summaries
std::string to_text(const CrystalGraph& g);
std::string to_text(const std::map<WeightVector, long>& table);
std::string to_text(const Combination& v);

}  // namespace cfock
