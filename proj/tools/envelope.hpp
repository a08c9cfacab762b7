#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "albanese/decomposition.hpp"

namespace albanese::cli {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_json(const BigInt& v);

/// Terms in canonical order; each carries dim_at_rank when a rank is given.
Json terms_json(const Decomposition& d, std::optional<int> rank);
Json polynomial_json(const DimensionPolynomial& p);

/// Output document: query, result, provenance, warnings, timing.
struct Envelope {
  Json query = Json::object();
  Json result = Json::object();
  Json provenance = Json::object();
  std::vector<std::string> warnings;
  double elapsed_ms = 0;

  Json to_json(bool include_timing) const;
};

/// Provenance block with the fixed key order.
Json make_provenance(const std::string& route, std::optional<int> valid_from_rank, bool conjectural,
                     const std::string& hypothesis = "");

}  // namespace albanese::cli
