#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mclt/errors.hpp"
#include "mclt/moment.hpp"
#include "mclt/rational.hpp"

#include <json.hpp>

namespace mclt {

// Moment file schema:
//   {"max_order": K, "moments": ["1", "0", "1", ...]}
// with K+1 entries, each an integer string or "p/q". mu_0 must be 1.
inline MomentSequence moment_sequence_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MomentFileError(std::string("moment file is not valid JSON: ") +
                          e.what());
  }
  if (!doc.is_object() || !doc.contains("max_order") ||
      !doc.contains("moments"))
    throw MomentFileError(
        "moment file must be an object with max_order and moments");
  if (!doc["max_order"].is_number_integer() ||
      doc["max_order"].get<std::int64_t>() < 0)
    throw MomentFileError("max_order must be a nonnegative integer");
  const auto max_order = doc["max_order"].get<std::int64_t>();
  if (!doc["moments"].is_array())
    throw MomentFileError("moments must be an array of rational strings");
  const auto& arr = doc["moments"];
  if (static_cast<std::int64_t>(arr.size()) != max_order + 1)
    throw MomentFileError("moments must list exactly max_order + 1 values, " +
                          std::to_string(arr.size()) + " given for K = " +
                          std::to_string(max_order));
  std::vector<Rational> moments;
  moments.reserve(arr.size());
  for (const auto& entry : arr) {
    if (!entry.is_string())
      throw MomentFileError(
          "moment values must be strings like \"3\" or \"1/2\"");
    try {
      moments.push_back(Rational::from_string(entry.get<std::string>()));
    } catch (const InvalidInputError& e) {
      throw MomentFileError(std::string("bad moment value: ") + e.what());
    }
  }
  if (moments[0] != Rational(1))
    throw MomentFileError("moment file rejected: mu_0 must be 1, got " +
                          moments[0].to_string());
  return MomentSequence(std::move(moments));
}

inline MomentSequence load_moment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MomentFileError("cannot open moment file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return moment_sequence_from_json(buffer.str());
}

}  // namespace mclt
