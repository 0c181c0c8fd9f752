#pragma once

#include "bellpoly/cglmp.hpp"
#include "bellpoly/correlators.hpp"
#include "bellpoly/facets.hpp"
#include "bellpoly/inequality.hpp"
#include "bellpoly/membership.hpp"
#include "bellpoly/scenario.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace bellpoly::io {

using Json = nlohmann::ordered_json;

/// Malformed or out-of-range input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
/// Accepts "n", "n/d" strings and JSON integers; floats are rejected.
Rational rational_from_json(const Json& j);

Json to_json(const Behavior& p);
Behavior behavior_from_json(const Json& j);

Json to_json(const CorrVector& c);
CorrVector corr_from_json(const Json& j);

Json to_json(const Inequality& ineq);
Inequality inequality_from_json(const Json& j);

Json to_json(const Condition1Report& rep);
Json to_json(const TightnessReport& rep, const std::vector<WitnessBatch>* witness);

Json to_json(const Verdict& v);

/// Rejects d outside [lo, hi].
int checked_d(const Json& j, int lo, int hi);

}  // namespace bellpoly::io
