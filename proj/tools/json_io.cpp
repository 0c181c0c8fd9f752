#include "json_io.hpp"

namespace bellpoly::io {

namespace {

const char* const kBlocks[4] = {"a1b1", "a1b2", "a2b1", "a2b2"};

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

SpaceKind space_from_string(const std::string& s) {
  if (s == "behavior") return SpaceKind::behavior;
  if (s == "correlator" || s == "corr") return SpaceKind::correlator;
  throw InputError("unknown space \"" + s + "\"");
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError("expected a rational as \"num/den\" string, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int checked_d(const Json& j, int lo, int hi) {
  const Json& d = field(j, "d");
  if (!d.is_number_integer()) throw InputError("\"d\" must be an integer");
  const long v = d.get<long>();
  if (v < lo || v > hi) {
    throw InputError("d=" + std::to_string(v) + " outside supported range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

Json to_json(const Behavior& p) {
  const int d = p.d();
  Json blocks = Json::object();
  for (int i = 0; i < 4; ++i) {
    const int a = i / 2 + 1;
    const int b = i % 2 + 1;
    Json rows = Json::array();
    for (int k = 0; k < d; ++k) {
      Json row = Json::array();
      for (int s = 0; s < d; ++s) row.push_back(to_json(p.at(a, b, k, s)));
      rows.push_back(row);
    }
    blocks[kBlocks[i]] = rows;
  }
  return Json{{"d", d}, {"P", blocks}};
}

Behavior behavior_from_json(const Json& j) {
  const int d = checked_d(j, 2, 64);
  const Json& blocks = field(j, "P");
  Behavior p(d);
  for (int i = 0; i < 4; ++i) {
    const Json& rows = field(blocks, kBlocks[i]);
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d)) {
      throw InputError(std::string("block ") + kBlocks[i] + " must have " + std::to_string(d) + " rows");
    }
    for (int k = 0; k < d; ++k) {
      const Json& row = rows[static_cast<std::size_t>(k)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
        throw InputError(std::string("block ") + kBlocks[i] + " rows must have " + std::to_string(d) + " entries");
      }
      for (int s = 0; s < d; ++s) {
        p.at(i / 2 + 1, i % 2 + 1, k, s) = rational_from_json(row[static_cast<std::size_t>(s)]);
      }
    }
  }
  return p;
}

Json to_json(const CorrVector& c) {
  const int d = c.d();
  Json blocks = Json::object();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int n = 0; n < d; ++n) row.push_back(to_json(c.at(i / 2 + 1, i % 2 + 1, n)));
    blocks[kBlocks[i]] = row;
  }
  return Json{{"d", d}, {"C", blocks}};
}

CorrVector corr_from_json(const Json& j) {
  const int d = checked_d(j, 2, 64);
  const Json& blocks = field(j, "C");
  CorrVector c(d);
  for (int i = 0; i < 4; ++i) {
    const Json& row = field(blocks, kBlocks[i]);
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
      throw InputError(std::string("block ") + kBlocks[i] + " must have " + std::to_string(d) + " entries");
    }
    for (int n = 0; n < d; ++n) c.at(i / 2 + 1, i % 2 + 1, n) = rational_from_json(row[static_cast<std::size_t>(n)]);
  }
  return c;
}

Json to_json(const Inequality& ineq) {
  Json coeffs = Json::array();
  for (const auto& c : ineq.coeffs) coeffs.push_back(to_json(c));
  Json out{{"space", to_string(ineq.space.kind)}};
  if (ineq.space.kind == SpaceKind::generic) out["dim"] = ineq.space.dim;
  else out["d"] = ineq.space.d;
  out["coeffs"] = coeffs;
  out["bound"] = to_json(ineq.bound);
  return out;
}

Inequality inequality_from_json(const Json& j) {
  const Json& kind = field(j, "space");
  if (!kind.is_string()) throw InputError("\"space\" must be a string");
  const SpaceKind sk = space_from_string(kind.get<std::string>());
  const int d = checked_d(j, 2, 64);
  const Space space = sk == SpaceKind::behavior ? Space::behavior(d) : Space::correlator(d);
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.size() != space.dim) {
    throw InputError("\"coeffs\" must have " + std::to_string(space.dim) + " entries for " + describe(space));
  }
  RationalVector c;
  for (const auto& x : coeffs) c.push_back(rational_from_json(x));
  return Inequality(space, std::move(c), rational_from_json(field(j, "bound")));
}

Json to_json(const Condition1Report& rep) {
  Json hist = Json::object();
  for (auto it = rep.histogram.rbegin(); it != rep.histogram.rend(); ++it) hist[to_string(it->first)] = it->second;
  Json cases = Json::object();
  for (const auto& [tag, n] : rep.cases) cases[to_string(tag)] = n;
  return Json{{"d", rep.d},
              {"generators", rep.generators},
              {"max", to_json(rep.max)},
              {"histogram", hist},
              {"cases", cases},
              {"verified", true}};
}

Json to_json(const TightnessReport& rep, const std::vector<WitnessBatch>* witness) {
  Json out{{"d", rep.d}, {"saturating", rep.saturating}, {"rank", rep.rank}, {"h", rep.h}, {"tight", rep.tight}};
  if (witness) {
    Json steps = Json::array();
    for (const auto& b : *witness) {
      Json vectors = Json::array();
      for (const auto& w : b.vectors) {
        vectors.push_back(Json{{"A", w.A},
                               {"rstu", {w.values.r, w.values.s, w.values.t, w.values.u}},
                               {"strategy", {w.strategy.a1, w.strategy.a2, w.strategy.b1, w.strategy.b2}}});
      }
      Json params = b.scheme == WitnessScheme::example1
                        ? Json{{"a", b.params[0]}, {"b1", b.params[1]}, {"b2", b.params[2]}, {"b3", b.params[3]}}
                        : Json{{"a", b.params[0]}, {"b1", b.params[1]}, {"b2", b.params[2]}};
      steps.push_back(Json{{"step", b.step_index},
                           {"scheme", to_string(b.scheme)},
                           {"params", params},
                           {"count", b.vectors.size()},
                           {"rank_after", b.rank_after},
                           {"vectors", vectors}});
    }
    out["witness_steps"] = steps;
  }
  return out;
}

Json to_json(const Verdict& v) {
  Json out{{"verdict", v.local ? "local" : "nonlocal"}};
  if (v.local) {
    Json weights = Json::object();
    for (const auto& w : v.weights) weights[w.label] = to_json(w.weight);
    out["weights"] = weights;
    out["certificate"] = nullptr;
    out["violation"] = nullptr;
    return out;
  }
  out["weights"] = nullptr;
  out["certificate"] = to_json(*v.certificate);
  out["violation"] = to_json(*v.violation);
  out["farkas_certificate"] = to_json(*v.farkas);
  if (v.match) {
    out["catalog"] = Json{{"name", v.match->name},
                          {"inequality", to_json(v.match->image)},
                          {"value", to_json(v.match->value)}};
  } else {
    out["catalog"] = v.catalog_checked ? Json("valid inequality, not in catalog") : Json(nullptr);
  }
  return out;
}

}  // namespace bellpoly::io
