#include "commands.hpp"

#include "json_io.hpp"

#include "bellpoly/cglmp.hpp"
#include "bellpoly/correlators.hpp"
#include "bellpoly/facets.hpp"
#include "bellpoly/linalg.hpp"
#include "bellpoly/membership.hpp"
#include "bellpoly/scenario.hpp"
#include "bellpoly/symmetry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace bellpoly::cli {

namespace {

using io::Json;

constexpr int kMaxAnalyticD = 32;
// The affine-rank sweep fills in densely; d=16 takes seconds, d=32 minutes.
constexpr int kMaxDimsD = 16;
constexpr int kMaxEnumCorrD = 8;
constexpr int kMaxEnumBehaviorD = 4;

const char* const kFooter =
    "Supported d: dims 2-16; verify-cglmp, tightness, cglmp 2-32; enumerate and membership 2-8 (corr), 2-4 (behavior); classify 2-8 (corr), 2-3 (behavior).\n"
    "Outputs are JSON on stdout with rationals as \"num/den\" strings; --pretty prints tables instead.\n"
    "Exit codes: 0 verified, 1 verification failed, 2 usage or input error, 3 enumeration budget exhausted.\n"
    "Sign convention for d=2 correlators: outcome 0 maps to +1 and outcome 1 to -1, so\n"
    "E_ab = P(A_a = B_b) - P(A_a != B_b) and CHSH reads E11 + E12 + E21 - E22 <= 2.\n"
    "Behavior files: {\"d\": d, \"P\": {\"a1b1\": [[...d]...d], \"a1b2\": ..., \"a2b1\": ..., \"a2b2\": ...}}, rows\n"
    "indexed by Alice's outcome. Correlator files: {\"d\": d, \"C\": {\"a1b1\": [...d], ...}} with entry n\n"
    "equal to P(A_a - B_b = n mod d).";

struct Context {
  bool pretty = false;
  bool verbose = false;
  unsigned threads = 1;
  std::ostream& out;
  std::ostream& err;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_range(const char* what, int d, int lo, int hi) {
  if (d < lo || d > hi) {
    throw UsageError(std::string(what) + ": d=" + std::to_string(d) + " outside supported range [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw io::InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw io::InputError("malformed JSON in " + path + ": " + e.what());
  }
}

Space parse_space(const std::string& s, int d) {
  if (s == "corr") return Space::correlator(d);
  if (s == "behavior") return Space::behavior(d);
  throw UsageError("--space must be corr or behavior");
}

std::string text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Shared by enumerate and classify.

struct ClassInfo {
  Inequality representative;
  std::size_t size = 0;
  Triviality triviality = Triviality::trivial;
  std::optional<std::string> catalog;
};

std::optional<std::string> catalog_name(const Inequality& rep, const SymmetryOptions& opts) {
  for (const auto& entry : catalog(rep.space)) {
    if (canonical_class(entry.ineq, opts) == rep) return entry.name;
  }
  return std::nullopt;
}

Json class_json(std::size_t id, const ClassInfo& c) {
  return Json{{"id", id},
              {"size", c.size},
              {"trivial", c.triviality == Triviality::trivial},
              {"catalog", c.catalog ? Json(*c.catalog) : Json(nullptr)},
              {"representative", io::to_json(c.representative)}};
}

/// Orbit sweep over a canonical facet list: one group pass per class.
std::vector<std::size_t> orbit_classes(const std::vector<Inequality>& facets, const Space& space,
                                       const SymmetryOptions& opts, std::vector<ClassInfo>& classes) {
  const auto group = group_permutations(space, opts);
  const auto& reducer = space_reducer(space);
  std::map<Inequality, std::size_t, decltype([](const Inequality& a, const Inequality& b) {
             return compare(a, b) < 0;
           })>
      index;
  for (std::size_t i = 0; i < facets.size(); ++i) index.emplace(facets[i], i);

  std::vector<std::optional<std::size_t>> owner(facets.size());
  std::vector<std::vector<std::size_t>> members;
  std::vector<Inequality> reps;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (owner[i]) continue;
    Inequality rep = facets[i];
    std::vector<std::size_t> orbit;
    for (const auto& g : group) {
      Inequality image = canonicalize(permute(g, facets[i]), reducer);
      if (compare(image, rep) < 0) rep = image;
      const auto it = index.find(image);
      if (it != index.end() && !owner[it->second]) {
        owner[it->second] = reps.size();
        orbit.push_back(it->second);
      }
    }
    reps.push_back(std::move(rep));
    members.push_back(std::move(orbit));
  }

  // Number classes by representative order so ids do not depend on the input order.
  std::vector<std::size_t> order(reps.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return compare(reps[a], reps[b]) < 0; });
  std::vector<std::size_t> renumber(reps.size());
  classes.clear();
  for (std::size_t k = 0; k < order.size(); ++k) {
    renumber[order[k]] = k;
    ClassInfo c;
    c.representative = reps[order[k]];
    c.size = members[order[k]].size();
    c.triviality = classify_trivial(c.representative);
    c.catalog = catalog_name(c.representative, opts);
    classes.push_back(std::move(c));
  }
  std::vector<std::size_t> out(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) out[i] = renumber[*owner[i]];
  return out;
}

// ---------------------------------------------------------------------------
// Pretty printers

void pretty_dims(const Json& j, std::ostream& os) {
  os << "d = " << j["d"] << "\n";
  os << std::left;
  const auto row = [&](const char* label, const Json& got, const Json& want) {
    os << "  " << std::setw(34) << label << std::setw(8) << got.dump() << " expected " << want.dump() << "\n";
  };
  row("normalization + no-signaling rank", j["constraint_rank"], j["expected_constraint_rank"]);
  row("affine dimension of generators", j["affine_dim"], j["expected_affine_dim"]);
  row("single-party family rank", j["single_party_rank"], j["expected_single_party_rank"]);
  row("tensor family rank", j["tensor_rank"], j["expected_tensor_rank"]);
  os << "verified: " << (j["verified"].get<bool>() ? "yes" : "NO") << "\n";
}

void pretty_condition1(const Json& j, std::ostream& os) {
  os << "d = " << j["d"] << ", generators = " << j["generators"] << ", max I_d = " << text(j["max"]) << "\n";
  os << "value histogram:\n";
  for (const auto& [value, count] : j["histogram"].items()) {
    os << "  " << std::left << std::setw(12) << value << count << "\n";
  }
  os << "case histogram:\n";
  for (const auto& [tag, count] : j["cases"].items()) os << "  " << std::left << std::setw(12) << tag << count << "\n";
}

void pretty_tightness(const Json& j, std::ostream& os) {
  os << "d = " << j["d"] << ", saturating generators = " << j["saturating"] << ", rank = " << j["rank"]
     << ", 4d(d-1) = " << j["h"] << ", tight: " << (j["tight"].get<bool>() ? "yes" : "NO") << "\n";
  if (!j.contains("witness_steps")) return;
  for (const auto& step : j["witness_steps"]) {
    os << "step " << step["step"] << " " << text(step["scheme"]) << " params";
    for (const auto& [k, v] : step["params"].items()) os << " " << k << "=" << v;
    os << ": " << step["count"] << " vectors, rank " << step["rank_after"] << "\n";
    for (const auto& v : step["vectors"]) {
      os << "    A=" << std::setw(3) << v["A"].dump() << " (r,s,t,u)=" << v["rstu"].dump()
         << " strategy=" << v["strategy"].dump() << "\n";
    }
  }
}

void pretty_inequality(const Json& j, std::ostream& os) {
  os << text(j["space"]) << " d=" << j["d"] << "\n";
  std::string coeffs;
  for (const auto& c : j["coeffs"]) coeffs += " " + text(c);
  os << " " << coeffs << " <= " << text(j["bound"]) << "\n";
}

void pretty_corr(const Json& j, std::ostream& os) {
  os << "correlators d=" << j["d"] << "  (entry n = P(A_a - B_b = n mod d))\n";
  for (const auto& [block, row] : j["C"].items()) {
    os << "  " << block << ":";
    for (const auto& x : row) os << " " << text(x);
    os << "\n";
  }
}

std::string coeff_line(const Json& ineq) {
  std::string s;
  for (const auto& c : ineq["coeffs"]) s += (s.empty() ? "" : " ") + text(c);
  return s + " <= " + text(ineq["bound"]);
}

void pretty_classes(const Json& classes, std::ostream& os) {
  if (classes.is_null()) {
    os << "classes: not computed (symmetry group too large)\n";
    return;
  }
  os << "classes:\n";
  for (const auto& c : classes) {
    os << "  [" << c["id"] << "] size " << std::setw(5) << c["size"].dump() << " "
       << (c["trivial"].get<bool>() ? "trivial    " : "nontrivial ")
       << std::setw(11) << (c["catalog"].is_null() ? "-" : text(c["catalog"])) << " "
       << coeff_line(c["representative"]) << "\n";
  }
}

void pretty_enumerate(const Json& j, std::ostream& os) {
  os << text(j["space"]) << " polytope d=" << j["d"] << ": " << j["vertices"] << " vertices, dimension " << j["dim"]
     << ", " << j["facet_count"] << " facets (" << j["nontrivial_facet_count"] << " nontrivial)"
     << (j["complete"].get<bool>() ? "" : ", INCOMPLETE: budget exhausted") << "\n";
  pretty_classes(j["classes"], os);
  os << "facets:\n";
  for (const auto& f : j["facets"]) {
    os << "  " << (f["trivial"].get<bool>() ? "T " : "N ")
       << (f["class"].is_null() ? std::string("-") : f["class"].dump()) << "  " << coeff_line(f) << "\n";
  }
}

void pretty_classify(const Json& j, std::ostream& os) {
  os << j["count"] << " inequalities\n";
  for (const auto& f : j["inequalities"]) {
    os << "  #" << f["index"] << " class " << f["class"] << (f["trivial"].get<bool>() ? " trivial" : " nontrivial")
       << (f["valid"].get<bool>() ? "" : " INVALID") << (f["facet"].get<bool>() ? " facet" : "")
       << " local max " << text(f["local_max"]) << "\n";
  }
  pretty_classes(j["classes"], os);
}

void pretty_verdict(const Json& j, std::ostream& os) {
  os << text(j["space"]) << " d=" << j["d"] << ": " << text(j["verdict"]) << "\n";
  if (j["verdict"] == "local") {
    for (const auto& [label, w] : j["weights"].items()) os << "  " << std::left << std::setw(12) << label << " " << text(w) << "\n";
    return;
  }
  os << "  violated facet: " << coeff_line(j["certificate"]) << "\n";
  os << "  violation: " << text(j["violation"]) << "\n";
  if (j["catalog"].is_object()) {
    os << "  equivalent to " << text(j["catalog"]["name"]) << ": " << coeff_line(j["catalog"]["inequality"])
       << ", value " << text(j["catalog"]["value"]) << "\n";
  } else if (!j["catalog"].is_null()) {
    os << "  " << text(j["catalog"]) << "\n";
  }
}

void emit(const Context& ctx, const Json& j, void (*pretty)(const Json&, std::ostream&)) {
  if (ctx.pretty) pretty(j, ctx.out);
  else ctx.out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Commands

int cmd_dims(const Context& ctx, int d) {
  check_range("dims", d, 2, kMaxDimsD);
  const Scenario sc(d);
  const std::size_t constraint_rank = rank(constraint_matrix(sc).rows);
  const std::size_t affine = polytope_affine_dim(sc);

  const auto single = single_party_basis(d);
  RationalMatrix sp(single.size(), static_cast<std::size_t>(2 * d));
  for (std::size_t i = 0; i < single.size(); ++i)
    for (std::size_t k = 0; k < single[i].size(); ++k) sp(i, k) = single[i][k];
  RowBasis tensor(sc.behavior_dim());
  for (const auto& l : tensor_basis_strategies(d)) {
    std::vector<std::pair<std::size_t, Rational>> row;
    for (const std::size_t k : generator_support(d, l)) row.emplace_back(k, 1);
    tensor.insert_sparse(row);
  }
  const std::size_t sp_rank = rank(sp);
  const std::size_t t_rank = tensor.rank();

  const auto ud = static_cast<std::size_t>(d);
  const bool ok = constraint_rank == 4 * ud && affine == 4 * ud * (ud - 1) && sp_rank == 2 * ud - 1 &&
                  t_rank == (2 * ud - 1) * (2 * ud - 1);
  const Json j{{"d", d},
               {"behavior_dim", sc.behavior_dim()},
               {"constraint_rows", constraint_matrix(sc).rows.rows()},
               {"constraint_rank", constraint_rank},
               {"expected_constraint_rank", 4 * ud},
               {"affine_dim", affine},
               {"expected_affine_dim", 4 * ud * (ud - 1)},
               {"single_party_rank", sp_rank},
               {"expected_single_party_rank", 2 * ud - 1},
               {"tensor_rank", t_rank},
               {"expected_tensor_rank", (2 * ud - 1) * (2 * ud - 1)},
               {"verified", ok}};
  emit(ctx, j, pretty_dims);
  return ok ? kVerified : kVerificationFailed;
}

int cmd_verify(const Context& ctx, int d) {
  check_range("verify-cglmp", d, 2, kMaxAnalyticD);
  emit(ctx, io::to_json(verify_condition1(d, ctx.threads)), pretty_condition1);
  return kVerified;
}

int cmd_tightness(const Context& ctx, int d, bool witness) {
  check_range("tightness", d, 2, kMaxAnalyticD);
  const auto rep = tightness_rank(d);
  std::optional<std::vector<WitnessBatch>> batches;
  if (witness) batches = constructive_witness(d);
  emit(ctx, io::to_json(rep, batches ? &*batches : nullptr), pretty_tightness);
  return rep.tight ? kVerified : kVerificationFailed;
}

int cmd_project(const Context& ctx, const std::string& path) {
  const Behavior p = io::behavior_from_json(read_json(path));
  emit(ctx, io::to_json(project(p)), pretty_corr);
  return kVerified;
}

int cmd_cglmp(const Context& ctx, int d, const std::string& space) {
  check_range("cglmp", d, 2, kMaxAnalyticD);
  const Space s = parse_space(space, d);
  const Inequality ineq = s.kind == SpaceKind::correlator ? cglmp_corr_inequality(d) : cglmp_inequality(d);
  emit(ctx, io::to_json(ineq), pretty_inequality);
  return kVerified;
}

int cmd_enumerate(const Context& ctx, int d, const std::string& space, std::optional<double> budget) {
  const Space s = parse_space(space, d);
  check_range("enumerate", d, 2, s.kind == SpaceKind::correlator ? kMaxEnumCorrD : kMaxEnumBehaviorD);
  if (budget && !(*budget > 0)) throw UsageError("--budget must be positive");

  EnumerateOptions opts;
  if (budget && d >= 4) {
    opts.deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*budget));
  }
  if (ctx.verbose) opts.progress = [&err = ctx.err](const std::string& msg) { err << msg << "\n"; };

  const VRep vrep = s.kind == SpaceKind::correlator ? correlator_vrep(d) : behavior_vrep(d);
  HRep h;
  try {
    h = enumerate_facets(vrep, opts);
  } catch (const BudgetExhausted& e) {
    h.space = s;
    h.dim = bell_polytope_dim(s);
    h.vertex_count = vrep.vertices.size();
    h.complete = false;
    if (ctx.verbose) ctx.err << e.what() << "\n";
  }

  SymmetryOptions sym;
  sym.threads = ctx.threads;
  std::vector<ClassInfo> classes;
  std::optional<std::vector<std::size_t>> class_of;
  try {
    class_of = orbit_classes(h.facets, s, sym, classes);
  } catch (const GroupTooLarge& e) {
    if (ctx.verbose) ctx.err << "classification skipped: " << e.what() << "\n";
  }

  Json equations = Json::array();
  for (std::size_t i = 0; i < h.equations.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < h.equations.cols(); ++k) row.push_back(io::to_json(h.equations(i, k)));
    equations.push_back(Json{{"coeffs", row}, {"rhs", io::to_json(h.equation_rhs[i])}});
  }
  Json facets = Json::array();
  std::size_t nontrivial = 0;
  for (std::size_t i = 0; i < h.facets.size(); ++i) {
    Json f = io::to_json(h.facets[i]);
    const bool trivial = classify_trivial(h.facets[i]) == Triviality::trivial;
    if (!trivial) ++nontrivial;
    f["trivial"] = trivial;
    f["class"] = class_of ? Json((*class_of)[i]) : Json(nullptr);
    facets.push_back(std::move(f));
  }
  Json class_list = nullptr;
  if (class_of) {
    class_list = Json::array();
    for (std::size_t k = 0; k < classes.size(); ++k) class_list.push_back(class_json(k, classes[k]));
  }
  const Json j{{"space", to_string(s.kind)},
               {"d", d},
               {"complete", h.complete},
               {"vertices", h.vertex_count},
               {"dim", h.dim},
               {"facet_count", h.facets.size()},
               {"nontrivial_facet_count", nontrivial},
               {"equations", equations},
               {"classes", class_list},
               {"facets", facets}};
  emit(ctx, j, pretty_enumerate);
  return h.complete ? kVerified : kBudgetExhausted;
}

int cmd_classify(const Context& ctx, const std::string& path) {
  const Json doc = read_json(path);
  std::vector<Inequality> ineqs;
  const auto take = [&](const Json& entry, const Json* parent) {
    if (!entry.is_object()) throw io::InputError("inequality entries must be objects");
    Json e = entry;
    if (parent) {
      for (const char* key : {"space", "d"}) {
        if (!e.contains(key) && parent->contains(key)) e[key] = (*parent)[key];
      }
    }
    ineqs.push_back(io::inequality_from_json(e));
  };
  if (doc.is_array()) {
    for (const auto& e : doc) take(e, nullptr);
  } else if (doc.is_object() && doc.contains("facets")) {
    if (!doc["facets"].is_array()) throw io::InputError("\"facets\" must be an array");
    for (const auto& e : doc["facets"]) take(e, &doc);
  } else {
    take(doc, nullptr);
  }
  if (ineqs.empty()) throw io::InputError("no inequalities to classify");
  const Space space = ineqs.front().space;
  for (const auto& q : ineqs) {
    if (!(q.space == space)) throw io::InputError("all inequalities must live in one space");
  }
  if (space.kind == SpaceKind::correlator) check_range("classify", space.d, 2, kMaxEnumCorrD);
  else check_range("classify", space.d, 2, 3);

  SymmetryOptions sym;
  sym.threads = ctx.threads;
  const auto vertices = local_vertices(space);
  const std::size_t dim = bell_polytope_dim(space);

  std::vector<Inequality> reps;
  std::vector<std::size_t> rep_of;
  for (const auto& q : ineqs) {
    if (q.is_zero()) throw io::InputError("zero inequality cannot be classified");
    Inequality rep = canonical_class(q, sym);
    auto it = std::find(reps.begin(), reps.end(), rep);
    rep_of.push_back(static_cast<std::size_t>(it - reps.begin()));
    if (it == reps.end()) reps.push_back(std::move(rep));
  }
  std::vector<std::size_t> order(reps.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return compare(reps[a], reps[b]) < 0; });
  std::vector<std::size_t> renumber(reps.size());
  for (std::size_t k = 0; k < order.size(); ++k) renumber[order[k]] = k;

  std::vector<ClassInfo> classes(reps.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    classes[k].representative = reps[order[k]];
    classes[k].triviality = classify_trivial(reps[order[k]]);
    classes[k].catalog = catalog_name(reps[order[k]], sym);
  }

  Json list = Json::array();
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    const std::size_t cls = renumber[rep_of[i]];
    ++classes[cls].size;
    const Rational lmax = local_max(ineqs[i]);
    const auto sat = saturation_count(canonicalize(ineqs[i]), vertices);
    const bool valid = lmax <= ineqs[i].bound;
    list.push_back(Json{{"index", i},
                        {"class", cls},
                        {"trivial", classes[cls].triviality == Triviality::trivial},
                        {"valid", valid},
                        {"facet", valid && lmax == ineqs[i].bound && sat.rank == dim},
                        {"local_max", io::to_json(lmax)},
                        {"canonical", io::to_json(canonicalize(ineqs[i]))}});
  }
  Json class_list = Json::array();
  for (std::size_t k = 0; k < classes.size(); ++k) class_list.push_back(class_json(k, classes[k]));
  const Json j{{"space", to_string(space.kind)},
               {"d", space.d},
               {"count", ineqs.size()},
               {"class_count", classes.size()},
               {"inequalities", list},
               {"classes", class_list}};
  emit(ctx, j, pretty_classify);
  return kVerified;
}

int cmd_membership(const Context& ctx, const std::string& path) {
  const Json doc = read_json(path);
  if (!doc.is_object()) throw io::InputError("expected a JSON object");
  const bool behavior = doc.contains("P");
  if (behavior == doc.contains("C")) throw io::InputError("input must contain exactly one of \"P\" or \"C\"");
  Verdict v;
  int d = 0;
  if (behavior) {
    const Behavior p = io::behavior_from_json(doc);
    d = p.d();
    check_range("membership", d, 2, kMaxEnumBehaviorD);
    v = local_decompose(p);
  } else {
    const CorrVector c = io::corr_from_json(doc);
    d = c.d();
    check_range("membership", d, 2, kMaxEnumCorrD);
    v = corr_local_decompose(c);
  }
  Json j{{"space", behavior ? "behavior" : "correlator"}, {"d", d}};
  const Json verdict = io::to_json(v);
  for (const auto& [k, val] : verdict.items()) j[k] = val;
  emit(ctx, j, pretty_verdict);
  return kVerified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact local-polytope tools for two parties, two settings and d outcomes.", "bellpoly"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{false, false, 1, out, err};
  app.add_flag("--pretty", ctx.pretty, "Human-readable tables instead of JSON");
  app.add_flag("-v,--verbose", ctx.verbose, "Progress messages on stderr");
  app.add_option("--threads", ctx.threads, "Worker threads for exhaustive checks")->check(CLI::Range(1u, 256u));

  int d = 0;
  std::string space = "corr";
  std::string path;
  bool witness = false;
  std::optional<double> budget;

  auto* dims = app.add_subcommand("dims", "Constraint rank and affine dimension of the local polytope");
  dims->add_option("d", d, "Number of outcomes")->required();

  auto* verify = app.add_subcommand("verify-cglmp", "Evaluate I_d on every deterministic strategy");
  verify->add_option("d", d, "Number of outcomes")->required();

  auto* tight = app.add_subcommand("tightness", "Rank of the generators saturating I_d <= 2");
  tight->add_option("d", d, "Number of outcomes")->required();
  tight->add_flag("--witness", witness, "Print the staged linearly independent witness");

  auto* proj = app.add_subcommand("project", "Generalized correlators P(A_a - B_b = n mod d) of a behavior");
  proj->add_option("file", path, "Behavior JSON file, - for stdin")->required();

  auto* enumerate = app.add_subcommand("enumerate", "All facets of the local polytope with symmetry classes");
  enumerate->add_option("d", d, "Number of outcomes")->required();
  enumerate->add_option("--space", space, "corr or behavior")->check(CLI::IsMember({"corr", "behavior"}));
  enumerate->add_option("--budget", budget, "Wall-clock limit in seconds (applies for d >= 4)");

  auto* classify = app.add_subcommand("classify", "Symmetry classes of a list of inequalities");
  classify->add_option("file", path, "Facet-list or inequality JSON file, - for stdin")->required();

  auto* member = app.add_subcommand("membership", "Local decomposition or a violated facet");
  member->add_option("file", path, "Behavior or correlator JSON file, - for stdin")->required();

  auto* cglmp = app.add_subcommand("cglmp", "Emit the CGLMP inequality I_d <= 2");
  cglmp->add_option("d", d, "Number of outcomes")->required();
  cglmp->add_option("--space", space, "corr or behavior")->check(CLI::IsMember({"corr", "behavior"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    if (*dims) return cmd_dims(ctx, d);
    if (*verify) return cmd_verify(ctx, d);
    if (*tight) return cmd_tightness(ctx, d, witness);
    if (*proj) return cmd_project(ctx, path);
    if (*enumerate) return cmd_enumerate(ctx, d, space, budget);
    if (*classify) return cmd_classify(ctx, path);
    if (*member) return cmd_membership(ctx, path);
    if (*cglmp) return cmd_cglmp(ctx, d, space);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GroupTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace bellpoly::cli
