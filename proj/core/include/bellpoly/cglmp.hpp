#pragma once

#include "bellpoly/inequality.hpp"
#include "bellpoly/rational.hpp"
#include "bellpoly/scenario.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellpoly {

/// Raised when an exhaustive or constructive check disagrees with the claim it
/// certifies. The message names the offending strategy or step.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative outcome differences of a deterministic strategy, each shifted by a
/// multiple of d into [-floor(d/2), floor((d-1)/2)]:
///   r = A1 - B1,  s = B2 - A1,  t = B1 - A2 - 1,  u = A2 - B2.
struct Rstu {
  int r = 0;
  int s = 0;
  int t = 0;
  int u = 0;

  int sum() const { return r + s + t + u; }
  std::array<int, 4> values() const { return {r, s, t, u}; }
  friend auto operator<=>(const Rstu&, const Rstu&) = default;
};

int window_low(int d);
int window_high(int d);
/// Representative of x mod d inside the window.
int wrap_to_window(int x, int d);

Rstu rstu(const DeterministicStrategy& lambda, int d);
/// Throws std::invalid_argument if a value is outside the window, the sum is
/// not -1 mod d, or the sum is not one of d-1, -1, -d-1.
void check_rstu(const Rstu& v, int d);

/// Per-variable contribution: -2x/(d-1) + 1 for x >= 0 and
/// -2x/(d-1) - (d+1)/(d-1) for x < 0.
Rational cglmp_f(int x, int d);

/// I_d(G_lambda) = f(r) + f(s) + f(t) + f(u).
Rational eval_on_generator(const DeterministicStrategy& lambda, int d);

/// Behavior-space CGLMP inequality with bound 2. Every probability
/// P(A_a - B_b = m mod d) of the correlator form is expanded into its d
/// joint-probability coordinates.
Inequality cglmp_inequality(int d);

/// Sign pattern of (r, s, t, u): number of strictly negative entries, with the
/// sum branch where two are possible.
enum class CaseTag {
  case1,   // none negative, sum d-1, I = 2
  case2a,  // one negative, sum -1, I = 2
  case2b,  // one negative, sum d-1, I = -2/(d-1)
  case3,   // two negative, sum -1, I = -2/(d-1)
  case4a,  // three negative, sum -1, I = -2(d+1)/(d-1)
  case4b,  // three negative, sum -d-1, I = -2/(d-1)
  case5,   // four negative, sum -d-1, I = -2(d+1)/(d-1)
};

std::string to_string(CaseTag tag);

struct CaseClass {
  CaseTag tag;
  int negatives = 0;
  int sum = 0;
  Rational value;  // I_d on any generator in this class
};

CaseClass classify_case(const Rstu& v, int d);

struct Condition1Report {
  int d = 0;
  Rational max;
  std::map<Rational, std::size_t> histogram;
  std::map<CaseTag, std::size_t> cases;
  std::size_t generators = 0;
};

/// Evaluates I_d on all d^4 generators through the coefficient form and the
/// f-form, requires agreement on each, max = 2, and every value in
/// {2, -2/(d-1), -2(d+1)/(d-1)}. Throws VerificationFailure naming the first
/// offending strategy. `threads` partitions the strategy space.
Condition1Report verify_condition1(int d, unsigned threads = 1);

/// Strategies with I_d(G_lambda) = 2, lexicographic order.
std::vector<DeterministicStrategy> saturating_generators(int d);

struct TightnessReport {
  int d = 0;
  std::size_t saturating = 0;
  std::size_t rank = 0;
  std::size_t h = 0;
  bool tight = false;
};

/// Rank of the saturating generators as behavior vectors versus
/// h = 4d(d-1). Throws VerificationFailure on a shortfall.
TightnessReport tightness_rank(int d);

// ---------------------------------------------------------------------------
// Constructive witness for the rank claim.
//
// Generators are viewed in the frame |A1, r> (+) |A1, s> (+) |A1 - r, t> (+)
// |A1 + s, u>: block (1,1) index (k, s) goes to (k, k - s), block (1,2) to
// (k, s - k), block (2,1) to (s, s - k - 1), block (2,2) to (s, k - s), all
// mod d. This is a coordinate permutation, so ranks agree in both frames.

enum class WitnessScheme { example1, example2 };
std::string to_string(WitnessScheme scheme);

/// One step of the staged construction. example1 uses (a, b1, b2, b3) and
/// the four cyclic rotations (a,b1,b2,b3), (b3,a,b1,b2), (b2,b3,a,b1),
/// (b1,b2,b3,a); example2 uses (a, b1, b2) and the vectors (a,a,b1,b2),
/// (a,b1,a,b2), (a,b1,b2,a), (b1,a,a,b2). Each pattern is instantiated for
/// every A in [0, d).
struct WitnessStep {
  WitnessScheme scheme;
  std::array<int, 4> params;  // b3 unused (0) for example2
};

/// The d-1 steps for d = 4e, 4e+1, 4e+2, 4e+3.
std::vector<WitnessStep> witness_schedule(int d);

struct WitnessVector {
  int A = 0;
  Rstu values;
  DeterministicStrategy strategy;           // the generator it came from
  std::array<std::size_t, 4> support = {};  // ones in the permuted frame
};

struct WitnessBatch {
  std::size_t step_index = 0;
  WitnessScheme scheme = WitnessScheme::example1;
  std::array<int, 4> params = {};
  std::vector<WitnessVector> vectors;  // exactly 4d
  std::size_t rank_after = 0;
};

/// Permuted-frame index of behavior coordinate (a, b, k, s).
std::size_t witness_frame_index(int d, int a, int b, int k, int s);
/// Behavior coordinate index for a permuted-frame index (inverse map).
std::size_t behavior_index_from_witness(int d, std::size_t frame_index);
/// Strategy whose generator is |A, r> (+) |A, s> (+) |A - r, t> (+) |A + s, u>.
DeterministicStrategy strategy_from_witness(int d, int A, const Rstu& v);

/// Builds every batch, checks that each vector is a saturating generator, that
/// every example2 step has the nonzero 4x4 minor for each A, and that the rank
/// grows by exactly 4d per batch up to 4d(d-1). Throws VerificationFailure
/// naming the failing step.
std::vector<WitnessBatch> constructive_witness(int d);

/// The 4x4 projection of an example2 step's four vectors at a fixed A onto
/// |A,a> (+) |A,a> (+) |A-a,a> (+) |A+b1,a>.
std::array<std::array<int, 4>, 4> example2_minor(int d, const WitnessStep& step, int A);

}  // namespace bellpoly
