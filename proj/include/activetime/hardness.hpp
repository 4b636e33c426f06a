#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "activetime/instance.hpp"

namespace activetime {

/// Prefix sum cover: pick k of the vectors u so that the prefix sums of
/// their sum dominate the prefix sums of v.
struct PscInstance {
  int d = 0;
  int k = 0;
  std::vector<int> v;
  std::vector<std::vector<int>> u;

  /// Largest scalar over every u and v.
  int max_entry() const;
};

/// Checks dimensions, u entries >= 1, v entries >= 0, and that every vector
/// is non-increasing. Throws DimensionMismatch or RangeViolation.
void validate(const PscInstance& psc);

struct SetCoverInstance {
  int d = 0;  // universe {1..d}
  int k = 0;
  std::vector<std::vector<int>> sets;  // 0/1 characteristic vectors
};

/// a "prefix-dominates" b: sum_{i<=j} a_i >= sum_{i<=j} b_i for every j.
bool prec(std::span<const int> a, std::span<const int> b);

/// First k-subset of vector indices (lexicographic, no repeats) whose sum
/// prefix-dominates v.
std::optional<std::vector<int>> psc_exhaustive(const PscInstance& psc);

/// Slope of the (d - j) term in the set-cover transform. The published
/// formula uses 1, which can yield increasing vectors (e.g. set {1,3} with
/// d = 3 maps to (5,2,3)); 2 keeps every vector non-increasing while the
/// prefix sums telescope the same way.
enum class TransformSlope { Published = 1, Corrected = 2 };

/// With [w]_0 = 0 and s the slope:
///   [u']_j = [u]_j - [u]_{j-1} + 2 + s(d-j)
///   [v']_j = [v]_j - [v]_{j-1} + 2k + s k (d-j),   v = all ones.
/// Budgets above the number of sets are lowered to it. Throws RangeViolation
/// when an entry leaves [1, s(d-1)+3] (u) or [2k-1, s k(d-1)+2k+1] (v), or a
/// vector is not non-increasing.
PscInstance setcover_to_psc(const SetCoverInstance& sc,
                            TransformSlope slope = TransformSlope::Corrected);

struct ReducedInstance {
  Instance instance;
  int block_width = 0;  // W
  int machines = 0;     // p = dW
  /// First slot of every block; all other slots are rigidly occupied.
  std::vector<int> special_slots;
  /// n (W - 1): slots open in every feasible schedule.
  int baseline_open = 0;
};

/// Active-time instance whose optimum is baseline_open + (fewest vectors
/// covering v). Block width W = max(max u entry, ceil(v_1 / n)); slots of
/// block i are [(i-1)W, iW) and:
///   - slot (i-1)W + w - 1 (w in [2, W]) carries p - |{j : u_ij >= w}| rigid
///     unit jobs,
///   - sum_j u_ij - d flexible unit jobs span the block,
///   - one job of length v_j spans the whole horizon for each j.
/// Throws DegenerateWidth when W < 2.
ReducedInstance psc_to_active_time(const PscInstance& psc);

/// Empty-slot counts per machine and job lengths, both non-increasing.
struct Configuration {
  std::vector<int> empty;
  std::vector<int> lengths;
};

/// sum_{i<=j} e_i >= sum_{i<=j} l_i for every j up to the number of jobs.
/// Throws TooManyJobs when there are more jobs than machines.
bool config_fits(const Configuration& config);

struct Placement {
  int machine = 0;
  int slot = 0;
  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Per machine, the slots where it is idle.
using SlotLayout = std::vector<std::vector<int>>;

/// Machine j idle in slots 0 .. e_j - 1.
SlotLayout staircase_layout(std::span<const int> empty);

/// Places jobs longest first. With K jobs left, the current job takes idle
/// slots of the K-th lowest free machine, then the (K-1)-th, and so on
/// (ranks are per slot, so lower machines always count as the free ones),
/// never using a slot twice. Returns per-job placements, or nullopt when a
/// job cannot be completed.
std::optional<std::vector<std::vector<Placement>>> pack_greedy(const Configuration& config,
                                                               const SlotLayout& layout);

/// "d <int>", "k <int>", "v <d ints>", then one "u <d ints>" per vector.
PscInstance parse_psc(std::string_view text);
std::string serialize(const PscInstance& psc);

/// "d <int>", "k <int>", then one "set <elements...>" line per set, with
/// elements numbered from 1.
SetCoverInstance parse_setcover(std::string_view text);

}  // namespace activetime
