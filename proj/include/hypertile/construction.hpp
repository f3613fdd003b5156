#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypertile/tiling.hpp"
#include "hypertile/vertex_type.hpp"

namespace hypertile {

/// Rule for picking among several admissible fan continuations.
class BuildPolicy {
 public:
  enum class Mode { Lexicographic, SeededRandom, Scripted };

  static BuildPolicy lexicographic() { return BuildPolicy(Mode::Lexicographic, 0, {}); }
  static BuildPolicy seeded(std::uint64_t seed) { return BuildPolicy(Mode::SeededRandom, seed, {}); }
  static BuildPolicy scripted(std::vector<int> choices) {
    return BuildPolicy(Mode::Scripted, 0, std::move(choices));
  }

  /// "lex", "seed:<n>" or "script:<i>,<j>,...". Throws ParseError.
  static BuildPolicy parse(std::string_view text);

  Mode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<int>& script() const { return script_; }
  std::string to_string() const;

 private:
  BuildPolicy(Mode mode, std::uint64_t seed, std::vector<int> script)
      : mode_(mode), seed_(seed), script_(std::move(script)) {}

  Mode mode_;
  std::uint64_t seed_;
  std::vector<int> script_;
};

/// Running state of a policy over one build (RNG stream, script cursor).
class PolicyState {
 public:
  explicit PolicyState(BuildPolicy policy);

  /// Index into `candidates`. Single-candidate steps consume nothing.
  int choose(std::span<const Word> candidates);

  const BuildPolicy& policy() const { return policy_; }
  const std::vector<int>& choices() const { return choices_; }

 private:
  BuildPolicy policy_;
  std::mt19937_64 rng_;
  std::size_t cursor_ = 0;
  std::vector<int> choices_;
};

/// Record of one completed fan.
struct FanStep {
  int vertex = kNone;
  Word word;                    // face sizes already around the vertex
  std::vector<Word> candidates; // continuations offered to the policy
  int chosen = 0;
  int total_continuations = 0;  // before the flank filter
};

/// Property 1 applies to triangle-free vertex-types, Property 1' otherwise.
enum class BoundaryRule { TriangleFree, Triangle };

BoundaryRule boundary_rule(const VertexType& k);

/// d regular polygons with sizes k1..kd placed counter-clockwise around
/// vertex 0. Throws PreconditionError when the angle-sum is not > 2.
Tiling initial_fan(const VertexType& k);

/// Positions (into `bc.vertices`) of v0 and vn; vn immediately precedes v0
/// in counter-clockwise order. Among admissible pairs the lowest v0 id wins.
/// Throws InternalError if no pair is admissible.
struct BasePair {
  int v0 = kNone;
  int vn = kNone;
};

BasePair choose_base_vertices(const Tiling& t, const BoundaryCycle& bc);

/// Face sizes around boundary vertex v, counter-clockwise, starting just after
/// the outer sector.
Word boundary_word(const Tiling& t, int v);

/// Completes the fan at boundary vertex v: attaches a wedge of new polygons
/// along the two boundary edges at v so that v becomes interior with the
/// target vertex-type. New cells get layer `t.layer_count + 1`.
/// Throws ContinuationError when the existing word has no continuation and
/// PolicyError when a scripted policy cannot answer.
FanStep complete_fan(Tiling& t, int v, PolicyState& policy);

/// Completes fans at every boundary vertex, starting from the chosen v0 and
/// walking counter-clockwise, then verifies the result. Throws InternalError
/// if verification fails.
void add_layer(Tiling& t, PolicyState& policy, std::vector<FanStep>* trace = nullptr);

struct BuildResult {
  Tiling tiling;
  bool complete = true;
  std::string failure;     // empty when complete
  int failed_vertex = kNone;
  Word offending_word;
  std::vector<FanStep> trace;
  std::vector<int> choices;  // answers given at ambiguous steps (replayable as a script)
};

/// Layered patch X_layers. Refuses (RefusalError) unless the existence verdict
/// is positive or `force` is set. In force mode a dead end returns the partial
/// patch with diagnostics instead of throwing.
BuildResult build(const VertexType& k, int layers, const BuildPolicy& policy, bool force = false);

}  // namespace hypertile
