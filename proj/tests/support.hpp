#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "blf/diagram.hpp"

namespace blf::testing {

struct GenOptions {
  int max_circles = 4;
  int max_points = 3;
  int max_genus = 3;
  double cusp_probability = 0.25;
  int forced_cusped_circles = -1;  // >= 0: exactly this many circles carry one cusp
};

/// Random valid diagrams. Embedded ones come with an oracle Euler
/// characteristic computed from the face tree, independent of face tracing.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  struct Nested {
    BlfDiagram diagram;
    std::int64_t oracle_euler = 0;
  };

  Nested nested(const GenOptions& opts = {});

  /// nested() followed by up to `moves` random flips and finger slides.
  Nested immersed(int moves, const GenOptions& opts = {});

  /// Single circle, connected high outer fiber Σ_{g1+g2}, low inner fiber
  /// Σ_{g1} ⊔ Σ_{g2}, and `points` Lefschetz points on the outer side.
  BlfDiagram split_circle(int g1, int g2, int points = 0);

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& rng() { return rng_; }

  /// Non-zero class for genus > 0, empty for a sphere.
  std::vector<std::int64_t> random_cycle(std::int64_t genus);

 private:
  std::mt19937_64 rng_;
};

enum class MoveKind { slide, r2_remove, push, cusp_modify, flip, generic_flip, slip, connect_fibers, blow_up, blow_down };

const std::vector<MoveKind>& all_moves();
std::string move_name(MoveKind m);

/// One applied move. `offset` is the expected change of the Euler
/// characteristic (pencils count with their base points blown up).
struct MoveOutcome {
  BlfDiagram before;
  BlfDiagram after;
  std::int64_t oracle_euler = 0;  // of `before`, from the face tree
  std::int64_t offset = 0;
  bool round_trip_checked = false;
  bool round_trip_ok = true;
  std::string what;
};

/// Draws a base diagram suited to `m` and applies `m` at a random place.
/// nullopt when the chosen place turned out not to admit the move.
std::optional<MoveOutcome> try_move(Generator& gen, MoveKind m);

/// Euler characteristic of a fibration or pencil.
std::int64_t total_euler(const BlfDiagram& d);

/// Euler characteristic of the total space from the nesting tree of an
/// embedded diagram: each face is a sphere minus one disk per neighbouring
/// circle, and a circle with k cusps adds k.
std::int64_t tree_euler(const BlfDiagram& d);

/// Equal after renaming vertices, curves and faces (slots up to a cyclic shift
/// per vertex, edges up to reversal). Fibers and folds compare by genus.
bool same_up_to_ids(const BlfDiagram& a, const BlfDiagram& b);

/// One to four random byte-level edits: deletions, insertions of format
/// characters, random bytes, duplicated fragments.
std::string mutate(std::mt19937_64& rng, std::string text);

std::string read_file(const std::string& path);

/// Directory with the bundled diagrams.
std::string diagrams_dir();

}  // namespace blf::testing
