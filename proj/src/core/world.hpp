#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gait.hpp"
#include "image.hpp"

namespace sucktac::sim {

/// Cell grid with holes; parsed from text maps (`.` floor, `#` hole,
/// `S` start, `G` goal).
struct GridWorld {
    int width = 0;
    int height = 0;
    double cell_size_mm = 50.0;
    std::vector<uint8_t> holes;  // row-major flags
    int start_x = -1, start_y = -1;  // from 'S', optional
    int goal_x = -1, goal_y = -1;    // from 'G', optional

    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    bool is_hole(int x, int y) const { return holes[size_t(y) * width + x] != 0; }
};

GridWorld parse_world(const std::string& text);
GridWorld load_world(const std::string& path);

enum class Heading : int { north = 0, east = 1, south = 2, west = 3 };
const char* heading_name(Heading h);
Heading turn_left(Heading h);
Heading turn_right(Heading h);
void heading_delta(Heading h, int& dx, int& dy);

enum class Action : int { forward = 0, turn_right = 1, turn_left = 2, halt = 3 };
const char* action_name(Action a);

// Hole signature: with no contact the head frame equals the resting
// reference, so the masked difference is nearly all |d| < epsilon.
inline constexpr double hole_epsilon = 0.02;
inline constexpr double hole_fraction_threshold = 0.2;

struct TerrainObservation {
    tactile::TactileImage difference;  // masked difference frame
    bool hole_detected = false;
    double confidence = 0.0;         // distance of the vote from the threshold
    double near_zero_fraction = 0.0; // masked pixels with |d| < epsilon
};

/// Render and classify one cell through the head sucker. Hole cells (and
/// out-of-bounds cells, treated as holes) produce a no-contact frame;
/// floor cells render a per-cell procedural texture. Differences are taken
/// against a resting (no-contact) reference frame acquired once per
/// episode. Deterministic in (world content, cell, seed).
TerrainObservation sense_cell(const GridWorld& world, int x, int y, uint64_t seed);
TerrainObservation sense_cell(const GridWorld& world, int x, int y, uint64_t seed,
                              const tactile::TactileImage& reference);

/// Resting reference frame for an episode seed.
tactile::TactileImage episode_reference(uint64_t seed);

struct RobotState {
    int x = 0, y = 0;
    Heading heading = Heading::east;
    int step_count = 0;
};

enum class RelDir { ahead = 0, right = 1, left = 2 };

struct DecisionTrace {
    TerrainObservation ahead;
    std::optional<TerrainObservation> right;
    std::optional<TerrainObservation> left;
    Action action = Action::halt;
};

/// Reactive policy: forward when ahead is clear; otherwise query right,
/// then left, turning toward the first clear side; halt when boxed in.
/// The sensor callback runs only for directions actually consulted.
DecisionTrace decide(const std::function<TerrainObservation(RelDir)>& sense);

struct StepOutcome {
    RobotState state;
    std::optional<gait::GaitPlan> plan;  // crawl/steer cycle emitted, none for halt
};

/// Apply one action: forward advances one cell (one crawl cycle), turns
/// rotate in place (one steer cycle). Forward into a hole is rejected.
StepOutcome step(const GridWorld& world, const RobotState& state, Action action);

struct StepLog {
    int step = 0;
    int x = 0, y = 0;            // pose when the decision was made
    Heading heading = Heading::east;
    Action action = Action::halt;
    bool hole_ahead = false;
    bool right_queried = false, right_hole = false;
    bool left_queried = false, left_hole = false;
};

struct EpisodeResult {
    std::vector<StepLog> log;
    RobotState final_state;
    std::vector<gait::TimelineRow> timeline;  // concatenated actuation schedule
    bool halted = false;
};

/// sense -> decide -> step until max_steps or halt; per-step sensing seeds
/// derive from (seed, step index, direction).
EpisodeResult run_episode(const GridWorld& world, int start_x, int start_y, Heading heading,
                          int max_steps, uint64_t seed);

/// CSV: `step,x,y,heading,action,hole_ahead`.
std::string trajectory_csv(const EpisodeResult& episode);

}  // namespace sucktac::sim
