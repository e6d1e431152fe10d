#include "world.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "heightmap.hpp"
#include "rng.hpp"

namespace sucktac::sim {

GridWorld parse_world(const std::string& text) {
    GridWorld world;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!rows.empty() && line.size() != rows.front().size())
            throw parse_error("world: line " + std::to_string(lineno) + ": row width " +
                              std::to_string(line.size()) + " differs from " +
                              std::to_string(rows.front().size()));
        rows.push_back(line);
    }
    if (rows.empty()) throw parse_error("world: no rows");
    world.height = int(rows.size());
    world.width = int(rows.front().size());
    world.holes.assign(size_t(world.width) * world.height, 0);
    for (int y = 0; y < world.height; ++y) {
        for (int x = 0; x < world.width; ++x) {
            const char c = rows[size_t(y)][size_t(x)];
            switch (c) {
                case '.': break;
                case '#': world.holes[size_t(y) * world.width + x] = 1; break;
                case 'S':
                    if (world.start_x >= 0)
                        throw parse_error("world: duplicate start at line " +
                                          std::to_string(y + 1) + ", column " +
                                          std::to_string(x + 1));
                    world.start_x = x;
                    world.start_y = y;
                    break;
                case 'G':
                    if (world.goal_x >= 0)
                        throw parse_error("world: duplicate goal at line " +
                                          std::to_string(y + 1) + ", column " +
                                          std::to_string(x + 1));
                    world.goal_x = x;
                    world.goal_y = y;
                    break;
                default:
                    throw parse_error("world: line " + std::to_string(y + 1) + ", column " +
                                      std::to_string(x + 1) + ": unexpected character '" +
                                      std::string(1, c) + "'");
            }
        }
    }
    return world;
}

GridWorld load_world(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("world: cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_world(buf.str());
}

const char* heading_name(Heading h) {
    switch (h) {
        case Heading::north: return "N";
        case Heading::east: return "E";
        case Heading::south: return "S";
        case Heading::west: return "W";
    }
    throw std::invalid_argument("heading_name: bad heading");
}

Heading turn_left(Heading h) { return Heading((int(h) + 3) % 4); }
Heading turn_right(Heading h) { return Heading((int(h) + 1) % 4); }

void heading_delta(Heading h, int& dx, int& dy) {
    switch (h) {
        case Heading::north: dx = 0; dy = -1; return;
        case Heading::east: dx = 1; dy = 0; return;
        case Heading::south: dx = 0; dy = 1; return;
        case Heading::west: dx = -1; dy = 0; return;
    }
    throw std::invalid_argument("heading_delta: bad heading");
}

const char* action_name(Action a) {
    switch (a) {
        case Action::forward: return "forward";
        case Action::turn_right: return "turn_right";
        case Action::turn_left: return "turn_left";
        case Action::halt: return "halt";
    }
    throw std::invalid_argument("action_name: bad action");
}

namespace {

// floor cells rotate through the cheap texture families
constexpr int floor_families[4] = {7, 10, 13, 14};  // dots_fine, cells_fine, ridged pair

TerrainObservation classify_difference(tactile::TactileImage diff) {
    TerrainObservation obs;
    const double radius = diff.mask_radius_fraction * std::min(diff.width, diff.height);
    const double cx = diff.width / 2.0, cy = diff.height / 2.0;
    long inside = 0, near_zero = 0;
    for (int y = 0; y < diff.height; ++y) {
        for (int x = 0; x < diff.width; ++x) {
            const double dx = x + 0.5 - cx, dy = y + 0.5 - cy;
            if (dx * dx + dy * dy > radius * radius) continue;
            ++inside;
            if (std::abs(diff.at(x, y)) < hole_epsilon) ++near_zero;
        }
    }
    obs.near_zero_fraction = inside ? double(near_zero) / double(inside) : 1.0;
    obs.hole_detected = obs.near_zero_fraction >= hole_fraction_threshold;
    obs.confidence = obs.hole_detected
                         ? (obs.near_zero_fraction - hole_fraction_threshold) /
                               (1.0 - hole_fraction_threshold)
                         : (hole_fraction_threshold - obs.near_zero_fraction) /
                               hole_fraction_threshold;
    obs.difference = std::move(diff);
    return obs;
}

}  // namespace

tactile::TactileImage episode_reference(uint64_t seed) {
    return tactile::render_resting(rng::derive(seed, 0xAE5Full));
}

TerrainObservation sense_cell(const GridWorld& world, int x, int y, uint64_t seed) {
    return sense_cell(world, x, y, seed, episode_reference(seed));
}

TerrainObservation sense_cell(const GridWorld& world, int x, int y, uint64_t seed,
                              const tactile::TactileImage& reference) {
    const bool hole = !world.in_bounds(x, y) || world.is_hole(x, y);
    const uint64_t cell_key = world.in_bounds(x, y)
                                  ? uint64_t(y) * uint64_t(world.width) + uint64_t(x)
                                  : 0xFFFF0000ull;
    const uint64_t cell_seed = rng::derive(seed, cell_key);

    tactile::TactileImage frame;
    if (hole) {
        // nothing to press against: the membrane stays at rest
        frame = tactile::render_resting(rng::derive(cell_seed, 8));
    } else {
        tactile::CaptureParams cap = tactile::sample_capture(rng::derive(cell_seed, 9));
        cap.offset_x_um = 0.0;
        cap.offset_y_um = 0.0;
        const int family = floor_families[cell_seed % 4];
        const auto map = heightmap::texture(family, rng::derive(cell_seed, 10));
        frame = tactile::render_tactile(map, cap, rng::derive(cell_seed, 8));
    }
    auto diff = tactile::difference_image(frame, reference);
    diff = tactile::apply_center_mask(diff, tactile::default_mask_radius_fraction);
    return classify_difference(std::move(diff));
}

DecisionTrace decide(const std::function<TerrainObservation(RelDir)>& sense) {
    DecisionTrace trace;
    trace.ahead = sense(RelDir::ahead);
    if (!trace.ahead.hole_detected) {
        trace.action = Action::forward;
        return trace;
    }
    trace.right = sense(RelDir::right);
    if (!trace.right->hole_detected) {
        trace.action = Action::turn_right;
        return trace;
    }
    trace.left = sense(RelDir::left);
    if (!trace.left->hole_detected) {
        trace.action = Action::turn_left;
        return trace;
    }
    trace.action = Action::halt;
    return trace;
}

StepOutcome step(const GridWorld& world, const RobotState& state, Action action) {
    if (!world.in_bounds(state.x, state.y) || world.is_hole(state.x, state.y))
        throw std::invalid_argument("step: robot state is off the floor");
    StepOutcome out;
    out.state = state;
    out.state.step_count = state.step_count + 1;
    switch (action) {
        case Action::forward: {
            int dx = 0, dy = 0;
            heading_delta(state.heading, dx, dy);
            const int nx = state.x + dx, ny = state.y + dy;
            if (!world.in_bounds(nx, ny) || world.is_hole(nx, ny))
                throw std::invalid_argument("step: forward into a hole cell");
            out.state.x = nx;
            out.state.y = ny;
            out.plan = gait::crawl_cycle_sequence();
            break;
        }
        case Action::turn_right:
            out.state.heading = turn_right(state.heading);
            out.plan = gait::steer_sequence(gait::Steer::right);
            break;
        case Action::turn_left:
            out.state.heading = turn_left(state.heading);
            out.plan = gait::steer_sequence(gait::Steer::left);
            break;
        case Action::halt:
            break;
    }
    return out;
}

EpisodeResult run_episode(const GridWorld& world, int start_x, int start_y, Heading heading,
                          int max_steps, uint64_t seed) {
    if (!world.in_bounds(start_x, start_y) || world.is_hole(start_x, start_y))
        throw std::invalid_argument("run_episode: start cell must be floor");
    if (max_steps < 0) throw std::invalid_argument("run_episode: max_steps must be >= 0");

    EpisodeResult episode;
    RobotState state{start_x, start_y, heading, 0};
    const auto reference = episode_reference(seed);
    double t_offset = 0.0;
    for (int stepno = 0; stepno < max_steps; ++stepno) {
        const uint64_t step_seed = rng::derive(seed, uint64_t(stepno));
        auto sensor = [&](RelDir dir) {
            Heading look = state.heading;
            if (dir == RelDir::right) look = turn_right(state.heading);
            if (dir == RelDir::left) look = turn_left(state.heading);
            int dx = 0, dy = 0;
            heading_delta(look, dx, dy);
            return sense_cell(world, state.x + dx, state.y + dy,
                              rng::derive(step_seed, uint64_t(dir)), reference);
        };
        const DecisionTrace trace = decide(sensor);

        StepLog log;
        log.step = stepno;
        log.x = state.x;
        log.y = state.y;
        log.heading = state.heading;
        log.action = trace.action;
        log.hole_ahead = trace.ahead.hole_detected;
        log.right_queried = trace.right.has_value();
        log.right_hole = trace.right && trace.right->hole_detected;
        log.left_queried = trace.left.has_value();
        log.left_hole = trace.left && trace.left->hole_detected;
        episode.log.push_back(log);

        const StepOutcome outcome = step(world, state, trace.action);
        state = outcome.state;
        if (outcome.plan) {
            for (auto row : gait::pressure_timeline(*outcome.plan, 1)) {
                row.t_s += t_offset;
                episode.timeline.push_back(row);
            }
            for (const auto& phase : outcome.plan->phases) t_offset += phase.dwell_s;
        }
        if (trace.action == Action::halt) {
            episode.halted = true;
            break;
        }
    }
    episode.final_state = state;
    return episode;
}

std::string trajectory_csv(const EpisodeResult& episode) {
    std::string out = "step,x,y,heading,action,hole_ahead\n";
    for (const auto& row : episode.log) {
        out += std::to_string(row.step);
        out += ',' + std::to_string(row.x);
        out += ',' + std::to_string(row.y);
        out += ',';
        out += heading_name(row.heading);
        out += ',';
        out += action_name(row.action);
        out += ',';
        out += row.hole_ahead ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace sucktac::sim
