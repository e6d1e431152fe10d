#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace sucktac::gait {

enum class Channel : int {
    head_sucker = 0,
    tail_sucker = 1,
    actuator_1 = 2,  // left pair: 1, 2
    actuator_2 = 3,
    actuator_3 = 4,  // right pair: 3, 4
    actuator_4 = 5,
};
inline constexpr int channel_count = 6;
const char* channel_name(Channel c);
Channel channel_from_name(const std::string& name);
inline bool is_sucker(Channel c) { return c == Channel::head_sucker || c == Channel::tail_sucker; }

/// Pressure limits (kPa gauge) per channel kind.
struct ChannelBounds {
    double sucker_min_kpa = -15.0;
    double sucker_max_kpa = 10.0;
    double actuator_min_kpa = 0.0;
    double actuator_max_kpa = 40.0;
};

struct Target {
    Channel channel;
    double pressure_kpa;
};

struct Phase {
    std::string name;
    std::vector<Target> targets;
    double dwell_s = 1.0;
    std::string observation;  // expected-observation tag, empty if none
};

struct GaitPlan {
    std::string name;
    bool cyclic = false;
    std::vector<Phase> phases;
    std::map<std::string, std::string> destinations;  // grasp plans: class -> drop pose
};

// Pressure levels fixed by the workflow: +8 kPa head pressure for sensing
// (also reused as the friction-reduction pressure while crawling), -10 kPa
// for firm attachment, 0 for release. Dwells default to 1 s; actuator
// elongation defaults to +20 kPa.
inline constexpr double sense_pressure_kpa = 8.0;
inline constexpr double attach_pressure_kpa = -10.0;
inline constexpr double release_pressure_kpa = 0.0;
inline constexpr double default_elongation_kpa = 20.0;
inline constexpr double default_dwell_s = 1.0;

/// Grasp-and-sort cycle: approach, press at +8 kPa, capture/classify,
/// attach at -10 kPa, transport to the class destination, release at 0,
/// retract. The destination map must be nonempty.
GaitPlan grasp_cycle_plan(const std::map<std::string, std::string>& destinations,
                          double dwell_s = default_dwell_s);

/// Drop pose for a classified label; throws std::invalid_argument when the
/// class is absent from the plan's map (execution-time error per contract).
std::string resolve_destination(const GaitPlan& plan, const std::string& class_label);

/// Four-step crawl: tail anchored with head pressurized, symmetric
/// elongation, anchor swap to the head, contraction. Cyclic.
GaitPlan crawl_cycle_sequence(double dwell_s = default_dwell_s,
                              double elongation_kpa = default_elongation_kpa);

enum class Steer { left, right };

/// Crawl skeleton with elongation applied only to the lateral pair
/// opposite the turn direction.
GaitPlan steer_sequence(Steer direction, double dwell_s = default_dwell_s,
                        double elongation_kpa = default_elongation_kpa);

/// Bounds + anchoring checks; throws std::invalid_argument naming the
/// violated constraint. Every generated plan passes.
void validate_plan(const GaitPlan& plan, const ChannelBounds& bounds = {});

struct TimelineRow {
    double t_s;
    Channel channel;
    double pressure_kpa;
};

/// Piecewise-constant per-channel schedule over `cycles` repetitions;
/// one row per (phase, target), dwell-accumulated timestamps.
std::vector<TimelineRow> pressure_timeline(const GaitPlan& plan, int cycles);

/// CSV with header `t_s,channel,pressure_kpa` (3-decimal fixed format).
std::string timeline_csv(const std::vector<TimelineRow>& rows);
std::vector<TimelineRow> read_timeline_csv(std::istream& in);

/// Plain-text plan serialization, one phase per line; parse() inverts it
/// bit-exactly.
std::string plan_text(const GaitPlan& plan);
GaitPlan parse_plan_text(std::istream& in);

}  // namespace sucktac::gait
