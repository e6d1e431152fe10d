#include "gait.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "errors.hpp"

namespace sucktac::gait {

namespace {

constexpr std::array<const char*, channel_count> names = {
    "head_sucker", "tail_sucker", "actuator_1", "actuator_2", "actuator_3", "actuator_4",
};

Phase full_phase(std::string name, double dwell, double head, double tail, double a1, double a2,
                 double a3, double a4, std::string observation = {}) {
    // every phase targets every channel so repeated cycles have no carry-over
    Phase p;
    p.name = std::move(name);
    p.dwell_s = dwell;
    p.observation = std::move(observation);
    p.targets = {
        {Channel::head_sucker, head}, {Channel::tail_sucker, tail}, {Channel::actuator_1, a1},
        {Channel::actuator_2, a2},    {Channel::actuator_3, a3},    {Channel::actuator_4, a4},
    };
    return p;
}

}  // namespace

const char* channel_name(Channel c) {
    const int i = int(c);
    if (i < 0 || i >= channel_count) throw std::invalid_argument("channel_name: bad channel");
    return names[size_t(i)];
}

Channel channel_from_name(const std::string& name) {
    for (int i = 0; i < channel_count; ++i)
        if (name == names[size_t(i)]) return Channel(i);
    throw parse_error("unknown channel '" + name + "'");
}

GaitPlan grasp_cycle_plan(const std::map<std::string, std::string>& destinations, double dwell_s) {
    if (destinations.empty())
        throw std::invalid_argument("grasp_cycle_plan: destination map must be nonempty");
    if (!(dwell_s > 0.0)) throw std::invalid_argument("grasp_cycle_plan: dwell must be > 0");
    GaitPlan plan;
    plan.name = "grasp_classify";
    plan.cyclic = false;
    plan.destinations = destinations;
    plan.phases = {
        full_phase("approach", dwell_s, 0, 0, 0, 0, 0, 0),
        full_phase("press", dwell_s, sense_pressure_kpa, 0, 0, 0, 0, 0),
        full_phase("capture", dwell_s, sense_pressure_kpa, 0, 0, 0, 0, 0, "classify"),
        full_phase("attach", dwell_s, attach_pressure_kpa, 0, 0, 0, 0, 0),
        full_phase("transport", dwell_s, attach_pressure_kpa, 0, 0, 0, 0, 0, "at_destination"),
        full_phase("release", dwell_s, release_pressure_kpa, 0, 0, 0, 0, 0),
        full_phase("retract", dwell_s, 0, 0, 0, 0, 0, 0),
    };
    return plan;
}

std::string resolve_destination(const GaitPlan& plan, const std::string& class_label) {
    const auto it = plan.destinations.find(class_label);
    if (it == plan.destinations.end())
        throw std::invalid_argument("resolve_destination: class '" + class_label +
                                    "' absent from destination map");
    return it->second;
}

GaitPlan crawl_cycle_sequence(double dwell_s, double elongation_kpa) {
    if (!(dwell_s > 0.0)) throw std::invalid_argument("crawl: dwell must be > 0");
    GaitPlan plan;
    plan.name = "crawl";
    plan.cyclic = true;
    const double e = elongation_kpa;
    plan.phases = {
        // tail anchors while the head is pressurized to cut friction
        full_phase("anchor_tail", dwell_s, sense_pressure_kpa, attach_pressure_kpa, 0, 0, 0, 0),
        full_phase("elongate", dwell_s, sense_pressure_kpa, attach_pressure_kpa, e, e, e, e),
        // anchor swap: head holds, tail releases
        full_phase("anchor_head", dwell_s, attach_pressure_kpa, release_pressure_kpa, e, e, e, e),
        full_phase("contract", dwell_s, attach_pressure_kpa, release_pressure_kpa, 0, 0, 0, 0),
    };
    return plan;
}

GaitPlan steer_sequence(Steer direction, double dwell_s, double elongation_kpa) {
    GaitPlan plan = crawl_cycle_sequence(dwell_s, elongation_kpa);
    plan.name = direction == Steer::left ? "steer_left" : "steer_right";
    const double e = elongation_kpa;
    // elongate only the pair opposite the turn: right pair (3,4) turns left
    const double a1 = direction == Steer::right ? e : 0.0;
    const double a2 = a1;
    const double a3 = direction == Steer::left ? e : 0.0;
    const double a4 = a3;
    for (auto& phase : plan.phases) {
        if (phase.name != "elongate" && phase.name != "anchor_head") continue;
        for (auto& t : phase.targets) {
            if (t.channel == Channel::actuator_1) t.pressure_kpa = a1;
            if (t.channel == Channel::actuator_2) t.pressure_kpa = a2;
            if (t.channel == Channel::actuator_3) t.pressure_kpa = a3;
            if (t.channel == Channel::actuator_4) t.pressure_kpa = a4;
        }
    }
    return plan;
}

void validate_plan(const GaitPlan& plan, const ChannelBounds& bounds) {
    if (plan.phases.empty()) throw std::invalid_argument("plan '" + plan.name + "' has no phases");
    std::array<double, channel_count> state{};  // all channels start neutral
    std::array<double, channel_count> prev{};
    for (const auto& phase : plan.phases) {
        if (!(phase.dwell_s > 0.0))
            throw std::invalid_argument("plan '" + plan.name + "': phase '" + phase.name +
                                        "' has non-positive dwell");
        prev = state;
        for (const auto& t : phase.targets) {
            const int i = int(t.channel);
            if (i < 0 || i >= channel_count)
                throw std::invalid_argument("plan '" + plan.name + "': undeclared channel");
            const double lo = is_sucker(t.channel) ? bounds.sucker_min_kpa : bounds.actuator_min_kpa;
            const double hi = is_sucker(t.channel) ? bounds.sucker_max_kpa : bounds.actuator_max_kpa;
            if (t.pressure_kpa < lo || t.pressure_kpa > hi)
                throw std::invalid_argument("plan '" + plan.name + "': phase '" + phase.name +
                                            "': " + channel_name(t.channel) + " target " +
                                            csv::fixed(t.pressure_kpa, 3) + " kPa outside [" +
                                            csv::fixed(lo, 1) + ", " + csv::fixed(hi, 1) + "]");
            state[size_t(i)] = t.pressure_kpa;
        }
        bool actuators_change = false;
        for (int i = int(Channel::actuator_1); i <= int(Channel::actuator_4); ++i)
            if (state[size_t(i)] != prev[size_t(i)]) actuators_change = true;
        if (actuators_change) {
            const bool anchored = state[int(Channel::head_sucker)] < 0.0 ||
                                  state[int(Channel::tail_sucker)] < 0.0;
            if (!anchored)
                throw std::invalid_argument("plan '" + plan.name + "': phase '" + phase.name +
                                            "' moves actuators with no sucker anchored");
        }
    }
}

std::vector<TimelineRow> pressure_timeline(const GaitPlan& plan, int cycles) {
    if (cycles < 1) throw std::invalid_argument("pressure_timeline: cycles must be >= 1");
    std::vector<TimelineRow> rows;
    double t = 0.0;
    for (int c = 0; c < cycles; ++c) {
        for (const auto& phase : plan.phases) {
            for (const auto& target : phase.targets)
                rows.push_back({t, target.channel, target.pressure_kpa});
            t += phase.dwell_s;
        }
    }
    return rows;
}

std::string timeline_csv(const std::vector<TimelineRow>& rows) {
    std::string out = "t_s,channel,pressure_kpa\n";
    for (const auto& row : rows) {
        out += csv::fixed(row.t_s, 3);
        out += ',';
        out += channel_name(row.channel);
        out += ',';
        out += csv::fixed(row.pressure_kpa, 3);
        out += '\n';
    }
    return out;
}

std::vector<TimelineRow> read_timeline_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "t_s,channel,pressure_kpa")
        throw parse_error("timeline: bad header");
    std::vector<TimelineRow> rows;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto cells = csv::split(line);
        if (cells.size() != 3)
            throw parse_error("timeline: line " + std::to_string(lineno) + ": expected 3 columns");
        try {
            rows.push_back({std::stod(cells[0]), channel_from_name(cells[1]), std::stod(cells[2])});
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("timeline: line " + std::to_string(lineno) + ": bad value");
        }
    }
    return rows;
}

std::string plan_text(const GaitPlan& plan) {
    std::string out = "plan " + plan.name + " cyclic=" + (plan.cyclic ? "1" : "0") + "\n";
    if (!plan.destinations.empty()) {
        out += "destinations";
        for (const auto& [cls, pose] : plan.destinations) out += " " + cls + "=" + pose;
        out += '\n';
    }
    for (const auto& phase : plan.phases) {
        out += "phase " + phase.name + " dwell_s=" + csv::fixed(phase.dwell_s, 3);
        out += " observe=" + (phase.observation.empty() ? "-" : phase.observation);
        for (const auto& t : phase.targets)
            out += std::string(" ") + channel_name(t.channel) + "=" +
                   csv::fixed(t.pressure_kpa, 3);
        out += '\n';
    }
    return out;
}

GaitPlan parse_plan_text(std::istream& in) {
    GaitPlan plan;
    std::string line;
    if (!std::getline(in, line)) throw parse_error("plan: empty input");
    {
        std::istringstream ls(line);
        std::string kw, cyclic;
        if (!(ls >> kw >> plan.name >> cyclic) || kw != "plan" ||
            (cyclic != "cyclic=0" && cyclic != "cyclic=1"))
            throw parse_error("plan: bad plan line");
        plan.cyclic = cyclic == "cyclic=1";
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "destinations") {
            std::string pair;
            while (ls >> pair) {
                const auto eq = pair.find('=');
                if (eq == std::string::npos || eq == 0 || eq + 1 >= pair.size())
                    throw parse_error("plan: bad destination '" + pair + "'");
                plan.destinations[pair.substr(0, eq)] = pair.substr(eq + 1);
            }
        } else if (kw == "phase") {
            Phase phase;
            std::string tok;
            if (!(ls >> phase.name)) throw parse_error("plan: phase without a name");
            while (ls >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw parse_error("plan: bad phase token '" + tok + "'");
                const std::string key = tok.substr(0, eq);
                const std::string val = tok.substr(eq + 1);
                if (key == "dwell_s") {
                    phase.dwell_s = std::stod(val);
                } else if (key == "observe") {
                    phase.observation = (val == "-") ? "" : val;
                } else {
                    phase.targets.push_back({channel_from_name(key), std::stod(val)});
                }
            }
            plan.phases.push_back(std::move(phase));
        } else {
            throw parse_error("plan: unknown line '" + line + "'");
        }
    }
    if (plan.phases.empty()) throw parse_error("plan: no phases");
    return plan;
}

}  // namespace sucktac::gait
