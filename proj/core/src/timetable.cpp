#include "snsga/timetable.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

namespace snsga::timetable {

void TimetableInstance::validate() const {
    if (horizon < 1) throw StructuralError("horizon must be >= 1");
    if (slot_length < 1) throw StructuralError("slot_length must be >= 1");
    if (threshold_gap < 0) throw StructuralError("threshold_gap must be >= 0");
    if (rig_types.empty()) throw StructuralError("instance needs at least one rig type");
    for (const auto& type : rig_types) {
        if (type.rigs.empty())
            throw StructuralError("rig type " + type.id + " has no rigs");
        for (const auto& rig : type.rigs)
            if (rig.capacity < 1)
                throw StructuralError("rig " + rig.id + " capacity must be >= 1");
    }
    for (const auto& req : requests) {
        if (req.duration < 1)
            throw StructuralError("request for " + req.user + ": duration must be >= 1");
        if (req.duration > req.max_session)
            throw StructuralError("request for " + req.user +
                                  ": duration exceeds max_session");
        if (req.max_session > horizon)
            throw StructuralError("request for " + req.user +
                                  ": max_session exceeds horizon");
        rig_type_index(req.rig_type);
    }
}

int TimetableInstance::rig_type_index(const std::string& id) const {
    for (int i = 0; i < static_cast<int>(rig_types.size()); ++i)
        if (rig_types[i].id == id) return i;
    throw LookupError("unknown rig type: " + id);
}

int TimetableInstance::max_capacity() const {
    int max_cap = 1;
    for (const auto& type : rig_types)
        for (const auto& rig : type.rigs) max_cap = std::max(max_cap, rig.capacity);
    return max_cap;
}

namespace {

struct Session {
    int request = 0;
    int type = 0;
    int rig = 0;  // within type
    int start = 0;
    int end = 0;  // exclusive
    const std::string* user = nullptr;
};

bool overlaps(const Session& a, int start, int end) {
    return a.start < end && start < a.end;
}

std::vector<Session> collect_sessions(const TimetableInstance& instance,
                                      const Schedule& schedule) {
    if (schedule.assignments.size() != instance.requests.size())
        throw StructuralError("schedule/request count mismatch");
    std::vector<Session> sessions;
    for (int k = 0; k < static_cast<int>(instance.requests.size()); ++k) {
        const auto& assignment = schedule.assignments[k];
        if (!assignment) continue;
        const Request& req = instance.requests[k];
        const int type = instance.rig_type_index(req.rig_type);
        const int rig_count = static_cast<int>(instance.rig_types[type].rigs.size());
        if (assignment->rig_index < 0 || assignment->rig_index >= rig_count)
            throw StructuralError("rig index out of range for request of " + req.user);
        if (assignment->start < 0 ||
            assignment->start + req.duration > instance.horizon)
            throw FeasibilityError("session of " + req.user +
                                   " does not fit within the horizon");
        sessions.push_back({k, type, assignment->rig_index, assignment->start,
                            assignment->start + req.duration, &req.user});
    }
    return sessions;
}

}  // namespace

void check_feasible(const TimetableInstance& instance, const Schedule& schedule) {
    const auto sessions = collect_sessions(instance, schedule);
    for (std::size_t i = 0; i < sessions.size(); ++i) {
        for (std::size_t j = i + 1; j < sessions.size(); ++j) {
            const Session& a = sessions[i];
            const Session& b = sessions[j];
            const bool same_rig = a.type == b.type && a.rig == b.rig;
            const bool in_time_overlap = overlaps(a, b.start, b.end);
            if (*a.user == *b.user && in_time_overlap)
                throw FeasibilityError("user " + *a.user +
                                       " occupies more than one rig in a slot");
            if (same_rig && !in_time_overlap) {
                const int gap = a.end <= b.start ? b.start - a.end : a.start - b.end;
                if (gap < instance.threshold_gap)
                    throw FeasibilityError(
                        "changeover gap violated on rig of type " +
                        instance.rig_types[a.type].id);
            }
        }
    }
    // Capacity per rig per slot.
    for (const auto& s : sessions) {
        const int capacity = instance.rig_types[s.type].rigs[s.rig].capacity;
        for (int t = s.start; t < s.end; ++t) {
            int occupancy = 0;
            for (const auto& other : sessions)
                if (other.type == s.type && other.rig == s.rig &&
                    overlaps(other, t, t + 1))
                    ++occupancy;
            if (occupancy > capacity)
                throw FeasibilityError("capacity exceeded on rig " +
                                       instance.rig_types[s.type].rigs[s.rig].id);
        }
    }
}

double objective_at(const TimetableInstance& instance, const Schedule& schedule,
                    int slot) {
    const auto sessions = collect_sessions(instance, schedule);
    double f = 0.0;
    for (int type = 0; type < static_cast<int>(instance.rig_types.size()); ++type) {
        const auto& rigs = instance.rig_types[type].rigs;
        for (int rig = 0; rig < static_cast<int>(rigs.size()); ++rig) {
            int occupancy = 0;
            for (const auto& s : sessions)
                if (s.type == type && s.rig == rig && overlaps(s, slot, slot + 1))
                    ++occupancy;
            if (occupancy > 0) f += rigs[rig].capacity - occupancy;
        }
    }
    return f;
}

double unassigned_penalty(const TimetableInstance& instance) {
    return static_cast<double>(instance.max_capacity()) * instance.horizon;
}

double total_objective(const TimetableInstance& instance, const Schedule& schedule) {
    check_feasible(instance, schedule);
    double total = 0.0;
    for (int t = 0; t < instance.horizon; ++t) total += objective_at(instance, schedule, t);
    for (const auto& assignment : schedule.assignments)
        if (!assignment) total += unassigned_penalty(instance);
    return total;
}

std::vector<std::pair<int, double>> objective_trace(const TimetableInstance& instance,
                                                    const Schedule& schedule) {
    check_feasible(instance, schedule);
    std::vector<std::pair<int, double>> series;
    series.reserve(instance.horizon);
    for (int t = 0; t < instance.horizon; ++t)
        series.emplace_back(t, objective_at(instance, schedule, t));
    return series;
}

namespace {

bool placement_ok(const TimetableInstance& instance,
                  const std::vector<Session>& placed, const Request& req, int type,
                  int rig, int start) {
    const int end = start + req.duration;
    for (const auto& s : placed) {
        const bool same_rig = s.type == type && s.rig == rig;
        if (*s.user == req.user && overlaps(s, start, end)) return false;
        if (same_rig && !overlaps(s, start, end)) {
            const int gap = s.end <= start ? start - s.end : s.start - end;
            if (gap < instance.threshold_gap) return false;
        }
    }
    for (int t = start; t < end; ++t) {
        int occupancy = 1;
        for (const auto& s : placed)
            if (s.type == type && s.rig == rig && overlaps(s, t, t + 1)) ++occupancy;
        if (occupancy > instance.rig_types[type].rigs[rig].capacity) return false;
    }
    return true;
}

}  // namespace

Schedule decode(const TimetableInstance& instance, const std::vector<double>& x) {
    if (x.size() != 2 * instance.requests.size())
        throw StructuralError("decode: vector length must be 2 * request count");
    Schedule schedule;
    schedule.assignments.resize(instance.requests.size());
    std::vector<Session> placed;

    for (int k = 0; k < static_cast<int>(instance.requests.size()); ++k) {
        const Request& req = instance.requests[k];
        const int type = instance.rig_type_index(req.rig_type);
        const int rig_count = static_cast<int>(instance.rig_types[type].rigs.size());
        const int rig = std::clamp(static_cast<int>(std::floor(x[2 * k])), 0,
                                   rig_count - 1);
        const int latest = instance.horizon - req.duration;
        const int tentative =
            std::clamp(static_cast<int>(std::lround(x[2 * k + 1])), 0, latest);

        // First-fit forward shift from the tentative start.
        bool assigned = false;
        for (int start = tentative; start <= latest; ++start) {
            if (placement_ok(instance, placed, req, type, rig, start)) {
                schedule.assignments[k] = Assignment{rig, start};
                placed.push_back(
                    {k, type, rig, start, start + req.duration, &req.user});
                assigned = true;
                break;
            }
        }
        if (!assigned) schedule.assignments[k] = std::nullopt;
    }
    return schedule;
}

ObjectiveProblem encode(const TimetableInstance& instance) {
    instance.validate();
    auto shared = std::make_shared<const TimetableInstance>(instance);

    ObjectiveProblem problem;
    problem.name = "timetable";
    problem.dimension = static_cast<int>(2 * shared->requests.size());
    problem.objective_count = 1;
    for (const auto& req : shared->requests) {
        const int type = shared->rig_type_index(req.rig_type);
        const double rig_count =
            static_cast<double>(shared->rig_types[type].rigs.size());
        const double latest =
            static_cast<double>(shared->horizon - req.duration);
        problem.bounds.push_back({0.0, rig_count});
        problem.bounds.push_back({0.0, latest > 0.0 ? latest : 1e-9});
    }
    problem.evaluate = [shared](const std::vector<double>& x) {
        return std::vector<double>{total_objective(*shared, decode(*shared, x))};
    };
    return problem;
}

TimetableInstance demo_instance() {
    TimetableInstance instance;
    instance.horizon = 12;
    instance.slot_length = 5;
    instance.threshold_gap = 1;  // 5-minute changeover, one slot
    for (int i = 1; i <= 3; ++i) {
        RigType type;
        type.id = "type" + std::to_string(i);
        type.rigs.push_back({"rig" + std::to_string(i), 3});
        instance.rig_types.push_back(std::move(type));
    }
    for (int u = 1; u <= 4; ++u)
        instance.requests.push_back({"user" + std::to_string(u), "type1", 3, 4});
    instance.validate();
    return instance;
}

std::vector<double> demo_encoding() {
    // Staggered arrivals for the first three users; the fourth wants an
    // immediate start and gets queued behind the full rig.
    return {0.5, 0, 0.5, 1, 0.5, 2, 0.5, 0};
}

namespace {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TimetableInstance from_json(const nlohmann::json& doc, const std::string& source) {
    TimetableInstance instance;
    try {
        instance.horizon = doc.at("horizon").get<int>();
        instance.slot_length = doc.at("slot_length").get<int>();
        if (doc.contains("threshold_gap_minutes")) {
            const int minutes = doc.at("threshold_gap_minutes").get<int>();
            instance.threshold_gap =
                (minutes + instance.slot_length - 1) / instance.slot_length;
        } else {
            instance.threshold_gap = doc.value("threshold_gap_slots", 0);
        }
        for (const auto& jt : doc.at("rig_types")) {
            RigType type;
            type.id = jt.at("id").get<std::string>();
            for (const auto& jr : jt.at("rigs"))
                type.rigs.push_back(
                    {jr.at("id").get<std::string>(), jr.at("capacity").get<int>()});
            instance.rig_types.push_back(std::move(type));
        }
        for (const auto& jr : doc.at("requests"))
            instance.requests.push_back({jr.at("user").get<std::string>(),
                                         jr.at("rig_type").get<std::string>(),
                                         jr.at("duration").get<int>(),
                                         jr.at("max_session").get<int>()});
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source + ": " + e.what());
    }
    instance.validate();
    return instance;
}

}  // namespace

TimetableInstance parse_instance(std::istream& in, const std::string& source_name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(source_name + ": " + e.what());
    }
    return from_json(doc, source_name);
}

TimetableInstance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path.string());
    return parse_instance(in, path.string());
}

}  // namespace snsga::timetable
