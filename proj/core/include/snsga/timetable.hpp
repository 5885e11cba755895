#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "snsga/problem.hpp"

namespace snsga::timetable {

struct Rig {
    std::string id;
    int capacity = 1;  // simultaneous users supported
};

struct RigType {
    std::string id;
    std::vector<Rig> rigs;
};

struct Request {
    std::string user;
    std::string rig_type;
    int duration = 1;     // slots
    int max_session = 1;  // cap on possession time, slots
};

/// Rig inventory, discrete horizon, changeover gap, and user requests.
struct TimetableInstance {
    std::vector<RigType> rig_types;
    int horizon = 1;        // number of slots
    int slot_length = 5;    // minutes per slot
    int threshold_gap = 1;  // slots between successive possessions of a rig
    std::vector<Request> requests;

    void validate() const;
    int rig_type_index(const std::string& id) const;
    int max_capacity() const;
};

/// Rig chosen within the request's type, plus a start slot; sessions
/// occupy [start, start + duration).
struct Assignment {
    int rig_index = 0;
    int start = 0;
};

struct Schedule {
    std::vector<std::optional<Assignment>> assignments;  // one per request
};

/// A schedule violated one of the model constraints.
struct FeasibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws FeasibilityError naming the violated constraint. Checks:
/// one rig per user per slot, capacity, contiguity/horizon fit, and the
/// changeover gap between disjoint possessions of a rig.
void check_feasible(const TimetableInstance& instance, const Schedule& schedule);

/// Unused capacity over in-use rigs at one slot:
/// sum over occupied rigs of (capacity - current occupancy).
double objective_at(const TimetableInstance& instance, const Schedule& schedule,
                    int slot);

/// Penalty charged per unassigned request (max capacity x horizon).
double unassigned_penalty(const TimetableInstance& instance);

/// Sum of the per-slot objective over the horizon plus unassignment
/// penalties.
double total_objective(const TimetableInstance& instance, const Schedule& schedule);

/// Per-slot objective series for the whole horizon.
std::vector<std::pair<int, double>> objective_trace(const TimetableInstance& instance,
                                                    const Schedule& schedule);

/// Decodes a real vector (per request: rig selector, start slot) into a
/// feasible schedule, repairing conflicts by deterministic first-fit
/// forward shifting; unrepairable requests are left unassigned.
Schedule decode(const TimetableInstance& instance, const std::vector<double>& x);

/// Wraps the instance as a 2*|requests|-dimensional minimization
/// problem over decode + total_objective.
ObjectiveProblem encode(const TimetableInstance& instance);

/// Built-in scenario: 3 rig types with one capacity-3 rig each, four
/// users requesting the first type with staggered arrivals; the fourth
/// is queued behind the full rig.
TimetableInstance demo_instance();
std::vector<double> demo_encoding();

/// JSON instance document; threshold_gap given in minutes and
/// converted to slots (ceil).
TimetableInstance load_instance(const std::filesystem::path& path);
TimetableInstance parse_instance(std::istream& in, const std::string& source_name);

}  // namespace snsga::timetable
