#pragma once

#include <optional>
#include <string>

#include "scancover/instance.hpp"
#include "scancover/schedule.hpp"

namespace scancover {

// Static picture of a schedule: the point set with edges colored by scan
// time (blue early, red late) next to one timeline row per vertex with its
// scan instants and, when a trajectory is given for a planar instance, its
// heading over time. Abstract instances are drawn on a circle.
std::string render_svg(const Instance& instance, const ScanSchedule& schedule,
                       const std::optional<Trajectory>& trajectory = std::nullopt);

}  // namespace scancover
