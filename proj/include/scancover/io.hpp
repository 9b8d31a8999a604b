#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "scancover/instance.hpp"
#include "scancover/line.hpp"
#include "scancover/schedule.hpp"

namespace scancover {

// Instance documents: {version: 1, dimension: 1|2|3|"abstract", vertices:
// [{id, coords}], edges: [[id, id]], costs: [{e1: [id, id], e2: [id, id],
// cost}]}. Unknown fields are rejected. Throws kParse or the instance's own
// validation errors.
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& instance, bool pretty = true);

// FNV-1a 64 of the compact serialization, as 16 hex digits.
std::string instance_hash(const Instance& instance);

struct ScheduleFile {
  std::string instance_hash;
  ScanSchedule schedule;
  std::optional<BitSchedule> bits;
  std::optional<Trajectory> trajectory;
};

// {instance_hash, algorithm_tag, times: [{edge: [id, id], t}], bits?:
// {steps, vectors: {id: "01.."}}, trajectory?: {id: [[t, x, y, z], ...]}}.
std::string write_schedule(const Instance& instance, const ScheduleFile& file);

// Edges absent from `times` get NaN. Throws kParse.
ScheduleFile parse_schedule(const Instance& instance, std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace scancover
