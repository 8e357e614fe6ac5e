#ifndef BARRIER_IO_HPP
#define BARRIER_IO_HPP

/// \file
/// io.hpp: JSON (de)serialization of instances and trajectories. Instance
/// documents carry exactly the fields `length`, `range`, `positions`;
/// anything else is rejected so that typos fail loudly.

#include <string>

#include "core.hpp"

namespace barrier::io {

Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

Trajectory trajectory_from_json(const std::string& text);
std::string trajectory_to_json(const Trajectory& t);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

Trajectory load_trajectory(const std::string& path);
void save_trajectory(const Trajectory& t, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace barrier::io

#endif
