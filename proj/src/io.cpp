#include "io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace barrier::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw error(errc::parse_error, "malformed JSON document");
    return j;
}

void reject_unknown_fields(const json& j, std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok) throw error(errc::parse_error, "unknown field '" + it.key() + "'");
    }
}

}  // namespace

Instance instance_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw error(errc::parse_error, "instance document must be an object");
    reject_unknown_fields(j, {"length", "range", "positions"});
    if (!j.contains("length") || !j.contains("range") || !j.contains("positions"))
        throw error(errc::parse_error, "instance needs fields length, range, positions");
    if (!j["length"].is_number() || !j["range"].is_number() || !j["positions"].is_array())
        throw error(errc::parse_error, "instance field has the wrong type");
    std::vector<double> xs;
    for (const auto& v : j["positions"]) {
        if (!v.is_number()) throw error(errc::parse_error, "positions must be numbers");
        xs.push_back(v.get<double>());
    }
    return validate_instance(j["length"].get<double>(), j["range"].get<double>(), std::move(xs));
}

std::string instance_to_json(const Instance& inst) {
    json j;
    j["length"] = inst.length();
    j["range"] = inst.range();
    j["positions"] = inst.positions();
    return j.dump(2) + "\n";
}

Trajectory trajectory_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw error(errc::parse_error, "trajectory document must be an object");
    reject_unknown_fields(j, {"start", "turns", "terminal", "length"});
    if (!j.contains("start") || !j.contains("turns") || !j.contains("terminal"))
        throw error(errc::parse_error, "trajectory needs fields start, turns, terminal");
    std::vector<double> pts;
    pts.push_back(j["start"].get<double>());
    for (const auto& v : j["turns"]) pts.push_back(v.get<double>());
    double terminal = j["terminal"].get<double>();
    if (pts.size() > 1 || std::abs(terminal - pts[0]) > epsilon()) pts.push_back(terminal);
    return Trajectory::from_points(pts);
}

std::string trajectory_to_json(const Trajectory& t) {
    json j;
    j["start"] = t.start();
    j["turns"] = t.turns();
    j["terminal"] = t.terminal();
    j["length"] = trajectory_length(t);
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw error(errc::io_error, "cannot write " + path);
    out << content;
}

Instance load_instance(const std::string& path) { return instance_from_json(read_file(path)); }

void save_instance(const Instance& inst, const std::string& path) {
    write_file(path, instance_to_json(inst));
}

Trajectory load_trajectory(const std::string& path) {
    return trajectory_from_json(read_file(path));
}

void save_trajectory(const Trajectory& t, const std::string& path) {
    write_file(path, trajectory_to_json(t));
}

}  // namespace barrier::io
