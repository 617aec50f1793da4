// Problem instances (ordered disk lists), deterministic generators for the
// test families, and the tspn-disks/1 file format.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tspn/geometry.hpp"

namespace tspn {

// Disk index = identity throughout the pipeline.
struct Instance {
    std::vector<Disk> disks;

    std::size_t size() const { return disks.size(); }

    // Side length of the bounding box of all disks (centers +- radius);
    // the natural absolute scale of the instance, always > 0.
    double scale() const;

    void validate() const;  // nonempty, radii finite and > 0, centers finite
};

enum class InstanceKind { uniform, clustered, nested, touching_chain };

InstanceKind parse_instance_kind(std::string_view name);
std::string to_string(InstanceKind kind);

// Deterministic in (kind, n, seed).
Instance generate_instance(InstanceKind kind, int n, std::uint64_t seed);

// tspn-disks/1: JSON document with coordinates as decimal strings.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(std::string_view text);

Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& inst, const std::string& path);

// FNV-1a over the canonical serialization.
std::string instance_digest(const Instance& inst);

}  // namespace tspn
