#include "tspn/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tspn/format.hpp"

namespace tspn {

double Instance::scale() const {
    if (disks.empty()) return 0.0;
    double lo_x = disks[0].center.x, hi_x = lo_x;
    double lo_y = disks[0].center.y, hi_y = lo_y;
    for (const Disk& d : disks) {
        lo_x = std::min(lo_x, d.center.x - d.radius);
        hi_x = std::max(hi_x, d.center.x + d.radius);
        lo_y = std::min(lo_y, d.center.y - d.radius);
        hi_y = std::max(hi_y, d.center.y + d.radius);
    }
    return std::max(hi_x - lo_x, hi_y - lo_y);
}

void Instance::validate() const {
    if (disks.empty()) throw std::invalid_argument("instance: no disks");
    for (const Disk& d : disks) {
        if (!std::isfinite(d.center.x) || !std::isfinite(d.center.y)) {
            throw std::invalid_argument("instance: non-finite center");
        }
        if (!std::isfinite(d.radius) || d.radius <= 0.0) {
            throw std::invalid_argument("instance: radius must be positive");
        }
    }
}

InstanceKind parse_instance_kind(std::string_view name) {
    if (name == "uniform") return InstanceKind::uniform;
    if (name == "clustered") return InstanceKind::clustered;
    if (name == "nested") return InstanceKind::nested;
    if (name == "touching-chain") return InstanceKind::touching_chain;
    throw std::invalid_argument("unknown instance kind '" + std::string(name) + "'");
}

std::string to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::uniform: return "uniform";
        case InstanceKind::clustered: return "clustered";
        case InstanceKind::nested: return "nested";
        case InstanceKind::touching_chain: return "touching-chain";
    }
    return "?";
}

namespace {

std::mt19937_64 make_engine(InstanceKind kind, int n, std::uint64_t seed) {
    const std::uint64_t mix = seed * 0x9E3779B97F4A7C15ull ^
                              (static_cast<std::uint64_t>(kind) << 32) ^
                              static_cast<std::uint64_t>(n);
    return std::mt19937_64(mix);
}

Instance gen_uniform(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::uniform_real_distribution<double> logr(std::log(1e-3), std::log(0.5));
    Instance inst;
    inst.disks.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = coord(rng);
        const double y = coord(rng);
        inst.disks.push_back({{x, y}, std::exp(logr(rng))});
    }
    return inst;
}

Instance gen_clustered(int n, std::mt19937_64& rng) {
    const int k = std::max(1, n / 8);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::normal_distribution<double> jitter(0.0, 0.05);
    std::uniform_real_distribution<double> logr(std::log(1e-3), std::log(0.1));
    std::vector<Point> hubs(k);
    for (Point& h : hubs) h = {coord(rng), coord(rng)};
    Instance inst;
    inst.disks.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Point& h = hubs[i % k];
        const double x = h.x + jitter(rng);
        const double y = h.y + jitter(rng);
        inst.disks.push_back({{x, y}, std::exp(logr(rng))});
    }
    return inst;
}

// Strictly nested chain: every disk contains the next one, so all disks share
// the innermost region and the greedy independent set keeps only the smallest.
Instance gen_nested(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(0.3, 0.7);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Instance inst;
    inst.disks.reserve(n);
    Point c = {coord(rng), coord(rng)};
    double r = 0.4;
    inst.disks.push_back({c, r});
    for (int i = 1; i < n; ++i) {
        const double next_r = 0.6 * r;
        const double drift = 0.4 * (r - next_r);
        const double th = angle(rng);
        c = {c.x + drift * std::cos(th), c.y + drift * std::sin(th)};
        r = next_r;
        inst.disks.push_back({c, r});
    }
    return inst;
}

// Overlapping chain with radii increasing in index order, so the greedy scan
// (radius ascending) takes every other disk.
Instance gen_touching_chain(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    Instance inst;
    inst.disks.reserve(n);
    double x = 0.0;
    double prev_r = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = 0.05 * (1.0 + 0.01 * i + 0.002 * u01(rng));
        if (i > 0) x += 0.9 * (prev_r + r);
        const double y = 0.002 * r * u01(rng);
        inst.disks.push_back({{x, y}, r});
        prev_r = r;
    }
    return inst;
}

}  // namespace

Instance generate_instance(InstanceKind kind, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");
    auto rng = make_engine(kind, n, seed);
    Instance inst;
    switch (kind) {
        case InstanceKind::uniform: inst = gen_uniform(n, rng); break;
        case InstanceKind::clustered: inst = gen_clustered(n, rng); break;
        case InstanceKind::nested: inst = gen_nested(n, rng); break;
        case InstanceKind::touching_chain: inst = gen_touching_chain(n, rng); break;
    }
    inst.validate();
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::string out = "{\n  \"version\": \"tspn-disks/1\",\n  \"disks\": [\n";
    for (std::size_t i = 0; i < inst.disks.size(); ++i) {
        const Disk& d = inst.disks[i];
        out += "    {\"x\": \"" + format_double(d.center.x) + "\", \"y\": \"" +
               format_double(d.center.y) + "\", \"r\": \"" + format_double(d.radius) +
               "\"}";
        out += (i + 1 < inst.disks.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

Instance parse_instance(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("instance parse: ") + e.what());
    }
    if (!doc.is_object() || doc.value("version", "") != "tspn-disks/1") {
        throw std::invalid_argument("instance parse: missing version tspn-disks/1");
    }
    if (!doc.contains("disks") || !doc["disks"].is_array()) {
        throw std::invalid_argument("instance parse: missing disks array");
    }
    Instance inst;
    for (const auto& rec : doc["disks"]) {
        if (!rec.is_object()) throw std::invalid_argument("instance parse: disk not an object");
        const Disk d{{parse_double(rec.at("x").get<std::string>()),
                      parse_double(rec.at("y").get<std::string>())},
                     parse_double(rec.at("r").get<std::string>())};
        inst.disks.push_back(d);
    }
    inst.validate();
    return inst;
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open instance file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

void save_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write instance file '" + path + "'");
    out << serialize_instance(inst);
}

std::string instance_digest(const Instance& inst) {
    return fnv1a_hex(serialize_instance(inst));
}

}  // namespace tspn
