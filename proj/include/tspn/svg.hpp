// Layered SVG rendering of a pipeline run: disks colored by partition class,
// the bounding square, the stratified grid with the chosen cells, the three
// graphs, the chosen sentinels and the final tour. Byte-deterministic.
#pragma once

#include <string>

#include "tspn/instance.hpp"
#include "tspn/pipeline.hpp"

namespace tspn {

std::string render_svg(const RunReport& rep, const Instance& inst);

void write_svg_file(const RunReport& rep, const Instance& inst, const std::string& path);

}  // namespace tspn
