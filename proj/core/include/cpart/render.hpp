#pragma once

#include "cpart/partition.hpp"

#include <map>
#include <string>

namespace cpart {

struct RenderOptions {
    bool show_indisks = false;
    bool show_circumcircles = false;
    bool label_gamma = false;
    int canvas = 800;   // pixels, longer side
    double stroke = 1.0;
    std::map<std::string, std::string> palette{
        {"fill", "#f4f1e8"}, {"stroke", "#1f2a44"}, {"indisk", "#2f7d4f"}, {"circumcircle", "#b04a2f"},
        {"host", "#000000"}, {"warn", "#d01c1c"}, {"label", "#333333"}};
};

std::string render_svg(const Partition& p, const RenderOptions& opts = {});

}  // namespace cpart
