#pragma once

#include "cpart/circles.hpp"

#include <map>
#include <string>

namespace cpart {

struct Partition {
    ConvexPolygon host;
    std::vector<ConvexPolygon> pieces;
    std::map<std::string, std::string> metadata;
};

struct ValidationReport {
    bool valid = false;
    double coverage_defect = 0;   // |sum of piece areas - host area| / host area
    double max_overlap = 0;       // largest pairwise intersection area
    std::vector<std::size_t> convexity_violations;
    std::vector<std::size_t> containment_violations;
    std::vector<std::size_t> collinear_pieces;   // legal, reported only
};

struct GammaReport {
    std::vector<AspectReport> per_piece;
    double gamma = 0;
    std::size_t witness = 0;
};

struct InvalidPartition : std::runtime_error {
    ValidationReport report;
    explicit InvalidPartition(ValidationReport r);
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ValidationReport validate(const Partition& p);
GammaReport partition_gamma(const Partition& p);

std::string to_json(const Partition& p, int indent = -1);
Partition from_json(const std::string& text);
void save(const Partition& p, const std::string& path);
Partition load(const std::string& path);

// smallest interior angle of the host, degrees
double min_host_angle(const Partition& p);

}  // namespace cpart
