#include "cpart/partition.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cpart {

InvalidPartition::InvalidPartition(ValidationReport r)
    : std::runtime_error("invalid partition"), report(std::move(r))
{
}

namespace {

struct Box {
    double x0, y0, x1, y1;
};

Box bbox(const ConvexPolygon& p)
{
    Box b{INFINITY, INFINITY, -INFINITY, -INFINITY};
    for (auto& q : p) {
        b.x0 = std::min(b.x0, q.x);
        b.y0 = std::min(b.y0, q.y);
        b.x1 = std::max(b.x1, q.x);
        b.y1 = std::max(b.y1, q.y);
    }
    return b;
}

}  // namespace

ValidationReport validate(const Partition& p)
{
    if (p.host.size() < 3)
        throw std::invalid_argument("host has fewer than 3 vertices");
    for (std::size_t i = 0; i < p.pieces.size(); ++i)
        if (p.pieces[i].size() < 3)
            throw std::invalid_argument("piece " + std::to_string(i) + " has fewer than 3 vertices");

    ValidationReport r;
    double host_area = polygon_area(p.host);
    Box hb = bbox(p.host);
    double scale = std::max({1.0, hb.x1 - hb.x0, hb.y1 - hb.y0});

    double sum = 0;
    std::vector<Box> boxes;
    for (std::size_t i = 0; i < p.pieces.size(); ++i) {
        const auto& q = p.pieces[i];
        sum += polygon_area(q);
        boxes.push_back(bbox(q));
        if (!is_convex(q))
            r.convexity_violations.push_back(i);
        else if (has_collinear_vertex(q))
            r.collinear_pieces.push_back(i);
        for (auto& v : q)
            if (!contains(p.host, v, tau_pt * scale)) {
                r.containment_violations.push_back(i);
                break;
            }
    }
    r.coverage_defect = std::abs(sum - host_area) / host_area;

    for (std::size_t i = 0; i < p.pieces.size(); ++i)
        for (std::size_t j = i + 1; j < p.pieces.size(); ++j) {
            const Box &a = boxes[i], &b = boxes[j];
            if (a.x1 <= b.x0 || b.x1 <= a.x0 || a.y1 <= b.y0 || b.y1 <= a.y0)
                continue;
            r.max_overlap = std::max(r.max_overlap, intersection_area(p.pieces[i], p.pieces[j]));
        }

    r.valid = r.coverage_defect <= tau_cover && r.max_overlap <= tau_cover * host_area &&
              r.convexity_violations.empty() && r.containment_violations.empty();
    return r;
}

GammaReport partition_gamma(const Partition& p)
{
    auto rep = validate(p);
    if (!rep.valid)
        throw InvalidPartition(rep);
    GammaReport g;
    for (std::size_t i = 0; i < p.pieces.size(); ++i) {
        g.per_piece.push_back(aspect_ratio(p.pieces[i]));
        if (g.per_piece.back().gamma > g.gamma) {
            g.gamma = g.per_piece.back().gamma;
            g.witness = i;
        }
    }
    return g;
}

double min_host_angle(const Partition& p)
{
    double m = 360;
    for (std::size_t i = 0; i < p.host.size(); ++i)
        m = std::min(m, interior_angle(p.host, i));
    return m;
}

namespace {

using nlohmann::json;

json poly_json(const ConvexPolygon& q)
{
    json a = json::array();
    for (auto& v : q)
        a.push_back({v.x, v.y});
    return a;
}

ConvexPolygon poly_from(const json& j, const std::string& what)
{
    if (!j.is_array())
        throw ParseError(what + ": expected an array of [x,y] pairs");
    std::vector<Point> v;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto& pt = j[k];
        if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number())
            throw ParseError(what + ", vertex " + std::to_string(k) + ": expected [x, y]");
        v.push_back({pt[0].get<double>(), pt[1].get<double>()});
    }
    if (v.size() < 3)
        throw ParseError(what + ": " + std::to_string(v.size()) + " vertices, need at least 3");
    return ConvexPolygon(v);
}

}  // namespace

std::string to_json(const Partition& p, int indent)
{
    json j;
    j["host"] = poly_json(p.host);
    j["pieces"] = json::array();
    for (auto& q : p.pieces)
        j["pieces"].push_back(poly_json(q));
    j["metadata"] = json::object();
    for (auto& [k, v] : p.metadata)
        j["metadata"][k] = v;
    return j.dump(indent);
}

Partition from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("host") || !j.contains("pieces"))
        throw ParseError("partition file needs \"host\" and \"pieces\"");
    Partition p;
    p.host = poly_from(j["host"], "host");
    if (!j["pieces"].is_array())
        throw ParseError("\"pieces\" must be an array");
    for (std::size_t i = 0; i < j["pieces"].size(); ++i)
        p.pieces.push_back(poly_from(j["pieces"][i], "piece " + std::to_string(i)));
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object())
            throw ParseError("\"metadata\" must be an object");
        for (auto& [k, v] : j["metadata"].items())
            p.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return p;
}

void save(const Partition& p, const std::string& path)
{
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write " + path);
    f << to_json(p, 1) << '\n';
}

Partition load(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return from_json(ss.str());
}

}  // namespace cpart
