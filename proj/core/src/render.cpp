#include "cpart/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace cpart {

namespace {

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    if (s == "-0.000000")
        s = "0.000000";
    return s;
}

}  // namespace

std::string render_svg(const Partition& p, const RenderOptions& opts)
{
    if (opts.canvas < 64)
        throw std::invalid_argument("render_svg: canvas below 64 px");
    auto col = [&](const char* k) {
        auto it = opts.palette.find(k);
        return it == opts.palette.end() ? std::string("#000000") : it->second;
    };

    double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
    for (auto& v : p.host) {
        x0 = std::min(x0, v.x);
        y0 = std::min(y0, v.y);
        x1 = std::max(x1, v.x);
        y1 = std::max(y1, v.y);
    }
    double w = x1 - x0, h = y1 - y0, span = std::max(w, h);
    double mx = 0.05 * span;
    double vx = x0 - mx, vw = w + 2 * mx, vh = h + 2 * mx;
    // y up: the document maps world y to top - y
    double top = y1 + mx;
    double sw = opts.stroke * span / opts.canvas;
    int px = static_cast<int>(opts.canvas * vw / std::max(vw, vh)), py = static_cast<int>(opts.canvas * vh / std::max(vw, vh));

    ValidationReport rep;
    bool checked = true;
    try {
        rep = validate(p);
    } catch (const std::exception&) {
        checked = false;
    }
    std::set<std::size_t> bad;
    if (checked) {
        bad.insert(rep.convexity_violations.begin(), rep.convexity_violations.end());
        bad.insert(rep.containment_violations.begin(), rep.containment_violations.end());
    }

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px << "\" height=\"" << py
      << "\" viewBox=\"" << num(vx) << ' ' << num(0) << ' ' << num(vw) << ' ' << num(vh) << "\">\n";
    auto Y = [&](double y) { return num(top - y); };

    o << "<polygon fill=\"none\" stroke=\"" << col("host") << "\" stroke-width=\"" << num(2 * sw) << "\" points=\"";
    for (std::size_t i = 0; i < p.host.size(); ++i)
        o << (i ? " " : "") << num(p.host[i].x) << ',' << Y(p.host[i].y);
    o << "\"/>\n";

    bool any_warn = checked && !rep.valid;
    for (std::size_t i = 0; i < p.pieces.size(); ++i) {
        const auto& q = p.pieces[i];
        bool warn = bad.count(i) > 0;
        o << "<path d=\"";
        for (std::size_t k = 0; k < q.size(); ++k)
            o << (k ? " L" : "M") << num(q[k].x) << ' ' << Y(q[k].y);
        o << " Z\" fill=\"" << col("fill") << "\" stroke=\"" << (warn ? col("warn") : col("stroke"))
          << "\" stroke-width=\"" << num(sw) << "\"/>\n";
    }
    if (opts.show_indisks || opts.show_circumcircles || opts.label_gamma)
        for (std::size_t i = 0; i < p.pieces.size(); ++i) {
            AspectReport a;
            try {
                a = aspect_ratio(p.pieces[i]);
            } catch (const std::exception&) {
                continue;
            }
            if (opts.show_indisks)
                o << "<circle cx=\"" << num(a.indisk.center.x) << "\" cy=\"" << Y(a.indisk.center.y) << "\" r=\""
                  << num(a.indisk.radius) << "\" fill=\"none\" stroke=\"" << col("indisk") << "\" stroke-width=\""
                  << num(sw) << "\"/>\n";
            if (opts.show_circumcircles)
                o << "<circle cx=\"" << num(a.circumcircle.center.x) << "\" cy=\"" << Y(a.circumcircle.center.y)
                  << "\" r=\"" << num(a.circumcircle.radius) << "\" fill=\"none\" stroke=\"" << col("circumcircle")
                  << "\" stroke-width=\"" << num(sw) << "\" stroke-dasharray=\"" << num(4 * sw) << ' '
                  << num(3 * sw) << "\"/>\n";
            if (opts.label_gamma) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.5f", a.gamma);
                o << "<text x=\"" << num(a.indisk.center.x) << "\" y=\"" << Y(a.indisk.center.y)
                  << "\" font-size=\"" << num(0.5 * a.indisk.radius) << "\" text-anchor=\"middle\" fill=\""
                  << col("label") << "\">" << buf << "</text>\n";
            }
        }
    if (any_warn)
        o << "<text x=\"" << num(vx + mx / 4) << "\" y=\"" << num(mx * 0.75) << "\" font-size=\"" << num(mx / 2)
          << "\" fill=\"" << col("warn") << "\">invalid partition</text>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace cpart
