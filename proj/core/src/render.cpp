#include "taufan/render.hpp"

#include "taufan/errors.hpp"
#include "taufan/tfclass.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace taufan {

namespace {

std::string dim_vector_label(const IVec& dv) {
    std::string out = "[";
    for (size_t i = 0; i < dv.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(dv[i]);
    }
    return out + "]";
}

// a small qualitative palette, cycled when keys outnumber it
const char* const kPalette[] = {
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02",
    "#a6761d", "#386cb0", "#f0027f", "#bf5b17", "#666666", "#7fc97f",
};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string fmt1(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", x);
    return buf;
}

double to_double(const Rat& q) { return q.convert_to<double>(); }

std::string escape_dot(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string pair_display_label(const Enumeration& e, int pair_index) {
    const PairData& p = e.pairs[static_cast<size_t>(pair_index)];
    std::string out;
    for (size_t i = 0; i < p.m_ids.size(); ++i) {
        if (i) out += "+";
        out += dim_vector_label(e.registry.rep(p.m_ids[i]).dimension_vector());
    }
    for (size_t i = 0; i < p.p_verts.size(); ++i) {
        if (!out.empty()) out += "+";
        out += "P" + std::to_string(p.p_verts[i] + 1) + "[1]";
    }
    if (out.empty()) out = "0";
    return out;
}

std::string category_to_dot(const Enumeration& e, const CategoryTable& cat,
                            bool hasse_only) {
    std::ostringstream os;
    os << "digraph \"" << escape_dot(cat.name) << "\" {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box, fontsize=10];\n";
    for (size_t o = 0; o < cat.objects.size(); ++o) {
        std::string label;
        for (size_t m = 0; m < cat.members[o].size(); ++m) {
            if (m) label += "\\n";
            label += pair_display_label(e, cat.members[o][m]);
        }
        os << "  n" << o << " [label=\"" << escape_dot(label) << "\"];\n";
    }
    if (hasse_only) {
        for (const auto& edge : hasse_edges(cat)) {
            os << "  n" << edge.first << " -> n" << edge.second << ";\n";
        }
    } else {
        // one color per morphism-class key; the legend maps aliases back
        std::map<std::string, int> alias;
        for (const Morphism& m : cat.morphisms) {
            if (m.src_obj == m.dst_obj && m.key.empty()) continue;
            if (!alias.count(m.key)) {
                const int id = static_cast<int>(alias.size());
                alias[m.key] = id;
            }
        }
        for (const auto& kv : alias) {
            os << "  // k" << kv.second << " = " << kv.first << "\n";
        }
        for (const Morphism& m : cat.morphisms) {
            if (m.src_obj == m.dst_obj && m.key.empty()) continue;
            const int id = alias.at(m.key);
            os << "  n" << m.src_obj << " -> n" << m.dst_obj << " [color=\""
               << kPalette[static_cast<size_t>(id) % kPaletteSize] << "\", label=\"k"
               << id << "\", fontsize=8];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string fan_to_svg(const Enumeration& e, const FanData& fan) {
    const int n = e.alg->vertices();
    if (n != 2) {
        throw SVGUnsupportedRank("SVG rendering needs rank 2, got " +
                                 std::to_string(n));
    }
    const double scale = 100.0, cx = 320.0, cy = 320.0;
    const auto px = [&](double x) { return cx + scale * x; };
    const auto py = [&](double y) { return cy - scale * y; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
          "viewBox=\"0 0 640 640\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\"/>\n";
    os << "  <line x1=\"20\" y1=\"320\" x2=\"620\" y2=\"320\" stroke=\"#dddddd\"/>\n";
    os << "  <line x1=\"320\" y1=\"20\" x2=\"320\" y2=\"620\" stroke=\"#dddddd\"/>\n";

    // chamber labels sit on the normalized ray sum of each full cone
    for (size_t i = 0; i < fan.classes.size(); ++i) {
        const Cone& c = fan.classes[i].cone;
        if (c.dim() != 2) continue;
        double sx = 0, sy = 0;
        for (long k = 0; k < c.rays.cols(); ++k) {
            const double x = to_double(c.rays(0, k));
            const double y = to_double(c.rays(1, k));
            const double len = std::sqrt(x * x + y * y);
            sx += x / len;
            sy += y / len;
        }
        const double len = std::sqrt(sx * sx + sy * sy);
        sx = 1.9 * sx / len;
        sy = 1.9 * sy / len;
        os << "  <text x=\"" << fmt1(px(sx)) << "\" y=\"" << fmt1(py(sy))
           << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#444444\">"
           << pair_display_label(e, fan.classes[i].pair_index) << "</text>\n";
    }

    // walls: each codim-1 class drawn as its ray, labelled by its brick
    for (const Wall& w : walls_for_render(e, fan)) {
        const double x = to_double(w.rays(0, 0));
        const double y = to_double(w.rays(1, 0));
        const double ext = 3.0 / std::max(std::abs(x), std::abs(y));
        os << "  <line x1=\"" << fmt1(px(0)) << "\" y1=\"" << fmt1(py(0))
           << "\" x2=\"" << fmt1(px(ext * x)) << "\" y2=\"" << fmt1(py(ext * y))
           << "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
        const double len = std::sqrt(x * x + y * y);
        std::string label;
        for (size_t i = 0; i < w.dims.size(); ++i) {
            if (i) label += " ";
            label += "D" + dim_vector_label(w.dims[i]);
        }
        os << "  <text x=\"" << fmt1(px(2.45 * x / len)) << "\" y=\""
           << fmt1(py(2.45 * y / len))
           << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#aa2222\">" << label
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace taufan
