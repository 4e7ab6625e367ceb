#pragma once

#include "taufan/check.hpp"

#include <string>
#include <vector>

namespace taufan {

// "p" or "p/q"; throws ParseError on anything else
Rat parse_rat(const std::string& s);

// the input file format: name, vertices, arrows, relations, length_bound;
// vertices are 1-based in files and 0-based in memory
AlgebraPresentation parse_algebra_text(const std::string& text);
AlgebraPresentation parse_algebra_path(const std::string& path);

// canonical "taufan/1" JSON bytes; identical inputs give identical output
std::string enumeration_to_json(const Enumeration& e);
std::string fan_to_json(const Enumeration& e, const FanData& fan);
std::string category_to_json(const CategoryTable& cat);
std::string report_to_json(const RunReport& r);

// flattened views that state the emit/parse round trip exactly
struct PairRecord {
    std::vector<std::string> modules;  // summand fingerprints
    std::vector<int> projectives;      // 1-based vertices
    std::vector<IVec> g_rays;
    bool tau_tilting = false;

    bool operator==(const PairRecord&) const = default;
};
std::vector<PairRecord> pair_records(const Enumeration& e);
std::vector<PairRecord> parse_pairs_json(const std::string& text);

struct ConeRecord {
    std::vector<std::string> rays;      // comma-joined coordinate strings
    std::vector<std::string> wide_key;  // simple fingerprints
    bool operator==(const ConeRecord&) const = default;
};
std::vector<ConeRecord> cone_records(const Enumeration& e, const FanData& fan);
std::vector<ConeRecord> parse_fan_json(const std::string& text);

CategoryTable parse_category_json(const std::string& text);

}  // namespace taufan
