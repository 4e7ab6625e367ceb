#pragma once

#include "taufan/category.hpp"

#include <string>

namespace taufan {

// short human label for a pair: module dimension vectors plus shifted
// projectives, e.g. "[1,1]+[0,1]" or "P1[1]+P2[1]"
std::string pair_display_label(const Enumeration& e, int pair_index);

// DOT text; hasse_only draws covering arrows of a poset table, otherwise
// every non-identity morphism class is drawn, colored by its key
std::string category_to_dot(const Enumeration& e, const CategoryTable& cat,
                            bool hasse_only);

// the rank-2 fan picture in [-3,3]^2: walls labelled by the dim vectors of
// their bricks, chambers by their pairs; throws SVGUnsupportedRank otherwise
std::string fan_to_svg(const Enumeration& e, const FanData& fan);

}  // namespace taufan
