#include "taufan/json_io.hpp"

#include "taufan/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace taufan {

using nlohmann::ordered_json;

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
        return Rat(num) / Rat(den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational literal \"" + s + "\"");
    }
}

namespace {

const ordered_json& field(const ordered_json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError("missing field \"" + key + "\"");
    return *it;
}

int int_field(const ordered_json& j, const std::string& key) {
    const ordered_json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError("field \"" + key + "\" must be an integer");
    return v.get<int>();
}

std::string str_field(const ordered_json& j, const std::string& key) {
    const ordered_json& v = field(j, key);
    if (!v.is_string()) throw ParseError("field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

const ordered_json& arr_field(const ordered_json& j, const std::string& key) {
    const ordered_json& v = field(j, key);
    if (!v.is_array()) throw ParseError("field \"" + key + "\" must be an array");
    return v;
}

ordered_json parse_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
}

ordered_json ray_json(const QVec& v) {
    ordered_json out = ordered_json::array();
    for (long i = 0; i < v.size(); ++i) out.push_back(rat_to_string(v(i)));
    return out;
}

std::string ray_join(const std::vector<std::string>& coords) {
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += coords[i];
    }
    return out;
}

}  // namespace

AlgebraPresentation parse_algebra_text(const std::string& text) {
    const ordered_json j = parse_text(text);
    if (!j.is_object()) throw ParseError("top level must be an object");

    AlgebraPresentation pres;
    pres.name = str_field(j, "name");
    const int n = int_field(j, "vertices");
    if (n < 1) throw ParseError("vertices must be positive");
    pres.quiver.vertices = n;

    std::set<std::string> arrow_names;
    std::map<std::string, int> arrow_ids;
    for (const ordered_json& a : arr_field(j, "arrows")) {
        Arrow arrow;
        arrow.name = str_field(a, "name");
        if (arrow.name.empty()) throw ParseError("arrow name must be nonempty");
        if (!arrow_names.insert(arrow.name).second) {
            throw ParseError("duplicate arrow name \"" + arrow.name + "\"");
        }
        arrow.from = int_field(a, "from") - 1;
        arrow.to = int_field(a, "to") - 1;
        if (arrow.from < 0 || arrow.from >= n || arrow.to < 0 || arrow.to >= n) {
            throw ParseError("arrow \"" + arrow.name + "\" endpoint out of range");
        }
        arrow_ids[arrow.name] = static_cast<int>(pres.quiver.arrows.size());
        pres.quiver.arrows.push_back(arrow);
    }

    if (j.contains("relations")) {
        for (const ordered_json& rel : arr_field(j, "relations")) {
            if (!rel.is_array() || rel.empty()) {
                throw ParseError("each relation must be a nonempty array of terms");
            }
            Relation r;
            for (const ordered_json& term : rel) {
                RelationTerm t;
                const ordered_json& coeff = field(term, "coeff");
                if (coeff.is_number_integer()) {
                    t.coeff = Rat(coeff.get<long>());
                } else if (coeff.is_string()) {
                    t.coeff = parse_rat(coeff.get<std::string>());
                } else {
                    throw ParseError("coeff must be an integer or a \"p/q\" string");
                }
                const ordered_json& path = arr_field(term, "path");
                if (path.empty()) throw ParseError("relation path must be nonempty");
                for (const ordered_json& step : path) {
                    if (!step.is_string()) throw ParseError("path steps must be arrow names");
                    auto it = arrow_ids.find(step.get<std::string>());
                    if (it == arrow_ids.end()) {
                        throw ParseError("unknown arrow \"" + step.get<std::string>() +
                                         "\" in relation");
                    }
                    t.arrows.push_back(it->second);
                }
                r.terms.push_back(std::move(t));
            }
            pres.relations.push_back(std::move(r));
        }
    }

    if (j.contains("length_bound")) {
        pres.length_bound = int_field(j, "length_bound");
        if (pres.length_bound < 1) throw ParseError("length_bound must be positive");
    }
    return pres;
}

AlgebraPresentation parse_algebra_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_text(buf.str());
}

std::vector<PairRecord> pair_records(const Enumeration& e) {
    std::vector<PairRecord> out;
    out.reserve(e.pairs.size());
    for (const PairData& p : e.pairs) {
        PairRecord rec;
        for (int id : p.m_ids) {
            rec.modules.push_back(e.registry.fingerprint(id).to_string());
        }
        for (int v : p.p_verts) rec.projectives.push_back(v + 1);
        rec.g_rays = p.g_rays;
        rec.tau_tilting = p.complete;
        out.push_back(std::move(rec));
    }
    return out;
}

std::string enumeration_to_json(const Enumeration& e) {
    ordered_json j;
    j["schema"] = "taufan/1";
    j["kind"] = "enumeration";
    j["algebra"] = e.alg->pres.name;
    j["vertices"] = e.alg->vertices();
    j["pair_count"] = static_cast<int>(e.pairs.size());
    j["tau_tilting_count"] = e.complete_count;
    ordered_json pairs = ordered_json::array();
    for (const PairRecord& rec : pair_records(e)) {
        ordered_json p;
        p["modules"] = rec.modules;
        p["projectives"] = rec.projectives;
        ordered_json rays = ordered_json::array();
        for (const IVec& g : rec.g_rays) rays.push_back(g);
        p["g_rays"] = rays;
        p["tau_tilting"] = rec.tau_tilting;
        pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
    return j.dump(2) + "\n";
}

std::vector<PairRecord> parse_pairs_json(const std::string& text) {
    const ordered_json j = parse_text(text);
    std::vector<PairRecord> out;
    for (const ordered_json& p : arr_field(j, "pairs")) {
        PairRecord rec;
        for (const ordered_json& m : arr_field(p, "modules")) {
            rec.modules.push_back(m.get<std::string>());
        }
        for (const ordered_json& v : arr_field(p, "projectives")) {
            rec.projectives.push_back(v.get<int>());
        }
        for (const ordered_json& g : arr_field(p, "g_rays")) {
            rec.g_rays.push_back(g.get<IVec>());
        }
        rec.tau_tilting = field(p, "tau_tilting").get<bool>();
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<ConeRecord> cone_records(const Enumeration& e, const FanData& fan) {
    (void)e;
    std::vector<ConeRecord> out;
    out.reserve(fan.classes.size());
    for (const TFClass& c : fan.classes) {
        ConeRecord rec;
        for (long k = 0; k < c.cone.rays.cols(); ++k) {
            std::vector<std::string> coords;
            for (long r = 0; r < c.cone.rays.rows(); ++r) {
                coords.push_back(rat_to_string(c.cone.rays(r, k)));
            }
            rec.rays.push_back(ray_join(coords));
        }
        for (const ModuleFingerprint& fp : c.wide.key) {
            rec.wide_key.push_back(fp.to_string());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string fan_to_json(const Enumeration& e, const FanData& fan) {
    ordered_json j;
    j["schema"] = "taufan/1";
    j["kind"] = "fan";
    j["algebra"] = e.alg->pres.name;
    j["vertices"] = e.alg->vertices();

    std::set<std::string> seen;
    ordered_json all_rays = ordered_json::array();
    std::vector<std::pair<std::string, ordered_json>> ray_list;
    for (const TFClass& c : fan.classes) {
        for (long k = 0; k < c.cone.rays.cols(); ++k) {
            ordered_json rj = ray_json(c.cone.rays.col(k));
            const std::string key = rj.dump();
            if (seen.insert(key).second) ray_list.push_back({key, std::move(rj)});
        }
    }
    std::sort(ray_list.begin(), ray_list.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& r : ray_list) all_rays.push_back(std::move(r.second));
    j["rays"] = std::move(all_rays);

    ordered_json cones = ordered_json::array();
    for (size_t i = 0; i < fan.classes.size(); ++i) {
        const TFClass& c = fan.classes[i];
        ordered_json cj;
        cj["pair"] = static_cast<int>(i);
        cj["dim"] = c.cone.dim();
        ordered_json rays = ordered_json::array();
        for (long k = 0; k < c.cone.rays.cols(); ++k) {
            rays.push_back(ray_json(c.cone.rays.col(k)));
        }
        cj["rays"] = std::move(rays);
        ordered_json wk = ordered_json::array();
        for (const ModuleFingerprint& fp : c.wide.key) wk.push_back(fp.to_string());
        cj["wide_key"] = std::move(wk);
        cones.push_back(std::move(cj));
    }
    j["cones"] = std::move(cones);

    ordered_json walls = ordered_json::array();
    for (const Wall& w : walls_for_render(e, fan)) {
        ordered_json wj;
        ordered_json rays = ordered_json::array();
        for (long k = 0; k < w.rays.cols(); ++k) rays.push_back(ray_json(w.rays.col(k)));
        wj["rays"] = std::move(rays);
        wj["label"] = w.label;
        ordered_json dims = ordered_json::array();
        for (const IVec& d : w.dims) dims.push_back(d);
        wj["dim_vectors"] = std::move(dims);
        walls.push_back(std::move(wj));
    }
    j["walls"] = std::move(walls);
    return j.dump(2) + "\n";
}

std::vector<ConeRecord> parse_fan_json(const std::string& text) {
    const ordered_json j = parse_text(text);
    std::vector<ConeRecord> out;
    for (const ordered_json& cj : arr_field(j, "cones")) {
        ConeRecord rec;
        for (const ordered_json& ray : arr_field(cj, "rays")) {
            std::vector<std::string> coords;
            for (const ordered_json& x : ray) coords.push_back(x.get<std::string>());
            rec.rays.push_back(ray_join(coords));
        }
        for (const ordered_json& fp : arr_field(cj, "wide_key")) {
            rec.wide_key.push_back(fp.get<std::string>());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string category_to_json(const CategoryTable& cat) {
    ordered_json j;
    j["schema"] = "taufan/1";
    j["kind"] = "category";
    j["name"] = cat.name;
    j["objects"] = cat.objects;
    ordered_json members = ordered_json::array();
    for (const std::vector<int>& m : cat.members) members.push_back(m);
    j["members"] = std::move(members);
    ordered_json morphs = ordered_json::array();
    for (const Morphism& m : cat.morphisms) {
        ordered_json mj;
        mj["src"] = m.src_obj;
        mj["dst"] = m.dst_obj;
        mj["key"] = m.key;
        ordered_json reps = ordered_json::array();
        for (const auto& r : m.reps) reps.push_back({r.first, r.second});
        mj["reps"] = std::move(reps);
        morphs.push_back(std::move(mj));
    }
    j["morphisms"] = std::move(morphs);
    ordered_json hom = ordered_json::array();
    for (const auto& h : cat.hom) {
        ordered_json hj;
        hj["src"] = h.first.first;
        hj["dst"] = h.first.second;
        hj["ids"] = h.second;
        hom.push_back(std::move(hj));
    }
    j["hom"] = std::move(hom);
    j["identity"] = cat.identity;
    ordered_json compose = ordered_json::array();
    for (const auto& c : cat.compose) {
        compose.push_back({c.first.first, c.first.second, c.second});
    }
    j["compose"] = std::move(compose);
    return j.dump(2) + "\n";
}

CategoryTable parse_category_json(const std::string& text) {
    const ordered_json j = parse_text(text);
    CategoryTable cat;
    cat.name = str_field(j, "name");
    for (const ordered_json& o : arr_field(j, "objects")) {
        cat.objects.push_back(o.get<std::string>());
    }
    for (const ordered_json& m : arr_field(j, "members")) {
        cat.members.push_back(m.get<std::vector<int>>());
    }
    for (const ordered_json& mj : arr_field(j, "morphisms")) {
        Morphism m;
        m.src_obj = int_field(mj, "src");
        m.dst_obj = int_field(mj, "dst");
        m.key = str_field(mj, "key");
        for (const ordered_json& r : arr_field(mj, "reps")) {
            m.reps.push_back({r.at(0).get<int>(), r.at(1).get<int>()});
        }
        cat.morphisms.push_back(std::move(m));
    }
    for (const ordered_json& hj : arr_field(j, "hom")) {
        cat.hom[{int_field(hj, "src"), int_field(hj, "dst")}] =
            arr_field(hj, "ids").get<std::vector<int>>();
    }
    cat.identity = arr_field(j, "identity").get<std::vector<int>>();
    for (const ordered_json& c : arr_field(j, "compose")) {
        cat.compose[{c.at(0).get<int>(), c.at(1).get<int>()}] = c.at(2).get<int>();
    }
    return cat;
}

std::string report_to_json(const RunReport& r) {
    ordered_json j;
    j["schema"] = "taufan/1";
    j["kind"] = "check";
    j["algebra"] = r.algebra;
    j["ok"] = r.ok;
    ordered_json counts;
    counts["vertices"] = r.counts.vertices;
    counts["pairs"] = r.counts.pairs;
    counts["tau_tilting"] = r.counts.tau_tilting;
    counts["rays"] = r.counts.rays;
    counts["walls"] = r.counts.walls;
    counts["geom_objects"] = r.counts.geom_objects;
    counts["pairquot_objects"] = r.counts.pairquot_objects;
    counts["tcm_objects"] = r.counts.tcm_objects;
    j["counts"] = std::move(counts);
    // timings stay out of the JSON mirror so identical inputs give
    // identical bytes; the human-readable lines carry them instead
    ordered_json checks = ordered_json::array();
    for (const CheckLine& line : r.checks) {
        ordered_json cj;
        cj["name"] = line.name;
        cj["ok"] = line.ok;
        cj["detail"] = line.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

}  // namespace taufan
