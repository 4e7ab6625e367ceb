#include "taufan/category.hpp"

#include "taufan/errors.hpp"
#include "taufan/linalg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace taufan {

namespace {

using LeqFn = std::function<bool(int, int)>;
using KeyFn = std::function<std::string(int, int)>;

std::string wide_key_string(const WideData& w) {
    std::string out;
    for (const ModuleFingerprint& fp : w.key) out += fp.to_string() + ";";
    return out;
}

std::string pair_cone_key(const Enumeration& e, int idx) {
    const Cone c = cone_of_pair(e.pairs[static_cast<size_t>(idx)], e.alg->vertices());
    return "C[" + rays_key(c.rays) + "]";
}

// a poset as a category: one object per pair index, at most one morphism per
// ordered pair
CategoryTable build_poset_table(const Enumeration& e, const std::string& name,
                                const LeqFn& leq) {
    const int np = static_cast<int>(e.pairs.size());
    CategoryTable t;
    t.name = name;
    std::set<std::string> seen;
    for (int i = 0; i < np; ++i) {
        const std::string key = pair_cone_key(e, i);
        if (!seen.insert(key).second) {
            throw Error(name + ": duplicate cone key " + key);
        }
        t.objects.push_back(key);
        t.members.push_back({i});
    }
    std::map<std::pair<int, int>, int> by_pair;
    for (int i = 0; i < np; ++i) {
        for (int j = 0; j < np; ++j) {
            if (!leq(i, j)) continue;
            const int id = static_cast<int>(t.morphisms.size());
            t.morphisms.push_back(Morphism{i, j, "", {{i, j}}});
            t.hom[{i, j}].push_back(id);
            by_pair[{i, j}] = id;
        }
    }
    t.identity.resize(static_cast<size_t>(np), -1);
    for (int i = 0; i < np; ++i) {
        auto it = by_pair.find({i, i});
        if (it == by_pair.end()) throw Error(name + ": order is not reflexive");
        t.identity[static_cast<size_t>(i)] = it->second;
    }
    for (size_t a = 0; a < t.morphisms.size(); ++a) {
        for (size_t b = 0; b < t.morphisms.size(); ++b) {
            if (t.morphisms[a].dst_obj != t.morphisms[b].src_obj) continue;
            auto it = by_pair.find({t.morphisms[a].src_obj, t.morphisms[b].dst_obj});
            if (it == by_pair.end()) {
                throw Error(name + ": order is not transitive at " +
                            std::to_string(a) + ", " + std::to_string(b));
            }
            t.compose[{static_cast<int>(a), static_cast<int>(b)}] = it->second;
        }
    }
    return t;
}

enum class QuotKind { Geom, PairQuot, Tcm };

// the three quotient categories share one construction: group the pairs by
// wide key, class the inclusion arrows by a projected-cone key, and compose
// by aligning representatives on a common middle pair
CategoryTable build_quotient(const Enumeration& e, const FanData& fan,
                             QuotKind kind, bool checked,
                             const std::string& name) {
    const int np = static_cast<int>(e.pairs.size());
    CategoryTable t;
    t.name = name;

    std::vector<int> obj_of(static_cast<size_t>(np), -1);
    std::map<std::string, int> obj_ids;
    for (int i = 0; i < np; ++i) {
        const std::string key = wide_key_string(fan.classes[static_cast<size_t>(i)].wide);
        auto it = obj_ids.find(key);
        if (it == obj_ids.end()) {
            it = obj_ids.emplace(key, static_cast<int>(t.objects.size())).first;
            t.objects.push_back(key);
            t.members.push_back({});
        }
        obj_of[static_cast<size_t>(i)] = it->second;
        t.members[static_cast<size_t>(it->second)].push_back(i);
    }

    const LeqFn leq = [&](int i, int j) {
        if (kind == QuotKind::Geom) return tf_leq(e, fan, i, j, checked);
        return pair_is_summand(e.pairs[static_cast<size_t>(i)],
                               e.pairs[static_cast<size_t>(j)]);
    };
    const KeyFn rep_key = [&](int i, int j) {
        const TFClass& ci = fan.classes[static_cast<size_t>(i)];
        const Cone& cj = fan.classes[static_cast<size_t>(j)].cone;
        if (kind == QuotKind::Geom) return rays_key(nu_project_cone(ci, cj).rays);
        return rays_key(pi_project_cone(ci, cj).rays);
    };

    std::map<std::pair<int, int>, std::string> key_of;
    std::map<std::tuple<int, int, std::string>, std::vector<std::pair<int, int>>> groups;
    for (int i = 0; i < np; ++i) {
        for (int j = 0; j < np; ++j) {
            if (!leq(i, j)) continue;
            const std::string k = rep_key(i, j);
            key_of[{i, j}] = k;
            groups[{obj_of[static_cast<size_t>(i)], obj_of[static_cast<size_t>(j)], k}]
                .push_back({i, j});
        }
    }

    // the pair (source object, key) must already pin the target object
    std::map<std::pair<int, std::string>, int> target_of;
    for (const auto& g : groups) {
        const auto [src, dst, k] = g.first;
        auto it = target_of.find({src, k});
        if (it == target_of.end()) {
            target_of[{src, k}] = dst;
        } else if (it->second != dst) {
            throw RepresentativeDependence(name + ": key " + k +
                                           " from object " + std::to_string(src) +
                                           " reaches two distinct objects");
        }
    }

    std::map<std::tuple<int, int, std::string>, int> by_sig;
    for (auto& g : groups) {
        const auto [src, dst, k] = g.first;
        const int id = static_cast<int>(t.morphisms.size());
        t.morphisms.push_back(Morphism{src, dst, k, std::move(g.second)});
        t.hom[{src, dst}].push_back(id);
        by_sig[{src, dst, k}] = id;
    }

    t.identity.resize(t.objects.size(), -1);
    for (size_t o = 0; o < t.objects.size(); ++o) {
        auto it = by_sig.find({static_cast<int>(o), static_cast<int>(o), ""});
        if (it == by_sig.end()) throw Error(name + ": missing identity class");
        t.identity[o] = it->second;
    }

    for (size_t a = 0; a < t.morphisms.size(); ++a) {
        const Morphism& ma = t.morphisms[a];
        std::map<int, std::vector<int>> a_by_dst;
        for (const auto& r : ma.reps) a_by_dst[r.second].push_back(r.first);
        for (size_t b = 0; b < t.morphisms.size(); ++b) {
            const Morphism& mb = t.morphisms[b];
            if (ma.dst_obj != mb.src_obj) continue;
            std::set<std::string> keys;
            for (const auto& r : mb.reps) {
                auto it = a_by_dst.find(r.first);
                if (it == a_by_dst.end()) continue;
                for (int i : it->second) keys.insert(key_of.at({i, r.second}));
            }
            if (keys.empty()) {
                const std::string msg = name + ": no aligned representative for " +
                                        ma.key + " then " + mb.key;
                if (kind == QuotKind::Tcm) throw RepresentativeDependence(msg);
                throw CompositionRepresentativeNotFound(msg);
            }
            if (keys.size() > 1) {
                const std::string msg = name + ": representatives of " + ma.key +
                                        " then " + mb.key + " disagree on the composite";
                if (kind == QuotKind::Tcm) throw RepresentativeDependence(msg);
                throw CompositionAmbiguous(msg);
            }
            auto it = by_sig.find({ma.src_obj, mb.dst_obj, *keys.begin()});
            if (it == by_sig.end()) {
                throw Error(name + ": composite class missing from the table");
            }
            t.compose[{static_cast<int>(a), static_cast<int>(b)}] = it->second;
        }
    }
    return t;
}

}  // namespace

CategoryTable build_tf_poset(const Enumeration& e, const FanData& fan, bool checked) {
    return build_poset_table(e, "tf-poset", [&](int i, int j) {
        return tf_leq(e, fan, i, j, checked);
    });
}

CategoryTable build_pair_poset(const Enumeration& e) {
    return build_poset_table(e, "pair-poset", [&](int i, int j) {
        return pair_is_summand(e.pairs[static_cast<size_t>(i)],
                               e.pairs[static_cast<size_t>(j)]);
    });
}

CategoryTable build_geom_category(const Enumeration& e, const FanData& fan,
                                  bool checked) {
    return build_quotient(e, fan, QuotKind::Geom, checked, "geom");
}

CategoryTable build_pair_quotient(const Enumeration& e, const FanData& fan) {
    return build_quotient(e, fan, QuotKind::PairQuot, false, "pair-quotient");
}

CategoryTable build_tcm(const Enumeration& e, const FanData& fan) {
    return build_quotient(e, fan, QuotKind::Tcm, false, "tcm");
}

std::vector<std::pair<int, int>> hasse_edges(const CategoryTable& poset) {
    const int no = static_cast<int>(poset.objects.size());
    const auto rel = [&](int i, int j) {
        auto it = poset.hom.find({i, j});
        return it != poset.hom.end() && !it->second.empty();
    };
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < no; ++i) {
        for (int j = 0; j < no; ++j) {
            if (i == j || !rel(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < no && cover; ++k) {
                if (k != i && k != j && rel(i, k) && rel(k, j)) cover = false;
            }
            if (cover) out.push_back({i, j});
        }
    }
    return out;
}

namespace {

int object_by_key(const CategoryTable& cat, const std::string& key,
                  const std::string& ctx) {
    for (size_t o = 0; o < cat.objects.size(); ++o) {
        if (cat.objects[o] == key) return static_cast<int>(o);
    }
    throw MapUndefined(ctx + ": no object with key " + key);
}

int morphism_by_sig(const CategoryTable& cat, int src, int dst,
                    const std::string& key, const std::string& ctx) {
    auto it = cat.hom.find({src, dst});
    if (it != cat.hom.end()) {
        for (int id : it->second) {
            if (cat.morphisms[static_cast<size_t>(id)].key == key) return id;
        }
    }
    throw MapUndefined(ctx + ": no morphism with key " + key);
}

}  // namespace

Functor functor_f(const CategoryTable& pairquot, const CategoryTable& tcm) {
    Functor f;
    for (const std::string& key : pairquot.objects) {
        f.object_map.push_back(object_by_key(tcm, key, "functor_f"));
    }
    for (const Morphism& m : pairquot.morphisms) {
        f.morphism_map.push_back(
            morphism_by_sig(tcm, f.object_map[static_cast<size_t>(m.src_obj)],
                            f.object_map[static_cast<size_t>(m.dst_obj)], m.key,
                            "functor_f"));
    }
    return f;
}

Functor functor_g(const Enumeration& e, const FanData& fan,
                  const CategoryTable& pairquot, const CategoryTable& geom) {
    (void)e;
    Functor g;
    for (const std::string& key : pairquot.objects) {
        g.object_map.push_back(object_by_key(geom, key, "functor_g"));
    }
    for (const Morphism& m : pairquot.morphisms) {
        std::set<std::string> nu_keys;
        for (const auto& r : m.reps) {
            const TFClass& ci = fan.classes[static_cast<size_t>(r.first)];
            const Cone& cj = fan.classes[static_cast<size_t>(r.second)].cone;
            nu_keys.insert(rays_key(nu_project_cone(ci, cj).rays));
        }
        if (nu_keys.size() != 1) {
            throw RepresentativeDependence(
                "functor_g: representatives of " + m.key +
                " map to distinct projected ray sets");
        }
        g.morphism_map.push_back(
            morphism_by_sig(geom, g.object_map[static_cast<size_t>(m.src_obj)],
                            g.object_map[static_cast<size_t>(m.dst_obj)],
                            *nu_keys.begin(), "functor_g"));
    }
    return g;
}

CategoryReport verify_category_axioms(const CategoryTable& cat) {
    CategoryReport rep;
    const auto note = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(cat.name + ": " + s);
    };

    if (cat.identity.size() != cat.objects.size()) {
        note("identity table size mismatch");
    }
    for (size_t o = 0; o < cat.identity.size(); ++o) {
        const int id = cat.identity[o];
        if (id < 0 || id >= static_cast<int>(cat.morphisms.size())) {
            note("identity of object " + std::to_string(o) + " missing");
            continue;
        }
        const Morphism& m = cat.morphisms[static_cast<size_t>(id)];
        if (m.src_obj != static_cast<int>(o) || m.dst_obj != static_cast<int>(o)) {
            note("identity of object " + std::to_string(o) + " has wrong ends");
        }
    }

    // hom buckets partition the morphisms
    std::vector<int> seen(cat.morphisms.size(), 0);
    for (const auto& h : cat.hom) {
        for (int id : h.second) {
            const Morphism& m = cat.morphisms[static_cast<size_t>(id)];
            if (m.src_obj != h.first.first || m.dst_obj != h.first.second) {
                note("morphism " + std::to_string(id) + " filed in the wrong Hom set");
            }
            seen[static_cast<size_t>(id)] += 1;
        }
    }
    for (size_t id = 0; id < seen.size(); ++id) {
        if (seen[id] != 1) {
            note("morphism " + std::to_string(id) + " appears " +
                 std::to_string(seen[id]) + " times across Hom sets");
        }
    }

    const int nm = static_cast<int>(cat.morphisms.size());
    for (int a = 0; a < nm; ++a) {
        for (int b = 0; b < nm; ++b) {
            const bool composable = cat.morphisms[static_cast<size_t>(a)].dst_obj ==
                                    cat.morphisms[static_cast<size_t>(b)].src_obj;
            const auto it = cat.compose.find({a, b});
            if (composable != (it != cat.compose.end())) {
                note("compose domain wrong at (" + std::to_string(a) + ", " +
                     std::to_string(b) + ")");
                continue;
            }
            if (!composable) continue;
            const Morphism& mc = cat.morphisms[static_cast<size_t>(it->second)];
            if (mc.src_obj != cat.morphisms[static_cast<size_t>(a)].src_obj ||
                mc.dst_obj != cat.morphisms[static_cast<size_t>(b)].dst_obj) {
                note("composite ends wrong at (" + std::to_string(a) + ", " +
                     std::to_string(b) + ")");
            }
        }
    }

    for (int f = 0; f < nm; ++f) {
        const Morphism& m = cat.morphisms[static_cast<size_t>(f)];
        const int li = cat.identity[static_cast<size_t>(m.src_obj)];
        const int ri = cat.identity[static_cast<size_t>(m.dst_obj)];
        auto l = cat.compose.find({li, f});
        auto r = cat.compose.find({f, ri});
        if (l == cat.compose.end() || l->second != f) {
            note("left identity law fails at morphism " + std::to_string(f));
        }
        if (r == cat.compose.end() || r->second != f) {
            note("right identity law fails at morphism " + std::to_string(f));
        }
    }

    for (const auto& ab : cat.compose) {
        const auto [a, b] = ab.first;
        for (int c = 0; c < nm; ++c) {
            if (cat.morphisms[static_cast<size_t>(b)].dst_obj !=
                cat.morphisms[static_cast<size_t>(c)].src_obj)
                continue;
            const auto bc = cat.compose.find({b, c});
            if (bc == cat.compose.end()) continue;  // reported by the domain sweep
            const auto ab_c = cat.compose.find({ab.second, c});
            const auto a_bc = cat.compose.find({a, bc->second});
            if (ab_c == cat.compose.end() || a_bc == cat.compose.end() ||
                ab_c->second != a_bc->second) {
                note("associativity fails at (" + std::to_string(a) + ", " +
                     std::to_string(b) + ", " + std::to_string(c) + ")");
            }
        }
    }
    return rep;
}

CategoryReport verify_functor_equivalence(const CategoryTable& src,
                                          const CategoryTable& dst,
                                          const Functor& f) {
    CategoryReport rep;
    const auto note = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(src.name + " -> " + dst.name + ": " + s);
    };

    if (f.object_map.size() != src.objects.size() ||
        f.morphism_map.size() != src.morphisms.size()) {
        note("functor tables are not total");
        return rep;
    }

    // bijective on objects (both categories are skeletal)
    std::set<int> image(f.object_map.begin(), f.object_map.end());
    if (image.size() != f.object_map.size()) note("object map is not injective");
    if (image.size() != dst.objects.size()) note("object map is not surjective");

    for (size_t m = 0; m < src.morphisms.size(); ++m) {
        const Morphism& sm = src.morphisms[m];
        const Morphism& dm = dst.morphisms[static_cast<size_t>(f.morphism_map[m])];
        if (dm.src_obj != f.object_map[static_cast<size_t>(sm.src_obj)] ||
            dm.dst_obj != f.object_map[static_cast<size_t>(sm.dst_obj)]) {
            note("morphism " + std::to_string(m) + " maps outside its Hom set");
        }
    }

    for (size_t o = 0; o < src.objects.size(); ++o) {
        const int so = src.identity[o];
        const int to = dst.identity[static_cast<size_t>(f.object_map[o])];
        if (f.morphism_map[static_cast<size_t>(so)] != to) {
            note("identity of object " + std::to_string(o) + " not preserved");
        }
    }

    for (const auto& ab : src.compose) {
        const int fa = f.morphism_map[static_cast<size_t>(ab.first.first)];
        const int fb = f.morphism_map[static_cast<size_t>(ab.first.second)];
        const auto it = dst.compose.find({fa, fb});
        if (it == dst.compose.end() ||
            it->second != f.morphism_map[static_cast<size_t>(ab.second)]) {
            note("composition not preserved at (" +
                 std::to_string(ab.first.first) + ", " +
                 std::to_string(ab.first.second) + ")");
        }
    }

    // fully faithful: check each Hom set maps bijectively
    for (size_t x = 0; x < src.objects.size(); ++x) {
        for (size_t y = 0; y < src.objects.size(); ++y) {
            const auto s = src.hom.find({static_cast<int>(x), static_cast<int>(y)});
            const auto d = dst.hom.find({f.object_map[x], f.object_map[y]});
            const size_t sn = s == src.hom.end() ? 0 : s->second.size();
            const size_t dn = d == dst.hom.end() ? 0 : d->second.size();
            std::set<int> mapped;
            if (s != src.hom.end()) {
                for (int id : s->second) {
                    mapped.insert(f.morphism_map[static_cast<size_t>(id)]);
                }
            }
            if (mapped.size() != sn || sn != dn) {
                note("Hom(" + std::to_string(x) + ", " + std::to_string(y) +
                     ") does not map bijectively");
            }
        }
    }
    return rep;
}

}  // namespace taufan
