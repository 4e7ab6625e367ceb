#include "taufan/check.hpp"

#include "taufan/errors.hpp"
#include "taufan/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace taufan {

namespace {

Rat dot_ivec(const IVec& a, const IVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * Rat(b[i]);
    return s;
}

std::string pair_name(const Enumeration& e, int idx) {
    const PairData& p = e.pairs[static_cast<size_t>(idx)];
    std::ostringstream os;
    os << "#" << idx << "(m:";
    for (int id : p.m_ids) os << " " << id;
    os << "; p:";
    for (int v : p.p_verts) os << " " << v + 1;
    os << ")";
    return os.str();
}

}  // namespace

Workspace build_workspace(const AlgebraPresentation& pres, int cap) {
    Workspace w;
    w.alg = std::make_unique<Algebra>(build_algebra(pres));
    w.aop = std::make_unique<Algebra>(build_opposite(*w.alg));
    w.enumeration = enumerate_pairs(*w.alg, *w.aop, cap);
    w.fan = build_fan(w.enumeration);
    return w;
}

RunReport run_checks(Workspace& w, bool checked) {
    Enumeration& e = w.enumeration;
    const FanData& fan = w.fan;
    const int n = e.alg->vertices();
    const int np = static_cast<int>(e.pairs.size());

    RunReport report;
    report.algebra = e.alg->pres.name;

    const auto timed = [&](const std::string& name,
                           const std::function<std::string()>& fn) {
        CheckLine line;
        line.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        line.detail = fn();
        line.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        line.ok = line.detail.empty();
        if (!line.ok) report.ok = false;
        report.checks.push_back(std::move(line));
    };

    timed("fan-valid", [&]() -> std::string {
        std::vector<Cone> cones;
        for (const TFClass& c : fan.classes) cones.push_back(c.cone);
        const FanReport fr = verify_fan(cones);
        return fr.ok ? "" : fr.violations.front();
    });

    timed("cone-dims", [&]() -> std::string {
        for (int i = 0; i < np; ++i) {
            const PairData& p = e.pairs[static_cast<size_t>(i)];
            const int expect = static_cast<int>(p.m_ids.size() + p.p_verts.size());
            if (fan.classes[static_cast<size_t>(i)].cone.dim() != expect) {
                return "cone dim != pair rank at " + pair_name(e, i);
            }
        }
        return "";
    });

    timed("simples-basis", [&]() -> std::string {
        for (int i = 0; i < np; ++i) {
            if (!simples_basis_check(fan.classes[static_cast<size_t>(i)], n)) {
                return "simples fail the basis property at " + pair_name(e, i);
            }
        }
        return "";
    });

    timed("pairing", [&]() -> std::string {
        for (int i = 0; i < np; ++i) {
            const TFClass& c = fan.classes[static_cast<size_t>(i)];
            std::vector<IVec> simple_dims;
            for (const WideSimple& s : c.wide.simples) {
                simple_dims.push_back(s.rep.dimension_vector());
            }
            for (size_t a = 0; a < c.wide.complement_ids.size(); ++a) {
                const IVec& g = e.g_of_id(c.wide.complement_ids[a]);
                for (size_t b = 0; b < simple_dims.size(); ++b) {
                    const Rat want = a == b ? Rat(c.wide.simples[b].d) : Rat(0);
                    if (dot_ivec(g, simple_dims[b]) != want) {
                        return "pairing fails at " + pair_name(e, i);
                    }
                }
            }
            for (const IVec& ray : e.pairs[static_cast<size_t>(i)].g_rays) {
                for (const IVec& dv : simple_dims) {
                    if (dot_ivec(ray, dv) != 0) {
                        return "own-ray orthogonality fails at " + pair_name(e, i);
                    }
                }
            }
        }
        return "";
    });

    timed("projection-identity", [&]() -> std::string {
        for (int i = 0; i < np; ++i) {
            const TFClass& c = fan.classes[static_cast<size_t>(i)];
            if (!same_mat(c.pi, QMat(c.rho * c.nu))) {
                return "pi != rho o nu at " + pair_name(e, i);
            }
        }
        return "";
    });

    timed("span-constant-on-classes", [&]() -> std::string {
        std::map<std::string, int> first_of;
        for (int i = 0; i < np; ++i) {
            std::string key;
            for (const ModuleFingerprint& fp : fan.classes[static_cast<size_t>(i)].wide.key) {
                key += fp.to_string() + ";";
            }
            auto it = first_of.find(key);
            if (it == first_of.end()) {
                first_of[key] = i;
            } else if (!same_mat(fan.classes[static_cast<size_t>(i)].nu,
                                 fan.classes[static_cast<size_t>(it->second)].nu)) {
                return "nu differs inside the class of " + pair_name(e, it->second);
            }
        }
        return "";
    });

    // the order matrix feeds several sweeps below
    std::vector<std::vector<bool>> leq(static_cast<size_t>(np),
                                       std::vector<bool>(static_cast<size_t>(np)));
    for (int i = 0; i < np; ++i) {
        for (int j = 0; j < np; ++j) {
            leq[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                tf_leq(e, fan, i, j, checked);
        }
    }

    timed("order-axioms", [&]() -> std::string {
        for (int i = 0; i < np; ++i) {
            if (!leq[static_cast<size_t>(i)][static_cast<size_t>(i)]) {
                return "not reflexive at " + pair_name(e, i);
            }
        }
        for (int i = 0; i < np; ++i) {
            for (int j = 0; j < np; ++j) {
                if (i != j && leq[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
                    leq[static_cast<size_t>(j)][static_cast<size_t>(i)]) {
                    return "not antisymmetric at " + pair_name(e, i) + ", " +
                           pair_name(e, j);
                }
            }
        }
        for (int i = 0; i < np; ++i) {
            for (int j = 0; j < np; ++j) {
                if (!leq[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
                for (int k = 0; k < np; ++k) {
                    if (leq[static_cast<size_t>(j)][static_cast<size_t>(k)] &&
                        !leq[static_cast<size_t>(i)][static_cast<size_t>(k)]) {
                        return "not transitive at " + pair_name(e, i) + ", " +
                               pair_name(e, j) + ", " + pair_name(e, k);
                    }
                }
            }
        }
        return "";
    });

    timed("order-interval-equivalence", [&]() -> std::string {
        for (int i = 0; i < np; ++i) {
            for (int j = 0; j < np; ++j) {
                // the wide data already carries the completion of j
                const bool by_interval =
                    in_n(e, e.pairs[static_cast<size_t>(i)],
                         e.pairs[static_cast<size_t>(j)],
                         fan.classes[static_cast<size_t>(j)].wide.complement_ids);
                if (by_interval != leq[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                    return "order and interval test disagree at " + pair_name(e, i) +
                           " vs " + pair_name(e, j);
                }
            }
        }
        return "";
    });

    // projected keys of every inclusion, grouped by the source class
    std::map<std::pair<int, int>, std::string> nu_key, pi_key;
    timed("projection-keys", [&]() -> std::string {
        try {
            for (int i = 0; i < np; ++i) {
                for (int j = 0; j < np; ++j) {
                    if (!leq[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
                    const TFClass& ci = fan.classes[static_cast<size_t>(i)];
                    const Cone& cj = fan.classes[static_cast<size_t>(j)].cone;
                    nu_key[{i, j}] = rays_key(nu_project_cone(ci, cj).rays);
                    pi_key[{i, j}] = rays_key(pi_project_cone(ci, cj).rays);
                }
            }
        } catch (const DependentProjection& ex) {
            return ex.what();
        }
        return "";
    });

    timed("projection-partitions-agree", [&]() -> std::string {
        // within one wide class, two inclusions get the same nu key exactly
        // when they get the same pi key
        std::map<std::string, std::vector<std::pair<int, int>>> by_class;
        for (const auto& kv : nu_key) {
            std::string key;
            const TFClass& c = fan.classes[static_cast<size_t>(kv.first.first)];
            for (const ModuleFingerprint& fp : c.wide.key) key += fp.to_string() + ";";
            by_class[key].push_back(kv.first);
        }
        for (const auto& group : by_class) {
            std::map<std::string, std::string> nu_to_pi, pi_to_nu;
            for (const auto& ij : group.second) {
                const std::string& a = nu_key.at(ij);
                const std::string& b = pi_key.at(ij);
                auto f = nu_to_pi.find(a);
                if (f == nu_to_pi.end()) {
                    nu_to_pi[a] = b;
                } else if (f->second != b) {
                    return "nu and pi keys split differently at " +
                           pair_name(e, ij.first) + " <= " + pair_name(e, ij.second);
                }
                auto g = pi_to_nu.find(b);
                if (g == pi_to_nu.end()) {
                    pi_to_nu[b] = a;
                } else if (g->second != a) {
                    return "pi key merges distinct nu keys at " +
                           pair_name(e, ij.first) + " <= " + pair_name(e, ij.second);
                }
            }
        }
        return "";
    });

    timed("projected-disjoint-or-equal", [&]() -> std::string {
        // within one wide class, two projected cones are either identical or
        // their relatively open parts are disjoint
        std::map<std::string, std::set<std::string>> keys_by_class;
        std::map<std::string, std::vector<Cone>> cones_by_class;
        for (const auto& kv : nu_key) {
            std::string cls;
            const TFClass& c = fan.classes[static_cast<size_t>(kv.first.first)];
            for (const ModuleFingerprint& fp : c.wide.key) cls += fp.to_string() + ";";
            if (!keys_by_class[cls].insert(kv.second).second) continue;
            const Cone& cj = fan.classes[static_cast<size_t>(kv.first.second)].cone;
            cones_by_class[cls].push_back(nu_project_cone(c, cj));
        }
        for (const auto& group : cones_by_class) {
            for (size_t a = 0; a < group.second.size(); ++a) {
                for (size_t b = a + 1; b < group.second.size(); ++b) {
                    if (open_cones_overlap(group.second[a], group.second[b])) {
                        return "distinct projected cones overlap in class " + group.first;
                    }
                }
            }
        }
        return "";
    });

    CategoryTable tf_poset, pair_poset, geom, pairquot, tcm;
    bool cats_built = false;
    timed("category-build", [&]() -> std::string {
        try {
            tf_poset = build_tf_poset(e, fan, checked);
            pair_poset = build_pair_poset(e);
            geom = build_geom_category(e, fan, checked);
            pairquot = build_pair_quotient(e, fan);
            tcm = build_tcm(e, fan);
        } catch (const Error& ex) {
            return ex.what();
        }
        cats_built = true;
        return "";
    });
    const std::string skipped = "skipped: category build failed";

    timed("posets-agree", [&]() -> std::string {
        if (!cats_built) return skipped;
        if (tf_poset.objects != pair_poset.objects) return "object keys differ";
        if (tf_poset.hom != pair_poset.hom) return "hom relations differ";
        return "";
    });

    timed("category-axioms", [&]() -> std::string {
        if (!cats_built) return skipped;
        for (const CategoryTable* cat : {&tf_poset, &pair_poset, &geom, &pairquot, &tcm}) {
            const CategoryReport cr = verify_category_axioms(*cat);
            if (!cr.ok) return cr.violations.front();
        }
        return "";
    });

    timed("hom-within-class-is-identity", [&]() -> std::string {
        if (!cats_built) return skipped;
        for (const CategoryTable* cat : {&geom, &pairquot, &tcm}) {
            for (size_t o = 0; o < cat->objects.size(); ++o) {
                const auto it = cat->hom.find({static_cast<int>(o), static_cast<int>(o)});
                if (it == cat->hom.end() || it->second.size() != 1) {
                    return cat->name + ": Hom of object " + std::to_string(o) +
                           " with itself is not a single identity";
                }
            }
        }
        return "";
    });

    timed("origin-hom-count", [&]() -> std::string {
        if (!cats_built) return skipped;
        // the Hom set out of the initial object enumerates the classes
        // merged into the target object
        const int origin = e.find_pair({}, {});
        if (origin < 0) return "initial pair missing";
        int origin_obj = -1;
        for (size_t o = 0; o < geom.members.size(); ++o) {
            const auto& mem = geom.members[o];
            if (std::find(mem.begin(), mem.end(), origin) != mem.end()) {
                origin_obj = static_cast<int>(o);
            }
        }
        for (size_t o = 0; o < geom.objects.size(); ++o) {
            const auto it = geom.hom.find({origin_obj, static_cast<int>(o)});
            const size_t hom_n = it == geom.hom.end() ? 0 : it->second.size();
            if (hom_n != geom.members[o].size()) {
                return "Hom(origin, object " + std::to_string(o) + ") has " +
                       std::to_string(hom_n) + " classes for " +
                       std::to_string(geom.members[o].size()) + " members";
            }
        }
        return "";
    });

    timed("functor-F", [&]() -> std::string {
        if (!cats_built) return skipped;
        try {
            const Functor f = functor_f(pairquot, tcm);
            const CategoryReport cr = verify_functor_equivalence(pairquot, tcm, f);
            return cr.ok ? "" : cr.violations.front();
        } catch (const Error& ex) {
            return std::string(ex.what());
        }
    });

    timed("functor-G", [&]() -> std::string {
        if (!cats_built) return skipped;
        try {
            const Functor g = functor_g(e, fan, pairquot, geom);
            const CategoryReport cr = verify_functor_equivalence(pairquot, geom, g);
            return cr.ok ? "" : cr.violations.front();
        } catch (const Error& ex) {
            return std::string(ex.what());
        }
    });

    report.counts.vertices = n;
    report.counts.pairs = np;
    report.counts.tau_tilting = e.complete_count;
    int rays = 0;
    for (const TFClass& c : fan.classes) {
        if (c.cone.dim() == 1) ++rays;
    }
    report.counts.rays = rays;
    report.counts.walls = static_cast<int>(walls_for_render(e, fan).size());
    report.counts.geom_objects = static_cast<int>(geom.objects.size());
    report.counts.pairquot_objects = static_cast<int>(pairquot.objects.size());
    report.counts.tcm_objects = static_cast<int>(tcm.objects.size());
    return report;
}

}  // namespace taufan
