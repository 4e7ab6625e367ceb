#include "taufan/mutation.hpp"

#include "taufan/errors.hpp"
#include "taufan/linalg.hpp"

#include <algorithm>
#include <deque>

namespace taufan {

namespace {

TwoTerm empty_complex(const Algebra& a) {
    TwoTerm t;
    t.alg = &a;
    return t;
}

struct ApproxCopy {
    int slot = -1;
    ChainMap f;
};

// stack maps X -> slots[c.slot] into one chain map X -> sum of the targets
ChainMap stack_left(const TwoTerm& x, const std::vector<ApproxCopy>& copies,
                    const std::vector<TwoTerm>& slots) {
    const Algebra& a = *x.alg;
    ChainMap out;
    out.m1.alg = out.m0.alg = &a;
    out.m1.src = x.src;
    out.m0.src = x.dst;
    for (const ApproxCopy& c : copies) {
        const TwoTerm& t = slots[static_cast<size_t>(c.slot)];
        out.m1.dst.insert(out.m1.dst.end(), t.src.begin(), t.src.end());
        out.m0.dst.insert(out.m0.dst.end(), t.dst.begin(), t.dst.end());
    }
    out.m1.elems.assign(x.src.size(), std::vector<QVec>(out.m1.dst.size(), QVec::Zero(a.dim())));
    out.m0.elems.assign(x.dst.size(), std::vector<QVec>(out.m0.dst.size(), QVec::Zero(a.dim())));
    size_t off1 = 0, off0 = 0;
    for (const ApproxCopy& c : copies) {
        const TwoTerm& t = slots[static_cast<size_t>(c.slot)];
        for (size_t q = 0; q < x.src.size(); ++q) {
            for (size_t r = 0; r < t.src.size(); ++r) out.m1.elems[q][off1 + r] = c.f.m1.elems[q][r];
        }
        for (size_t q = 0; q < x.dst.size(); ++q) {
            for (size_t r = 0; r < t.dst.size(); ++r) out.m0.elems[q][off0 + r] = c.f.m0.elems[q][r];
        }
        off1 += t.src.size();
        off0 += t.dst.size();
    }
    return out;
}

// stack maps slots[c.slot] -> X into one chain map from the sum of the sources
ChainMap stack_right(const TwoTerm& x, const std::vector<ApproxCopy>& copies,
                     const std::vector<TwoTerm>& slots) {
    const Algebra& a = *x.alg;
    ChainMap out;
    out.m1.alg = out.m0.alg = &a;
    out.m1.dst = x.src;
    out.m0.dst = x.dst;
    for (const ApproxCopy& c : copies) {
        const TwoTerm& t = slots[static_cast<size_t>(c.slot)];
        out.m1.src.insert(out.m1.src.end(), t.src.begin(), t.src.end());
        out.m0.src.insert(out.m0.src.end(), t.dst.begin(), t.dst.end());
    }
    out.m1.elems.assign(out.m1.src.size(), std::vector<QVec>(x.src.size(), QVec::Zero(a.dim())));
    out.m0.elems.assign(out.m0.src.size(), std::vector<QVec>(x.dst.size(), QVec::Zero(a.dim())));
    size_t off1 = 0, off0 = 0;
    for (const ApproxCopy& c : copies) {
        const TwoTerm& t = slots[static_cast<size_t>(c.slot)];
        for (size_t q = 0; q < t.src.size(); ++q) {
            for (size_t r = 0; r < x.src.size(); ++r) out.m1.elems[off1 + q][r] = c.f.m1.elems[q][r];
        }
        for (size_t q = 0; q < t.dst.size(); ++q) {
            for (size_t r = 0; r < x.dst.size(); ++r) out.m0.elems[off0 + q][r] = c.f.m0.elems[q][r];
        }
        off1 += t.src.size();
        off0 += t.dst.size();
    }
    return out;
}

TwoTerm sum_of_targets(const Algebra& a, const std::vector<ApproxCopy>& copies,
                       const std::vector<TwoTerm>& slots) {
    if (copies.empty()) return empty_complex(a);
    std::vector<TwoTerm> parts;
    for (const ApproxCopy& c : copies) parts.push_back(slots[static_cast<size_t>(c.slot)]);
    return sum_complex(parts);
}

// packed chain-pair coordinates of f: x -> y together with the homotopy span
QVec pack_chain(const ElemSpace& s1, const ElemSpace& s0, const ChainMap& f) {
    QVec v = QVec::Zero(s1.dim + s0.dim);
    v.head(s1.dim) = s1.pack(f.m1);
    v.tail(s0.dim) = s0.pack(f.m0);
    return v;
}

QMat homotopy_columns(const TwoTerm& x, const TwoTerm& y, const ElemSpace& s1,
                      const ElemSpace& s0) {
    ElemSpace sh = elem_space(*x.alg, x.dst, y.src);
    return to_dense(sparse_vstack(postcompose_matrix(sh, s1, x), precompose_matrix(sh, s0, y)));
}

ChainMap compose_chain(const ChainMap& first, const ChainMap& second) {
    return {compose_elem(first.m1, second.m1), compose_elem(first.m0, second.m0)};
}

// hom bases and homotopy spans between slot complexes, reused across the
// droppable tests of every mutation of one pair
struct SlotHomCache {
    struct PackContext {
        ElemSpace s1;
        ElemSpace s0;
        QMat hspan;
    };
    std::map<std::pair<int, int>, std::vector<std::pair<ProjMap, ProjMap>>> hom;
    std::map<std::pair<int, int>, PackContext> pack;
};

const std::vector<std::pair<ProjMap, ProjMap>>& cached_hom(SlotHomCache& cache,
                                                           const std::vector<TwoTerm>& slots,
                                                           int from, int to) {
    auto it = cache.hom.find({from, to});
    if (it == cache.hom.end()) {
        it = cache.hom
                 .emplace(std::make_pair(from, to),
                          hom_k_basis(slots[static_cast<size_t>(from)],
                                      slots[static_cast<size_t>(to)]))
                 .first;
    }
    return it->second;
}

const SlotHomCache::PackContext& cached_pack(SlotHomCache& cache,
                                             const std::vector<TwoTerm>& slots, int from,
                                             int to) {
    auto it = cache.pack.find({from, to});
    if (it == cache.pack.end()) {
        const TwoTerm& x = slots[static_cast<size_t>(from)];
        const TwoTerm& y = slots[static_cast<size_t>(to)];
        SlotHomCache::PackContext pc;
        pc.s1 = elem_space(*x.alg, x.src, y.src);
        pc.s0 = elem_space(*x.alg, x.dst, y.dst);
        pc.hspan = homotopy_columns(x, y, pc.s1, pc.s0);
        it = cache.pack.emplace(std::make_pair(from, to), std::move(pc)).first;
    }
    return it->second;
}

// does copy i factor through the remaining copies, up to homotopy; testing one
// remaining copy at a time spans the same space as maps from their stacked sum,
// because compositions with null-homotopic maps land in the homotopy span
bool left_copy_droppable(const std::vector<TwoTerm>& slots, size_t k,
                         const std::vector<ApproxCopy>& copies, size_t i, SlotHomCache& cache) {
    const int ti = copies[i].slot;
    const auto& pc = cached_pack(cache, slots, static_cast<int>(k), ti);
    QMat span = pc.hspan;
    for (size_t j = 0; j < copies.size(); ++j) {
        if (j == i) continue;
        for (const auto& h : cached_hom(cache, slots, copies[j].slot, ti)) {
            ChainMap comp = compose_chain(copies[j].f, ChainMap{h.first, h.second});
            span = hstack(span, QMat(pack_chain(pc.s1, pc.s0, comp)));
        }
    }
    return in_column_span(span, pack_chain(pc.s1, pc.s0, copies[i].f));
}

bool right_copy_droppable(const std::vector<TwoTerm>& slots, size_t k,
                          const std::vector<ApproxCopy>& copies, size_t i, SlotHomCache& cache) {
    const int ti = copies[i].slot;
    const auto& pc = cached_pack(cache, slots, ti, static_cast<int>(k));
    QMat span = pc.hspan;
    for (size_t j = 0; j < copies.size(); ++j) {
        if (j == i) continue;
        for (const auto& h : cached_hom(cache, slots, ti, copies[j].slot)) {
            ChainMap comp = compose_chain(ChainMap{h.first, h.second}, copies[j].f);
            span = hstack(span, QMat(pack_chain(pc.s1, pc.s0, comp)));
        }
    }
    return in_column_span(span, pack_chain(pc.s1, pc.s0, copies[i].f));
}

std::vector<ApproxCopy> reduce_copies(const std::vector<TwoTerm>& slots, size_t k,
                                      std::vector<ApproxCopy> copies, bool left,
                                      SlotHomCache& cache) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < copies.size(); ++i) {
            const bool drop = left ? left_copy_droppable(slots, k, copies, i, cache)
                                   : right_copy_droppable(slots, k, copies, i, cache);
            if (drop) {
                copies.erase(copies.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return copies;
}

ChainMap left_approximation(const std::vector<TwoTerm>& slots, size_t k,
                            std::vector<int>* copy_slots, SlotHomCache& cache) {
    const TwoTerm& x = slots[k];
    std::vector<ApproxCopy> copies;
    for (size_t j = 0; j < slots.size(); ++j) {
        if (j == k) continue;
        for (const auto& h : cached_hom(cache, slots, static_cast<int>(k), static_cast<int>(j))) {
            copies.push_back({static_cast<int>(j), ChainMap{h.first, h.second}});
        }
    }
    copies = reduce_copies(slots, k, std::move(copies), true, cache);
    if (copy_slots) {
        copy_slots->clear();
        for (const ApproxCopy& c : copies) copy_slots->push_back(c.slot);
    }
    return stack_left(x, copies, slots);
}

ChainMap right_approximation(const std::vector<TwoTerm>& slots, size_t k,
                             std::vector<int>* copy_slots, SlotHomCache& cache) {
    const TwoTerm& x = slots[k];
    std::vector<ApproxCopy> copies;
    for (size_t j = 0; j < slots.size(); ++j) {
        if (j == k) continue;
        for (const auto& h : cached_hom(cache, slots, static_cast<int>(j), static_cast<int>(k))) {
            copies.push_back({static_cast<int>(j), ChainMap{h.first, h.second}});
        }
    }
    copies = reduce_copies(slots, k, std::move(copies), false, cache);
    if (copy_slots) {
        copy_slots->clear();
        for (const ApproxCopy& c : copies) copy_slots->push_back(c.slot);
    }
    return stack_right(x, copies, slots);
}

void check_complex(const ProjMap& a, const ProjMap& b, const char* what) {
    if (a.src.empty() || b.dst.empty()) return;
    if (!elem_is_zero(compose_elem(a, b))) throw Error(std::string(what) + ": d o d != 0");
}

TwoTerm mutate_slot_with(const std::vector<TwoTerm>& slots, size_t k, SlotHomCache& cache) {
    const Algebra& alg = *slots[k].alg;
    const TwoTerm& x = slots[k];

    // left attempt: cone of the minimal left approximation, degrees -2..0
    std::vector<int> left_slots;
    ChainMap f = left_approximation(slots, k, &left_slots, cache);
    std::vector<ApproxCopy> lcopies;
    for (int s : left_slots) lcopies.push_back({s, {}});
    TwoTerm lu = sum_of_targets(alg, lcopies, slots);
    ProjMap la, lb;
    la.alg = lb.alg = &alg;
    la.src = x.src;
    la.dst = x.dst;
    la.dst.insert(la.dst.end(), lu.src.begin(), lu.src.end());
    la.elems.assign(la.src.size(), std::vector<QVec>(la.dst.size(), QVec::Zero(alg.dim())));
    for (size_t q = 0; q < x.src.size(); ++q) {
        for (size_t c = 0; c < x.dst.size(); ++c) la.elems[q][c] = x.elems[q][c];
        for (size_t c = 0; c < lu.src.size(); ++c) la.elems[q][x.dst.size() + c] = f.m1.elems[q][c];
    }
    lb.src = la.dst;
    lb.dst = lu.dst;
    lb.elems.assign(lb.src.size(), std::vector<QVec>(lb.dst.size(), QVec::Zero(alg.dim())));
    for (size_t r = 0; r < lu.dst.size(); ++r) {
        for (size_t c = 0; c < x.dst.size(); ++c) lb.elems[c][r] = QVec(-f.m0.elems[c][r]);
        for (size_t c = 0; c < lu.src.size(); ++c) lb.elems[x.dst.size() + c][r] = lu.elems[c][r];
    }
    check_complex(la, lb, "left mutation cone");
    minimize_three_term(la, lb);
    const bool left_ok = la.src.empty();

    // right attempt: cocone of the minimal right approximation, degrees -1..1
    std::vector<int> right_slots;
    ChainMap g = right_approximation(slots, k, &right_slots, cache);
    std::vector<ApproxCopy> rcopies;
    for (int s : right_slots) rcopies.push_back({s, {}});
    TwoTerm ru = sum_of_targets(alg, rcopies, slots);
    ProjMap ra, rb;
    ra.alg = rb.alg = &alg;
    ra.src = ru.src;
    ra.dst = ru.dst;
    ra.dst.insert(ra.dst.end(), x.src.begin(), x.src.end());
    ra.elems.assign(ra.src.size(), std::vector<QVec>(ra.dst.size(), QVec::Zero(alg.dim())));
    for (size_t q = 0; q < ru.src.size(); ++q) {
        for (size_t c = 0; c < ru.dst.size(); ++c) ra.elems[q][c] = ru.elems[q][c];
        for (size_t c = 0; c < x.src.size(); ++c) {
            ra.elems[q][ru.dst.size() + c] = QVec(-g.m1.elems[q][c]);
        }
    }
    rb.src = ra.dst;
    rb.dst = x.dst;
    rb.elems.assign(rb.src.size(), std::vector<QVec>(rb.dst.size(), QVec::Zero(alg.dim())));
    for (size_t r = 0; r < x.dst.size(); ++r) {
        for (size_t c = 0; c < ru.dst.size(); ++c) rb.elems[c][r] = g.m0.elems[c][r];
        for (size_t c = 0; c < x.src.size(); ++c) rb.elems[ru.dst.size() + c][r] = x.elems[c][r];
    }
    check_complex(ra, rb, "right mutation cocone");
    minimize_three_term(ra, rb);
    const bool right_ok = rb.dst.empty();

    if (left_ok == right_ok) {
        throw Error("mutate_slot: expected exactly one two-term direction");
    }
    return left_ok ? lb : ra;
}

}  // namespace

ChainMap minimal_left_approximation(const std::vector<TwoTerm>& slots, size_t k,
                                    std::vector<int>* copy_slots) {
    SlotHomCache cache;
    return left_approximation(slots, k, copy_slots, cache);
}

ChainMap minimal_right_approximation(const std::vector<TwoTerm>& slots, size_t k,
                                     std::vector<int>* copy_slots) {
    SlotHomCache cache;
    return right_approximation(slots, k, copy_slots, cache);
}

TwoTerm mutate_slot(const std::vector<TwoTerm>& slots, size_t k) {
    SlotHomCache cache;
    return mutate_slot_with(slots, k, cache);
}

int Enumeration::register_module(const Representation& m) {
    ProjMap pres = minimal_presentation(m);
    ModuleFingerprint fp = fingerprint_of(m, pres);
    const int before = registry.size();
    const int id = registry.id_of(m, std::move(fp));
    if (registry.size() > before) pres_cache.emplace(id, std::move(pres));
    return id;
}

const ProjMap& Enumeration::pres_of_id(int id) {
    auto it = pres_cache.find(id);
    if (it == pres_cache.end()) {
        it = pres_cache.emplace(id, minimal_presentation(registry.rep(id))).first;
    }
    return it->second;
}

const Representation& Enumeration::tau_of_id(int id) {
    auto it = tau_cache.find(id);
    if (it == tau_cache.end()) {
        it = tau_cache.emplace(id, tau_from_presentation(pres_of_id(id), *aop)).first;
    }
    return it->second;
}

const IVec& Enumeration::g_of_id(int id) {
    auto it = g_cache.find(id);
    if (it == g_cache.end()) it = g_cache.emplace(id, pres_of_id(id).g_vector()).first;
    return it->second;
}

std::vector<TwoTerm> Enumeration::slot_complexes(const PairData& p) {
    std::vector<TwoTerm> slots;
    for (int id : p.m_ids) slots.push_back(pres_of_id(id));
    for (int v : p.p_verts) slots.push_back(shifted_projective_complex(*alg, v));
    return slots;
}

Representation Enumeration::module_of(const PairData& p) const {
    if (p.m_ids.empty()) return zero_rep(*alg);
    std::vector<Representation> parts;
    for (int id : p.m_ids) parts.push_back(registry.rep(id));
    return direct_sum(parts);
}

int Enumeration::find_pair(const std::vector<int>& m_ids, const std::vector<int>& p_verts) const {
    auto it = index.find({m_ids, p_verts});
    return it == index.end() ? -1 : it->second;
}

namespace {

void fill_g_rays(Enumeration& e, PairData& p) {
    const int n = e.alg->vertices();
    p.g_rays.clear();
    for (int id : p.m_ids) p.g_rays.push_back(e.g_of_id(id));
    for (int v : p.p_verts) {
        IVec g(static_cast<size_t>(n), 0);
        g[static_cast<size_t>(v)] = -1;
        p.g_rays.push_back(g);
    }
}

void check_complete_pair(Enumeration& e, const PairData& p) {
    const Algebra& a = *e.alg;
    const int n = a.vertices();
    if (static_cast<int>(p.m_ids.size() + p.p_verts.size()) != n) {
        throw Error("enumerate_pairs: pair is not complete");
    }
    for (size_t i = 0; i + 1 < p.m_ids.size(); ++i) {
        if (p.m_ids[i] >= p.m_ids[i + 1]) throw Error("enumerate_pairs: repeated module summand");
    }
    for (size_t i = 0; i + 1 < p.p_verts.size(); ++i) {
        if (p.p_verts[i] >= p.p_verts[i + 1]) throw Error("enumerate_pairs: repeated projective");
    }
    for (int i : p.m_ids) {
        for (int j : p.m_ids) {
            if (hom_dim(e.registry.rep(i), e.tau_of_id(j)) != 0) {
                throw Error("enumerate_pairs: mutation produced a non-rigid pair");
            }
        }
        for (int v : p.p_verts) {
            if (hom_dim(projective_rep(a, v), e.registry.rep(i)) != 0) {
                throw Error("enumerate_pairs: mutation produced a non-rigid pair");
            }
        }
    }
}

}  // namespace

Enumeration enumerate_pairs(const Algebra& a, const Algebra& aop, int cap) {
    Enumeration e;
    e.alg = &a;
    e.aop = &aop;
    const int n = a.vertices();

    PairData start;
    for (int v = 0; v < n; ++v) start.m_ids.push_back(e.register_module(projective_rep(a, v)));
    std::sort(start.m_ids.begin(), start.m_ids.end());
    start.complete = true;
    fill_g_rays(e, start);
    check_complete_pair(e, start);
    e.pairs.push_back(start);
    e.index[{start.m_ids, start.p_verts}] = 0;
    e.neighbors.assign(1, std::vector<int>(static_cast<size_t>(n), -1));

    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        const PairData p = e.pairs[static_cast<size_t>(cur)];
        std::vector<TwoTerm> slots = e.slot_complexes(p);
        SlotHomCache cache;
        for (size_t k = 0; k < slots.size(); ++k) {
            if (e.neighbors[static_cast<size_t>(cur)][k] >= 0) continue;
            TwoTerm res = mutate_slot_with(slots, k, cache);
            PairParts parts = extract_pair_parts(res);
            std::vector<Representation> mods =
                parts.module_part.is_zero() ? std::vector<Representation>{}
                                            : decompose(parts.module_part);
            if (mods.size() + parts.shifted_verts.size() != 1) {
                throw Error("mutate_slot: exchange summand is not indecomposable");
            }
            PairData q;
            q.complete = true;
            for (size_t i = 0; i < p.m_ids.size(); ++i) {
                if (i != k) q.m_ids.push_back(p.m_ids[i]);
            }
            for (size_t i = 0; i < p.p_verts.size(); ++i) {
                if (i + p.m_ids.size() != k) q.p_verts.push_back(p.p_verts[i]);
            }
            int new_id = -1, new_vert = -1;
            for (const Representation& m : mods) {
                new_id = e.register_module(m);
                q.m_ids.push_back(new_id);
            }
            for (int v : parts.shifted_verts) {
                new_vert = v;
                q.p_verts.push_back(v);
            }
            std::sort(q.m_ids.begin(), q.m_ids.end());
            std::sort(q.p_verts.begin(), q.p_verts.end());

            int tgt = e.find_pair(q.m_ids, q.p_verts);
            if (tgt < 0) {
                fill_g_rays(e, q);
                check_complete_pair(e, q);
                tgt = static_cast<int>(e.pairs.size());
                if (tgt >= cap) throw CapExceeded("support tau-tilting pairs", cap);
                e.pairs.push_back(q);
                e.index[{q.m_ids, q.p_verts}] = tgt;
                e.neighbors.emplace_back(static_cast<size_t>(n), -1);
                queue.push_back(tgt);
            }
            e.neighbors[static_cast<size_t>(cur)][k] = tgt;
            // mutation exchanges exactly one summand both ways, so the back
            // edge at the entering summand's slot is already known
            size_t back = 0;
            if (new_id >= 0) {
                back = static_cast<size_t>(
                    std::lower_bound(q.m_ids.begin(), q.m_ids.end(), new_id) - q.m_ids.begin());
            } else {
                back = q.m_ids.size() +
                       static_cast<size_t>(
                           std::lower_bound(q.p_verts.begin(), q.p_verts.end(), new_vert) -
                           q.p_verts.begin());
            }
            if (e.neighbors[static_cast<size_t>(tgt)][back] < 0) {
                e.neighbors[static_cast<size_t>(tgt)][back] = cur;
            }
        }
    }
    e.complete_count = static_cast<int>(e.pairs.size());

    // summand closure: every face of every complete pair, including the zero
    // pair, added once
    for (int ci = 0; ci < e.complete_count; ++ci) {
        const PairData p = e.pairs[static_cast<size_t>(ci)];
        const int slots = n;
        for (int mask = 0; mask + 1 < (1 << slots); ++mask) {
            PairData q;
            for (size_t i = 0; i < p.m_ids.size(); ++i) {
                if (mask & (1 << i)) q.m_ids.push_back(p.m_ids[i]);
            }
            for (size_t i = 0; i < p.p_verts.size(); ++i) {
                if (mask & (1 << (i + p.m_ids.size()))) q.p_verts.push_back(p.p_verts[i]);
            }
            if (e.find_pair(q.m_ids, q.p_verts) >= 0) continue;
            fill_g_rays(e, q);
            e.pairs.push_back(q);
            e.index[{q.m_ids, q.p_verts}] = static_cast<int>(e.pairs.size()) - 1;
        }
    }

    // put the faces into a canonical order: rank, then summand keys
    std::vector<PairData> tail(e.pairs.begin() + e.complete_count, e.pairs.end());
    std::sort(tail.begin(), tail.end(), [](const PairData& x, const PairData& y) {
        const size_t rx = x.m_ids.size() + x.p_verts.size();
        const size_t ry = y.m_ids.size() + y.p_verts.size();
        if (rx != ry) return rx < ry;
        if (x.m_ids != y.m_ids) return x.m_ids < y.m_ids;
        return x.p_verts < y.p_verts;
    });
    for (size_t i = 0; i < tail.size(); ++i) {
        e.pairs[static_cast<size_t>(e.complete_count) + i] = tail[i];
        e.index[{tail[i].m_ids, tail[i].p_verts}] =
            e.complete_count + static_cast<int>(i);
    }
    return e;
}

}  // namespace taufan
