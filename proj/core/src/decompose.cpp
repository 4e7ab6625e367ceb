#include "taufan/decompose.hpp"

#include "taufan/errors.hpp"
#include "taufan/linalg.hpp"
#include "taufan/poly.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace taufan {

namespace {

// stage-1 trial schedule seed; fixed default keeps runs reproducible
unsigned long long decompose_seed_state = 0x9e3779b97f4a7c15ull;

QVec vec_of(const QMat& m) {
    QVec v(m.rows() * m.cols());
    Eigen::Index k = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) v(k++) = m(r, c);
    }
    return v;
}

QMat mat_pow(const QMat& m, int e) {
    QMat r = QMat::Identity(m.rows(), m.cols());
    for (int i = 0; i < e; ++i) r = r * m;
    return r;
}

// split off the generalized kernel of each distinct irreducible factor of
// the characteristic polynomial of phi; empty when there is a single factor
std::optional<std::vector<Representation>> split_by_endomorphism(const Representation& m,
                                                                 const QMat& phi) {
    QPoly cp = charpoly(phi);
    QFactorization fac = factor(cp);
    if (fac.factors.size() < 2) return std::nullopt;
    std::vector<Representation> parts;
    int total = 0;
    for (const auto& [f, e] : fac.factors) {
        QMat fe = mat_pow(qp_eval_matrix(f, phi), e);
        QMat ker = kernel_basis(fe);
        assert(ker.cols() > 0);
        parts.push_back(sub_representation(m, ker));
        total += parts.back().total_dim();
    }
    assert(total == m.total_dim() && "generalized kernels must exhaust the module");
    return parts;
}

// quotient of the endomorphism algebra by its radical, with an abstract
// multiplication table on a fixed complement basis
struct SemisimpleQuotient {
    std::vector<QMat> coset_reps;            // complement basis inside End
    std::vector<QMat> rad_basis;
    QMat membership;                          // [vec rad | vec complement]
    std::vector<QMat> left_mult;              // left multiplication per basis element
    QVec unit_coords;

    int dim() const { return static_cast<int>(coset_reps.size()); }

    QVec coords_of(const QMat& x) const {
        auto sol = solve(membership, vec_of(x));
        assert(sol && "element must lie in the endomorphism algebra");
        return sol->tail(dim());
    }

    QVec mul(const QVec& a, const QVec& b) const {
        QVec r = QVec::Zero(dim());
        for (int i = 0; i < dim(); ++i) {
            if (a(i) == 0) continue;
            r += a(i) * (left_mult[static_cast<size_t>(i)] * b);
        }
        return r;
    }

    QMat left_mult_of(const QVec& a) const {
        QMat r = QMat::Zero(dim(), dim());
        for (int i = 0; i < dim(); ++i) {
            if (a(i) == 0) continue;
            r += a(i) * left_mult[static_cast<size_t>(i)];
        }
        return r;
    }

    QVec eval_poly(const QPoly& p, const QVec& z) const {
        QVec r = QVec::Zero(dim());
        QMat lz = left_mult_of(z);
        for (int i = p.deg(); i >= 0; --i) {
            r = lz * r;
            r += p.c[static_cast<size_t>(i)] * unit_coords;
        }
        return r;
    }

    QMat lift(const QVec& coords) const {
        QMat x = QMat::Zero(coset_reps[0].rows(), coset_reps[0].cols());
        for (int i = 0; i < dim(); ++i) x += coords(i) * coset_reps[static_cast<size_t>(i)];
        return x;
    }
};

SemisimpleQuotient make_quotient(const std::vector<QMat>& endb, const std::vector<QMat>& rad) {
    SemisimpleQuotient q;
    q.rad_basis = rad;
    const Eigen::Index vlen = endb[0].rows() * endb[0].cols();
    QMat stacked(vlen, static_cast<Eigen::Index>(rad.size() + endb.size()));
    for (size_t i = 0; i < rad.size(); ++i) stacked.col(static_cast<Eigen::Index>(i)) = vec_of(rad[i]);
    for (size_t i = 0; i < endb.size(); ++i) {
        stacked.col(static_cast<Eigen::Index>(rad.size() + i)) = vec_of(endb[i]);
    }
    std::vector<int> keep = independent_columns(stacked);
    QMat memb(vlen, static_cast<Eigen::Index>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) {
        memb.col(static_cast<Eigen::Index>(i)) = stacked.col(keep[i]);
        if (keep[i] >= static_cast<int>(rad.size())) {
            q.coset_reps.push_back(endb[static_cast<size_t>(keep[i]) - rad.size()]);
        } else {
            assert(static_cast<size_t>(keep[i]) < rad.size());
        }
    }
    // the radical columns are independent already, so they all survive
    assert(keep.size() == rad.size() + q.coset_reps.size());
    q.membership = memb;
    const int f = q.dim();
    q.left_mult.resize(static_cast<size_t>(f));
    std::vector<QVec> basis_coords(static_cast<size_t>(f));
    for (int i = 0; i < f; ++i) {
        q.left_mult[static_cast<size_t>(i)] = QMat::Zero(f, f);
    }
    for (int i = 0; i < f; ++i) {
        for (int j = 0; j < f; ++j) {
            QVec c = q.coords_of(q.coset_reps[static_cast<size_t>(i)] *
                                 q.coset_reps[static_cast<size_t>(j)]);
            q.left_mult[static_cast<size_t>(i)].col(j) = c;
        }
    }
    QMat id = QMat::Identity(endb[0].rows(), endb[0].cols());
    q.unit_coords = q.coords_of(id);
    return q;
}

// deterministic coefficient tuples with entries in [-bound, bound], ordered
// by increasing max-norm; the all-zero tuple is skipped
class CoeffGrid {
  public:
    CoeffGrid(int k, long bound) : k_(k), bound_(bound), cur_(static_cast<size_t>(k), 0) {}

    std::optional<std::vector<long>> next() {
        while (advance()) {
            long mx = 0;
            for (long c : cur_) mx = std::max(mx, std::abs(c));
            if (mx == shell_) return cur_;
        }
        if (shell_ < bound_) {
            ++shell_;
            std::fill(cur_.begin(), cur_.end(), -shell_);
            first_of_shell_ = true;
            return next();
        }
        return std::nullopt;
    }

  private:
    bool advance() {
        if (first_of_shell_) {
            first_of_shell_ = false;
            return true;
        }
        for (int i = k_ - 1; i >= 0; --i) {
            if (cur_[static_cast<size_t>(i)] < shell_) {
                ++cur_[static_cast<size_t>(i)];
                for (int j = i + 1; j < k_; ++j) cur_[static_cast<size_t>(j)] = -shell_;
                return true;
            }
        }
        return false;
    }

    int k_;
    long bound_;
    long shell_ = 0;
    bool first_of_shell_ = false;
    std::vector<long> cur_;
};

QMat combine(const std::vector<QMat>& basis, const std::vector<long>& coeffs) {
    QMat x = QMat::Zero(basis[0].rows(), basis[0].cols());
    for (size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i]) x += Rat(coeffs[i]) * basis[i];
    }
    return x;
}

std::vector<Representation> split_by_idempotent(const Representation& m, const QMat& e) {
    QMat id = QMat::Identity(e.rows(), e.cols());
    QMat k0 = kernel_basis(e);
    QMat k1 = kernel_basis(QMat(id - e));
    assert(k0.cols() > 0 && k1.cols() > 0 && "idempotent must be proper");
    return {sub_representation(m, k0), sub_representation(m, k1)};
}

// Newton lift of an almost idempotent through the nilpotent radical of End
QMat newton_idempotent(QMat x) {
    for (int it = 0; it < 64; ++it) {
        if (same_mat(x * x, x)) return x;
        x = 3 * (x * x) - 2 * (x * x * x);
    }
    throw Error("idempotent lifting did not converge");
}

// one split step, or certified indecomposability (true), or uncertainty
struct StepResult {
    bool indecomposable = false;
    std::vector<Representation> parts;
};

StepResult decompose_step(const Representation& m) {
    std::vector<QMat> endb = end_basis(m);
    const int k = static_cast<int>(endb.size());
    if (k == 1) return {true, {}};

    // stage 1: characteristic polynomial splits over a small deterministic
    // schedule of endomorphisms
    {
        std::vector<QMat> trials;
        for (const QMat& e : endb) trials.push_back(e);
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                trials.push_back(endb[static_cast<size_t>(i)] + endb[static_cast<size_t>(j)]);
                trials.push_back(endb[static_cast<size_t>(i)] - endb[static_cast<size_t>(j)]);
            }
        }
        unsigned long long s = decompose_seed_state;
        for (int t = 0; t < 24; ++t) {
            std::vector<long> cs(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) {
                s = s * 6364136223846793005ull + 1442695040888963407ull;
                cs[static_cast<size_t>(i)] = static_cast<long>((s >> 33) % 9) - 4;
            }
            trials.push_back(combine(endb, cs));
        }
        for (const QMat& phi : trials) {
            if (is_zero_mat(phi)) continue;
            if (auto parts = split_by_endomorphism(m, phi)) return {false, std::move(*parts)};
        }
    }

    // stage 2: local endomorphism algebra certificate
    std::vector<QMat> rad = matrix_algebra_radical(endb);
    const int f = k - static_cast<int>(rad.size());
    if (f == 1) return {true, {}};
    SemisimpleQuotient q = make_quotient(endb, rad);

    // stage 3: central elements with reducible minimal polynomial give
    // orthogonal idempotents; an irreducible one of full central degree
    // certifies a field
    {
        // center: z with z c_j = c_j z for all j
        QMat centersys = QMat::Zero(q.dim() * q.dim(), q.dim());
        for (int j = 0; j < q.dim(); ++j) {
            // column i of block j: coords(c_i c_j - c_j c_i)
            for (int i = 0; i < q.dim(); ++i) {
                QVec ei = QVec::Zero(q.dim());
                ei(i) = 1;
                QVec ej = QVec::Zero(q.dim());
                ej(j) = 1;
                QVec d = q.mul(ei, ej) - q.mul(ej, ei);
                centersys.block(j * q.dim(), i, q.dim(), 1) = d;
            }
        }
        QMat zb = kernel_basis(centersys);
        const int zdim = static_cast<int>(zb.cols());
        bool field_center_is_all = false;
        CoeffGrid grid(zdim, 3);
        int budget = 400;
        while (budget-- > 0) {
            auto cs = grid.next();
            if (!cs) break;
            QVec z = QVec::Zero(q.dim());
            for (int i = 0; i < zdim; ++i) z += Rat((*cs)[static_cast<size_t>(i)]) * zb.col(i);
            if (is_zero_vec(z)) continue;
            QPoly mp = minpoly(q.left_mult_of(z));
            QFactorization fac = factor(mp);
            if (fac.factors.size() >= 2) {
                QPoly m1 = fac.factors[0].first;
                QPoly rest = qp_const(1);
                for (size_t i = 1; i < fac.factors.size(); ++i) {
                    rest = qp_mul(rest, qp_pow(fac.factors[i].first, fac.factors[i].second));
                }
                m1 = qp_pow(m1, fac.factors[0].second);
                auto eg = qp_ext_gcd(m1, rest);
                assert(eg.g.deg() == 0);
                QVec eh = q.eval_poly(qp_mul(eg.u, m1), z);
                QMat e = newton_idempotent(q.lift(eh));
                return {false, split_by_idempotent(m, e)};
            }
            if (mp.deg() == zdim && fac.factors.size() == 1 && fac.factors[0].second == 1) {
                field_center_is_all = true;
                break;
            }
        }
        if (field_center_is_all && zdim == q.dim()) return {true, {}};
    }

    // stage 4: hunt a zero divisor in the semisimple quotient; its minimal
    // polynomial then has coprime parts and lifts to a splitting idempotent
    {
        CoeffGrid grid(q.dim(), 6);
        int budget = 60000;
        while (budget-- > 0) {
            auto cs = grid.next();
            if (!cs) break;
            QVec z = QVec::Zero(q.dim());
            for (int i = 0; i < q.dim(); ++i) z(i) = Rat((*cs)[static_cast<size_t>(i)]);
            QMat lz = q.left_mult_of(z);
            if (rank_of(lz) == q.dim()) continue;  // invertible, no use
            QPoly mp = minpoly(lz);
            // split x^a from the rest
            int a = 0;
            QPoly rest = mp;
            while (rest.deg() >= 1 && rest.c[0] == 0) {
                ++a;
                std::vector<Rat> c(rest.c.begin() + 1, rest.c.end());
                rest = QPoly(std::move(c));
            }
            if (a == 0 || rest.deg() < 1) continue;  // nilpotent or unusable
            QPoly xa = qp_pow(qp_x(), a);
            auto eg = qp_ext_gcd(xa, rest);
            assert(eg.g.deg() == 0);
            QVec eh = q.eval_poly(qp_mul(eg.u, xa), z);
            QMat e = newton_idempotent(q.lift(eh));
            return {false, split_by_idempotent(m, e)};
        }
    }

    throw DecompositionUncertain(
        "no split found and no indecomposability certificate within the search budget (module " +
        rep_to_string(m) + ")");
}

}  // namespace

std::vector<Representation> decompose(const Representation& m) {
    if (m.total_dim() == 0) return {};
    // a one-dimensional endomorphism ring is local
    if (hom_dim(m, m) == 1) return {m};
    StepResult st = decompose_step(m);
    if (st.indecomposable) return {m};
    std::vector<Representation> out;
    for (const Representation& p : st.parts) {
        std::vector<Representation> sub = decompose(p);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

bool is_indecomposable(const Representation& m) {
    if (m.total_dim() == 0) return false;
    return decompose_step(m).indecomposable;
}

bool indecomposables_isomorphic(const Representation& m, const Representation& n) {
    if (m.dimension_vector() != n.dimension_vector()) return false;
    std::vector<QMat> fs = hom_basis(m, n);
    if (fs.empty()) return false;
    std::vector<QMat> gs = hom_basis(n, m);
    if (gs.empty()) return false;
    std::vector<QMat> rad = matrix_algebra_radical(end_basis(m));
    QMat rb(m.total_dim() * m.total_dim(), static_cast<Eigen::Index>(rad.size()));
    for (size_t i = 0; i < rad.size(); ++i) rb.col(static_cast<Eigen::Index>(i)) = vec_of(rad[i]);
    for (const QMat& g : gs) {
        for (const QMat& f : fs) {
            QMat x = g * f;
            if (is_zero_mat(x)) continue;
            if (rad.empty() || !in_column_span(rb, vec_of(x))) {
                // a composite outside the radical of the local endomorphism
                // algebra is invertible
                return true;
            }
        }
    }
    return false;
}

bool is_isomorphic(const Representation& m, const Representation& n) {
    if (m.dimension_vector() != n.dimension_vector()) return false;
    if (m.total_dim() == 0) return true;
    std::vector<Representation> dm = decompose(m);
    std::vector<Representation> dn = decompose(n);
    if (dm.size() != dn.size()) return false;
    std::vector<bool> used(dn.size(), false);
    for (const Representation& p : dm) {
        bool matched = false;
        for (size_t j = 0; j < dn.size(); ++j) {
            if (used[j]) continue;
            if (indecomposables_isomorphic(p, dn[j])) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

void set_decompose_seed(unsigned long long seed) {
    decompose_seed_state = seed == 0 ? 0x9e3779b97f4a7c15ull : seed;
}

int ModuleRegistry::id_of(const Representation& m) { return id_of(m, fingerprint_of(m)); }

int ModuleRegistry::id_of(const Representation& m, ModuleFingerprint fp) {
    auto it = by_fp_.find(fp);
    if (it != by_fp_.end()) {
        for (int id : it->second) {
            if (is_isomorphic(reps_[static_cast<size_t>(id)], m)) return id;
        }
    }
    int id = static_cast<int>(reps_.size());
    reps_.push_back(m);
    fps_.push_back(fp);
    by_fp_[std::move(fp)].push_back(id);
    return id;
}

}  // namespace taufan
