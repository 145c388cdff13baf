#pragma once

// Symplectic isometries of stabilizer codes. A monomial map is a per-slot
// 2x2 action followed by a slot permutation: in gamma coordinates, output
// slot j is x_{sigma(j)} * A_j (row-vector convention, pinned by the worked
// examples). Isometry groups are carried as sets of k x k matrices B over
// the residue field: B represents the code automorphism xG -> xBG.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "enumerate.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "ring.hpp"
#include "ring_linalg.hpp"
#include "stabilizer_code.hpp"

namespace sympiso {

// The SL_2 matrix realizing the slot swap (a, b) -> (b, -a).
inline RMat monomial_J(RingSpec spec) { return rmat(spec, 2, 2, {0, -1, 1, 0}); }

enum class MonomialFlavor : uint8_t { SL, GL };

struct MonomialMap {
    RingSpec spec;
    std::vector<RMat> blocks;  // A_1..A_n, 2x2
    std::vector<size_t> perm;  // sigma: output slot j pulls from input slot perm[j]
    MonomialFlavor flavor = MonomialFlavor::SL;

    size_t n() const { return blocks.size(); }

    static MonomialMap identity(RingSpec spec, size_t n, MonomialFlavor flavor = MonomialFlavor::SL) {
        MonomialMap m{spec, {}, {}, flavor};
        m.blocks.assign(n, rmat_identity(spec, 2));
        m.perm.resize(n);
        for (size_t i = 0; i < n; ++i) m.perm[i] = i;
        return m;
    }

    void validate() const {
        if (perm.size() != blocks.size()) throw domain_error("monomial map shape mismatch");
        for (const auto& a : blocks) {
            RingElement det = rmat_det(a, spec);
            if (flavor == MonomialFlavor::SL) {
                if (det != RingElement(spec, 1)) throw domain_error("SL flavor requires det 1 blocks");
            } else if (!det.is_unit()) {
                throw domain_error("GL flavor requires unit determinant blocks");
            }
        }
    }
};

// Gamma-conjugated action on plain (a | b) vectors.
inline RVec apply_monomial(const MonomialMap& m, const RVec& v) {
    size_t n = m.n();
    if (v.size() != 2 * n) throw domain_error("monomial map length mismatch");
    RVec x = gamma(v);
    RVec y = zero_vec(m.spec, 2 * n);
    for (size_t j = 0; j < n; ++j) {
        size_t s = m.perm[j];
        const RMat& a = m.blocks[j];
        y[2 * j] = x[2 * s] * a.at(0, 0) + x[2 * s + 1] * a.at(1, 0);
        y[2 * j + 1] = x[2 * s] * a.at(0, 1) + x[2 * s + 1] * a.at(1, 1);
    }
    return gamma_inv(y);
}

// Plain-coordinate 2n x 2n matrix of the map (for the structure theorem).
inline RMat monomial_matrix(const MonomialMap& m) {
    size_t n = m.n();
    RMat t = rmat_zero(m.spec, 2 * n, 2 * n);
    for (size_t i = 0; i < 2 * n; ++i) {
        RVec e = zero_vec(m.spec, 2 * n);
        e[i] = RingElement(m.spec, 1);
        t.set_row(i, apply_monomial(m, e));
    }
    return t;
}

// tau_sigma of the worked examples: permute slots, identity blocks.
inline MonomialMap tau_sigma(RingSpec spec, const std::vector<size_t>& sigma) {
    MonomialMap m = MonomialMap::identity(spec, sigma.size());
    m.perm = sigma;
    return m;
}

// tau_i: J in slot i (0-based), identity elsewhere.
inline MonomialMap tau_i(RingSpec spec, size_t n, size_t i) {
    MonomialMap m = MonomialMap::identity(spec, n);
    m.blocks[i] = monomial_J(spec);
    return m;
}

struct IsometrySubgroup {
    RingSpec field;
    size_t k = 0;
    std::vector<RMat> elements; // sorted by rmat_less, unique

    uint64_t order() const { return elements.size(); }

    bool contains(const RMat& b) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), b, rmat_less);
        return it != elements.end() && *it == b;
    }

    // Sorts, dedups and checks the group axioms on construction.
    static IsometrySubgroup from_elements(RingSpec field, size_t k, std::vector<RMat> els,
                                          bool verify = true) {
        std::sort(els.begin(), els.end(), rmat_less);
        els.erase(std::unique(els.begin(), els.end()), els.end());
        IsometrySubgroup g{field, k, std::move(els)};
        if (verify) g.verify_axioms();
        return g;
    }

    void verify_axioms() const {
        RMat id = rmat_identity(field, k);
        if (!contains(id)) throw domain_error("isometry set lacks the identity");
        for (const auto& a : elements) {
            if (!contains(rmat_inverse(a, field))) throw domain_error("isometry set not closed under inverse");
            for (const auto& b : elements)
                if (!contains(rmat_mul(field, a, b))) throw domain_error("isometry set not closed under product");
        }
    }

    // Greedy generating set: add elements until they generate everything.
    std::vector<RMat> generators() const {
        std::vector<RMat> gens;
        std::vector<RMat> closure{rmat_identity(field, k)};
        auto in_closure = [&](const RMat& m) {
            return std::any_of(closure.begin(), closure.end(), [&](const RMat& x) { return x == m; });
        };
        for (const auto& e : elements) {
            if (in_closure(e)) continue;
            gens.push_back(e);
            // regenerate closure
            closure = {rmat_identity(field, k)};
            bool grew = true;
            while (grew) {
                grew = false;
                for (size_t i = 0; i < closure.size(); ++i)
                    for (const auto& g : gens) {
                        RMat p = rmat_mul(field, closure[i], g);
                        if (!in_closure(p)) {
                            closure.push_back(p);
                            grew = true;
                        }
                    }
            }
            if (closure.size() == elements.size()) break;
        }
        return gens;
    }

    friend bool operator==(const IsometrySubgroup& a, const IsometrySubgroup& b) {
        return a.field == b.field && a.k == b.k && a.elements == b.elements;
    }
};

struct CodeMapWitness {
    RMat b;                           // the induced GL_k matrix
    std::optional<MonomialMap> map;   // underlying monomial map when known
};

namespace detail {

// Reduces a Z/p^e socle code to its residue-field form; fields pass through.
// Isometry groups of socle codes are residue-field linear, so all searches
// below run over F_q.
inline StabilizerCode isometry_base_code(const StabilizerCode& c) {
    if (c.spec().is_field()) return c;
    if (!c.spec().has_local_data())
        throw domain_error("isometry groups over " + c.spec().name() +
                           " are only supported for Z/p^e socle codes");
    return socle_reduce(c);
}

// Weight of every codeword xG indexed by the mixed-radix index of x.
inline std::vector<uint32_t> weight_table(const StabilizerCode& c, uint64_t cap) {
    uint64_t total = pow_checked(c.spec().modulus, c.k(), cap, "codeword weight table");
    std::vector<uint32_t> wt(static_cast<size_t>(total));
    RingSpec spec = c.spec();
    size_t k = c.k();
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t t = idx;
        RVec x = zero_vec(spec, k);
        for (size_t i = k; i-- > 0;) {
            x[i] = RingElement(spec, int64_t(t % spec.modulus));
            t /= spec.modulus;
        }
        wt[size_t(idx)] = static_cast<uint32_t>(symp_weight(vec_mat_mul(x, c.generators())));
    }
    return wt;
}

inline uint64_t vec_index(const RVec& x, uint32_t q) {
    uint64_t idx = 0;
    for (const auto& e : x) idx = idx * q + e.v;
    return idx;
}

// k x 2 gamma-blocks of a generator matrix: block j holds columns (2j, 2j+1)
// of gamma(G).
inline std::vector<RMat> gamma_blocks(const StabilizerCode& c) {
    RMat n = gamma_cols(c.generators());
    std::vector<RMat> blocks;
    blocks.reserve(c.n());
    for (size_t j = 0; j < c.n(); ++j) {
        RMat b = rmat_zero(c.spec(), c.k(), 2);
        for (size_t r = 0; r < c.k(); ++r) {
            b.at(r, 0) = n.at(r, 2 * j);
            b.at(r, 1) = n.at(r, 2 * j + 1);
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

// Canonical label of the right orbit N * {A in SL_2 or GL_2}: the
// lexicographically smallest member. Orbits are tiny, so scan.
inline RMat orbit_label(const RMat& n, const std::vector<RMat>& group, RingSpec spec) {
    RMat best = rmat_mul(spec, n, group.front());
    for (size_t i = 1; i < group.size(); ++i) {
        RMat cand = rmat_mul(spec, n, group[i]);
        if (rmat_less(cand, best)) best = cand;
    }
    return best;
}

} // namespace detail

// Symp(C) = {B in GL_k(F_q) : wt_s(xBG) = wt_s(xG) for all x}. The form is
// preserved automatically on self-orthogonal codes.
inline IsometrySubgroup symp_group(const StabilizerCode& code, uint64_t cap = kDefaultEnumCap,
                                   unsigned jobs = 1) {
    StabilizerCode c = detail::isometry_base_code(code);
    RingSpec spec = c.spec();
    size_t k = c.k();
    if (k == 0) return IsometrySubgroup::from_elements(spec, 0, {rmat_identity(spec, 0)}, false);
    auto wt = detail::weight_table(c, cap);
    uint64_t domain = pow_checked(spec.modulus, k * k, cap, "GL_k scan");
    uint32_t q = spec.modulus;
    uint64_t points = pow_u64(q, k);

    auto worker = [&](uint64_t lo, uint64_t hi) {
        std::vector<RMat> hits;
        for (uint64_t idx = lo; idx < hi; ++idx) {
            RMat b = rmat_from_index(spec, k, k, idx);
            if (!rmat_invertible(b, spec)) continue;
            bool ok = true;
            for (uint64_t xi = 0; xi < points && ok; ++xi) {
                uint64_t t = xi;
                RVec x = zero_vec(spec, k);
                for (size_t i = k; i-- > 0;) {
                    x[i] = RingElement(spec, int64_t(t % q));
                    t /= q;
                }
                ok = wt[size_t(detail::vec_index(vec_mat_mul(x, b), q))] == wt[size_t(xi)];
            }
            if (ok) hits.push_back(std::move(b));
        }
        return hits;
    };
    auto els = parallel_collect<RMat>(domain, jobs, worker);
    return IsometrySubgroup::from_elements(spec, k, std::move(els));
}

// rMon(C): B such that B*N_j lies in the right SL_2 (or GL_2) orbit of
// N_{sigma(j)} for some permutation sigma; equivalently the multiset of
// per-slot orbit labels of B*N equals that of N. This factors the monomial
// map search per slot, which is what makes concatenated codes tractable.
inline IsometrySubgroup rmon_group(const StabilizerCode& code,
                                   MonomialFlavor flavor = MonomialFlavor::SL,
                                   uint64_t cap = kDefaultEnumCap, unsigned jobs = 1) {
    StabilizerCode c = detail::isometry_base_code(code);
    RingSpec spec = c.spec();
    size_t k = c.k();
    if (k == 0) return IsometrySubgroup::from_elements(spec, 0, {rmat_identity(spec, 0)}, false);
    auto blocks = detail::gamma_blocks(c);
    std::vector<RMat> gl2 = flavor == MonomialFlavor::SL ? all_sl2(spec, cap) : all_gl2(spec, cap);

    auto label_key = [&](const RMat& m) { return m.entries(); };
    std::vector<std::vector<RingElement>> base_labels;
    for (const auto& nb : blocks) base_labels.push_back(label_key(detail::orbit_label(nb, gl2, spec)));
    std::sort(base_labels.begin(), base_labels.end(),
              [](const auto& a, const auto& b) {
                  for (size_t i = 0; i < a.size(); ++i)
                      if (a[i].v != b[i].v) return a[i].v < b[i].v;
                  return false;
              });

    uint64_t domain = pow_checked(spec.modulus, k * k, cap, "GL_k scan");

    auto worker = [&](uint64_t lo, uint64_t hi) {
        std::vector<RMat> hits;
        for (uint64_t idx = lo; idx < hi; ++idx) {
            RMat b = rmat_from_index(spec, k, k, idx);
            if (!rmat_invertible(b, spec)) continue;
            std::vector<std::vector<RingElement>> labels;
            labels.reserve(blocks.size());
            for (const auto& nb : blocks)
                labels.push_back(label_key(detail::orbit_label(rmat_mul(spec, b, nb), gl2, spec)));
            std::sort(labels.begin(), labels.end(),
                      [](const auto& a, const auto& bb) {
                          for (size_t i = 0; i < a.size(); ++i)
                              if (a[i].v != bb[i].v) return a[i].v < bb[i].v;
                          return false;
                      });
            if (labels == base_labels) hits.push_back(std::move(b));
        }
        return hits;
    };
    auto els = parallel_collect<RMat>(domain, jobs, worker);
    return IsometrySubgroup::from_elements(spec, k, std::move(els));
}

inline IsometrySubgroup rmon_sl_group(const StabilizerCode& code, uint64_t cap = kDefaultEnumCap,
                                      unsigned jobs = 1) {
    return rmon_group(code, MonomialFlavor::SL, cap, jobs);
}

// Deterministic walk over all monomial maps: blocks lexicographic first,
// permutations lexicographic second. fn may return false to stop early.
template <typename Fn>
void for_each_monomial_map(RingSpec spec, size_t n, MonomialFlavor flavor, uint64_t cap, Fn&& fn) {
    std::vector<RMat> gl2 = flavor == MonomialFlavor::SL ? all_sl2(spec, cap) : all_gl2(spec, cap);
    auto perms = all_permutations(n, cap);
    uint64_t block_combos = 1;
    for (size_t i = 0; i < n; ++i) {
        block_combos *= gl2.size();
        if (block_combos > cap) throw cap_exceeded("monomial block enumeration");
    }
    if (block_combos * perms.size() > cap)
        throw cap_exceeded("monomial map enumeration of size " +
                           std::to_string(block_combos * perms.size()));
    MonomialMap m{spec, std::vector<RMat>(n, gl2.front()), std::vector<size_t>(n, 0), flavor};
    std::vector<size_t> digit(n, 0);
    for (uint64_t b = 0; b < block_combos; ++b) {
        uint64_t t = b;
        for (size_t i = n; i-- > 0;) {
            digit[i] = size_t(t % gl2.size());
            t /= gl2.size();
        }
        for (size_t i = 0; i < n; ++i) m.blocks[i] = gl2[digit[i]];
        for (const auto& p : perms) {
            m.perm = p;
            if (!fn(m)) return;
        }
    }
}

// Exhaustive reference computation of rMon(C): enumerate monomial maps, keep
// those with M(C) = C, collect the induced B. Also reports how many maps
// stabilize the code (several maps can restrict to one B).
struct RmonExhaustive {
    IsometrySubgroup group;
    uint64_t stabilizing_maps = 0;
};

inline RmonExhaustive rmon_group_exhaustive(const StabilizerCode& code,
                                            MonomialFlavor flavor = MonomialFlavor::SL,
                                            uint64_t cap = kDefaultEnumCap) {
    StabilizerCode c = detail::isometry_base_code(code);
    RingSpec spec = c.spec();
    size_t k = c.k();
    std::vector<RMat> els;
    uint64_t count = 0;
    for_each_monomial_map(spec, c.n(), flavor, cap, [&](const MonomialMap& m) {
        RMat image = rmat_zero(spec, 0, 2 * c.n());
        for (size_t r = 0; r < k; ++r) {
            RVec w = apply_monomial(m, c.generators().row(r));
            if (!c.contains(w)) return true;
            image.append_row(w);
        }
        // induced B: row i solves x * G = image_i
        RMat b = rmat_zero(spec, k, k);
        for (size_t r = 0; r < k; ++r) {
            auto x = express_in_rows(c.canonical(), image.row(r));
            if (!x) throw domain_error("monomial image escaped the code span");
            b.set_row(r, *x);
        }
        ++count;
        els.push_back(std::move(b));
        return true;
    });
    if (els.empty()) els.push_back(rmat_identity(spec, k));
    return RmonExhaustive{IsometrySubgroup::from_elements(spec, k, std::move(els)), count};
}

// Symp(C, C') = {B : wt_s(xG) = wt_s(xBG') for all x}.
inline std::vector<RMat> symp_between(const StabilizerCode& code_a, const StabilizerCode& code_b,
                                      uint64_t cap = kDefaultEnumCap) {
    StabilizerCode a = detail::isometry_base_code(code_a);
    StabilizerCode b = detail::isometry_base_code(code_b);
    if (a.spec() != b.spec() || a.k() != b.k() || a.n() != b.n())
        throw domain_error("between-code isometries need matching dimensions");
    RingSpec spec = a.spec();
    size_t k = a.k();
    auto wa = detail::weight_table(a, cap);
    auto wb = detail::weight_table(b, cap);
    uint64_t domain = pow_checked(spec.modulus, k * k, cap, "GL_k scan");
    uint32_t q = spec.modulus;
    uint64_t points = pow_u64(q, k);
    std::vector<RMat> out;
    for (uint64_t idx = 0; idx < domain; ++idx) {
        RMat m = rmat_from_index(spec, k, k, idx);
        if (!rmat_invertible(m, spec)) continue;
        bool ok = true;
        for (uint64_t xi = 0; xi < points && ok; ++xi) {
            uint64_t t = xi;
            RVec x = zero_vec(spec, k);
            for (size_t i = k; i-- > 0;) {
                x[i] = RingElement(spec, int64_t(t % q));
                t /= q;
            }
            ok = wa[size_t(xi)] == wb[size_t(detail::vec_index(vec_mat_mul(x, m), q))];
        }
        if (ok) out.push_back(std::move(m));
    }
    return out;
}

// rMon(C, C') = {B : G M|_C = B G' for an SL_2-monomial map M}, with the
// underlying witness map attached. Exhaustive over monomial maps.
inline std::vector<CodeMapWitness> rmon_sl_between(const StabilizerCode& code_a,
                                                   const StabilizerCode& code_b,
                                                   MonomialFlavor flavor = MonomialFlavor::SL,
                                                   uint64_t cap = kDefaultEnumCap) {
    StabilizerCode a = detail::isometry_base_code(code_a);
    StabilizerCode b = detail::isometry_base_code(code_b);
    if (a.spec() != b.spec() || a.k() != b.k() || a.n() != b.n())
        throw domain_error("between-code isometries need matching dimensions");
    RingSpec spec = a.spec();
    size_t k = a.k();
    std::vector<CodeMapWitness> out;
    for_each_monomial_map(spec, a.n(), flavor, cap, [&](const MonomialMap& m) {
        RMat image = rmat_zero(spec, 0, 2 * a.n());
        for (size_t r = 0; r < k; ++r) {
            RVec w = apply_monomial(m, a.generators().row(r));
            if (!b.contains(w)) return true;
            image.append_row(w);
        }
        RMat bm = rmat_zero(spec, k, k);
        for (size_t r = 0; r < k; ++r) {
            auto x = express_in_rows(b.canonical(), image.row(r));
            if (!x) throw domain_error("monomial image escaped the target span");
            bm.set_row(r, *x);
        }
        if (!rmat_invertible(bm, spec)) return true;
        bool known = std::any_of(out.begin(), out.end(), [&](const CodeMapWitness& w) { return w.b == bm; });
        if (!known) out.push_back(CodeMapWitness{std::move(bm), m});
        return true;
    });
    std::sort(out.begin(), out.end(), [](const CodeMapWitness& x, const CodeMapWitness& y) {
        return rmat_less(x.b, y.b);
    });
    return out;
}

enum class ClosureAction : uint8_t { scalar_orbits, block_orbits }; // O and O#

// Closure of H <= GL_k(F_q) with respect to the action on O (scalar orbits
// of F_q^k, right action) or O# (right-GL_2 orbits of k x 2 matrices, left
// action): all g fixing every H-orbit setwise.
inline IsometrySubgroup closure(const IsometrySubgroup& h, ClosureAction action,
                                uint64_t cap = kDefaultEnumCap) {
    RingSpec spec = h.field;
    size_t k = h.k;
    uint32_t q = spec.modulus;
    if (k == 0) return h;

    // enumerate points of the orbit space as canonical representatives
    std::vector<RVec> points;          // for O: scalar-canonical vectors
    std::vector<RMat> block_points;    // for O#: right-GL_2-canonical matrices
    std::map<std::vector<uint32_t>, size_t> point_id;
    auto key_of_vec = [](const RVec& v) {
        std::vector<uint32_t> key;
        key.reserve(v.size());
        for (const auto& e : v) key.push_back(e.v);
        return key;
    };
    auto key_of_mat = [](const RMat& m) {
        std::vector<uint32_t> key;
        key.reserve(m.entries().size());
        for (const auto& e : m.entries()) key.push_back(e.v);
        return key;
    };

    std::vector<RMat> gl2;
    std::vector<RingElement> units = units_of(spec);
    auto canon_vec = [&](const RVec& v) {
        RVec best = v;
        for (const auto& u : units) {
            RVec cand = u * v;
            if (key_of_vec(cand) < key_of_vec(best)) best = cand;
        }
        return best;
    };

    if (action == ClosureAction::scalar_orbits) {
        uint64_t total = pow_checked(q, k, cap, "orbit space O");
        for (uint64_t idx = 0; idx < total; ++idx) {
            uint64_t t = idx;
            RVec x = zero_vec(spec, k);
            for (size_t i = k; i-- > 0;) {
                x[i] = RingElement(spec, int64_t(t % q));
                t /= q;
            }
            RVec c = canon_vec(x);
            auto key = key_of_vec(c);
            if (!point_id.count(key)) {
                point_id[key] = points.size();
                points.push_back(c);
            }
        }
    } else {
        gl2 = all_gl2(spec, cap);
        uint64_t total = pow_checked(q, 2 * k, cap, "orbit space of k x 2 blocks");
        for (uint64_t idx = 0; idx < total; ++idx) {
            RMat m = rmat_from_index(spec, k, 2, idx);
            RMat c = detail::orbit_label(m, gl2, spec);
            auto key = key_of_mat(c);
            if (!point_id.count(key)) {
                point_id[key] = points.size();
                block_points.push_back(c);
                points.emplace_back(); // keep indices aligned
            }
        }
    }
    size_t npoints = point_id.size();

    // H-orbit partition of the points (union-find)
    std::vector<size_t> parent(npoints);
    for (size_t i = 0; i < npoints; ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };

    auto image_id = [&](size_t pid, const RMat& g) {
        if (action == ClosureAction::scalar_orbits) {
            RVec img = canon_vec(vec_mat_mul(points[pid], g)); // right action
            return point_id.at(key_of_vec(img));
        }
        RMat img = detail::orbit_label(rmat_mul(spec, g, block_points[pid]), gl2, spec); // left action
        return point_id.at(key_of_mat(img));
    };

    for (const auto& hm : h.elements)
        for (size_t p = 0; p < npoints; ++p) unite(p, image_id(p, hm));

    // closure: all g in GL_k fixing every orbit
    auto gl = all_gl(spec, k, cap);
    std::vector<RMat> result;
    for (const auto& g : gl) {
        bool ok = true;
        for (size_t p = 0; p < npoints && ok; ++p) ok = find(image_id(p, g)) == find(p);
        if (ok) result.push_back(g);
    }
    return IsometrySubgroup::from_elements(spec, k, std::move(result));
}

struct StructureReport {
    uint64_t isometry_count = 0; // invertible weight-and-form preservers of R^(2n)
    uint64_t monomial_count = 0; // SL_2-monomial maps
    bool sets_equal = false;
};

// Brute-force check that the symplectic isometries of the full space R^(2n)
// are exactly the SL_2-monomial maps: enumerates GL_(2n)(R) and compares.
inline StructureReport verify_structure_theorem(size_t n, RingSpec spec,
                                                uint64_t cap = kDefaultEnumCap, unsigned jobs = 1) {
    uint64_t domain = pow_checked(spec.modulus, 4 * n * n, cap, "GL_2n scan");
    uint64_t vectors = pow_u64(spec.modulus, 2 * n);
    uint32_t q = spec.modulus;

    // reference weights and pairwise products of basis vectors
    std::vector<RVec> basis;
    for (size_t i = 0; i < 2 * n; ++i) {
        RVec e = zero_vec(spec, 2 * n);
        e[i] = RingElement(spec, 1);
        basis.push_back(e);
    }

    auto worker = [&](uint64_t lo, uint64_t hi) {
        std::vector<std::vector<uint32_t>> hits; // entry keys of accepted matrices
        for (uint64_t idx = lo; idx < hi; ++idx) {
            RMat t = rmat_from_index(spec, 2 * n, 2 * n, idx);
            if (!rmat_det(t, spec).is_unit()) continue;
            bool ok = true;
            // form preservation on basis pairs (bilinear, so basis suffices)
            for (size_t i = 0; i < 2 * n && ok; ++i)
                for (size_t j = i + 1; j < 2 * n && ok; ++j)
                    ok = symp_inner(vec_mat_mul(basis[i], t), vec_mat_mul(basis[j], t)) ==
                         symp_inner(basis[i], basis[j]);
            // weight preservation on every vector
            for (uint64_t vi = 0; vi < vectors && ok; ++vi) {
                uint64_t s = vi;
                RVec v = zero_vec(spec, 2 * n);
                for (size_t i = 2 * n; i-- > 0;) {
                    v[i] = RingElement(spec, int64_t(s % q));
                    s /= q;
                }
                ok = symp_weight(vec_mat_mul(v, t)) == symp_weight(v);
            }
            if (ok) {
                std::vector<uint32_t> key;
                key.reserve(4 * n * n);
                for (const auto& e : t.entries()) key.push_back(e.v);
                hits.push_back(std::move(key));
            }
        }
        return hits;
    };
    auto iso_keys = parallel_collect<std::vector<uint32_t>>(domain, jobs, worker);
    std::sort(iso_keys.begin(), iso_keys.end());

    std::vector<std::vector<uint32_t>> mono_keys;
    for_each_monomial_map(spec, n, MonomialFlavor::SL, cap, [&](const MonomialMap& m) {
        RMat t = monomial_matrix(m);
        std::vector<uint32_t> key;
        key.reserve(4 * n * n);
        for (const auto& e : t.entries()) key.push_back(e.v);
        mono_keys.push_back(std::move(key));
        return true;
    });
    std::sort(mono_keys.begin(), mono_keys.end());
    mono_keys.erase(std::unique(mono_keys.begin(), mono_keys.end()), mono_keys.end());

    StructureReport r;
    r.isometry_count = iso_keys.size();
    r.monomial_count = mono_keys.size();
    r.sets_equal = iso_keys == mono_keys;
    return r;
}

// Solves B from a row-to-row assignment: row i of `from` maps to row i of
// `to`, both generating the same span as `code`; B satisfies B * from = to
// in code coordinates.
inline RMat phi_of_row_map(const StabilizerCode& code, const RMat& to) {
    RingSpec spec = code.spec();
    size_t k = code.k();
    if (to.rows() != k) throw domain_error("row map size mismatch");
    RMat b = rmat_zero(spec, k, k);
    for (size_t r = 0; r < k; ++r) {
        auto x = express_in_rows(code.canonical(), to.row(r));
        if (!x) throw domain_error("row image is not in the code");
        b.set_row(r, *x);
    }
    return b;
}

} // namespace sympiso
