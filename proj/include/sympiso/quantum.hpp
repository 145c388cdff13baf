#pragma once

// Exact matrix realizations of Pauli operators, stabilizer projectors and
// states, SL_2 -> Clifford lifts, LCP verification and LU-inequivalence
// witnesses. All arithmetic is exact: entries are cyclotomic numbers and
// sqrt(d) factors are carried in a scale exponent.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyc_linalg.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "isometry.hpp"
#include "matrix.hpp"
#include "pauli.hpp"
#include "ring.hpp"
#include "stabilizer_code.hpp"

namespace sympiso {

// mat / sqrt(d)^scale_exp, canonical with scale_exp in {0, 1} (sqrt(d)^2 = d
// is absorbed into the entries; a perfect-square d absorbs entirely).
struct ScaledMatrix {
    CMat mat;
    uint32_t d = 2;
    int32_t scale_exp = 0;

    static ScaledMatrix plain(CMat m, uint32_t d) { return ScaledMatrix{std::move(m), d, 0}; }

    void canonicalize_scale() {
        while (scale_exp >= 2) {
            Rat inv_d(1, int64_t(d));
            for (size_t r = 0; r < mat.rows(); ++r)
                for (size_t c = 0; c < mat.cols(); ++c) mat.at(r, c) = inv_d * mat.at(r, c);
            scale_exp -= 2;
        }
        if (scale_exp == 1) {
            uint32_t root = 0;
            for (uint32_t s = 1; s * s <= d; ++s)
                if (s * s == d) root = s;
            if (root) {
                Rat inv_root(1, int64_t(root));
                for (size_t r = 0; r < mat.rows(); ++r)
                    for (size_t c = 0; c < mat.cols(); ++c) mat.at(r, c) = inv_root * mat.at(r, c);
                scale_exp = 0;
            }
        }
    }

    ScaledMatrix dagger() const {
        CMat m = mat.transposed();
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = m.at(r, c).conj();
        return ScaledMatrix{std::move(m), d, scale_exp};
    }

    friend ScaledMatrix operator*(const ScaledMatrix& a, const ScaledMatrix& b) {
        if (a.d != b.d) throw domain_error("scaled matrix dimension base mismatch");
        ScaledMatrix r{mat_mul(a.mat, b.mat), a.d, a.scale_exp + b.scale_exp};
        r.canonicalize_scale();
        return r;
    }

    // Exact cyclotomic matrix; requires sqrt(d) expressible (d = 2, odd
    // prime, or a perfect square; nothing else occurs here).
    CMat exact() const {
        if (scale_exp == 0) return mat;
        ScaledMatrix c = *this;
        c.canonicalize_scale();
        if (c.scale_exp == 0) return c.mat;
        Cyclotomic inv_sqrt = cyclotomic_sqrt(d).inverse();
        Cyclotomic f = Cyclotomic::one();
        for (int32_t i = 0; i < c.scale_exp; ++i) f *= inv_sqrt;
        CMat out = c.mat;
        for (size_t r = 0; r < out.rows(); ++r)
            for (size_t cc = 0; cc < out.cols(); ++cc) out.at(r, cc) = f * out.at(r, cc);
        return out;
    }
};

// Basis index of x in R^n: slot 1 is the least significant digit, slot n the
// most significant. This ordering reproduces the worked examples' reference
// state vectors entry for entry.
inline size_t basis_index(const RVec& x) {
    size_t idx = 0;
    for (size_t i = x.size(); i-- > 0;) idx = idx * x[i].spec.modulus + x[i].v;
    return idx;
}

// Exact d^n x d^n matrix of w^l X(a) Z(b): column v_x maps to
// w^l chi(b.x) v_{x+a}.
inline ScaledMatrix pauli_matrix(const PauliOperator& p, uint64_t cap = kDefaultEnumCap) {
    RingSpec spec = p.spec;
    uint32_t d = spec.modulus;
    uint64_t dim = pow_checked(d, p.n(), cap, "pauli matrix dimension");
    uint32_t cbar = spec.phase_order();
    Cyclotomic omega_l = Cyclotomic::root_of_unity(cbar, p.phase_exp);
    Character chi = Character::standard(spec);
    CMat m = cmat_zero(size_t(dim), size_t(dim));
    RVec x = zero_vec(spec, p.n());
    for (size_t col = 0;; ++col) {
        RingElement bx(spec, 0);
        for (size_t i = 0; i < p.n(); ++i) bx += p.b[i] * x[i];
        RVec target = x + p.a;
        m.at(basis_index(target), col) = omega_l * char_eval(chi, bx);
        // next x in index order (slot 1 least significant)
        size_t i = 0;
        for (; i < p.n(); ++i) {
            x[i] = RingElement(spec, int64_t(x[i].v) + 1);
            if (!x[i].is_zero()) break;
        }
        if (i == p.n()) break;
    }
    return ScaledMatrix::plain(std::move(m), d);
}

struct StateBasis {
    uint32_t d = 2;
    size_t n = 0;
    size_t k = 0;
    CMat columns; // orthogonal spanning set of Q(S), primitively normalized
};

// Image basis of the projector Pi = prod_i (1/d) sum_t P_i^t. Columns are
// exact, orthogonalized and canonically scaled; rank must be d^(n-k).
inline StateBasis stabilizer_state_basis(const StabilizerGroup& s, uint64_t cap = kDefaultEnumCap) {
    RingSpec spec = s.spec;
    uint32_t d = spec.modulus;
    uint64_t dim = pow_checked(d, s.n, cap, "state space dimension");
    CMat pi = cmat_identity(size_t(dim));
    Rat inv_d(1, int64_t(d));
    for (const auto& g : s.generators) {
        CMat avg = cmat_zero(size_t(dim), size_t(dim));
        PauliOperator p = PauliOperator::identity(spec, s.n);
        for (uint32_t t = 0; t < d; ++t) {
            CMat pm = pauli_matrix(p, cap).mat;
            for (size_t r = 0; r < avg.rows(); ++r)
                for (size_t c = 0; c < avg.cols(); ++c) avg.at(r, c) += pm.at(r, c);
            p = pauli_mul(p, g);
        }
        for (size_t r = 0; r < avg.rows(); ++r)
            for (size_t c = 0; c < avg.cols(); ++c) avg.at(r, c) = inv_d * avg.at(r, c);
        pi = mat_mul(pi, avg);
    }
    CMat basis = column_space_basis(pi);
    uint64_t expected = dim / s.order(cap); // dim Q(S) = d^n / |S|
    if (basis.cols() != expected)
        throw rank_mismatch("projector rank " + std::to_string(basis.cols()) + ", expected " +
                            std::to_string(expected));
    basis = orthogonalize_columns(basis);
    primitive_normalize_columns(basis);
    return StateBasis{d, s.n, s.generators.size(), std::move(basis)};
}

// --- Clifford lifts ---------------------------------------------------------

namespace detail {

// Base gates for d = 2 with their SL_2(F_2) images, matching the standard
// single-qubit Cliffords: the conjugation contract is
// Psi(U P U^dagger) = Psi(P) * M with row-vector action.
struct LiftGate {
    RMat m;
    ScaledMatrix u;
};

inline std::vector<LiftGate> qubit_gates() {
    RingSpec f2 = RingSpec::Fp(2);
    Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
    Cyclotomic one = Cyclotomic::one();
    std::vector<LiftGate> g;
    // [[1,0],[1,1]] <- (1/sqrt2) [[1, i],[i, 1]]
    {
        CMat u = cmat_zero(2, 2);
        u.at(0, 0) = one; u.at(0, 1) = i4;
        u.at(1, 0) = i4;  u.at(1, 1) = one;
        g.push_back({rmat(f2, 2, 2, {1, 0, 1, 1}), ScaledMatrix{std::move(u), 2, 1}});
    }
    // [[0,1],[1,0]] <- Hadamard
    {
        CMat u = cmat_zero(2, 2);
        u.at(0, 0) = one; u.at(0, 1) = one;
        u.at(1, 0) = one; u.at(1, 1) = -one;
        g.push_back({rmat(f2, 2, 2, {0, 1, 1, 0}), ScaledMatrix{std::move(u), 2, 1}});
    }
    // [[1,1],[0,1]] <- diag(1, i)
    {
        CMat u = cmat_zero(2, 2);
        u.at(0, 0) = one; u.at(1, 1) = i4;
        g.push_back({rmat(f2, 2, 2, {1, 1, 0, 1}), ScaledMatrix{std::move(u), 2, 0}});
    }
    return g;
}

} // namespace detail

// Verifies Psi(U X U+) = (1,0)M and Psi(U Z U+) = (0,1)M exactly (phases must
// be powers of w); returns false on any mismatch.
inline bool lift_conjugation_holds(const ScaledMatrix& u, const RMat& m, RingSpec spec,
                                   const RVec& a_in, const RVec& b_in) {
    uint32_t cbar = spec.phase_order();
    PauliOperator p{spec, 0, a_in, b_in};
    CMat lhs = mat_mul(mat_mul(u.mat, pauli_matrix(p).mat), u.dagger().mat);
    // scale: u * P * u+ carries 1/d^scale_exp
    Rat scale(1, 1);
    for (int32_t i = 0; i < u.scale_exp; ++i) scale = scale / Rat(int64_t(u.d));
    RVec image = vec_mat_mul(psi(p), m);
    PauliOperator q{spec, 0, {image[0]}, {image[1]}};
    CMat rhs = pauli_matrix(q).mat;
    // lhs * scale must equal w^t * rhs for some t
    std::optional<Cyclotomic> ratio;
    for (size_t r = 0; r < lhs.rows(); ++r)
        for (size_t c = 0; c < lhs.cols(); ++c) {
            Cyclotomic l = scale * lhs.at(r, c);
            const Cyclotomic& rr = rhs.at(r, c);
            if (l.is_zero() != rr.is_zero()) return false;
            if (l.is_zero()) continue;
            Cyclotomic q2 = l / rr;
            if (!ratio) ratio = q2;
            else if (*ratio != q2) return false;
        }
    if (!ratio) return true;
    for (uint32_t t = 0; t < cbar; ++t)
        if (*ratio == Cyclotomic::root_of_unity(cbar, t)) return true;
    return false;
}

// A unitary U with Psi(U P U+) = Psi(P) * M for all single-qudit Paulis.
// d = 2 composes the base gates via breadth-first decomposition; odd prime d
// uses the Fourier / phase / multiplier generator decomposition.
inline ScaledMatrix clifford_lift_sl2(const RMat& m, RingSpec spec) {
    uint32_t d = spec.modulus;
    if (rmat_det(m, spec) != RingElement(spec, 1))
        throw domain_error("clifford lift needs det 1");

    ScaledMatrix result{cmat_identity(d), d, 0};
    if (d == 2) {
        auto gates = detail::qubit_gates();
        // BFS words over the base gates; SL_2(F_2) has 6 elements
        struct Node { RMat m; std::vector<size_t> word; };
        std::vector<Node> frontier{{rmat_identity(spec, 2), {}}};
        std::vector<RMat> seen{frontier[0].m};
        std::vector<size_t> word;
        bool found = false;
        if (m == frontier[0].m) found = true;
        while (!found) {
            std::vector<Node> next;
            for (const auto& node : frontier)
                for (size_t gi = 0; gi < gates.size(); ++gi) {
                    RMat nm = rmat_mul(spec, node.m, gates[gi].m);
                    if (std::any_of(seen.begin(), seen.end(), [&](const RMat& s) { return s == nm; }))
                        continue;
                    seen.push_back(nm);
                    Node nn{nm, node.word};
                    nn.word.push_back(gi);
                    if (nm == m) {
                        word = nn.word;
                        found = true;
                    }
                    next.push_back(std::move(nn));
                }
            if (next.empty() && !found) throw domain_error("SL_2(F_2) decomposition failed");
            frontier = std::move(next);
        }
        // conjugation applies matrix factors left to right, so the lift
        // composes in reverse word order
        for (size_t i = word.size(); i-- > 0;) result = result * gates[word[i]].u;
    } else if (is_prime(d) && d % 2 == 1) {
        Cyclotomic eps = Cyclotomic::root_of_unity(d, 1);
        uint32_t inv2 = (d + 1) / 2; // 2^(-1) mod d
        auto fourier = [&] {
            CMat u = cmat_zero(d, d);
            for (uint32_t r = 0; r < d; ++r)
                for (uint32_t c = 0; c < d; ++c)
                    u.at(r, c) = Cyclotomic::root_of_unity(d, int64_t(r) * c);
            return ScaledMatrix{std::move(u), d, 1};
        };
        auto phase_gate = [&](uint32_t g) {
            CMat u = cmat_zero(d, d);
            for (uint32_t x = 0; x < d; ++x)
                u.at(x, x) = Cyclotomic::root_of_unity(d, (int64_t(g) * inv2 % d) * x % d * x % d);
            return ScaledMatrix{std::move(u), d, 0};
        };
        auto multiplier = [&](uint32_t uu) {
            CMat u = cmat_zero(d, d);
            for (uint32_t x = 0; x < d; ++x) u.at((uu * x) % d, x) = Cyclotomic::one();
            return ScaledMatrix{std::move(u), d, 0};
        };
        uint32_t alpha = m.at(0, 0).v, beta = m.at(0, 1).v, gam = m.at(1, 0).v, delta = m.at(1, 1).v;
        (void)beta;
        std::vector<ScaledMatrix> factors; // matrix-product order
        if (gam == 0) {
            // M = V(alpha) * D(alpha^{-1} beta)
            uint32_t ainv = RingElement(spec, alpha).inverse().v;
            factors.push_back(multiplier(alpha));
            factors.push_back(phase_gate(uint32_t((uint64_t(ainv) * beta) % d)));
        } else {
            // M = V(u) * D(a) * F * D(b), u = -gam^{-1}, a = gam*alpha,
            // b = gam^{-1} * delta
            uint32_t ginv = RingElement(spec, gam).inverse().v;
            uint32_t u = RingElement(spec, -int64_t(ginv)).v;
            uint32_t a = uint32_t((uint64_t(gam) * alpha) % d);
            uint32_t b = uint32_t((uint64_t(ginv) * delta) % d);
            factors.push_back(multiplier(u));
            factors.push_back(phase_gate(a));
            factors.push_back(fourier());
            factors.push_back(phase_gate(b));
        }
        for (size_t i = factors.size(); i-- > 0;) result = result * factors[i];
    } else {
        throw domain_error("clifford lift supports d = 2 and odd prime d only");
    }

    // internal verification: conjugating X(1) and Z(1) realizes M
    {
        RVec e1 = make_vec(spec, {1});
        RVec e0 = make_vec(spec, {0});
        if (!lift_conjugation_holds(result, m, spec, e1, e0) ||
            !lift_conjugation_holds(result, m, spec, e0, e1))
            throw domain_error("lift decomposition failed conjugation check");
    }
    return result;
}

struct LocalClifford {
    ScaledMatrix u; // tensor of per-slot lifts
    std::vector<size_t> sigma;
};

inline ScaledMatrix tensor(const ScaledMatrix& a, const ScaledMatrix& b) {
    if (a.d != b.d) throw domain_error("tensor base mismatch");
    CMat m = cmat_zero(a.mat.rows() * b.mat.rows(), a.mat.cols() * b.mat.cols());
    for (size_t r1 = 0; r1 < a.mat.rows(); ++r1)
        for (size_t c1 = 0; c1 < a.mat.cols(); ++c1) {
            if (a.mat.at(r1, c1).is_zero()) continue;
            for (size_t r2 = 0; r2 < b.mat.rows(); ++r2)
                for (size_t c2 = 0; c2 < b.mat.cols(); ++c2)
                    m.at(r1 * b.mat.rows() + r2, c1 * b.mat.cols() + c2) =
                        a.mat.at(r1, c1) * b.mat.at(r2, c2);
        }
    ScaledMatrix t{std::move(m), a.d, a.scale_exp + b.scale_exp};
    t.canonicalize_scale();
    return t;
}

// U = U(A_1) (x) ... (x) U(A_n) plus the permutation, packaged for LCP
// checks. With slot 1 as the least significant basis digit, slot n's factor
// is the leftmost Kronecker factor.
inline LocalClifford clifford_of_monomial(const MonomialMap& m) {
    if (m.flavor != MonomialFlavor::SL) throw domain_error("clifford lift needs the SL flavor");
    size_t n = m.n();
    ScaledMatrix u = clifford_lift_sl2(m.blocks[n - 1], m.spec);
    for (size_t i = n - 1; i-- > 0;) u = tensor(u, clifford_lift_sl2(m.blocks[i], m.spec));
    return LocalClifford{std::move(u), m.perm};
}

// Conjugates a symbolic Pauli by a tensor of slot lifts, slot by slot,
// tracking exact phases via the d x d matrices.
inline PauliOperator conjugate_by_lifts(const MonomialMap& m, const PauliOperator& p,
                                        const std::vector<ScaledMatrix>& slot_lifts) {
    RingSpec spec = p.spec;
    uint32_t cbar = spec.phase_order();
    uint32_t d = spec.modulus;
    int64_t phase = p.phase_exp;
    RVec a = p.a, b = p.b;
    for (size_t j = 0; j < p.n(); ++j) {
        PauliOperator slot{spec, 0, {p.a[j]}, {p.b[j]}};
        const ScaledMatrix& u = slot_lifts[j];
        CMat lhs = mat_mul(mat_mul(u.mat, pauli_matrix(slot).mat), u.dagger().mat);
        Rat scale(1, 1);
        for (int32_t i = 0; i < u.scale_exp; ++i) scale = scale / Rat(int64_t(d));
        RVec img = zero_vec(spec, 2);
        img[0] = p.a[j] * m.blocks[j].at(0, 0) + p.b[j] * m.blocks[j].at(1, 0);
        img[1] = p.a[j] * m.blocks[j].at(0, 1) + p.b[j] * m.blocks[j].at(1, 1);
        PauliOperator q{spec, 0, {img[0]}, {img[1]}};
        CMat rhs = pauli_matrix(q).mat;
        std::optional<Cyclotomic> ratio;
        for (size_t r = 0; r < lhs.rows(); ++r)
            for (size_t c = 0; c < lhs.cols(); ++c) {
                Cyclotomic l = scale * lhs.at(r, c);
                const Cyclotomic& rr = rhs.at(r, c);
                if (l.is_zero() != rr.is_zero())
                    throw domain_error("slot conjugation left the Pauli group");
                if (rr.is_zero()) continue;
                Cyclotomic qr = l / rr;
                if (!ratio)
                    ratio = qr;
                else if (*ratio != qr)
                    throw domain_error("slot conjugation left the Pauli group");
            }
        if (!ratio) throw domain_error("slot conjugation produced a zero matrix");
        bool matched = false;
        for (uint32_t t = 0; t < cbar && !matched; ++t) {
            if (*ratio == Cyclotomic::root_of_unity(cbar, t)) {
                phase += t;
                matched = true;
            }
        }
        if (!matched) throw domain_error("slot conjugation phase is not a root of unity power");
        a[j] = img[0];
        b[j] = img[1];
    }
    return PauliOperator::make(spec, phase, [&] {
        std::vector<int64_t> av;
        for (const auto& e : a) av.push_back(e.v);
        return av;
    }(), [&] {
        std::vector<int64_t> bv;
        for (const auto& e : b) bv.push_back(e.v);
        return bv;
    }());
}

struct LcpReport {
    bool code_map_ok = false;       // M maps C onto C'
    bool psi_match = false;         // Psi(U sigma(S) U+) = C'
    bool group_equal_exact = false; // S' = U sigma(S) U+ with exact phases
    std::optional<PauliOperator> pauli_correction; // P_0 fixing the phases
    bool correction_unsat = false;
    bool span_equal = false;        // Q(S') = U Q(sigma(S))
    std::optional<Cyclotomic> state_ratio; // U v'' = ratio * v' for states
};

// Verifies the monomial-equivalence <-> LCP-equivalence correspondence on a
// concrete instance.
inline LcpReport lcp_verify(const StabilizerCode& c, const StabilizerCode& cp, const MonomialMap& m,
                            uint64_t cap = kDefaultEnumCap) {
    LcpReport rep;
    RingSpec spec = c.spec();
    // M must carry C onto C'
    for (size_t r = 0; r < c.generators().rows(); ++r)
        if (!cp.contains(apply_monomial(m, c.generators().row(r))))
            throw domain_error("monomial map does not carry the code onto the target");
    rep.code_map_ok = true;

    StabilizerGroup s = code_to_stabilizer(c);
    StabilizerGroup sp = code_to_stabilizer(cp);
    std::vector<ScaledMatrix> slot_lifts;
    for (size_t j = 0; j < m.n(); ++j) slot_lifts.push_back(clifford_lift_sl2(m.blocks[j], spec));

    // conjugate each generator of sigma(S) and compare against S'
    auto sp_elements = sp.elements(cap);
    bool all_in = true, psi_ok = true;
    std::vector<PauliOperator> conjugated;
    for (const auto& g : s.generators) {
        PauliOperator pg = permute_pauli(m.perm, g);
        PauliOperator image = conjugate_by_lifts(m, pg, slot_lifts);
        conjugated.push_back(image);
        bool found = std::find(sp_elements.begin(), sp_elements.end(), image) != sp_elements.end();
        all_in = all_in && found;
        if (!cp.contains(psi(image))) psi_ok = false;
    }
    rep.psi_match = psi_ok;
    rep.group_equal_exact = all_in;

    if (!all_in && psi_ok) {
        // phase mismatches: solve for P_0 = X(r)Z(s); conjugation by it
        // rescales X(a)Z(b) by chi(s.a - r.b)
        uint32_t cbar = spec.phase_order();
        uint32_t step = cbar / spec.characteristic();
        size_t k = conjugated.size();
        RVec eta = zero_vec(spec, k);
        bool solvable = true;
        for (size_t i = 0; i < k && solvable; ++i) {
            RVec img = psi(conjugated[i]);
            const PauliOperator* target = nullptr;
            for (const auto& e : sp_elements)
                if (psi(e) == img) { target = &e; break; }
            if (!target) { solvable = false; break; }
            uint32_t delta = (target->phase_exp + cbar - conjugated[i].phase_exp) % cbar;
            if (delta % step != 0) { solvable = false; break; }
            eta[i] = RingElement(spec, int64_t(delta / step));
        }
        if (solvable) {
            // <(r,s), (a_i,b_i)> = eta_i is the linear system w * sys = eta
            // with sys = Omega * G^T over the conjugated generators
            RMat g = rmat_zero(spec, 0, 2 * c.n());
            for (const auto& p : conjugated) g.append_row(psi(p));
            RMat sys = rmat_mul(spec, symplectic_gram(spec, c.n()), g.transposed());
            auto w = express_in_rows(canonicalize(sys), eta);
            if (w) {
                RVec a(w->begin(), w->begin() + c.n());
                RVec b(w->begin() + c.n(), w->end());
                PauliOperator p0{spec, 0, a, b};
                // the correction must conjugate every image into S'
                bool fixes = true;
                for (const auto& img : conjugated) {
                    uint32_t gain = chi_phase_exp(
                        spec, symp_inner(psi(p0), psi(img)));
                    PauliOperator fixed{spec,
                                        uint32_t((img.phase_exp + gain) % cbar), img.a, img.b};
                    if (std::find(sp_elements.begin(), sp_elements.end(), fixed) ==
                        sp_elements.end())
                        fixes = false;
                }
                if (fixes)
                    rep.pauli_correction = p0;
                else
                    rep.correction_unsat = true;
            } else {
                rep.correction_unsat = true;
            }
        } else {
            rep.correction_unsat = true;
        }
    }

    // state-level check: Q(S') = U Q(sigma(S)), with the Pauli correction
    // applied on the left when one was needed
    StabilizerGroup s_sigma{spec, s.n, {}};
    for (const auto& g : s.generators) s_sigma.generators.push_back(permute_pauli(m.perm, g));
    StateBasis basis_sigma = stabilizer_state_basis(s_sigma, cap);
    StateBasis basis_target = stabilizer_state_basis(sp, cap);
    LocalClifford lc = clifford_of_monomial(m);
    CMat mapped = mat_mul(lc.u.exact(), basis_sigma.columns);
    if (rep.pauli_correction) mapped = mat_mul(pauli_matrix(*rep.pauli_correction, cap).mat, mapped);
    rep.span_equal = same_column_span(mapped, basis_target.columns);
    if (rep.span_equal && basis_target.columns.cols() == 1)
        rep.state_ratio = proportionality_ratio(basis_target.columns, mapped);
    return rep;
}

// --- LU invariants ----------------------------------------------------------

// Rank of the d^|A| x d^|B| reshaping of a state vector for every bipartition
// A|B of the n slots (A = the subset with slot indices listed; slot order is
// significance order). Keyed by the bitmask of A (bit i = slot i+1 in A).
inline std::map<uint32_t, size_t> rank_profile(const StateBasis& state) {
    if (state.columns.cols() != 1) throw domain_error("rank profile needs a pure state (k = n)");
    uint32_t d = state.d;
    size_t n = state.n;
    std::map<uint32_t, size_t> out;
    for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        size_t na = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) ++na;
        size_t ra = 1, rb = 1;
        for (size_t i = 0; i < na; ++i) ra *= d;
        for (size_t i = 0; i < n - na; ++i) rb *= d;
        CMat reshaped = cmat_zero(ra, rb);
        // basis digits: slot i+1 is digit i, least significant first
        std::vector<uint32_t> digits(n, 0);
        for (size_t idx = 0; idx < state.columns.rows(); ++idx) {
            size_t t = idx;
            for (size_t i = 0; i < n; ++i) {
                digits[i] = uint32_t(t % d);
                t /= d;
            }
            size_t arow = 0, bcol = 0;
            for (size_t i = 0; i < n; ++i) {
                if (mask & (1u << i))
                    arow = arow * d + digits[i];
                else
                    bcol = bcol * d + digits[i];
            }
            reshaped.at(arow, bcol) = state.columns.at(idx, 0);
        }
        out[mask] = rank_exact(reshaped);
    }
    return out;
}

// Permutation-invariant view of a profile: sorted rank multiset per
// bipartition size.
inline std::map<size_t, std::vector<size_t>> rank_profile_by_size(
    const std::map<uint32_t, size_t>& profile) {
    std::map<size_t, std::vector<size_t>> out;
    for (const auto& [mask, rank] : profile)
        out[size_t(__builtin_popcount(mask))].push_back(rank);
    for (auto& [size, ranks] : out) std::sort(ranks.begin(), ranks.end());
    return out;
}

struct LuWitness {
    bool not_lu_equivalent = false; // false means inconclusive, never "equivalent"
    uint32_t bipartition_mask = 0;
    size_t rank_a = 0, rank_b = 0;
};

// Reshaping ranks are invariant under slot-local invertible maps, so any
// aligned rank difference refutes LU equivalence. Agreement proves nothing.
inline LuWitness lu_witness(const StateBasis& psi1, const StateBasis& psi2) {
    if (psi1.d != psi2.d || psi1.n != psi2.n)
        throw domain_error("lu witness needs states on the same qudit layout");
    auto p1 = rank_profile(psi1);
    auto p2 = rank_profile(psi2);
    // visit bipartitions by size then lexicographic slot subset
    std::vector<uint32_t> masks;
    for (const auto& [mask, r] : p1) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [&](uint32_t a, uint32_t b) {
        int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
        if (ca != cb) return ca < cb;
        // lexicographic on the sorted slot list == numeric on the mask
        return a < b;
    });
    for (uint32_t mask : masks) {
        if (p1[mask] != p2[mask]) return LuWitness{true, mask, p1[mask], p2[mask]};
    }
    return LuWitness{false, 0, 0, 0};
}

inline std::string bipartition_string(uint32_t mask, size_t n) {
    std::string a, b;
    for (size_t i = 0; i < n; ++i) {
        std::string& side = (mask & (1u << i)) ? a : b;
        if (!side.empty()) side += ",";
        side += std::to_string(i + 1);
    }
    return "{" + a + "}|{" + b + "}";
}

} // namespace sympiso
