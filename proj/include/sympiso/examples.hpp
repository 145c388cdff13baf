#pragma once

// Built-in worked examples with their expected values, shared by the CLI
// `paper examples` subcommand and the acceptance suite. Codes listed in
// interleaved (gamma) coordinates are converted on construction.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isometry.hpp"
#include "pauli.hpp"
#include "quantum.hpp"
#include "ring.hpp"
#include "stabilizer_code.hpp"

namespace sympiso::examples {

inline StabilizerCode from_interleaved(RingSpec spec, size_t n,
                                       const std::vector<std::vector<int64_t>>& rows) {
    RMat g = rmat_zero(spec, 0, 2 * n);
    for (const auto& r : rows) g.append_row(gamma_inv(make_vec(spec, r)));
    return StabilizerCode(spec, n, std::move(g));
}

// ---- Ex-NonEx1: one code, two generator matrices, a non-monomial isometry

struct NonEx1 {
    StabilizerCode code_n1, code_n2; // same code, different generators
    RMat n2_rows_plain;              // images of the row-to-row map f

    NonEx1()
        : code_n1(from_interleaved(RingSpec::Fp(2), 4,
                                   {{1, 0, 0, 1, 1, 0, 1, 0},
                                    {0, 1, 1, 0, 0, 0, 1, 0},
                                    {0, 1, 0, 0, 0, 1, 0, 0},
                                    {0, 1, 0, 1, 0, 0, 0, 1}})),
          code_n2(from_interleaved(RingSpec::Fp(2), 4,
                                   {{1, 1, 1, 0, 1, 1, 0, 1},
                                    {0, 1, 0, 1, 0, 0, 0, 1},
                                    {0, 0, 1, 1, 0, 0, 1, 1},
                                    {0, 0, 0, 1, 0, 1, 0, 1}})),
          n2_rows_plain(code_n2.generators()) {}
};

// ---- E-Ex2: Symp(C) = GL_3(F_2), but only 8 restrictions of monomial maps

inline StabilizerCode e_ex2_code() {
    return StabilizerCode::from_rows(RingSpec::Fp(2), 5,
                                     {{0, 1, 1, 1, 1, 0, 0, 0, 0, 0},
                                      {1, 0, 1, 0, 0, 0, 0, 0, 1, 1},
                                      {1, 0, 0, 0, 1, 0, 1, 1, 0, 0}});
}

// ---- Ex-Extension2: self-dual extensions and coset weight tables

struct Extension2 {
    StabilizerCode code;   // C
    StabilizerCode dual_h; // im H, the stated dual generators
    StabilizerCode code_f; // C~ = f(C)
    StabilizerCode dual_h_f;
    RVec h4, h5, h4_tilde, h5_tilde; // plain coordinates
    // weight multisets of the cosets h_4 + C, h_5 + C, h_4+h_5 + C (sorted)
    std::vector<std::vector<size_t>> table1;
    std::vector<std::vector<size_t>> table2;

    Extension2()
        : code(from_interleaved(RingSpec::Fp(2), 4,
                                {{1, 0, 0, 0, 0, 0, 1, 1},
                                 {0, 0, 1, 0, 0, 0, 0, 0},
                                 {0, 1, 0, 0, 1, 0, 1, 0}})),
          dual_h(from_interleaved(RingSpec::Fp(2), 4,
                                  {{1, 0, 0, 0, 0, 0, 1, 1},
                                   {0, 0, 1, 0, 0, 0, 0, 0},
                                   {0, 1, 0, 0, 1, 0, 1, 0},
                                   {0, 1, 0, 0, 0, 0, 1, 0},
                                   {0, 1, 0, 0, 0, 1, 0, 1}})),
          code_f(from_interleaved(RingSpec::Fp(2), 4,
                                  {{1, 0, 0, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 1, 0, 0, 0, 0},
                                   {0, 1, 0, 0, 1, 0, 0, 1}})),
          dual_h_f(from_interleaved(RingSpec::Fp(2), 4,
                                    {{1, 0, 0, 0, 0, 0, 1, 0},
                                     {0, 0, 0, 1, 0, 0, 0, 0},
                                     {0, 1, 0, 0, 1, 0, 0, 1},
                                     {0, 1, 0, 0, 0, 0, 0, 1},
                                     {1, 0, 0, 0, 0, 1, 0, 0}})) {
        h4 = gamma_inv(make_vec(RingSpec::Fp(2), {0, 1, 0, 0, 0, 0, 1, 0}));
        h5 = gamma_inv(make_vec(RingSpec::Fp(2), {0, 1, 0, 0, 0, 1, 0, 1}));
        h4_tilde = gamma_inv(make_vec(RingSpec::Fp(2), {0, 1, 0, 0, 0, 0, 0, 1}));
        h5_tilde = gamma_inv(make_vec(RingSpec::Fp(2), {1, 0, 0, 0, 0, 1, 0, 0}));
        table1 = {{1, 2, 2, 2, 3, 3, 3, 4}, {2, 2, 3, 3, 3, 3, 4, 4}, {2, 2, 3, 3, 3, 3, 4, 4}};
        table2 = {{1, 2, 2, 2, 3, 3, 3, 4}, {2, 2, 3, 3, 3, 3, 4, 4}, {2, 2, 3, 3, 3, 3, 4, 4}};
    }
};

// ---- Ex-Ex11: monomial map, stabilizers, Clifford lift and states

struct Ex11 {
    StabilizerCode code, code_prime;
    MonomialMap map;
    std::vector<std::string> letters_s = {"XZX", "ZXX", "ZZZ"};
    std::vector<std::string> letters_s_prime = {"YZY", "XZZ", "YXZ"};
    std::vector<int64_t> state_v = {1, 0, 0, -1, 0, 1, 1, 0};
    // v' has entries in Z[i]: pairs (real, imag)
    std::vector<std::pair<int64_t, int64_t>> state_v_prime = {
        {1, 0}, {1, 0}, {0, -1}, {0, 1}, {1, 0}, {-1, 0}, {0, -1}, {0, -1}};
    std::vector<int64_t> state_v_dblprime = {1, 0, 0, 1, 0, -1, 1, 0};

    Ex11()
        : code(StabilizerCode::from_rows(RingSpec::Fp(2), 3,
                                         {{1, 0, 1, 0, 1, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 0, 1, 1, 1}})),
          code_prime(StabilizerCode::from_rows(
              RingSpec::Fp(2), 3, {{1, 0, 1, 1, 1, 1}, {1, 0, 0, 0, 1, 1}, {1, 1, 0, 1, 0, 1}})),
          map{RingSpec::Fp(2),
              {rmat(RingSpec::Fp(2), 2, 2, {1, 0, 1, 1}), rmat(RingSpec::Fp(2), 2, 2, {0, 1, 1, 0}),
               rmat(RingSpec::Fp(2), 2, 2, {1, 1, 0, 1})},
              {1, 2, 0}, // the cycle sigma = (123)
              MonomialFlavor::SL} {}
};

// ---- Ex-LCP: symplectically but not monomially equivalent self-dual codes

struct ExLCP {
    StabilizerCode code, code_prime;
    std::vector<std::string> letters_s = {"XZXX", "ZXIX", "ZIZI", "ZZIZ"};
    std::vector<std::string> letters_s_prime = {"YXXY", "IZXX", "IIZZ", "ZIXX"};
    std::vector<int64_t> state_v = {1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0};
    std::vector<int64_t> state_v_prime = {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1};

    ExLCP()
        : code(StabilizerCode::from_rows(RingSpec::Fp(2), 4,
                                         {{1, 0, 1, 1, 0, 1, 0, 0},
                                          {0, 1, 0, 1, 1, 0, 0, 0},
                                          {0, 0, 0, 0, 1, 0, 1, 0},
                                          {0, 0, 0, 0, 1, 1, 0, 1}})),
          code_prime(StabilizerCode::from_rows(RingSpec::Fp(2), 4,
                                               {{1, 1, 1, 1, 1, 0, 0, 1},
                                                {0, 0, 1, 1, 0, 1, 0, 0},
                                                {0, 0, 0, 0, 0, 0, 1, 1},
                                                {0, 0, 1, 1, 1, 0, 0, 0}})) {}
};

// Integer/Gaussian-integer state vectors as single-column matrices.
inline CMat state_column(const std::vector<int64_t>& v) {
    CMat m = cmat_zero(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(i, 0) = Cyclotomic::rational(Rat(v[i]));
    return m;
}

inline CMat state_column_gauss(const std::vector<std::pair<int64_t, int64_t>>& v) {
    CMat m = cmat_zero(v.size(), 1);
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    for (size_t r = 0; r < v.size(); ++r)
        m.at(r, 0) = Cyclotomic::rational(Rat(v[r].first)) + Rat(v[r].second) * i;
    return m;
}

} // namespace sympiso::examples
