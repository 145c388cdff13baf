#pragma once

// Text and JSON formats for codes, monomial maps and state vectors.
//
// Code file: a header line `ring=<Fp|Z/d> n=<n> k=<k>` (optionally with
// `layout=interleaved` for gamma coordinates), then k lines of 2n residues.
// Monomial map file: n lines `a b c d` (row-major 2x2 blocks), then
// `perm: i1 ... in` (one-based images sigma(j)).

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "isometry.hpp"
#include "quantum.hpp"
#include "ring.hpp"
#include "stabilizer_code.hpp"

namespace sympiso {

inline RingSpec parse_ring_name(const std::string& s) {
    try {
        if (s.size() > 1 && (s[0] == 'F' || s[0] == 'f'))
            return RingSpec::Fp(static_cast<uint32_t>(std::stoul(s.substr(1))));
        if (s.rfind("Z/", 0) == 0 || s.rfind("z/", 0) == 0)
            return RingSpec::Zmod(static_cast<uint32_t>(std::stoul(s.substr(2))));
    } catch (const domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw malformed_input("bad ring name: " + s);
    }
    throw malformed_input("bad ring name: " + s + " (expected Fp or Z/d)");
}

inline StabilizerCode parse_code(std::istream& in) {
    std::string header;
    while (std::getline(in, header)) {
        if (!header.empty() && header[0] != '#') break;
    }
    if (header.empty()) throw malformed_input("missing code header");
    std::istringstream hs(header);
    std::string tok;
    std::string ring;
    long n = -1, k = -1;
    bool interleaved = false;
    while (hs >> tok) {
        if (tok.rfind("ring=", 0) == 0) ring = tok.substr(5);
        else if (tok.rfind("n=", 0) == 0) n = std::stol(tok.substr(2));
        else if (tok.rfind("k=", 0) == 0) k = std::stol(tok.substr(2));
        else if (tok == "layout=interleaved") interleaved = true;
        else if (tok == "layout=standard") interleaved = false;
        else throw malformed_input("unknown header token: " + tok);
    }
    if (ring.empty() || n < 0 || k < 0) throw malformed_input("header needs ring=, n=, k=");
    RingSpec spec = parse_ring_name(ring);
    RMat g = rmat_zero(spec, 0, 2 * size_t(n));
    std::string line;
    long rows = 0;
    while (rows < k && std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<int64_t> vals;
        int64_t x;
        while (ls >> x) vals.push_back(x);
        if (vals.size() != size_t(2 * n))
            throw malformed_input("row has " + std::to_string(vals.size()) + " entries, expected " +
                                  std::to_string(2 * n));
        RVec row = make_vec(spec, vals);
        g.append_row(interleaved ? gamma_inv(row) : row);
        ++rows;
    }
    if (rows != k) throw malformed_input("expected " + std::to_string(k) + " generator rows");
    return StabilizerCode(spec, size_t(n), std::move(g));
}

inline StabilizerCode load_code(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw malformed_input("cannot open code file: " + path);
    return parse_code(f);
}

inline std::string code_to_text(const StabilizerCode& c) {
    std::ostringstream out;
    out << "ring=" << c.spec().name() << " n=" << c.n() << " k=" << c.k() << "\n";
    for (size_t r = 0; r < c.generators().rows(); ++r) {
        for (size_t j = 0; j < 2 * c.n(); ++j) {
            if (j) out << " ";
            out << c.generators().at(r, j).lift();
        }
        out << "\n";
    }
    return out.str();
}

inline nlohmann::json code_to_json(const StabilizerCode& c) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < c.generators().rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < 2 * c.n(); ++j) row.push_back(c.generators().at(r, j).lift());
        rows.push_back(row);
    }
    return nlohmann::json{{"ring", c.spec().name()}, {"n", c.n()}, {"k", c.k()}, {"rows", rows}};
}

inline StabilizerCode code_from_json(const nlohmann::json& j) {
    RingSpec spec = parse_ring_name(j.at("ring").get<std::string>());
    size_t n = j.at("n").get<size_t>();
    RMat g = rmat_zero(spec, 0, 2 * n);
    for (const auto& row : j.at("rows")) {
        std::vector<int64_t> vals;
        for (const auto& x : row) vals.push_back(x.get<int64_t>());
        if (vals.size() != 2 * n) throw malformed_input("json row length mismatch");
        g.append_row(make_vec(spec, vals));
    }
    return StabilizerCode(spec, n, std::move(g));
}

inline MonomialMap parse_monomial_map(std::istream& in, RingSpec spec,
                                      MonomialFlavor flavor = MonomialFlavor::SL) {
    std::vector<RMat> blocks;
    std::vector<size_t> perm;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("perm:", 0) == 0) {
            std::istringstream ps(line.substr(5));
            long i;
            while (ps >> i) {
                if (i < 1) throw malformed_input("permutation images are one-based");
                perm.push_back(size_t(i - 1));
            }
            break;
        }
        std::istringstream ls(line);
        int64_t a, b, c, d;
        if (!(ls >> a >> b >> c >> d)) throw malformed_input("block line needs 4 entries: " + line);
        blocks.push_back(rmat(spec, 2, 2, {a, b, c, d}));
    }
    if (perm.size() != blocks.size())
        throw malformed_input("permutation length does not match block count");
    std::vector<bool> hit(perm.size(), false);
    for (size_t p : perm) {
        if (p >= perm.size() || hit[p]) throw malformed_input("perm line is not a permutation");
        hit[p] = true;
    }
    MonomialMap m{spec, std::move(blocks), std::move(perm), flavor};
    m.validate();
    return m;
}

inline MonomialMap load_monomial_map(const std::string& path, RingSpec spec,
                                     MonomialFlavor flavor = MonomialFlavor::SL) {
    std::ifstream f(path);
    if (!f) throw malformed_input("cannot open map file: " + path);
    return parse_monomial_map(f, spec, flavor);
}

// State vectors: exact cyclotomic coefficient lists plus the scale exponent.
inline nlohmann::json state_to_json(const StateBasis& s) {
    nlohmann::json cols = nlohmann::json::array();
    uint32_t conductor = 1;
    for (size_t c = 0; c < s.columns.cols(); ++c)
        for (size_t r = 0; r < s.columns.rows(); ++r)
            conductor = std::lcm(conductor, s.columns.at(r, c).conductor());
    for (size_t c = 0; c < s.columns.cols(); ++c) {
        nlohmann::json col = nlohmann::json::array();
        for (size_t r = 0; r < s.columns.rows(); ++r) {
            nlohmann::json entry = nlohmann::json::array();
            Cyclotomic z = s.columns.at(r, c).embedded(conductor);
            for (const Rat& q : z.coeffs()) entry.push_back(q.str());
            col.push_back(entry);
        }
        cols.push_back(col);
    }
    return nlohmann::json{{"d", s.d},         {"n", s.n},           {"k", s.k},
                          {"conductor", conductor}, {"scale_exp", 0}, {"columns", cols}};
}

inline StateBasis state_from_json(const nlohmann::json& input) {
    // accept both the bare export and the CLI's run-report envelope
    const nlohmann::json& j = input.contains("results") ? input.at("results") : input;
    StateBasis s;
    s.d = j.at("d").get<uint32_t>();
    s.n = j.at("n").get<size_t>();
    s.k = j.at("k").get<size_t>();
    uint32_t conductor = j.at("conductor").get<uint32_t>();
    const auto& cols = j.at("columns");
    size_t dim = 1;
    for (size_t i = 0; i < s.n; ++i) dim *= s.d;
    s.columns = cmat_zero(dim, cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != dim) throw malformed_input("state column length mismatch");
        for (size_t r = 0; r < dim; ++r) {
            Cyclotomic acc = Cyclotomic::zero();
            const auto& coeffs = cols[c][r];
            for (size_t i = 0; i < coeffs.size(); ++i) {
                Rat q = Rat::parse(coeffs[i].get<std::string>());
                if (!q.is_zero())
                    acc += q * Cyclotomic::root_of_unity(conductor, int64_t(i));
            }
            s.columns.at(r, c) = acc;
        }
    }
    return s;
}

inline nlohmann::json scaled_matrix_to_json(const ScaledMatrix& u) {
    uint32_t conductor = 1;
    for (const auto& e : u.mat.entries()) conductor = std::lcm(conductor, e.conductor());
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < u.mat.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < u.mat.cols(); ++c) {
            nlohmann::json entry = nlohmann::json::array();
            Cyclotomic z = u.mat.at(r, c).embedded(conductor);
            for (const Rat& q : z.coeffs()) entry.push_back(q.str());
            row.push_back(entry);
        }
        rows.push_back(row);
    }
    return nlohmann::json{
        {"d", u.d}, {"scale_exp", u.scale_exp}, {"conductor", conductor}, {"entries", rows}};
}

} // namespace sympiso
