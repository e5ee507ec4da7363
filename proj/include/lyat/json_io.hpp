#ifndef LYAT_JSON_IO_HPP
#define LYAT_JSON_IO_HPP

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lyat/enumeration.hpp"
#include "lyat/nilpotent2.hpp"
#include "lyat/version.hpp"

namespace lyat {

using json = nlohmann::json;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json field_to_json(const FieldSpec& s) {
    if (s.kind == FieldSpec::Kind::rational) return json{{"kind", "rational"}};
    return json{{"kind", "prime"}, {"p", s.p}};
}

inline FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw SchemaError("field: expected object with 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") {
        if (!j.contains("p")) throw SchemaError("field: prime field needs 'p'");
        return FieldSpec::prime(j.at("p").get<uint32_t>());
    }
    throw SchemaError("field: unknown kind '" + kind + "'");
}

template <class F>
json vec_to_sparse_json(const F&, const Vec<F>& v) {
    json out = json::array();
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero())
            out.push_back(json{{"k", k}, {"c", F::to_string(v[k])}});
    return out;
}

template <class F>
Vec<F> vec_from_sparse_json(const F& f, size_t n, const json& j, const char* where) {
    Vec<F> v = zero_vec(f, n);
    if (!j.is_array()) throw SchemaError(std::string(where) + ": 'value' must be an array");
    for (const auto& ent : j) {
        if (!ent.is_object() || !ent.contains("k") || !ent.contains("c"))
            throw SchemaError(std::string(where) + ": entry needs 'k' and 'c'");
        size_t k = ent.at("k").get<size_t>();
        if (k >= n)
            throw SchemaError(std::string(where) + ": index k=" + std::to_string(k) +
                              " out of range (dim " + std::to_string(n) + ")");
        v[k] = f.parse(ent.at("c").get<std::string>());
    }
    return v;
}

template <class F>
json matrix_to_json(const Matrix<F>& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(F::to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
Matrix<F> matrix_from_json(const F& f, const json& j, const char* where) {
    if (!j.is_array()) throw SchemaError(std::string(where) + ": matrix must be an array of rows");
    size_t rows = j.size();
    size_t cols = rows ? j.at(0).size() : 0;
    Matrix<F> m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw SchemaError(std::string(where) + ": ragged matrix rows");
        for (size_t c = 0; c < cols; ++c)
            m(i, c) = f.parse(row.at(c).get<std::string>());
    }
    return m;
}

template <class F>
json algebra_to_json(const LYAlgebra<F>& L) {
    json out;
    out["field"] = field_to_json(spec_of(L.field));
    out["dim"] = L.dim;
    out["basis"] = L.basis_names;
    json bin = json::array();
    for (size_t i = 0; i < L.dim; ++i)
        for (size_t j = i + 1; j < L.dim; ++j)
            if (!is_zero_vec<F>(L.bin(i, j)))
                bin.push_back(json{{"i", i}, {"j", j},
                                   {"value", vec_to_sparse_json(L.field, L.bin(i, j))}});
    out["binary"] = std::move(bin);
    json ter = json::array();
    for (size_t i = 0; i < L.dim; ++i)
        for (size_t j = i + 1; j < L.dim; ++j)
            for (size_t k = 0; k < L.dim; ++k)
                if (!is_zero_vec<F>(L.ter(i, j, k)))
                    ter.push_back(json{{"i", i}, {"j", j}, {"k", k},
                                       {"value", vec_to_sparse_json(L.field, L.ter(i, j, k))}});
    out["ternary"] = std::move(ter);
    return out;
}

/// Loads an algebra; only i<j entries are stored in files, the loader
/// completes the skew images. Conflicting duplicates are a hard error.
template <class F>
LYAlgebra<F> algebra_from_json(const F& f, const json& j) {
    if (!j.is_object() || !j.contains("dim")) throw SchemaError("algebra: missing 'dim'");
    size_t n = j.at("dim").get<size_t>();
    LYAlgebra<F> L(f, n);
    if (j.contains("basis")) {
        auto names = j.at("basis").get<std::vector<std::string>>();
        if (names.size() != n) throw SchemaError("algebra: 'basis' length != dim");
        L.basis_names = names;
    }
    for (const auto& ent : j.value("binary", json::array())) {
        size_t i = ent.at("i").get<size_t>(), jj = ent.at("j").get<size_t>();
        if (i >= n || jj >= n)
            throw SchemaError("algebra: binary entry (" + std::to_string(i) + "," +
                              std::to_string(jj) + ") out of range");
        try {
            L.set_binary(i, jj, vec_from_sparse_json(f, n, ent.at("value"), "algebra.binary"));
        } catch (const std::invalid_argument& ex) {
            throw SchemaError("algebra: binary entry (" + std::to_string(i) + "," +
                              std::to_string(jj) + "): " + ex.what());
        }
    }
    for (const auto& ent : j.value("ternary", json::array())) {
        size_t i = ent.at("i").get<size_t>(), jj = ent.at("j").get<size_t>(),
               k = ent.at("k").get<size_t>();
        if (i >= n || jj >= n || k >= n)
            throw SchemaError("algebra: ternary entry (" + std::to_string(i) + "," +
                              std::to_string(jj) + "," + std::to_string(k) +
                              ") out of range");
        try {
            L.set_ternary(i, jj, k,
                          vec_from_sparse_json(f, n, ent.at("value"), "algebra.ternary"));
        } catch (const std::invalid_argument& ex) {
            throw SchemaError("algebra: ternary entry (" + std::to_string(i) + "," +
                              std::to_string(jj) + "," + std::to_string(k) + "): " +
                              ex.what());
        }
    }
    return L;
}

template <class F>
json representation_to_json(const Representation<F>& r) {
    json out;
    out["algebra"] = algebra_to_json(r.algebra);
    out["vdim"] = r.vdim;
    json rho = json::array(), d = json::array(), th = json::array();
    for (const auto& m : r.rho) rho.push_back(matrix_to_json(m));
    for (const auto& m : r.dmap) d.push_back(matrix_to_json(m));
    for (const auto& m : r.theta) th.push_back(matrix_to_json(m));
    out["rho"] = std::move(rho);
    out["D"] = std::move(d);
    out["theta"] = std::move(th);
    return out;
}

template <class F>
Representation<F> representation_from_json(const F& f, const json& j,
                                           const std::string& base_dir) {
    if (!j.is_object()) throw SchemaError("representation: expected object");
    json alg_json;
    if (j.at("algebra").is_string()) {
        std::ifstream in(base_dir + "/" + j.at("algebra").get<std::string>());
        if (!in) throw SchemaError("representation: cannot open algebra ref");
        in >> alg_json;
    } else {
        alg_json = j.at("algebra");
    }
    auto L = algebra_from_json(f, alg_json);
    size_t m = j.at("vdim").get<size_t>();
    Representation<F> r(L, m);
    const auto& rho = j.at("rho");
    const auto& d = j.at("D");
    const auto& th = j.at("theta");
    if (rho.size() != L.dim || d.size() != L.dim * L.dim || th.size() != L.dim * L.dim)
        throw SchemaError("representation: rho/D/theta must have n, n^2, n^2 matrices");
    for (size_t i = 0; i < L.dim; ++i) r.rho[i] = matrix_from_json(f, rho.at(i), "rho");
    for (size_t i = 0; i < L.dim * L.dim; ++i) {
        r.dmap[i] = matrix_from_json(f, d.at(i), "D");
        r.theta[i] = matrix_from_json(f, th.at(i), "theta");
    }
    return r;
}

template <class F>
json cochain_to_json(const CochainPair<F>& c, const F& f) {
    json out;
    out["dim"] = c.even.n;
    out["vdim"] = c.even.m;
    json fs = json::array(), gs = json::array();
    for (size_t i = 0; i < c.even.n; ++i)
        for (size_t j = i + 1; j < c.even.n; ++j) {
            auto v = c.even.value(f, {i, j});
            if (!is_zero_vec<F>(v))
                fs.push_back(json{{"i", i}, {"j", j}, {"value", vec_to_sparse_json(f, v)}});
            for (size_t k = 0; k < c.even.n; ++k) {
                auto w = c.odd.value(f, {i, j, k});
                if (!is_zero_vec<F>(w))
                    gs.push_back(json{{"i", i}, {"j", j}, {"k", k},
                                      {"value", vec_to_sparse_json(f, w)}});
            }
        }
    out["f"] = std::move(fs);
    out["g"] = std::move(gs);
    return out;
}

template <class F>
CochainPair<F> cochain_from_json(const F& f, size_t n, size_t m, const json& j) {
    if (j.contains("dim") && j.at("dim").get<size_t>() != n)
        throw SchemaError("cochain: 'dim' does not match the context");
    if (j.contains("vdim") && j.at("vdim").get<size_t>() != m)
        throw SchemaError("cochain: 'vdim' does not match the context");
    CochainPair<F> c(f, n, m, 1);
    for (const auto& ent : j.value("f", json::array())) {
        size_t i = ent.at("i").get<size_t>(), jj = ent.at("j").get<size_t>();
        if (i >= jj || jj >= n) throw SchemaError("cochain: f entry needs i < j < dim");
        auto v = vec_from_sparse_json(f, m, ent.at("value"), "cochain.f");
        for (size_t t = 0; t < m; ++t) {
            c.even.at({i, jj}, t) = v[t];
            c.even.at({jj, i}, t) = -v[t];
        }
    }
    for (const auto& ent : j.value("g", json::array())) {
        size_t i = ent.at("i").get<size_t>(), jj = ent.at("j").get<size_t>(),
               k = ent.at("k").get<size_t>();
        if (i >= jj || jj >= n || k >= n)
            throw SchemaError("cochain: g entry needs i < j < dim, k < dim");
        auto v = vec_from_sparse_json(f, m, ent.at("value"), "cochain.g");
        for (size_t t = 0; t < m; ++t) {
            c.odd.at({i, jj, k}, t) = v[t];
            c.odd.at({jj, i, k}, t) = -v[t];
        }
    }
    return c;
}

template <class F>
json extension_to_json(const AbelianExtension<F>& e) {
    json out;
    out["field"] = field_to_json(spec_of(e.base.field));
    out["base"] = algebra_to_json(e.base);
    out["vdim"] = e.vdim;
    out["rep"] = representation_to_json(e.rep);
    out["cocycle"] = cochain_to_json(e.cocycle, e.base.field);
    out["total"] = algebra_to_json(e.total);
    out["incl"] = matrix_to_json(e.incl);
    out["proj"] = matrix_to_json(e.proj);
    out["sect"] = matrix_to_json(e.sect);
    out["vproj"] = matrix_to_json(e.vproj);
    return out;
}

template <class F>
AbelianExtension<F> extension_from_json(const F& f, const json& j,
                                        const std::string& base_dir) {
    auto base = algebra_from_json(f, j.at("base"));
    size_t m = j.at("vdim").get<size_t>();
    auto rep = representation_from_json(f, j.at("rep"), base_dir);
    auto coc = cochain_from_json(f, base.dim, m, j.at("cocycle"));
    auto total = algebra_from_json(f, j.at("total"));
    AbelianExtension<F> e{std::move(base), m, std::move(rep), std::move(coc),
                          std::move(total),
                          matrix_from_json(f, j.at("incl"), "incl"),
                          matrix_from_json(f, j.at("proj"), "proj"),
                          matrix_from_json(f, j.at("sect"), "sect"),
                          matrix_from_json(f, j.at("vproj"), "vproj")};
    if (!(e.proj * e.incl).is_zero() || !(e.proj * e.sect).is_identity() ||
        !(e.vproj * e.incl).is_identity() || !(e.vproj * e.sect).is_zero())
        throw SchemaError("extension: structural matrices are inconsistent");
    if (!is_cocycle23(e.rep, e.cocycle))
        throw SchemaError("extension: stored cochain is not a (2,3)-cocycle");
    return e;
}

template <class F>
json pair_to_json(const AutPair<F>& pr) {
    return json{{"phi", matrix_to_json(pr.phi)}, {"psi", matrix_to_json(pr.psi)}};
}

template <class F>
AutPair<F> pair_from_json(const F& f, const json& j) {
    if (!j.contains("phi") || !j.contains("psi"))
        throw SchemaError("pair: needs 'phi' and 'psi'");
    return {matrix_from_json(f, j.at("phi"), "phi"),
            matrix_from_json(f, j.at("psi"), "psi")};
}

template <class F>
json certificate_to_json(const LiftCertificate<F>& c) {
    return json{{"gamma", matrix_to_json(c.gamma)}, {"lambda", matrix_to_json(c.lambda)}};
}

template <class F>
json subspace_to_json(const SubspaceBasis<F>& s) {
    json vecs = json::array();
    for (const auto& v : s.vectors()) {
        json row = json::array();
        for (const auto& x : v) row.push_back(F::to_string(x));
        vecs.push_back(std::move(row));
    }
    return json{{"ambient_dim", s.ambient_dim()}, {"vectors", std::move(vecs)}};
}

template <class F>
SubspaceBasis<F> subspace_from_json(const F& f, const json& j) {
    size_t n = j.at("ambient_dim").get<size_t>();
    std::vector<Vec<F>> vecs;
    for (const auto& row : j.at("vectors")) {
        Vec<F> v = zero_vec(f, n);
        if (row.size() != n) throw SchemaError("subspace: vector length != ambient_dim");
        for (size_t t = 0; t < n; ++t) v[t] = f.parse(row.at(t).get<std::string>());
        vecs.push_back(std::move(v));
    }
    return SubspaceBasis<F>::from_vectors(f, n, vecs);
}

template <class F>
json relations_to_json(const RelationSet<F>& rs) {
    json out;
    out["base_dim"] = rs.base_dim;
    out["center_dim"] = rs.center_dim;
    out["vars"] = rs.var_names;
    json rels = json::array();
    for (const auto& rel : rs.relations) {
        json terms = json::array();
        for (const auto& [mono, coeff] : rel.poly.terms()) {
            json exps = json::object();
            for (size_t v = 0; v < rs.var_names.size(); ++v)
                if (mono.exps[v] > 0) exps[rs.var_names[v]] = mono.exps[v];
            terms.push_back(json{{"exps", std::move(exps)}, {"c", F::to_string(coeff)}});
        }
        rels.push_back(json{
            {"kind", rel.kind == RelationKind::binary ? "binary" : "ternary"},
            {"tuple", rel.tuple},
            {"component", rel.component},
            {"terms", std::move(terms)},
            {"text", rel.poly.str(rs.var_names)}});
    }
    out["relations"] = std::move(rels);
    return out;
}

inline uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& data) {
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << fnv1a64(data);
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Canonical serialization: sorted keys (nlohmann object ordering), two-space
/// indent, trailing newline. store(load(x)) is byte-identical for files in
/// this form.
inline std::string store_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace lyat

#endif
