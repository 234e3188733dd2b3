#include "sigma2/io.hpp"

#include <fstream>
#include <set>

namespace sigma2 {

namespace {

Shape shape_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error("shape must be a nonempty array");
    std::vector<int> dims;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long>() < 1)
            throw Error("shape entries must be positive integers");
        dims.push_back(x.get<int>());
    }
    return Shape(dims);
}

Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw Error("expected a rational as \"p/q\" string");
}

mpz_class int_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw Error("malformed integer '" + j.get<std::string>() + "'");
        }
    }
    throw Error("expected an integer");
}

json int_to_json(const mpz_class& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(n.get_str());  // outside the exact range of JSON numbers
}

QuadExt scalar_from_json(const json& j, const mpz_class& delta) {
    if (j.is_object()) {
        Rat a = rat_from_json(j.at("a"));
        Rat b = rat_from_json(j.at("b"));
        mpz_class d = int_from_json(j.at("delta"));
        if (!b.is_zero() && d != delta)
            throw Error("scalar delta does not match the decomposition field");
        if (b.is_zero()) return QuadExt(a);
        return QuadExt(a, b, d);
    }
    return QuadExt(rat_from_json(j));
}

json scalar_to_json(const QuadExt& s, const mpz_class& delta) {
    if (sgn(delta) == 0) {
        if (!s.is_rational()) throw InternalError("irrational scalar in a rational field");
        return json(s.rational_part().str());
    }
    return json{{"a", s.rational_part().str()},
                {"b", s.surd_part().str()},
                {"delta", int_to_json(delta)}};
}

}  // namespace

Tensor<Rat> tensor_from_json(const json& j) {
    if (!j.is_object()) throw Error("tensor file must be a JSON object");
    Shape shape = shape_from_json(j.at("shape"));

    if (j.contains("entries")) {
        const json& ent = j.at("entries");
        if (!ent.is_array()) throw Error("entries must be an array");
        if (ent.size() != shape.size())
            throw Error("entry count " + std::to_string(ent.size()) +
                        " does not match shape size " + std::to_string(shape.size()));
        std::vector<Rat> e;
        e.reserve(ent.size());
        for (const auto& x : ent) e.push_back(rat_from_json(x));
        return Tensor<Rat>(shape, std::move(e));
    }

    if (j.contains("coords")) {
        const json& coords = j.at("coords");
        const json& values = j.at("values");
        if (!coords.is_array() || !values.is_array() || coords.size() != values.size())
            throw Error("sparse tensor needs coords and values of equal length");
        Tensor<Rat> t{shape};
        std::set<std::size_t> seen;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const json& c = coords[i];
            if (!c.is_array() || static_cast<int>(c.size()) != shape.order())
                throw Error("coordinate tuple length does not match shape order");
            std::vector<int> idx;
            for (int m = 0; m < shape.order(); ++m) {
                if (!c[m].is_number_integer()) throw Error("coordinates must be integers");
                int v = c[m].get<int>();
                if (v < 0 || v >= shape.dim(m)) throw Error("coordinate out of range");
                idx.push_back(v);
            }
            std::size_t flat = t.flat_index(idx);
            if (!seen.insert(flat).second) throw Error("duplicate coordinate in sparse tensor");
            t[flat] = rat_from_json(values[i]);
        }
        return t;
    }

    throw Error("tensor file needs either entries or coords/values");
}

json tensor_to_json(const Tensor<Rat>& t) {
    json entries = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) entries.push_back(t[i].str());
    return json{{"shape", t.shape().dims}, {"entries", entries}};
}

HomPoly poly_from_json(const json& j) {
    if (!j.is_object()) throw Error("polynomial file must be a JSON object");
    if (!j.at("n_vars").is_number_integer() || !j.at("degree").is_number_integer())
        throw Error("n_vars and degree must be integers");
    HomPoly f(j.at("n_vars").get<int>(), j.at("degree").get<int>());
    const json& terms = j.at("terms");
    if (!terms.is_array()) throw Error("terms must be an array");
    std::set<std::vector<int>> seen;
    for (const auto& t : terms) {
        std::vector<int> e = t.at("exponents").get<std::vector<int>>();
        if (!seen.insert(e).second) throw Error("duplicate exponent tuple");
        f.add_term(e, rat_from_json(t.at("coeff")));
    }
    return f;
}

json poly_to_json(const HomPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.coeffs)
        terms.push_back(json{{"exponents", e}, {"coeff", c.str()}});
    return json{{"n_vars", f.n_vars}, {"degree", f.degree}, {"terms", terms}};
}

Decomposition decomposition_from_json(const json& j) {
    if (!j.is_object()) throw Error("decomposition file must be a JSON object");
    Decomposition d;
    d.claimed_rank = j.at("claimed_rank").get<int>();
    const json& field = j.at("field");
    d.delta = field.at("delta").is_null() ? mpz_class(0) : int_from_json(field.at("delta"));
    const json& terms = j.at("terms");
    if (!terms.is_array()) throw Error("terms must be an array");
    if (static_cast<int>(terms.size()) != d.claimed_rank)
        throw Error("claimed_rank does not match the number of terms");
    for (const auto& t : terms) {
        RankOneTerm term;
        term.coeff = scalar_from_json(t.at("coeff"), d.delta);
        const json& vs = t.at("vectors");
        if (!vs.is_array() || vs.empty()) throw Error("term needs a nonempty vector list");
        for (const auto& v : vs) {
            if (!v.is_array() || v.empty()) throw Error("term vectors must be nonempty arrays");
            std::vector<QuadExt> vec;
            for (const auto& x : v) vec.push_back(scalar_from_json(x, d.delta));
            term.vectors.push_back(std::move(vec));
        }
        if (!d.terms.empty() && term.vectors.size() != d.terms.front().vectors.size())
            throw Error("terms disagree on the number of modes");
        d.terms.push_back(std::move(term));
    }
    return d;
}

json decomposition_to_json(const Decomposition& d) {
    json terms = json::array();
    for (const auto& t : d.terms) {
        json vectors = json::array();
        for (const auto& v : t.vectors) {
            json vec = json::array();
            for (const auto& x : v) vec.push_back(scalar_to_json(x, d.delta));
            vectors.push_back(vec);
        }
        terms.push_back(json{{"coeff", scalar_to_json(t.coeff, d.delta)}, {"vectors", vectors}});
    }
    json field;
    field["delta"] = sgn(d.delta) == 0 ? json(nullptr) : int_to_json(d.delta);
    return json{{"claimed_rank", d.claimed_rank}, {"terms", terms}, {"field", field}};
}

json sidecar_to_json(const Sidecar& s) {
    json j{{"kind", s.kind},
           {"shape", s.shape.dims},
           {"seed", s.seed},
           {"stratum", s.stratum},
           {"rank", s.rank},
           {"eta", s.eta}};
    if (!s.tangent_modes.empty()) {
        j["tangent_modes"] = s.tangent_modes;
        auto vecs = [](const VecPerMode<Rat>& vv) {
            json out = json::array();
            for (const auto& v : vv) {
                json one = json::array();
                for (const auto& x : v) one.push_back(x.str());
                out.push_back(one);
            }
            return out;
        };
        json beta = json::array();
        for (const auto& b : s.beta) beta.push_back(b.str());
        j["frame"] = json{{"base_point", vecs(s.base_point)},
                          {"directions", vecs(s.directions)},
                          {"alpha", s.alpha.str()},
                          {"beta", beta}};
    }
    return j;
}

json classify_report(const Tensor<Rat>& t) {
    BorderRankClass cls = classify(t);
    json j;
    j["stratum"] = stratum_name(cls.tag);
    j["border_rank"] = cls.border_rank() ? json(*cls.border_rank()) : json(nullptr);
    j["rank"] = cls.rank() ? json(*cls.rank()) : json(nullptr);
    if (cls.tag == Stratum::Zero || cls.tag == Stratum::BeyondSigmaTwo) {
        j["eta"] = nullptr;
    } else {
        TypeEta eta = type_eta_of(cls);
        j["eta"] = eta.value;
        j["eta_on_tangent_locus"] = eta.on_tangent_locus;
    }
    j["multilinear_ranks"] = multilinear_ranks(t);
    return j;
}

json comon_report(const SymRankReport& r) {
    return json{{"tensor_rank", r.tensor_rank},
                {"symmetric_rank", r.symmetric_rank},
                {"equal", r.equal},
                {"stratum", stratum_name(r.stratum)}};
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error("JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace sigma2
