#include "trinion/serialize.hpp"

namespace trinion::serialize {

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) throw SchemaError(what);
}

}  // namespace

json complex_to_json(const matgroup::Complex& z) { return json::array({z.real(), z.imag()}); }

matgroup::Complex json_to_complex(const json& j) {
    require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
            "complex values are [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const matgroup::Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

matgroup::Matrix json_to_matrix(const json& j) {
    require(j.is_array() && !j.empty(), "matrix is a non-empty array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    require(j[0].is_array() && static_cast<Eigen::Index>(j[0].size()) == rows,
            "matrix must be square");
    matgroup::Matrix m(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        require(j[static_cast<size_t>(r)].is_array() &&
                    static_cast<Eigen::Index>(j[static_cast<size_t>(r)].size()) == rows,
                "matrix rows have equal length");
        for (Eigen::Index c = 0; c < rows; ++c) {
            m(r, c) = json_to_complex(j[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        }
    }
    return m;
}

json volume_table_to_json(const volumes::VolumeTable& table) {
    json out = json::object();
    for (const auto& [idx, value] : table.values) {
        const std::string key = std::to_string(idx.j1) + "," + std::to_string(idx.j2) + "," +
                                std::to_string(idx.j3);
        out[key] = complex_to_json(value);
    }
    return out;
}

std::string rational_to_string(const okounkov::Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

okounkov::Rational string_to_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        okounkov::Rational q;
        if (slash == std::string::npos) {
            q = okounkov::Rational(mpz_class(s));
        } else {
            const mpz_class den(s.substr(slash + 1));
            require(den != 0, "zero denominator in rational literal");
            q = okounkov::Rational(mpz_class(s.substr(0, slash)), den);
        }
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw SchemaError("malformed rational literal '" + s + "'");
    }
}

json polytope_to_json(const okounkov::RationalPolytope& p) {
    json vertices = json::array();
    for (const auto& v : p.vertices) {
        json coords = json::array();
        for (const auto& c : v) coords.push_back(rational_to_string(c));
        vertices.push_back(std::move(coords));
    }
    return json{{"d", p.d}, {"vertices", std::move(vertices)}};
}

okounkov::RationalPolytope json_to_polytope(const json& j) {
    require(j.is_object() && j.contains("d") && j.contains("vertices"),
            "polytope needs 'd' and 'vertices'");
    okounkov::RationalPolytope p;
    p.d = j["d"].get<int>();
    require(p.d >= 1, "polytope dimension must be positive");
    for (const json& vj : j["vertices"]) {
        require(vj.is_array() && static_cast<int>(vj.size()) == p.d,
                "vertex length must equal d");
        okounkov::RationalVector v;
        for (const json& c : vj) {
            require(c.is_string(), "vertex coordinates are rational strings");
            v.push_back(string_to_rational(c.get<std::string>()));
        }
        p.vertices.push_back(std::move(v));
    }
    return p;
}

namespace {

// One term is [[e1, ..., ed], "num/den"].
std::pair<okounkov::ExponentVector, okounkov::Rational> json_to_term(const json& j, int d) {
    require(j.is_array() && j.size() == 2 && j[0].is_array() && j[1].is_string(),
            "polynomial term is [[exponents], \"num/den\"]");
    require(static_cast<int>(j[0].size()) == d, "exponent vector length must equal d");
    okounkov::ExponentVector e;
    for (const json& x : j[0]) {
        require(x.is_number_integer(), "exponents are integers");
        e.push_back(x.get<long>());
    }
    return {std::move(e), string_to_rational(j[1].get<std::string>())};
}

bool looks_like_term(const json& j) {
    return j.is_array() && j.size() == 2 && j[0].is_array() &&
           (j[0].empty() || j[0][0].is_number()) && j[1].is_string();
}

}  // namespace

okounkov::MonomialSystem json_to_system(const json& j) {
    require(j.is_object() && j.contains("d") && j.contains("generators"),
            "system needs 'd' and 'generators'");
    okounkov::MonomialSystem s;
    s.d = j["d"].get<int>();
    require(s.d >= 1, "d must be positive");
    require(j["generators"].is_array() && !j["generators"].empty(), "generators must be non-empty");
    for (const json& gj : j["generators"]) {
        std::vector<std::pair<okounkov::ExponentVector, okounkov::Rational>> terms;
        if (looks_like_term(gj)) {
            terms.push_back(json_to_term(gj, s.d));
        } else {
            require(gj.is_array() && !gj.empty(), "generator is a term or a list of terms");
            for (const json& tj : gj) terms.push_back(json_to_term(tj, s.d));
        }
        s.generators.push_back(okounkov::make_polynomial(s.d, terms));
    }
    return s;
}

glue::FramedSheafDescriptor json_to_sheaf(const json& j) {
    require(j.is_object() && j.contains("n") && j.contains("punctures"),
            "descriptor needs 'n' and 'punctures'");
    glue::FramedSheafDescriptor d;
    d.n = j["n"].get<int>();
    require(j["punctures"].is_array(), "'punctures' must be an array");
    for (const json& pj : j["punctures"]) {
        require(pj.is_object() && pj.contains("torsion_rank") && pj.contains("beta_nonzero"),
                "puncture needs 'torsion_rank' and 'beta_nonzero'");
        glue::PunctureData p;
        p.torsion_rank = pj["torsion_rank"].get<int>();
        for (const json& i : pj["beta_nonzero"]) p.beta_nonzero.insert(i.get<int>());
        d.punctures.push_back(std::move(p));
    }
    return d;
}

json graph_to_json(const glue::TrinionGraph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges) {
        edges.push_back(json::array({json::array({a.trinion, a.slot}),
                                     json::array({b.trinion, b.slot})}));
    }
    return json{{"trinions", g.trinions}, {"edges", std::move(edges)}};
}

}  // namespace trinion::serialize
