#include "grassmap/json_io.hpp"

#include <string>

namespace grassmap {

namespace {

Scalar parse_scalar(const Json& j) {
    if (j.is_number_unsigned()) return j.get<Scalar>();
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v < 0) throw std::invalid_argument("negative entry outside string encoding");
        return static_cast<Scalar>(v);
    }
    if (!j.is_string()) throw std::invalid_argument("expected decimal string");
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty()) throw std::invalid_argument("empty numeric string");
    std::size_t pos = 0;
    Scalar v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad decimal string: " + s);
    return v;
}

Side side_from_string(const std::string& s) {
    if (s == "primal") return Side::primal;
    if (s == "dual") return Side::dual;
    throw std::invalid_argument("side must be \"primal\" or \"dual\"");
}

} // namespace

Scalar scalar_from_json(const PrimeField& f, const Json& j) {
    return f.reduce(parse_scalar(j));
}

Json scalar_to_json(Scalar v) { return std::to_string(v); }

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const PrimeField& f, const Json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("row count mismatch");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw std::invalid_argument("column count mismatch");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(f, entries[i][k]);
    }
    return m;
}

Json subspace_to_json(const Subspace& s) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < s.ambient(); ++j)
            row.push_back(scalar_to_json(s.basis().at(i, j)));
        basis.push_back(std::move(row));
    }
    return Json{{"side", s.side() == Side::primal ? "primal" : "dual"},
                {"ambient", s.ambient()},
                {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const PrimeField& f, const Json& j) {
    Side side = side_from_string(j.at("side").get<std::string>());
    std::size_t ambient = j.at("ambient").get<std::size_t>();
    const Json& basis = j.at("basis");
    std::vector<std::vector<Scalar>> rows;
    for (const Json& row : basis) {
        if (row.size() != ambient) throw std::invalid_argument("basis row length mismatch");
        std::vector<Scalar> r;
        r.reserve(ambient);
        for (const Json& x : row) r.push_back(scalar_from_json(f, x));
        rows.push_back(std::move(r));
    }
    return Subspace::span(f, side, ambient, rows);
}

Json algebra_to_json(const Algebra& a) {
    Json j;
    j["prime"] = std::to_string(a.field().modulus());
    if (a.is_monogenic()) {
        j["kind"] = "monogenic";
        Json poly = Json::array();
        for (Scalar c : a.min_poly()) poly.push_back(scalar_to_json(c));
        j["poly"] = std::move(poly);
    } else {
        j["kind"] = "table";
        Json unit = Json::array();
        for (Scalar c : a.unit()) unit.push_back(scalar_to_json(c));
        j["unit"] = std::move(unit);
        std::size_t n = a.dim();
        Json structure = Json::array();
        for (std::size_t i = 0; i < n; ++i) {
            Json plane = Json::array();
            for (std::size_t jj = 0; jj < n; ++jj) {
                Json row = Json::array();
                for (std::size_t k = 0; k < n; ++k)
                    row.push_back(scalar_to_json(a.structure(i, jj, k)));
                plane.push_back(std::move(row));
            }
            structure.push_back(std::move(plane));
        }
        j["structure"] = std::move(structure);
    }
    return j;
}

Algebra algebra_from_json(const Json& j) {
    PrimeField f(parse_scalar(j.at("prime")));
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "monogenic") {
        std::vector<Scalar> poly;
        for (const Json& c : j.at("poly")) poly.push_back(scalar_from_json(f, c));
        return Algebra::etale_from_poly(f, poly);
    }
    if (kind != "table") throw std::invalid_argument("kind must be \"monogenic\" or \"table\"");
    std::vector<Scalar> unit;
    for (const Json& c : j.at("unit")) unit.push_back(scalar_from_json(f, c));
    const Json& structure = j.at("structure");
    std::vector<std::vector<std::vector<Scalar>>> c;
    for (const Json& plane : structure) {
        std::vector<std::vector<Scalar>> p;
        for (const Json& row : plane) {
            std::vector<Scalar> r;
            for (const Json& x : row) r.push_back(scalar_from_json(f, x));
            p.push_back(std::move(r));
        }
        c.push_back(std::move(p));
    }
    return Algebra::from_structure_constants(f, c, unit);
}

Json incidence_point_to_json(const IncidencePoint& pt) {
    return Json{{"X", subspace_to_json(pt.X)},
                {"Y", subspace_to_json(pt.Y)},
                {"U", subspace_to_json(pt.U)}};
}

IncidencePoint incidence_point_from_json(const Algebra& alg, const Json& j) {
    return make_incidence_point(alg, subspace_from_json(alg.field(), j.at("X")),
                                subspace_from_json(alg.field(), j.at("Y")),
                                subspace_from_json(alg.field(), j.at("U")));
}

Json certificate_to_json(const GoodnessCertificate& c) {
    return Json{{"r", c.r},
                {"s", c.s},
                {"dim_UX", c.dim_UX},
                {"dim_YU", c.dim_YU},
                {"stream", c.stream},
                {"point", incidence_point_to_json(c.point)}};
}

Json goodness_check_to_json(const GoodnessCheck& c) {
    Json j{{"r", c.r}, {"s", c.s}, {"attempts", c.attempts}};
    if (c.certificate) {
        j["certified"] = true;
        j["certificate"] = certificate_to_json(*c.certificate);
    } else {
        j["certified"] = false;
    }
    return j;
}

Json chain_report_to_json(const GoodFlag& flag, const ChainOutcome& outcome) {
    const EuclidChain& chain = flag.chain;
    Json j;
    j["n"] = chain.n;
    j["r"] = chain.r;
    j["gcd"] = chain.gcd();
    j["remainders"] = chain.remainders;
    j["flag_dims"] = chain.flag_dims();
    Json steps = Json::array();
    for (const StepRecord& s : outcome.trace.steps) {
        steps.push_back(Json{{"case", to_string(s.step_case)},
                             {"dims", Json::array({s.x_dim, s.y_dim, s.u_dim})},
                             {"fiber_dim", s.fiber_dim}});
    }
    j["steps"] = std::move(steps);
    if (outcome.trace.dualized) j["dualized"] = true;
    if (outcome.output) {
        j["output"] = subspace_to_json(*outcome.output);
    } else {
        j["fault"] = to_string(outcome.fault);
        j["fault_step"] = outcome.fault_step;
    }
    return j;
}

} // namespace grassmap
