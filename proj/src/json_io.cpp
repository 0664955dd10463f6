#include "rankcrit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "rankcrit/errors.hpp"

namespace rankcrit {

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat((long long)j.get<int64_t>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw ParseError("expected a rational as \"p/q\" string or integer");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
    const int rows = (int)j.size();
    int cols = rows == 0 ? 0 : (int)j.at(0).size();
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j.at(i).is_array() || (int)j.at(i).size() != cols)
            throw ParseError("matrix: ragged rows");
        for (int c = 0; c < cols; ++c) m(i, c) = rat_from_json(j.at(i).at(c));
    }
    return m;
}

Json subspace_to_json(const Subspace& s) {
    return Json{{"ambient_dim", s.ambient_dim()}, {"basis", matrix_to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j) {
    int ambient = j.at("ambient_dim").get<int>();
    Matrix basis = matrix_from_json(j.at("basis"));
    if (basis.rows() > 0 && basis.cols() != ambient)
        throw ParseError("subspace: basis width != ambient_dim");
    if (basis.rows() == 0) return Subspace::zero(ambient);
    return Subspace::span_of_rows(basis);
}

Json matrix_space_to_json(const MatrixSpace& a) {
    Json basis = Json::array();
    for (const Matrix& m : a.basis()) basis.push_back(matrix_to_json(m));
    return Json{{"n", a.n()}, {"basis", std::move(basis)}};
}

MatrixSpace matrix_space_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<Matrix> basis;
    for (const Json& m : j.at("basis")) basis.push_back(matrix_from_json(m));
    try {
        return MatrixSpace(n, std::move(basis));
    } catch (const Error& e) {
        throw ParseError(std::string("matrix space: ") + e.what());
    }
}

Json certificate_to_json(const CriticalityCertificate& c) {
    return Json{{"generic_rank", c.generic_rank},
                {"rank_provenance", to_string(c.rank_provenance)},
                {"status", to_string(c.status)},
                {"rnd_dim", c.rnd.dim()},
                {"rnd_basis", matrix_to_json(c.rnd.basis())},
                {"samples_used", c.samples_used},
                {"seed", c.seed}};
}

Json witness_to_json(const CompressionWitness& w) {
    return Json{{"U", subspace_to_json(w.U)}, {"W", subspace_to_json(w.W)}};
}

Json algebra_to_json(const LieAlgebra& g) {
    Json c = Json::array();
    for (const LieAlgebra::Entry& e : g.structure_entries())
        c.push_back(Json::array({e.i, e.j, e.k, rat_to_json(e.c)}));
    return Json{{"dim", g.dim()},
                {"labels", g.labels()},
                {"cartan", g.cartan()},
                {"c", std::move(c)}};
}

LiePtr algebra_from_json(const Json& j) {
    int dim = j.at("dim").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<int> cartan;
    if (j.contains("cartan")) cartan = j.at("cartan").get<std::vector<int>>();
    std::vector<LieAlgebra::Entry> entries;
    for (const Json& e : j.at("c")) {
        if (!e.is_array() || e.size() != 4) throw ParseError("algebra: entries are [i,j,k,c]");
        entries.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(),
                           rat_from_json(e.at(3))});
    }
    return std::make_shared<const LieAlgebra>(dim, std::move(labels), std::move(cartan), entries);
}

Json representation_to_json(const Representation& rho) {
    Json mats = Json::array();
    for (const Matrix& m : rho.matrices()) mats.push_back(matrix_to_json(m));
    Json out{{"algebra", algebra_to_json(rho.algebra())},
             {"dim_V", rho.dim_v()},
             {"matrices", std::move(mats)},
             {"label", rho.label()}};
    if (rho.weight_data()) {
        Json w = Json::array();
        for (const auto& lam : rho.weight_data()->weights) {
            Json tup = Json::array();
            for (const Rat& x : lam) tup.push_back(rat_to_json(x));
            w.push_back(std::move(tup));
        }
        out["weights"] = std::move(w);
    }
    return out;
}

Representation representation_from_json(const Json& j) {
    LiePtr g = algebra_from_json(j.at("algebra"));
    int dim_v = j.at("dim_V").get<int>();
    std::vector<Matrix> mats;
    for (const Json& m : j.at("matrices")) mats.push_back(matrix_from_json(m));
    std::optional<WeightData> wd;
    if (j.contains("weights")) {
        WeightData w;
        for (const Json& tup : j.at("weights")) {
            std::vector<Rat> lam;
            for (const Json& x : tup) lam.push_back(rat_from_json(x));
            w.weights.push_back(std::move(lam));
        }
        wd = std::move(w);
    }
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : "rep";
    try {
        return Representation(std::move(g), std::move(mats), std::move(label), std::move(wd),
                              true, dim_v);
    } catch (const Error& e) {
        throw ParseError(std::string("representation: ") + e.what());
    }
}

namespace {
std::string label_str(const std::vector<Rat>& label) {
    std::string s = "[";
    for (size_t i = 0; i < label.size(); ++i) {
        if (i) s += ",";
        s += label[i].str();
    }
    return s + "]";
}
}  // namespace

Json report_to_json(const MultiplicityReport& r) {
    Json rows = Json::array();
    for (const MultiplicityRow& row : r.rows) {
        Json wt = Json::array(), dk = Json::array();
        for (const Rat& x : row.weight) wt.push_back(rat_to_json(x));
        for (const Rat& x : row.dynkin) dk.push_back(rat_to_json(x));
        rows.push_back(Json{{"weight", std::move(wt)},
                            {"dynkin", std::move(dk)},
                            {"hw_dim", row.hw_dim},
                            {"mult_image", row.mult_image},
                            {"mult_rnd", row.mult_rnd},
                            {"samples", row.samples}});
    }
    return Json{{"rep", r.rep_label},
                {"dim_V", r.dim_v},
                {"generic_rank", r.generic_rank},
                {"rank_provenance", to_string(r.provenance)},
                {"verdict", to_string(r.verdict)},
                {"rnd_dim", r.rnd_dim},
                {"seed", r.seed},
                {"oversample", r.oversample},
                {"rows", std::move(rows)}};
}

std::string report_to_text(const MultiplicityReport& r) {
    std::ostringstream os;
    os << "rep " << r.rep_label << "  dim V = " << r.dim_v
       << "  generic rank = " << r.generic_rank << " (" << to_string(r.provenance) << ")\n";
    os << "verdict: " << to_string(r.verdict) << "   rnd dim = " << r.rnd_dim
       << "   seed = " << r.seed << "\n";
    size_t wlabel = 8;
    for (const MultiplicityRow& row : r.rows)
        wlabel = std::max(wlabel, label_str(row.dynkin).size());
    os << "  " << std::string(wlabel - 2, ' ') << "mu   dim HW   in image   in RND\n";
    for (const MultiplicityRow& row : r.rows) {
        std::string lab = label_str(row.dynkin);
        os << "  " << std::string(wlabel - lab.size(), ' ') << lab;
        std::string hw = std::to_string(row.hw_dim), mi = std::to_string(row.mult_image),
                    mr = std::to_string(row.mult_rnd);
        os << std::string(9 - hw.size(), ' ') << hw;
        os << std::string(11 - mi.size(), ' ') << mi;
        os << std::string(9 - mr.size(), ' ') << mr << "\n";
    }
    return os.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

}  // namespace rankcrit
