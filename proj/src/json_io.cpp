#include "bdq/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace bdq {

Json laurent_to_json(const Laurent& x) {
    Json j = Json::object();
    for (auto& [e, v] : x.coeffs()) j[std::to_string(e)] = rat_str(v);
    return j;
}

Laurent laurent_from_json(const Json& j) {
    Laurent x;
    if (j.is_string()) return laurent_parse(j.get<std::string>());
    if (j.is_number_integer()) return Laurent(Rat(j.get<long>()));
    if (!j.is_object()) throw invalid("Laurent JSON must be an object, string or integer");
    for (auto& [key, val] : j.items()) {
        int e;
        try {
            e = std::stoi(key);
        } catch (const std::exception&) {
            throw invalid("bad exponent key: " + key);
        }
        x.add_to(e, rat_parse(val.get<std::string>()));
    }
    return x;
}

Json triple_to_json(const AdmissibleTriple& t) {
    Json j;
    j["type"] = t.type.str();
    j["gamma1"] = t.g1;
    j["gamma2"] = t.g2;
    Json tau = Json::object();
    for (size_t k = 0; k < t.g1.size(); ++k) tau[std::to_string(t.g1[k])] = t.tau[k];
    j["tau"] = tau;
    return j;
}

AdmissibleTriple triple_from_json(const Json& j) {
    AdmissibleTriple t;
    t.type = SimpleType::parse(j.at("type").get<std::string>());
    t.g1 = j.at("gamma1").get<std::vector<int>>();
    std::sort(t.g1.begin(), t.g1.end());
    const Json& tau = j.at("tau");
    for (int a : t.g1) {
        auto key = std::to_string(a);
        if (!tau.contains(key)) throw invalid("tau missing image of " + key);
        t.tau.push_back(tau.at(key).get<int>());
    }
    t.g2 = t.tau;
    std::sort(t.g2.begin(), t.g2.end());
    if (j.contains("gamma2")) {
        auto g2 = j.at("gamma2").get<std::vector<int>>();
        std::sort(g2.begin(), g2.end());
        if (g2 != t.g2) throw invalid("gamma2 does not match the image of tau");
    }
    return t;
}

Json matk_to_json(const MatK& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

MatK matk_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw invalid("matrix JSON must be a nonempty array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    MatK m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j.at(r).size()) != cols) throw invalid("ragged matrix JSON");
        for (int c = 0; c < cols; ++c) m(r, c) = laurent_from_json(j.at(r).at(c));
    }
    return m;
}

Json qmat_to_json(const QMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(rat_str(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

QMat qmat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw invalid("matrix JSON must be a nonempty array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    QMat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const Json& v = j.at(r).at(c);
            m(r, c) = v.is_string() ? rat_parse(v.get<std::string>()) : Rat(v.get<long>());
        }
    return m;
}

Json intmat_to_json(const IntMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m(r, c).get_str());
        rows.push_back(row);
    }
    return rows;
}

IntMat intmat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw invalid("matrix JSON must be a nonempty array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    IntMat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const Json& v = j.at(r).at(c);
            m(r, c) = v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long>());
        }
    return m;
}

Json strings_to_json(const StringDecomposition& s) {
    Json arr = Json::array();
    for (auto& chain : s) arr.push_back(chain);
    return arr;
}

Json shape_to_json(const CentralizerShape& s) {
    Json j;
    j["torusRank"] = s.torusRank;
    Json tor = Json::array();
    for (auto& m : s.torsion) tor.push_back(m.get_si());
    j["torsion"] = tor;
    return j;
}

Json report_row_to_json(const ReportRow& r) {
    Json j;
    j["triple"] = triple_to_json(r.triple);
    j["strings"] = strings_to_json(r.strs);
    j["torusRank"] = r.shape.torusRank;
    Json tor = Json::array();
    for (auto& m : r.shape.torsion) tor.push_back(m.get_si());
    j["torsion"] = tor;
    return j;
}

Json coset2_to_json(const CosetForm2& f) {
    Json j;
    j["i"] = f.i;
    return j;
}

Json coset3_to_json(const CosetForm3& f) {
    Json j;
    j["i"] = f.i;
    j["j"] = f.j;
    j["q"] = f.q.str();
    return j;
}

CosetForm3 coset3_from_json(const Json& j) {
    CosetForm3 f;
    f.i = j.at("i").get<int>();
    f.j = j.at("j").get<int>();
    if (j.contains("q")) f.q = laurent_from_json(j.at("q"));
    return f;
}

Json twistcheck_to_json(const TwistCheck& c) {
    Json j;
    j["discreteOk"] = c.discreteOk;
    j["continuousDim"] = c.continuousDim;
    if (c.witness) {
        Json w;
        w["u"] = qmat_to_json(c.witness->u);
        w["v"] = qmat_to_json(c.witness->v);
        j["witness"] = w;
    }
    return j;
}

Json tensor2_to_json(const Tensor2& r) {
    Json arr = Json::array();
    for (int a = 0; a < r.dim; ++a)
        for (int b = 0; b < r.dim; ++b) {
            if (r(a, b) == 0) continue;
            arr.push_back(Json::array({a, b, rat_str(r(a, b))}));
        }
    return arr;
}

Tensor2 tensor2_from_json(const Json& j, int dim) {
    Tensor2 r(dim);
    for (auto& e : j) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a < 0 || a >= dim || b < 0 || b >= dim) throw invalid("tensor index out of range");
        r(a, b) = rat_parse(e.at(2).get<std::string>());
    }
    return r;
}

IndexForm form_from_string(const std::string& csv) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw invalid("--form expects four comma-separated entries");
    auto parse_or_zero = [](const std::string& s) {
        if (s == "0") return Laurent();
        return laurent_parse(s);
    };
    return IndexForm(parse_or_zero(parts[0]), parse_or_zero(parts[1]), parse_or_zero(parts[2]),
                     parse_or_zero(parts[3]));
}

CosetForm3 coset3_from_string(const std::string& s) {
    auto first = s.find(',');
    auto second = s.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw invalid("coset form expects \"i,j,q\"");
    CosetForm3 f;
    try {
        f.i = std::stoi(s.substr(0, first));
        f.j = std::stoi(s.substr(first + 1, second - first - 1));
    } catch (const std::exception&) {
        throw invalid("bad coset indices in: " + s);
    }
    std::string qs = s.substr(second + 1);
    if (qs != "0" && !qs.empty()) f.q = laurent_parse(qs);
    return f;
}

} // namespace bdq
