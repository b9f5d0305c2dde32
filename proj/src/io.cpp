#include "spcone/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace spcone {

namespace {

Vector vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a numeric array");
    Vector v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
    return v;
}

Json vector_to_json(const Vector& v) {
    Json j = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
    return j;
}

}  // namespace

Json family_to_json(const FunctionFamily& f) {
    Json j;
    j["kind"] = to_string(f.kind());
    if (f.kind() == FamilyKind::Power) {
        j["p"] = f.exponent();
    } else {
        j["p"] = nullptr;
    }
    return j;
}

FunctionFamily family_from_json(const Json& j) {
    if (!j.contains("kind")) throw ParseError("family record is missing 'kind'");
    const FamilyKind kind = family_kind_from_string(j.at("kind").get<std::string>());
    std::optional<double> p;
    if (j.contains("p") && !j.at("p").is_null()) p = j.at("p").get<double>();
    return FunctionFamily::make(kind, p);
}

Json point_to_json(const ConePoint& pt) {
    Json j;
    j["u"] = pt.u;
    j["v"] = pt.v;
    j["W_packed"] = vector_to_json(pt.w.packed());
    return j;
}

ConePoint point_from_json(const Json& j) {
    for (const char* field : {"u", "v", "W_packed"}) {
        if (!j.contains(field)) throw ParseError(std::string("point record is missing '") + field + "'");
    }
    return {j.at("u").get<double>(), j.at("v").get<double>(),
            SymMatrix::from_packed(vector_from_json(j.at("W_packed")))};
}

Json problem_to_json(const ConicProblem& problem) {
    Json j;
    j["family"] = family_to_json(problem.family);
    j["d"] = problem.side;
    j["c"] = vector_to_json(problem.c);
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < problem.a.rows(); ++i) {
        rows.push_back(vector_to_json(problem.a.row(i)));
    }
    j["A"] = rows;
    j["b"] = vector_to_json(problem.b);
    j["x0"] = point_to_json(problem.x0);
    return j;
}

ConicProblem problem_from_json(const Json& j) {
    for (const char* field : {"family", "d", "c", "A", "b", "x0"}) {
        if (!j.contains(field)) throw ParseError(std::string("problem record is missing '") + field + "'");
    }
    ConicProblem problem;
    problem.family = family_from_json(j.at("family"));
    problem.side = j.at("d").get<int>();
    problem.c = vector_from_json(j.at("c"));
    const Json& rows = j.at("A");
    if (!rows.is_array() || rows.empty()) throw ParseError("'A' must be a non-empty array of rows");
    problem.a.resize(static_cast<Eigen::Index>(rows.size()), problem.c.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        const Vector row = vector_from_json(rows[i]);
        if (row.size() != problem.c.size()) throw ParseError("row " + std::to_string(i) + " of 'A' has wrong length");
        problem.a.row(static_cast<Eigen::Index>(i)) = row;
    }
    problem.b = vector_from_json(j.at("b"));
    problem.x0 = point_from_json(j.at("x0"));
    return problem;
}

Json result_to_json(const SolveResult& result) {
    Json j;
    j["status"] = to_string(result.status);
    j["x"] = vector_to_json(result.x);
    j["objective"] = result.objective;
    j["t_final"] = result.t_final;
    j["iterations"] = result.iterations;
    j["residual_history"] = result.residual_history;
    if (!result.message.empty()) j["message"] = result.message;
    return j;
}

namespace {

Json witness_to_json(const Witness& w) {
    Json j;
    j["trial"] = w.trial;
    j["seed"] = w.seed;
    if (w.point.size() > 0) j["point"] = vector_to_json(w.point);
    if (w.direction.size() > 0) j["direction"] = vector_to_json(w.direction);
    if (std::isfinite(w.theta)) j["theta"] = w.theta;
    return j;
}

}  // namespace

Json report_to_json(const TrialReport& report) {
    Json j;
    j["family"] = family_to_json(report.config.family);
    j["d"] = report.config.side;
    j["trials"] = report.config.trials;
    j["seed"] = report.config.seed;
    j["all_passed"] = report.all_passed();
    j["control_detected"] = report.control_detected();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["trials"] = c.trials;
        cj["passes"] = c.passes;
        cj["worst_margin"] = c.worst_margin;
        cj["is_control"] = c.is_control;
        cj["witness"] = witness_to_json(c.witness);
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

void write_json_file(const std::string& path, const Json& j, bool pretty) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

}  // namespace spcone
