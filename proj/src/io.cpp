#include "actinfo/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace actinfo {

using nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_ext_real(ExtReal v) {
    switch (v.kind()) {
        case ExtReal::Kind::PosInf: return "+inf";
        case ExtReal::Kind::NegInf: return "-inf";
        case ExtReal::Kind::Undefined: return "undefined";
        default: return format_double(v.value());
    }
}

ordered_json ext_real_json(ExtReal v) {
    if (v.is_finite()) return v.value();
    return format_ext_real(v);
}

namespace {

nlohmann::json parse_file(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw IoError(std::string(what) + " file not readable: " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string(what) + " file " + path.string() + ": " + e.what());
    }
}

const nlohmann::json& require_field(const nlohmann::json& doc, const char* field,
                                    const char* what) {
    if (!doc.is_object())
        throw ParseError(std::string(what) + ": top-level value must be an object");
    auto it = doc.find(field);
    if (it == doc.end())
        throw ParseError(std::string(what) + ": missing required field \"" + field + "\"");
    return *it;
}

double number_at(const nlohmann::json& node, const std::string& where) {
    if (!node.is_number()) throw ParseError("field \"" + where + "\" must be a number");
    return node.get<double>();
}

std::size_t index_at(const nlohmann::json& node, const std::string& where) {
    if (!node.is_number_unsigned())
        throw ParseError("field \"" + where + "\" must be a nonnegative integer");
    return node.get<std::size_t>();
}

}  // namespace

FiniteDistribution load_distribution(const std::filesystem::path& path) {
    const auto doc = parse_file(path, "distribution");
    const auto& jlabels = require_field(doc, "labels", "distribution file");
    const auto& jprobs = require_field(doc, "probs", "distribution file");
    if (!jlabels.is_array()) throw ParseError("field \"labels\" must be an array");
    if (!jprobs.is_array()) throw ParseError("field \"probs\" must be an array");

    std::vector<std::string> labels;
    labels.reserve(jlabels.size());
    for (std::size_t i = 0; i < jlabels.size(); ++i) {
        const auto& item = jlabels[i];
        if (item.is_string())
            labels.push_back(item.get<std::string>());
        else if (item.is_number_integer())
            labels.push_back(std::to_string(item.get<long long>()));
        else
            throw ParseError("field \"labels[" + std::to_string(i) +
                             "]\" must be a string or an integer");
    }

    std::vector<double> probs;
    probs.reserve(jprobs.size());
    for (std::size_t i = 0; i < jprobs.size(); ++i)
        probs.push_back(number_at(jprobs[i], "probs[" + std::to_string(i) + "]"));

    return FiniteDistribution(std::move(labels), std::move(probs));
}

Event load_event(const std::filesystem::path& path, std::size_t space_size) {
    const auto doc = parse_file(path, "event");
    const auto& jindices = require_field(doc, "indices", "event file");
    if (!jindices.is_array()) throw ParseError("field \"indices\" must be an array");
    std::vector<std::size_t> indices;
    indices.reserve(jindices.size());
    for (std::size_t i = 0; i < jindices.size(); ++i)
        indices.push_back(index_at(jindices[i], "indices[" + std::to_string(i) + "]"));
    return Event(std::move(indices), space_size);
}

RegularGraph load_graph(const std::filesystem::path& path) {
    const auto doc = parse_file(path, "graph");
    const std::size_t n = index_at(require_field(doc, "n", "graph file"), "n");
    const auto& jedges = require_field(doc, "edges", "graph file");
    if (!jedges.is_array()) throw ParseError("field \"edges\" must be an array");

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(jedges.size());
    for (std::size_t i = 0; i < jedges.size(); ++i) {
        const auto& pair = jedges[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("field \"" + where + "\" must be a two-element array");
        edges.emplace_back(index_at(pair[0], where + "[0]"), index_at(pair[1], where + "[1]"));
    }
    return RegularGraph(n, edges);
}

ParamFamily load_family(const std::filesystem::path& path) {
    const auto doc = parse_file(path, "family");
    const auto& jkind = require_field(doc, "kind", "family file");
    if (!jkind.is_string()) throw ParseError("field \"kind\" must be a string");
    const std::string kind_name = jkind.get<std::string>();
    FamilyKind kind;
    if (kind_name == "truncated_normal")
        kind = FamilyKind::TruncatedNormal;
    else if (kind_name == "uniform_window")
        kind = FamilyKind::UniformWindow;
    else
        throw ParseError(
            "field \"kind\" must be \"truncated_normal\" or \"uniform_window\", got \"" +
            kind_name + "\"");

    const auto& jdomain = require_field(doc, "domain", "family file");
    if (!jdomain.is_array() || jdomain.size() != 2)
        throw ParseError("field \"domain\" must be a two-element array [0, L]");
    if (number_at(jdomain[0], "domain[0]") != 0.0)
        throw ParseError("field \"domain[0]\" must be 0");
    const double length = number_at(jdomain[1], "domain[1]");

    const double h = number_at(require_field(doc, "h", "family file"), "h");

    const auto& jgrid = require_field(doc, "grid", "family file");
    if (!jgrid.is_array()) throw ParseError("field \"grid\" must be an array");
    std::vector<ParamTuple> grid;
    grid.reserve(jgrid.size());
    for (std::size_t i = 0; i < jgrid.size(); ++i) {
        const auto& tup = jgrid[i];
        const std::string where = "grid[" + std::to_string(i) + "]";
        if (!tup.is_array() || tup.size() != 2)
            throw ParseError("field \"" + where + "\" must be a two-element array");
        grid.push_back({number_at(tup[0], where + "[0]"), number_at(tup[1], where + "[1]")});
    }
    return ParamFamily(kind, length, h, std::move(grid));
}

ordered_json measure_report_json(const MeasureReport& report) {
    ordered_json out;
    out["endogenous_info"] = ext_real_json(report.endogenous_info);
    out["exogenous_info"] = ext_real_json(report.exogenous_info);
    out["active_info"] = ext_real_json(report.active_info);
    out["total_info_1"] = ext_real_json(report.total_info_1);
    out["total_info_2"] = ext_real_json(report.total_info_2);
    out["entropy_1"] = report.entropy_1;
    out["entropy_2"] = report.entropy_2;
    out["cai_full"] = ext_real_json(report.cai_full);
    out["cai_coarsened"] = ext_real_json(report.cai_coarsened);
    out["kl_12"] = ext_real_json(report.kl_12);
    out["kl_21"] = ext_real_json(report.kl_21);
    out["tv"] = report.tv;
    out["pinsker_bound"] = ext_real_json(report.pinsker_bound);
    out["base"] = report.base.base();
    return out;
}

ordered_json regime_report_json(const RegimeReport& report) {
    ordered_json out;
    out["p"] = report.p;
    out["q"] = report.q;
    out["regime"] = to_string(report.regime);
    out["active_info"] = ext_real_json(report.active_info);
    out["cai_coarsened"] = ext_real_json(report.cai_coarsened);
    out["interpretation"] = report.interpretation;
    return out;
}

ordered_json tuning_result_json(const TuningResult& result) {
    ordered_json out;
    out["xi_star"] = {result.xi_star[0], result.xi_star[1]};
    out["p_max"] = result.p_max;
    out["delta"] = result.delta;
    out["fine_tuned"] = result.fine_tuned;
    out["active_info"] = ext_real_json(result.active_info);
    return out;
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& rows) {
    out << "p,value\n";
    for (const auto& row : rows)
        out << format_double(row.p) << ',' << format_double(row.value) << '\n';
}

void write_surface_csv(std::ostream& out, const std::vector<SurfacePoint>& rows) {
    out << "p,q,value\n";
    for (const auto& row : rows)
        out << format_double(row.p) << ',' << format_double(row.q) << ','
            << format_double(row.value) << '\n';
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& rows) {
    out << "t,q_t,active_info,cai_coarsened,regime\n";
    for (const auto& row : rows) {
        out << row.t << ',' << format_double(row.q_t) << ',' << format_ext_real(row.active_info)
            << ',' << format_ext_real(row.cai_coarsened) << ',';
        if (row.regime) out << to_string(*row.regime);
        out << '\n';
    }
}

}  // namespace actinfo
