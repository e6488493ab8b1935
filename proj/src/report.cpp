#include "bg/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "bg/errors.hpp"

namespace bg {

void InequalityReport::finalize() {
    double prod = 1.0;
    for (const auto& [label, value] : norms) {
        (void)label;
        prod *= value;
    }
    rhs = constant * prod;
    if (rhs > 0.0) {
        ratio = lhs / rhs;
    } else {
        ratio = lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    pass = ratio <= 1.0 + tolerance + mc_margin;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string field(double v) { return std::isnan(v) ? std::string() : format_double(v); }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string render_csv(const std::vector<InequalityReport>& reports) {
    std::ostringstream out;
    out << "name,n,p,q,r,alpha,lambda,kernel,lhs,constant,rhs,ratio,tolerance,mc_margin,pass,"
           "seed,quad_order\n";
    for (const auto& r : reports) {
        bool skipped = r.status == InequalityReport::Status::skipped;
        out << csv_escape(r.name) << ',' << r.n << ',' << field(r.p) << ',' << field(r.q) << ','
            << field(r.r) << ',' << field(r.alpha) << ',' << field(r.lambda) << ','
            << csv_escape(r.kernel) << ',';
        if (skipped) {
            out << ",,,,";
        } else {
            out << format_double(r.lhs) << ',' << format_double(r.constant) << ','
                << format_double(r.rhs) << ',' << format_double(r.ratio) << ',';
        }
        out << field(r.tolerance) << ',' << format_double(r.mc_margin) << ','
            << (skipped ? "skipped" : (r.pass ? "true" : "false")) << ',' << r.seed << ','
            << r.quad_order << '\n';
    }
    return out.str();
}

std::string render_json(const std::vector<InequalityReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json o;
        o["name"] = r.name;
        o["n"] = r.n;
        auto put = [&](const char* key, double v) {
            if (std::isnan(v))
                o[key] = nullptr;
            else if (std::isinf(v))
                o[key] = v > 0 ? "inf" : "-inf";
            else
                o[key] = v;
        };
        put("p", r.p);
        put("q", r.q);
        put("r", r.r);
        put("alpha", r.alpha);
        put("lambda", r.lambda);
        o["kernel"] = r.kernel;
        o["status"] = r.status == InequalityReport::Status::skipped ? "skipped" : "evaluated";
        if (r.status == InequalityReport::Status::skipped) {
            o["skip_reason"] = r.skip_reason;
        } else {
            o["lhs"] = r.lhs;
            o["constant"] = r.constant;
            nlohmann::ordered_json norms = nlohmann::ordered_json::array();
            for (const auto& [label, value] : r.norms) norms.push_back({{label, value}});
            o["norms"] = norms;
            o["rhs"] = r.rhs;
            o["ratio"] = r.ratio;
            o["pass"] = r.pass;
        }
        o["tolerance"] = r.tolerance;
        o["mc_margin"] = r.mc_margin;
        o["seed"] = r.seed;
        o["quad_order"] = r.quad_order;
        if (!r.provenance.empty()) o["provenance"] = r.provenance;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

void emit(const std::vector<InequalityReport>& reports, ReportFormat format,
          const std::string& destination) {
    std::string body = format == ReportFormat::csv ? render_csv(reports) : render_json(reports);
    if (destination == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + destination);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw ConfigError("write failed: " + destination);
}

}  // namespace bg
