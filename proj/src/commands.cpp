#include "supersplit/commands.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace supersplit::cli {

using nlohmann::ordered_json;

int max_odd_variable_cap() {
    if (const char* env = std::getenv("SUPERSPLIT_MAX_N")) {
        try {
            int v = std::stoi(env);
            if (v >= 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 12;
}

namespace {

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

ordered_json report_header(const std::string& command, const std::string& input) {
    ordered_json j;
    j["tool"] = "supersplit";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input_digest"] = fnv1a_digest(input);
    return j;
}

ordered_json polys_json(const std::vector<algebra::SuperPolynomial>& ps) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : ps) arr.push_back(p.to_string());
    return arr;
}

ordered_json automorphism_json(const derivations::SuperAutomorphism& a) {
    ordered_json j;
    ordered_json xs = ordered_json::array();
    for (int i = 0; i < a.ring.even_count; ++i)
        xs.push_back(a.ring.x_name(i) + " -> " + a.x_images[i].to_string());
    ordered_json ts = ordered_json::array();
    for (int idx = 1; idx <= a.ring.odd_count; ++idx)
        ts.push_back(a.ring.theta_name(idx) + " -> " + a.theta_images[idx - 1].to_string());
    j["x_images"] = xs;
    j["theta_images"] = ts;
    return j;
}

ordered_json obstruction_json(const cohomology::ObstructionReport& rep) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : rep.rows) {
        ordered_json row;
        row["k"] = r.k;
        row["parity"] = r.k_even ? "even" : "odd";
        row["hom_nu"] = r.hom_nu.to_string();
        row["hom_nu_h0"] = r.hom_nu_h0();
        row["hom_nu_h1"] = r.hom_nu_h1();
        row["middle"] = r.middle.to_string();
        row["middle_h0"] = r.middle_h0();
        row["middle_h1"] = r.middle_h1();
        row["q"] = r.q.to_string();
        row["q_h0"] = r.q_h0();
        row["q_h1"] = r.q_h1();
        row["delta"] = cohomology::to_string(r.delta);
        rows.push_back(row);
    }
    ordered_json j;
    j["d"] = rep.d;
    j["rows"] = rows;
    return j;
}

ordered_json lift_log_json(const std::vector<ideals::LiftStep>& log) {
    ordered_json arr = ordered_json::array();
    for (const auto& step : log) {
        ordered_json s;
        s["m"] = step.m;
        s["lifted"] = step.lifted;
        s["unknowns"] = step.unknown_count;
        ordered_json residue = ordered_json::array();
        for (const auto& r : step.residue)
            if (!r.is_zero()) residue.push_back(r.to_string());
        s["residue"] = residue;
        s["note"] = step.note;
        arr.push_back(s);
    }
    return arr;
}

ordered_json verdict_json(const ideals::Verdict& v) {
    ordered_json j;
    j["verdict"] = ideals::to_string(v.kind);
    j["evidence_kind"] = ideals::to_string(v.evidence);
    j["detail"] = v.detail;
    if (v.residue) {
        ordered_json r;
        r["degree"] = v.residue->degree;
        r["residue"] = polys_json(v.residue->residue);
        r["removable_globally"] = v.residue->removable_globally;
        j["residue"] = r;
    }
    if (v.certificate) {
        ordered_json c;
        c["automorphism"] = automorphism_json(v.certificate->automorphism);
        c["unit_multipliers"] = polys_json(v.certificate->unit_multipliers);
        c["normalized_generators"] = polys_json(v.certificate->normalized_generators);
        j["certificate"] = c;
    }
    j["lift_log"] = lift_log_json(v.lift_log);
    if (v.obstructions) j["cohomology"] = obstruction_json(*v.obstructions);
    return j;
}

std::string verdict_text(const ideals::Verdict& v) {
    std::ostringstream os;
    os << "verdict: " << ideals::to_string(v.kind) << "\n";
    os << "evidence: " << ideals::to_string(v.evidence) << "\n";
    os << "detail: " << v.detail << "\n";
    for (const auto& step : v.lift_log) {
        os << "lift m=" << step.m << ": " << (step.lifted ? "lifted" : "blocked") << " ("
           << step.unknown_count << " unknowns";
        if (!step.note.empty()) os << "; " << step.note;
        os << ")\n";
    }
    if (v.residue) {
        os << "residue (degree " << v.residue->degree << "):";
        for (const auto& r : v.residue->residue) os << " " << r.to_string();
        os << "\n";
    }
    if (v.certificate) {
        const auto& cert = *v.certificate;
        os << "certificate:\n";
        for (int i = 0; i < cert.automorphism.ring.even_count; ++i)
            os << "  " << cert.automorphism.ring.x_name(i) << " -> "
               << cert.automorphism.x_images[i].to_string() << "\n";
        for (int a = 1; a <= cert.automorphism.ring.odd_count; ++a)
            os << "  " << cert.automorphism.ring.theta_name(a) << " -> "
               << cert.automorphism.theta_images[a - 1].to_string() << "\n";
        os << "  normalized:";
        for (const auto& g : cert.normalized_generators) os << " " << g.to_string();
        os << "\n";
    }
    if (v.obstructions) os << v.obstructions->to_text();
    return os.str();
}

std::string span_text(ideals::SpanStatus s) {
    switch (s) {
        case ideals::SpanStatus::NotApplicable: return "not-applicable";
        case ideals::SpanStatus::InSpan: return "in-span";
        case ideals::SpanStatus::NotInSpan: return "not-in-span";
        case ideals::SpanStatus::NotChecked: return "not-checked";
    }
    return "?";
}

CommandResult error_result(const std::string& command, const std::string& message) {
    CommandResult res;
    res.exit_code = 2;
    res.text = "error: " + message + "\n";
    res.json = report_header(command, "");
    res.json["error"] = message;
    return res;
}

}  // namespace

CommandResult cmd_analyze(const std::string& file_contents, const std::string& input_name) {
    CommandResult res;
    res.json = report_header("analyze " + input_name, file_contents);
    IdealFileData data;
    try {
        data = parse_ideal_file(file_contents, max_odd_variable_cap());
    } catch (const ParseError& e) {
        return error_result("analyze " + input_name, e.what());
    }
    ideals::ValidationReport report = ideals::validate(data.ideal);
    ideals::ReducedData reduced = ideals::reduce_mod_j2(data.ideal);
    auto m = ideals::max_splitting_degree(data.ideal);

    ordered_json gens = ordered_json::array();
    for (std::size_t i = 0; i < data.ideal.generators.size(); ++i) {
        ordered_json g;
        g["generator"] = data.ideal.generators[i].to_string();
        const auto& v = report.per_generator[i];
        g["scaling_degree"] =
            v.scaling_degree ? ordered_json(*v.scaling_degree) : ordered_json("non-homogeneous");
        g["parity_homogeneous"] = v.parity_homogeneous;
        gens.push_back(g);
    }
    res.json["generators"] = gens;
    res.json["common_degree"] =
        report.common_degree ? ordered_json(*report.common_degree) : ordered_json(nullptr);
    res.json["matches_declared_degree"] = report.matches_declared_degree;
    res.json["even_embedding"] = report.even_embedding;
    res.json["odd_kernel_nonzero"] = report.odd_kernel_nonzero;
    res.json["odd_span"] = span_text(report.odd_span);
    res.json["base_generators"] = polys_json(reduced.base_generators);
    ordered_json rows = ordered_json::array();
    for (const auto& row : reduced.odd_kernel_rows) {
        ordered_json r = ordered_json::array();
        for (const auto& entry : row) r.push_back(entry.to_string());
        rows.push_back(r);
    }
    res.json["odd_kernel_rows"] = rows;
    res.json["max_splitting_degree"] = m ? ordered_json(*m) : ordered_json("infinity");

    std::ostringstream os;
    os << "analyze " << input_name << "\n";
    for (std::size_t i = 0; i < data.ideal.generators.size(); ++i) {
        const auto& v = report.per_generator[i];
        os << "  generator: " << data.ideal.generators[i].to_string() << "  [degree ";
        if (v.scaling_degree)
            os << *v.scaling_degree;
        else
            os << "non-homogeneous";
        os << ", " << (v.parity_homogeneous ? "parity-homogeneous" : "parity-mixed") << "]\n";
    }
    os << "  even embedding: " << (report.even_embedding ? "yes" : "no") << "\n";
    os << "  max splitting degree: ";
    if (m)
        os << *m << "\n";
    else
        os << "infinity\n";
    res.text = os.str();
    return res;
}

CommandResult cmd_normalize(const std::string& file_contents, const std::string& input_name) {
    CommandResult res;
    res.json = report_header("normalize " + input_name, file_contents);
    IdealFileData data;
    try {
        data = parse_ideal_file(file_contents, max_odd_variable_cap());
    } catch (const ParseError& e) {
        return error_result("normalize " + input_name, e.what());
    }
    ideals::NormalizeOutcome outcome;
    try {
        outcome = ideals::normalize(data.ideal);
    } catch (const std::exception& e) {
        return error_result("normalize " + input_name, e.what());
    }
    res.json["normalized"] = outcome.reached_split_form();
    res.json["final_generators"] = polys_json(outcome.final_system.generators);
    res.json["automorphism"] = automorphism_json(outcome.total_automorphism);
    res.json["unit_multipliers"] = polys_json(outcome.total_units);
    res.json["lift_log"] = lift_log_json(outcome.log);
    if (outcome.blocked) {
        ordered_json r;
        r["degree"] = outcome.blocked->degree;
        r["residue"] = polys_json(outcome.blocked->residue);
        res.json["residue"] = r;
    }

    std::ostringstream os;
    os << "normalize " << input_name << "\n";
    os << "  outcome: " << (outcome.reached_split_form() ? "split normal form" : "blocked")
       << "\n";
    os << "  final generators:";
    for (const auto& g : outcome.final_system.generators) os << " " << g.to_string();
    os << "\n";
    for (int i = 0; i < outcome.total_automorphism.ring.even_count; ++i)
        os << "  " << outcome.total_automorphism.ring.x_name(i) << " -> "
           << outcome.total_automorphism.x_images[i].to_string() << "\n";
    for (int a = 1; a <= outcome.total_automorphism.ring.odd_count; ++a)
        os << "  " << outcome.total_automorphism.ring.theta_name(a) << " -> "
           << outcome.total_automorphism.theta_images[a - 1].to_string() << "\n";
    if (outcome.blocked) {
        os << "  residue at degree " << outcome.blocked->degree << ":";
        for (const auto& r : outcome.blocked->residue) os << " " << r.to_string();
        os << "\n";
    }
    res.text = os.str();
    return res;
}

CommandResult cmd_decide_file(const std::string& file_contents, const std::string& input_name) {
    CommandResult res;
    res.json = report_header("decide " + input_name, file_contents);
    IdealFileData data;
    try {
        data = parse_ideal_file(file_contents, max_odd_variable_cap());
    } catch (const ParseError& e) {
        return error_result("decide " + input_name, e.what());
    }
    ideals::Verdict verdict;
    try {
        verdict = ideals::decide_split(data.ideal);
    } catch (const std::exception& e) {
        return error_result("decide " + input_name, e.what());
    }
    res.json.update(verdict_json(verdict));
    res.text = "decide " + input_name + "\n" + verdict_text(verdict);
    return res;
}

CommandResult cmd_decide_family(int d, const Rational& lambda) {
    std::string echo = "decide --rnc " + std::to_string(d) + " --lambda " +
                       rational_to_string(lambda);
    CommandResult res;
    res.json = report_header(echo, echo);
    if (d < 1) return error_result(echo, "curve degree must be >= 1");
    if (d > 20) return error_result(echo, "curve degree above 20 is not supported");

    if (d == 2) {
        // The quadric family is principal, so the generator-level search runs
        // in full before the cohomology table is consulted.
        ideals::Verdict verdict =
            ideals::decide_split(ideals::quadric_family_ideal(lambda));
        res.json.update(verdict_json(verdict));
        res.text = echo + "\n" + verdict_text(verdict);
        return res;
    }

    cohomology::FamilyVerdict fam = cohomology::decide_family(d, lambda);
    res.json["verdict"] = fam.split ? "Split" : "NonSplit";
    res.json["evidence_kind"] = cohomology::to_string(fam.evidence);
    res.json["detail"] = fam.detail;
    if (fam.binding_k > 0) res.json["binding_k"] = fam.binding_k;
    std::ostringstream os;
    os << echo << "\nverdict: " << (fam.split ? "Split" : "NonSplit") << "\n"
       << "evidence: " << cohomology::to_string(fam.evidence) << "\n"
       << "detail: " << fam.detail << "\n";
    if (d >= 2) {
        cohomology::ObstructionReport rep = cohomology::obstruction_spaces(d);
        res.json["cohomology"] = obstruction_json(rep);
        os << rep.to_text();
    }
    res.text = os.str();
    return res;
}

CommandResult cmd_cohom(int d) {
    std::string echo = "cohom --rnc " + std::to_string(d);
    CommandResult res;
    res.json = report_header(echo, echo);
    if (d < 1) return error_result(echo, "curve degree must be >= 1");
    if (d > 20) return error_result(echo, "curve degree above 20 is not supported");
    cohomology::ObstructionReport rep = cohomology::obstruction_spaces(d);
    auto bound = cohomology::serre_twist_bound(d);
    res.json["cohomology"] = obstruction_json(rep);
    res.json["serre_twist_bound"] =
        bound ? ordered_json(*bound) : ordered_json("unbounded");
    std::ostringstream os;
    os << echo << "\n" << rep.to_text();
    os << "serre twist bound: ";
    if (bound)
        os << *bound << "\n";
    else
        os << "unbounded\n";
    res.text = os.str();
    return res;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"supersplit: splitting analysis for subvarieties of projective superspace"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit the machine-readable report");

    std::string file;
    int rnc = 0;
    std::string lambda_text = "1";

    auto* analyze = app.add_subcommand("analyze", "validate and grade an ideal file");
    analyze->add_option("file", file, "ideal file")->required();

    auto* decide = app.add_subcommand("decide", "decide splitness of a file or curve family");
    decide->add_option("file", file, "ideal file");
    decide->add_option("--rnc", rnc, "rational normal curve degree");
    decide->add_option("--lambda", lambda_text, "family parameter (default 1)");

    auto* normalize = app.add_subcommand("normalize", "run the degree-lifting loop");
    normalize->add_option("file", file, "ideal file")->required();

    auto* cohom = app.add_subcommand("cohom", "obstruction table for a curve family");
    cohom->add_option("--rnc", rnc, "rational normal curve degree")->required();

    for (auto* sub : {analyze, decide, normalize, cohom}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    auto read_file = [&](CommandResult& out) {
        std::ifstream in(file);
        if (!in) {
            out = error_result("read " + file, "cannot open '" + file + "'");
            return false;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        file = ss.str();
        return true;
    };

    CommandResult result;
    std::string input_name = file;
    if (analyze->parsed()) {
        if (read_file(result)) result = cmd_analyze(file, input_name);
    } else if (normalize->parsed()) {
        if (read_file(result)) result = cmd_normalize(file, input_name);
    } else if (decide->parsed()) {
        if (rnc > 0) {
            auto lambda = parse_rational(lambda_text);
            if (!lambda) {
                result = error_result("decide", "cannot parse --lambda '" + lambda_text + "'");
            } else {
                result = cmd_decide_family(rnc, *lambda);
            }
        } else if (!file.empty()) {
            if (read_file(result)) result = cmd_decide_file(file, input_name);
        } else {
            result = error_result("decide", "pass an ideal file or --rnc D");
        }
    } else if (cohom->parsed()) {
        result = cmd_cohom(rnc);
    }

    if (as_json)
        std::cout << result.json.dump(2) << "\n";
    else
        std::cout << result.text;
    return result.exit_code;
}

}  // namespace supersplit::cli
