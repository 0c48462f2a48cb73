#include "cuspidal/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "cuspidal/branch.hpp"
#include "cuspidal/curve.hpp"
#include "cuspidal/invariants.hpp"
#include "cuspidal/serialize.hpp"
#include "cuspidal/topology.hpp"

namespace cuspidal {

namespace {

int max_precision_cap() {
    if (const char* env = std::getenv("CUSPIDAL_MAX_PRECISION")) {
        const int value = std::atoi(env);
        if (value >= 4) return value;
    }
    return 16384;
}

void emit(const std::string& text, const std::string& output_file, std::ostream& out) {
    if (output_file.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream file(output_file);
    if (!file) throw DomainError("cannot open output file '" + output_file + "'");
    file << text;
}

void check_format(const std::string& format, const std::vector<std::string>& allowed) {
    for (const auto& ok : allowed)
        if (format == ok) return;
    throw UnsupportedFormat("format '" + format + "' not supported for this command");
}

FamilyParams params_from_flags(int d, int a, int b_flag) {
    FamilyParams params(d, a);
    if (b_flag >= 0 && b_flag != params.b)
        throw DomainError("inconsistent --b: expected " + std::to_string(params.b));
    return params;
}

std::string curve_output(const CuspidalCurve& curve, const std::string& format) {
    if (format == "json") return to_json(curve).dump(2);
    if (format == "latex") return render_curve_latex(curve);
    return render_curve_text(curve);
}

struct SweepLine {
    std::string text;
    bool failed;
};

SweepLine sweep_one(const FamilyParams& params) {
    std::ostringstream os;
    try {
        const CuspidalCurve curve = certify(params);
        const CurveSingularityData data(
            params.d, {curve.cusps[0].sequence, curve.cusps[1].sequence,
                       curve.cusps[2].sequence});
        const ChiReport chi = chi_theta(data);
        os << "d=" << params.d << " a=" << params.a << " b=" << params.b << "  cusps";
        for (const auto& cusp : curve.cusps) os << " " << compact_notation(cusp.sequence);
        os << "  chi=" << chi.chi << "  certified=ok";
        return SweepLine{os.str(), false};
    } catch (const CertificationFailed& e) {
        os << "d=" << params.d << " a=" << params.a << " b=" << params.b
           << "  FAILED: " << e.what();
        return SweepLine{os.str(), true};
    }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact construction and certification of three-cusp rational plane curves"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output_file;
    int d = 0;
    int a = 0;
    int b_flag = -1;

    auto add_common = [&](CLI::App* cmd, bool with_params) {
        cmd->add_option("--format", format, "output format")->capture_default_str();
        cmd->add_option("--output", output_file, "write the output to a file");
        if (with_params) {
            cmd->add_option("--d", d, "curve degree")->required();
            cmd->add_option("--a", a, "larger cusp parameter")->required();
            cmd->add_option("--b", b_flag, "optional consistency check for b = d - 2 - a");
        }
    };

    auto* cmd_construct = app.add_subcommand("construct", "build a curve record");
    add_common(cmd_construct, true);

    auto* cmd_certify = app.add_subcommand("certify", "build and fully certify a curve");
    add_common(cmd_certify, true);

    auto* cmd_classify =
        app.add_subcommand("classify", "list the curves of one degree");
    cmd_classify->add_option("--d", d, "curve degree")->required();
    cmd_classify->add_option("--format", format, "output format")->capture_default_str();
    cmd_classify->add_option("--output", output_file, "write the output to a file");

    auto* cmd_invariants =
        app.add_subcommand("invariants", "invariant report from degree and cusp list");
    std::vector<std::string> cusp_specs;
    cmd_invariants->add_option("--d", d, "curve degree")->required();
    cmd_invariants->add_option("--cusp", cusp_specs, "cusp in compact notation (repeatable)")
        ->required();
    cmd_invariants->add_option("--format", format, "output format")->capture_default_str();
    cmd_invariants->add_option("--output", output_file, "write the output to a file");

    auto* cmd_seq = app.add_subcommand("seq", "multiplicity sequence utilities");
    std::string seq_action;
    std::string seq_spec;
    cmd_seq->add_option("action", seq_action, "validate | invariants | contacts")->required();
    cmd_seq->add_option("sequence", seq_spec, "compact notation or comma list")->required();
    cmd_seq->add_option("--format", format, "output format")->capture_default_str();
    cmd_seq->add_option("--output", output_file, "write the output to a file");

    auto* cmd_branch = app.add_subcommand("branch", "resolve a parametrized germ");
    std::string expr_x;
    std::string expr_y;
    int precision = 32;
    cmd_branch->add_option("--x", expr_x, "x(t) expression")->required();
    cmd_branch->add_option("--y", expr_y, "y(t) expression")->required();
    cmd_branch->add_option("--precision", precision, "initial series precision")
        ->capture_default_str();
    cmd_branch->add_option("--format", format, "output format")->capture_default_str();
    cmd_branch->add_option("--output", output_file, "write the output to a file");

    auto* cmd_graph = app.add_subcommand("graph", "dual resolution graph");
    std::string graph_cusp;
    cmd_graph->add_option("--cusp", graph_cusp, "cusp in compact notation");
    cmd_graph->add_option("--d", d, "curve degree (with --a: whole-curve graph)");
    cmd_graph->add_option("--a", a, "larger cusp parameter");
    cmd_graph->add_option("--format", format, "output format")->capture_default_str();
    cmd_graph->add_option("--output", output_file, "write the output to a file");

    auto* cmd_pi1 = app.add_subcommand("pi1", "fundamental group presentation");
    cmd_pi1->add_option("--d", d, "curve degree")->required();
    cmd_pi1->add_option("--a", a, "larger cusp parameter")->required();
    cmd_pi1->add_option("--format", format, "output format")->capture_default_str();
    cmd_pi1->add_option("--output", output_file, "write the output to a file");

    auto* cmd_sweep = app.add_subcommand("sweep", "certify every curve in a degree range");
    int d_min = 4;
    int d_max = 12;
    cmd_sweep->add_option("--d-min", d_min, "smallest degree")->capture_default_str();
    cmd_sweep->add_option("--d-max", d_max, "largest degree")->capture_default_str();
    cmd_sweep->add_option("--output", output_file, "write the output to a file");

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("cuspidal");
    for (const auto& s : argv_storage) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream captured;
        const int code = app.exit(e, captured, captured);
        (code == 0 ? out : err) << captured.str();
        return code == 0 ? 0 : 1;
    }

    if (cmd_construct->parsed() || cmd_certify->parsed()) {
        check_format(format, {"text", "json", "latex"});
        const FamilyParams params = params_from_flags(d, a, b_flag);
        const CuspidalCurve curve =
            cmd_certify->parsed() ? certify(params) : construct_curve(params);
        emit(curve_output(curve, format), output_file, out);
        return 0;
    }

    if (cmd_classify->parsed()) {
        check_format(format, {"text", "json"});
        const std::vector<FamilyParams> all = enumerate_degree(d);
        if (format == "json") {
            Json arr = Json::array();
            for (const auto& params : all) {
                Json item;
                item["d"] = params.d;
                item["a"] = params.a;
                item["b"] = params.b;
                Json cusps = Json::array();
                cusps.push_back("(" + std::to_string(params.d - 2) + ")");
                cusps.push_back("(2_" + std::to_string(params.a) + ")");
                cusps.push_back("(2_" + std::to_string(params.b) + ")");
                item["cusps"] = cusps;
                arr.push_back(item);
            }
            emit(arr.dump(2), output_file, out);
        } else {
            std::ostringstream os;
            os << "degree " << d << ": " << all.size() << " curve(s)\n";
            for (const auto& params : all)
                os << "  a=" << params.a << " b=" << params.b << "  cusps ("
                   << params.d - 2 << "), (2_" << params.a << "), (2_" << params.b << ")\n";
            emit(os.str(), output_file, out);
        }
        return 0;
    }

    if (cmd_invariants->parsed()) {
        check_format(format, {"text", "json"});
        std::vector<MultiplicitySequence> cusps;
        for (const auto& spec : cusp_specs) cusps.push_back(canonicalize(spec));
        const CurveSingularityData data(d, std::move(cusps));
        const InvariantReport report = full_report(data);
        emit(format == "json" ? to_json(report).dump(2) : render_report_text(report),
             output_file, out);
        return 0;
    }

    if (cmd_seq->parsed()) {
        check_format(format, {"text", "json"});
        if (seq_action == "validate") {
            // Raw lists are validated as given; compact notation expands
            // first and then validates trivially.
            std::vector<int> raw;
            bool is_raw = !seq_spec.empty() && seq_spec.front() != '(';
            if (is_raw) {
                std::stringstream ss{seq_spec};
                std::string item;
                while (std::getline(ss, item, ',')) {
                    try {
                        raw.push_back(std::stoi(item));
                    } catch (const std::exception&) {
                        throw InvalidNotation("expected integer in sequence list");
                    }
                }
                const ValidationReport report = validate_sequence(raw);
                if (format == "json")
                    emit(to_json(report).dump(2), output_file, out);
                else if (report.ok)
                    emit("ok", output_file, out);
                else {
                    std::ostringstream os;
                    for (const auto& v : report.violations) os << v << "\n";
                    emit(os.str(), output_file, out);
                }
                return report.ok ? 0 : 1;
            }
            const MultiplicitySequence seq = canonicalize(seq_spec);
            emit(format == "json" ? to_json(seq).dump(2)
                                  : "ok: " + render_sequence_text(seq),
                 output_file, out);
            return 0;
        }
        const MultiplicitySequence seq = canonicalize(seq_spec);
        if (seq_action == "invariants") {
            emit(format == "json"
                     ? to_json(seq).dump(2)
                     : render_sequence_text(seq) + "\n" +
                           [&] {
                               const SequenceInvariants inv = invariants_of(seq);
                               std::ostringstream os;
                               os << "mu=" << inv.milnor << " delta=" << inv.delta
                                  << " eta=" << inv.eta << " omega=" << inv.omega
                                  << " rho=" << inv.rho << " k=" << inv.k;
                               return os.str();
                           }(),
                 output_file, out);
            return 0;
        }
        if (seq_action == "contacts") {
            const std::set<int> orders = contact_orders(seq);
            if (format == "json") {
                Json j;
                j["sequence"] = to_json(seq);
                j["contact_orders"] = orders;
                emit(j.dump(2), output_file, out);
            } else {
                std::ostringstream os;
                os << render_sequence_text(seq) << "\ncontact orders: {";
                bool first = true;
                for (int k : orders) {
                    if (!first) os << ", ";
                    os << k;
                    first = false;
                }
                os << "}";
                emit(os.str(), output_file, out);
            }
            return 0;
        }
        throw DomainError("unknown seq action '" + seq_action + "'");
    }

    if (cmd_branch->parsed()) {
        check_format(format, {"text", "json"});
        if (precision < 4) throw DomainError("precision must be at least 4");
        const MultiplicitySequence seq = resolve_with_retry(
            [&](int n) { return parse_branch(expr_x, expr_y, n); }, precision,
            max_precision_cap());
        if (format == "json") {
            Json j;
            j["x"] = expr_x;
            j["y"] = expr_y;
            j["sequence"] = to_json(seq);
            emit(j.dump(2), output_file, out);
        } else {
            emit(render_sequence_text(seq), output_file, out);
        }
        return 0;
    }

    if (cmd_graph->parsed()) {
        check_format(format, {"text", "json", "dot"});
        DualGraph graph;
        if (!graph_cusp.empty()) {
            graph = cusp_dual_graph(canonicalize(graph_cusp));
        } else if (d > 0 && a > 0) {
            graph = curve_dual_graph(FamilyParams(d, a));
        } else {
            throw DomainError("graph needs either --cusp or both --d and --a");
        }
        if (format == "dot")
            emit(render_dot(graph), output_file, out);
        else if (format == "json")
            emit(to_json(graph).dump(2), output_file, out);
        else
            emit(render_graph_text(graph), output_file, out);
        return 0;
    }

    if (cmd_pi1->parsed()) {
        check_format(format, {"text", "json"});
        const GroupPresentation pres = pi1_presentation(FamilyParams(d, a));
        emit(format == "json" ? to_json(pres).dump(2) : render_presentation_text(pres),
             output_file, out);
        return 0;
    }

    if (cmd_sweep->parsed()) {
        if (d_min < 4 || d_max < d_min) throw DomainError("sweep needs 4 <= d-min <= d-max");
        std::vector<std::future<SweepLine>> futures;
        for (int degree = d_min; degree <= d_max; ++degree)
            for (const auto& params : enumerate_degree(degree))
                futures.push_back(
                    std::async(std::launch::async, [params] { return sweep_one(params); }));
        bool any_failed = false;
        std::ostringstream os;
        for (auto& future : futures) {
            const SweepLine line = future.get();
            os << line.text << "\n";
            any_failed = any_failed || line.failed;
        }
        emit(os.str(), output_file, out);
        return any_failed ? 2 : 0;
    }

    throw DomainError("no command given");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const PrecisionExhausted& e) {
        err << "error: " << e.what()
            << " (raise --precision or CUSPIDAL_MAX_PRECISION)\n";
        return 1;
    } catch (const CertificationFailed& e) {
        err << "certification failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace cuspidal
