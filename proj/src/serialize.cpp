#include "cuspidal/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace cuspidal {

Json to_json(const Rat& r) { return r.str(); }

namespace {
Rat rat_from_json(const Json& j) { return Rat::parse(j.get<std::string>()); }
}  // namespace

Json to_json(const UniPoly& p) {
    Json arr = Json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).str());
    return arr;
}

UniPoly unipoly_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_json(c));
    return UniPoly(std::move(coeffs));
}

Json to_json(const BiPoly& p) {
    Json arr = Json::array();
    for (const auto& [key, c] : p.terms()) {
        Json term;
        term["i"] = key.first;
        term["j"] = key.second;
        term["c"] = c.str();
        arr.push_back(term);
    }
    return arr;
}

BiPoly bipoly_from_json(const Json& j) {
    BiPoly p;
    for (const auto& term : j)
        p.add_term(rat_from_json(term.at("c")), term.at("i").get<int>(),
                   term.at("j").get<int>());
    return p;
}

Json to_json(const BinForm& f) {
    Json arr = Json::array();
    for (int i = 0; i <= f.degree(); ++i) arr.push_back(f.coeff(i).str());
    return arr;
}

BinForm binform_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_json(c));
    return BinForm(std::move(coeffs));
}

Json to_json(const SequenceInvariants& inv) {
    Json j;
    j["mu"] = inv.milnor;
    j["delta"] = inv.delta;
    j["eta"] = inv.eta;
    j["omega"] = inv.omega;
    j["rho"] = inv.rho;
    j["k"] = inv.k;
    return j;
}

Json to_json(const MultiplicitySequence& seq) {
    Json j;
    j["entries"] = seq.entries();
    const std::string compact = compact_notation(seq);
    if (compact.empty())
        j["compact"] = nullptr;
    else
        j["compact"] = compact;
    j["invariants"] = to_json(invariants_of(seq));
    return j;
}

MultiplicitySequence sequence_from_json(const Json& j) {
    return MultiplicitySequence(j.at("entries").get<std::vector<int>>());
}

Json to_json(const ValidationReport& report) {
    Json j;
    j["ok"] = report.ok;
    j["violations"] = report.violations;
    return j;
}

namespace {

Json to_json(const CuspRecord& cusp) {
    Json j;
    j["parameter"] = cusp.parameter;
    j["point"] = cusp.point;
    j["sequence"] = to_json(cusp.sequence);
    j["puiseux_pair"] = Json::array({cusp.puiseux_pair.first, cusp.puiseux_pair.second});
    return j;
}

CuspRecord cusp_from_json(const Json& j) {
    return CuspRecord{j.at("parameter").get<std::string>(), j.at("point").get<std::string>(),
                      sequence_from_json(j.at("sequence")),
                      {j.at("puiseux_pair").at(0).get<int>(),
                       j.at("puiseux_pair").at(1).get<int>()}};
}

Json flag_to_json(const std::optional<bool>& flag) {
    if (!flag.has_value()) return nullptr;
    return *flag;
}

std::optional<bool> flag_from_json(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<bool>();
}

}  // namespace

Json to_json(const CuspidalCurve& curve) {
    Json j;
    j["d"] = curve.params.d;
    j["a"] = curve.params.a;
    j["b"] = curve.params.b;
    j["f"] = to_json(curve.f);
    j["q_tilde"] = to_json(curve.q_tilde);
    j["P"] = to_json(curve.P);
    j["Q"] = to_json(curve.Q);
    j["R"] = to_json(curve.R);
    j["affine_equation"] = to_json(curve.affine_equation);
    Json cusps = Json::array();
    for (const auto& cusp : curve.cusps) cusps.push_back(to_json(cusp));
    j["cusps"] = cusps;
    Json certified;
    certified["divisibility"] = flag_to_json(curve.certified.divisibility);
    certified["pullback_vanishes"] = flag_to_json(curve.certified.pullback_vanishes);
    certified["cusp_types"] = flag_to_json(curve.certified.cusp_types);
    certified["genus_identity"] = flag_to_json(curve.certified.genus_identity);
    j["certified"] = certified;
    return j;
}

CuspidalCurve curve_from_json(const Json& j) {
    CuspidalCurve curve{FamilyParams(j.at("d").get<int>(), j.at("a").get<int>()),
                        unipoly_from_json(j.at("f")),
                        unipoly_from_json(j.at("q_tilde")),
                        binform_from_json(j.at("P")),
                        binform_from_json(j.at("Q")),
                        binform_from_json(j.at("R")),
                        bipoly_from_json(j.at("affine_equation")),
                        {},
                        CertificationFlags{}};
    if (curve.params.b != j.at("b").get<int>())
        throw DomainError("curve record with inconsistent b");
    for (const auto& cusp : j.at("cusps")) curve.cusps.push_back(cusp_from_json(cusp));
    const Json& certified = j.at("certified");
    curve.certified.divisibility = flag_from_json(certified.at("divisibility"));
    curve.certified.pullback_vanishes = flag_from_json(certified.at("pullback_vanishes"));
    curve.certified.cusp_types = flag_from_json(certified.at("cusp_types"));
    curve.certified.genus_identity = flag_from_json(certified.at("genus_identity"));
    return curve;
}

Json to_json(const InvariantReport& report) {
    Json j;
    j["d"] = report.d;
    j["chi"] = report.chi.chi;
    Json per_cusp = Json::array();
    for (const auto& c : report.chi.per_cusp) {
        Json item;
        item["eta"] = c.eta;
        item["omega"] = c.omega;
        item["contribution"] = c.value;
        per_cusp.push_back(item);
    }
    j["per_cusp"] = per_cusp;
    j["c_tilde_sq"] = report.numerics.c_tilde_sq;
    j["k_dot_c"] = report.numerics.k_dot_c;
    j["d_sq"] = report.numerics.d_sq;
    j["e_p_sq"] = report.numerics.e_p_sq;
    j["genus_ok"] = report.genus_ok;
    j["rigidity_identity_ok"] = report.rigidity_identity_ok;
    j["core_sum_lt_3d"] = report.obstruction.core_sum_lt_3d;
    j["k_dot_c_lt_terminal_sum"] = report.obstruction.k_dot_c_lt_terminal_sum;
    j["cusp_count"] = report.cusp_count;
    j["kappa_note"] = report.kappa_note;
    return j;
}

InvariantReport report_from_json(const Json& j) {
    InvariantReport report{j.at("d").get<int>(),
                           ChiReport{j.at("chi").get<long>(), {}},
                           CurveNumerics{j.at("c_tilde_sq").get<long>(),
                                         j.at("k_dot_c").get<long>(), j.at("d_sq").get<long>(),
                                         j.at("e_p_sq").get<std::vector<long>>()},
                           j.at("genus_ok").get<bool>(),
                           j.at("rigidity_identity_ok").get<bool>(),
                           ObstructionChecks{j.at("core_sum_lt_3d").get<bool>(),
                                             j.at("k_dot_c_lt_terminal_sum").get<bool>()},
                           j.at("cusp_count").get<int>(),
                           j.at("kappa_note").get<std::string>()};
    for (const auto& item : j.at("per_cusp"))
        report.chi.per_cusp.push_back(CuspContribution{item.at("eta").get<long>(),
                                                       item.at("omega").get<long>(),
                                                       item.at("contribution").get<long>()});
    return report;
}

Json to_json(const DualGraph& graph) {
    Json j;
    Json nodes = Json::array();
    for (const auto& node : graph.nodes) {
        Json item;
        item["id"] = node.id;
        item["label"] = node.label;
        item["weight"] = node.weight;
        nodes.push_back(item);
    }
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto& [u, v] : graph.edges) edges.push_back(Json::array({u, v}));
    j["edges"] = edges;
    if (graph.curve_arrow.empty())
        j["curve_arrow"] = nullptr;
    else
        j["curve_arrow"] = graph.curve_arrow;
    return j;
}

Json to_json(const GroupPresentation& pres) {
    Json j;
    j["generators"] = pres.generators;
    j["relators"] = pres.relators;
    Json meta;
    meta["n"] = pres.n;
    meta["abelian"] = pres.abelian;
    if (pres.finite.has_value())
        meta["finite"] = *pres.finite;
    else
        meta["finite"] = nullptr;
    j["meta"] = meta;
    return j;
}

std::string compact_notation(const MultiplicitySequence& seq) {
    const auto compact = seq.compact_form();
    if (!compact) return "";
    const auto [m, a] = *compact;
    if (a == 1) return "(" + std::to_string(m) + ")";
    return "(" + std::to_string(m) + "_" + std::to_string(a) + ")";
}

std::string render_sequence_text(const MultiplicitySequence& seq) {
    const std::string compact = compact_notation(seq);
    if (compact.empty()) return seq.str();
    return compact + " = " + seq.str();
}

std::string render_curve_text(const CuspidalCurve& curve) {
    std::ostringstream os;
    os << "degree d = " << curve.params.d << ", a = " << curve.params.a
       << ", b = " << curve.params.b << "\n";
    os << "f(T) = " << curve.f.str() << "\n";
    os << "q~(T) = " << curve.q_tilde.str() << "\n";
    os << "P(s,t) = " << curve.P.str() << "\n";
    os << "Q(s,t) = " << curve.Q.str() << "\n";
    os << "R(s,t) = " << curve.R.str() << "\n";
    os << "p(X,Y) = " << curve.affine_equation.str() << "\n";
    os << "cusps:\n";
    for (const auto& cusp : curve.cusps)
        os << "  (" << cusp.parameter << ") -> (" << cusp.point << ")  "
           << render_sequence_text(cusp.sequence) << "  puiseux pair ("
           << cusp.puiseux_pair.first << "," << cusp.puiseux_pair.second << ")\n";
    auto flag = [](const std::optional<bool>& f) {
        return !f.has_value() ? "not run" : (*f ? "pass" : "FAIL");
    };
    os << "certified: divisibility=" << flag(curve.certified.divisibility)
       << " pullback=" << flag(curve.certified.pullback_vanishes)
       << " cusp_types=" << flag(curve.certified.cusp_types)
       << " genus=" << flag(curve.certified.genus_identity) << "\n";
    return os.str();
}

std::string render_report_text(const InvariantReport& report) {
    std::ostringstream os;
    os << "degree d = " << report.d << ", cusps = " << report.cusp_count << "\n";
    os << "chi = " << report.chi.chi << "\n";
    for (std::size_t i = 0; i < report.chi.per_cusp.size(); ++i) {
        const auto& c = report.chi.per_cusp[i];
        os << "  cusp " << i + 1 << ": eta = " << c.eta << ", omega = " << c.omega
           << ", eta + omega - 1 = " << c.value << "\n";
    }
    os << "C~^2 = " << report.numerics.c_tilde_sq << ", K*C~ = " << report.numerics.k_dot_c
       << ", D^2 = " << report.numerics.d_sq << "\n";
    os << "E_P^2 =";
    for (long v : report.numerics.e_p_sq) os << " " << v;
    os << "\n";
    os << "genus identity: " << (report.genus_ok ? "holds" : "FAILS") << "\n";
    os << "rigidity identity (chi = 0): "
       << (report.rigidity_identity_ok ? "holds" : "does not hold") << "\n";
    os << "core multiplicity sum < 3d: "
       << (report.obstruction.core_sum_lt_3d ? "yes" : "no") << "\n";
    os << "K*C~ < terminal core sum: "
       << (report.obstruction.k_dot_c_lt_terminal_sum ? "yes" : "no") << "\n";
    os << report.kappa_note << "\n";
    return os.str();
}

std::string render_graph_text(const DualGraph& graph) {
    std::ostringstream os;
    os << "nodes:\n";
    for (const auto& node : graph.nodes)
        os << "  " << node.id << "  " << node.label << "\n";
    os << "edges:\n";
    for (const auto& [u, v] : graph.edges) os << "  " << u << " -- " << v << "\n";
    if (!graph.curve_arrow.empty()) os << "curve arrow at: " << graph.curve_arrow << "\n";
    return os.str();
}

std::string render_presentation_text(const GroupPresentation& pres) {
    std::ostringstream os;
    os << "generators: ";
    for (std::size_t i = 0; i < pres.generators.size(); ++i) {
        if (i) os << ", ";
        os << pres.generators[i];
    }
    os << "\nrelators (uppercase = inverse):\n";
    for (const auto& r : pres.relators) os << "  " << r << "\n";
    os << "n = " << pres.n << "\n";
    os << "abelian: " << (pres.abelian ? "yes" : "no") << "\n";
    os << "finite: ";
    if (!pres.finite.has_value())
        os << "not derived";
    else
        os << (*pres.finite ? "yes" : "no");
    os << "\n";
    return os.str();
}

namespace {

std::string latex_rat_magnitude(const Rat& c) {
    Rat abs = c.sign() < 0 ? -c : c;
    if (abs.is_integer()) return abs.num().get_str();
    return "\\frac{" + (abs.num() < 0 ? mpz_class(-abs.num()) : abs.num()).get_str() + "}{" +
           abs.den().get_str() + "}";
}

std::string latex_monomial(int i, int j) {
    std::string out;
    if (i > 0) {
        out += "X";
        if (i > 1) out += "^{" + std::to_string(i) + "}";
    }
    if (j > 0) {
        out += "Y";
        if (j > 1) out += "^{" + std::to_string(j) + "}";
    }
    return out;
}

std::string latex_polynomial(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<BiPoly::Key, Rat>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second;
        const int db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? "-" : "+";
        }
        const std::string mono = latex_monomial(key.first, key.second);
        Rat abs = c.sign() < 0 ? -c : c;
        if (!abs.is_one() || mono.empty()) out += latex_rat_magnitude(c);
        out += mono;
    }
    return out;
}

}  // namespace

std::string render_curve_latex(const CuspidalCurve& curve) {
    const EquationParts parts = implicit_equation_parts(curve.params);
    std::ostringstream os;
    os << "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n\\[\n";
    os << "p_{" << curve.params.d << "," << curve.params.a << "}(X,Y) = ";
    if (!parts.residual.is_zero()) os << latex_polynomial(parts.residual);
    os << "-\\left(X-Y\\right)^{" << parts.power << "}";
    os << "+XY\\left(" << latex_polynomial(parts.xy_group) << "\\right)";
    os << "\n\\]\n\\end{document}\n";
    return os.str();
}

std::string render_dot(const DualGraph& graph) {
    std::ostringstream os;
    os << "digraph dual_graph {\n";
    os << "  node [shape=circle];\n";
    for (const auto& node : graph.nodes)
        os << "  \"" << node.id << "\" [label=\"" << node.label << "\"];\n";
    for (const auto& [u, v] : graph.edges)
        os << "  \"" << u << "\" -> \"" << v << "\" [dir=none];\n";
    if (!graph.curve_arrow.empty()) {
        os << "  \"C\" [label=\"C~\" shape=doublecircle];\n";
        os << "  \"" << graph.curve_arrow << "\" -> \"C\";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace cuspidal
