// schubrig: command line front end for the rigidity computations.
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <schubert/schubert.hpp>

using namespace schubert;

namespace {

enum Exit { Ok = 0, Usage = 1, Inconsistent = 2 };

struct Common {
    std::string format = "text";
    std::string out;
    long max_wedge_dim = default_max_wedge_dim;
    int jobs = 1;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--out", c.out, "write to this file instead of stdout");
    app->add_option("--max-wedge-dim", c.max_wedge_dim, "resource cap on wedge and Hom dimensions")
        ->check(CLI::PositiveNumber);
    app->add_option("--jobs", c.jobs, "worker threads for surveys")->check(CLI::Range(1, 256));
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + c.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

std::string boxes_string(const std::vector<std::pair<int, int>>& bs) {
    if (bs.empty()) return "-";
    std::string s;
    for (auto [i, al] : bs) s += (s.empty() ? "" : " ") + ("(" + std::to_string(i) + "," + std::to_string(al) + ")");
    return s;
}

// --- subcommands ----------------------------------------------------------------

int run_analyze(const std::string& part, const Common& c) {
    RigidityReport r = verdict(parse_partition(part), c.max_wedge_dim);
    emit(c, c.format == "json" ? dump(to_json(r)) : to_text(r));
    return r.kind == VerdictKind::ConsistencyFailure ? Inconsistent : Ok;
}

int run_diagram(const std::string& kind, const std::string& part, const Common& c) {
    DiagramKind k = parse_diagram_kind(kind);
    Partition a = parse_partition(part);
    std::string art = diagram(a, k);
    if (c.format == "json")
        emit(c, dump(json{{"partition", to_string(a)}, {"kind", kind}, {"lines", [&] {
                              json lines = json::array();
                              std::istringstream is(art);
                              for (std::string l; std::getline(is, l);) lines.push_back(l);
                              return lines;
                          }()}}));
    else
        emit(c, art);
    return Ok;
}

std::vector<RigidityReport> survey_reports(int m, int n, bool only_theorem, const Common& c) {
    std::vector<Partition> parts;
    for (auto& p : enumerate_box(m, n)) {
        if (only_theorem && (p.is_degenerate() || !theorem_condition(p))) continue;
        parts.push_back(p);
    }
    std::vector<RigidityReport> reports(parts.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < parts.size(); i = next++) reports[i] = verdict(parts[i], c.max_wedge_dim);
    };
    std::vector<std::thread> pool;
    const int extra = std::min<int>(c.jobs, static_cast<int>(parts.size())) - 1;
    for (int t = 0; t < extra; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return reports; // enumeration order, whatever the scheduling
}

std::string survey_text(const std::vector<RigidityReport>& rs) {
    std::ostringstream os;
    os << pad("partition", 24) << pad("codim", 6) << pad("exp", 16) << pad("exp'", 16) << pad("thm", 5) << pad("h11", 5)
       << pad("equality", 17) << pad("exceptions", 18) << "verdict\n";
    std::map<std::string, int> totals;
    for (auto& r : rs) {
        auto opt_num = [](const std::optional<long long>& x) { return x ? std::to_string(*x) : std::string("-"); };
        std::string thm = r.kind == VerdictKind::Trivial ? "-" : (r.theorem_verdict ? "yes" : "no");
        std::string eq = r.equality ? to_string(r.equality->verdict) : "-";
        std::string v = r.kind == VerdictKind::Skipped ? "SKIPPED" : to_string(r.kind);
        os << pad(to_string(r.a), 24) << pad(std::to_string(codim(r.a)), 6) << pad(to_string(r.exp_a), 16)
           << pad(to_string(r.exp_conj), 16) << pad(thm, 5) << pad(opt_num(r.h11_dim), 5) << pad(eq, 17)
           << pad(boxes_string(r.exception_boxes), 18) << v << "\n";
        ++totals[v];
    }
    os << "total " << rs.size() << " rows";
    for (auto& [k, v] : totals) os << ", " << k << " " << v;
    os << "\n";
    return os.str();
}

int run_survey(int m, int n, bool only_theorem, const Common& c) {
    auto rs = survey_reports(m, n, only_theorem, c);
    if (c.format == "json") {
        json arr = json::array();
        for (auto& r : rs) arr.push_back(to_json(r));
        emit(c, dump(arr));
    } else {
        emit(c, survey_text(rs));
    }
    for (auto& r : rs)
        if (r.kind == VerdictKind::ConsistencyFailure) return Inconsistent;
    return Ok;
}

int run_hwv(const std::string& part, const Common& c) {
    Partition a = parse_partition(part);
    auto t = tangent_model(a);
    auto comps = complement_components(t);
    AuditReport audit = decomposition_audit(t, c.max_wedge_dim);
    if (c.format == "json") {
        json j{{"partition", to_string(a)}, {"components", json::array()}};
        for (std::size_t i = 0; i < comps.size(); ++i) {
            json cj = component_json(comps[i]);
            cj["generated_dim"] = audit.generated_dims[i];
            json terms = json::array();
            for (auto& [vw, x] : comps[i].hwv) {
                Cell v = cell_at(vw.first, a.m()), w = cell_at(vw.second, a.m());
                terms.push_back(json{{"from", {v.i, v.p}}, {"to", {w.i, w.p}}, {"coef", to_string(x)}});
            }
            cj["hwv"] = terms;
            j["components"].push_back(cj);
        }
        j["audit"] = {{"hom_dim", audit.hom_dim}, {"ma_dim", audit.ma_dim}, {"missing", audit.missing}, {"ok", audit.ok()}};
        emit(c, dump(j));
    } else {
        std::ostringstream os;
        os << to_string(a) << "\n";
        for (std::size_t i = 0; i < comps.size(); ++i) {
            auto& k = comps[i];
            os << "  " << to_string(k.kind) << ' ' << to_string(k.piece) << " (" << k.j << ',' << k.b << ") -> (" << k.i
               << ',' << k.a << ") dim " << k.dim << " generated " << audit.generated_dims[i] << "\n";
            for (auto& [vw, x] : k.hwv) {
                Cell v = cell_at(vw.first, a.m()), w = cell_at(vw.second, a.m());
                os << "    (" << v.i << ',' << v.p << ") -> " << to_string(x) << " (" << w.i << ',' << w.p << ")\n";
            }
        }
        os << "audit: " << audit.hom_dim << " = " << audit.ma_dim;
        for (auto d : audit.generated_dims) os << " + " << d;
        os << (audit.ok() ? " ok" : " FAILED") << "\n";
        emit(c, os.str());
    }
    return Ok;
}

int run_h11(const std::string& part, const Common& c) {
    Partition a = parse_partition(part);
    H11 h = h11(a, c.max_wedge_dim);
    if (c.format == "json") {
        emit(c, dump(json{{"partition", to_string(a)},
                          {"h11_dim", h.dim()},
                          {"domain_dim", h.complex.domain_dim()},
                          {"codomain_dim", h.complex.codomain_dim()}}));
    } else {
        std::ostringstream os;
        os << to_string(a) << "\nh11_dim: " << h.dim() << "\ndomain_dim: " << h.complex.domain_dim()
           << "\ncodomain_dim: " << h.complex.codomain_dim() << "\n";
        emit(c, os.str());
    }
    return Ok;
}

int run_check_equality(const std::string& part, const Common& c) {
    Partition a = parse_partition(part);
    require_nondegenerate(a);
    auto t = tangent_model(a);
    SchurModule ia = build_Ia(t, c.max_wedge_dim);
    auto certs = certificate_check(t, ia);
    auto tc = tangent_comparison(t, ia);
    auto ex = exception_boxes(a);
    const bool agree = all_false(certs) == (tc.verdict == Equality::Equal);
    if (c.format == "json") {
        json j{{"partition", to_string(a)}, {"dim_Ia", ia.dim()}, {"certificates", json::array()}};
        for (auto& r : certs) {
            json cj = component_json(r.component);
            cj["in_Ia"] = r.in_Ia;
            j["certificates"].push_back(cj);
        }
        j["equality"] = {{"verdict", to_string(tc.verdict)}, {"dim_Ta", tc.dim_ta}, {"dim_ma", tc.dim_ma}, {"gap", tc.gap()}};
        j["exception_boxes"] = json::array();
        for (auto [i, al] : ex) j["exception_boxes"].push_back({i, al});
        j["consistent"] = agree;
        emit(c, dump(j));
    } else {
        std::ostringstream os;
        os << to_string(a) << "\ndim_Ia: " << ia.dim() << "\n";
        for (auto& r : certs)
            os << "  " << to_string(r.component.kind) << ' ' << to_string(r.component.piece) << " (" << r.component.j
               << ',' << r.component.b << ") -> (" << r.component.i << ',' << r.component.a << ") in_Ia "
               << (r.in_Ia ? "true" : "false") << "\n";
        os << "equality: " << to_string(tc.verdict) << " (dim_Ta " << tc.dim_ta << ", dim_ma " << tc.dim_ma << ")\n";
        os << "exception_boxes: " << boxes_string(ex) << "\n";
        os << "consistent: " << (agree ? "true" : "false") << "\n";
        emit(c, os.str());
    }
    return agree ? Ok : Inconsistent;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur and Schubert rigidity computations for Grassmannian Schubert varieties"};
    app.require_subcommand(1);
    Common common;
    std::string part, kind;
    int m = 0, n = 0;
    bool only_theorem = false;

    auto* analyze = app.add_subcommand("analyze", "full rigidity report for gr(m,n):a1,...,am");
    analyze->add_option("partition", part)->required();
    add_common(analyze, common);

    auto* diag = app.add_subcommand("diagram", "ASCII diagrams: young, matrix, blocks, hwv");
    diag->add_option("kind", kind)->required()->check(CLI::IsMember({"young", "matrix", "blocks", "hwv"}));
    diag->add_option("partition", part)->required();
    add_common(diag, common);

    auto* survey = app.add_subcommand("survey", "one report per partition of P(m,n)");
    survey->add_option("m", m)->required()->check(CLI::PositiveNumber);
    survey->add_option("n", n)->required()->check(CLI::PositiveNumber);
    survey->add_flag("--only-theorem", only_theorem, "keep partitions satisfying the theorem condition");
    add_common(survey, common);

    auto* hwv = app.add_subcommand("hwv", "complement components and their highest weight vectors");
    hwv->add_option("partition", part)->required();
    add_common(hwv, common);

    auto* h11c = app.add_subcommand("h11", "dimension of H^{1,1}");
    h11c->add_option("partition", part)->required();
    add_common(h11c, common);

    auto* eq = app.add_subcommand("check-equality", "certificate check against the tangent comparison");
    eq->add_option("partition", part)->required();
    add_common(eq, common);

    auto* schema = app.add_subcommand("schema", "JSON schema of reports (--survey for the survey array)");
    bool survey_form = false;
    schema->add_flag("--survey", survey_form, "schema of survey output");
    add_common(schema, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*analyze) return run_analyze(part, common);
        if (*diag) return run_diagram(kind, part, common);
        if (*survey) return run_survey(m, n, only_theorem, common);
        if (*hwv) return run_hwv(part, common);
        if (*h11c) return run_h11(part, common);
        if (*eq) return run_check_equality(part, common);
        if (*schema) {
            emit(common, dump(survey_form ? survey_schema() : report_schema()));
            return Ok;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: cannot parse '" << part << "': " << e.what() << "\n";
        return Usage;
    } catch (const AuditFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Inconsistent;
    } catch (const InternalInconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Inconsistent;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}
