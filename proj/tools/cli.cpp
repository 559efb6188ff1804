#include "cli.hpp"

#include "perfectforms/bounds.hpp"
#include "perfectforms/perfection.hpp"
#include "perfectforms/plane_partition.hpp"
#include "perfectforms/reduction.hpp"
#include "perfectforms/serialization.hpp"
#include "perfectforms/voronoi_walk.hpp"

#include <CLI11.hpp>
#include <charconv>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace perfectforms::cli {
namespace {

// Nearest double for small numerators and denominators (get_d truncates).
double approx(const Rational& r) { return r.get_num().get_d() / r.get_den().get_d(); }

// Shortest decimal text that reads back to the same double.
std::string shortest(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct Failure {
    int code;
    std::string message;
};

std::string render(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

QuadForm load_form(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{kUsage, "cannot read " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return quad_form_from_text(ss.str());
    } catch (const ParseError& e) {
        throw Failure{kUsage, e.what()};
    } catch (const std::invalid_argument& e) {  // asymmetric or empty matrices
        throw Failure{kUsage, e.what()};
    }
}

void require_pd(const QuadForm& q) {
    if (!is_positive_definite(q)) throw Failure{kNotPositiveDefinite, "form is not positive definite"};
}

Json vectors_json(const std::vector<IntVector>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
}

// ---------------------------------------------------------------------------

int cmd_certify(const std::string& path, bool pretty, std::ostream& out) {
    QuadForm q = load_form(path);
    require_pd(q);
    VoronoiDomain dom = voronoi_domain(q, false);
    Json report{{"command", "certify"},
                {"dim", q.dim()},
                {"n", q.n()},
                {"minimal_vectors", to_json(dom.minimal_vectors)},
                {"min_count", dom.minimal_vectors.count()},
                {"rank", dom.rank},
                {"perfect", dom.full_rank()}};
    if (!dom.full_rank()) {
        out << render(report, pretty) << '\n';
        throw Failure{kNotPerfect, "not perfect: rank " + std::to_string(dom.rank) + " < " + std::to_string(q.n())};
    }
    PerfectionCertificate cert = perfection_certificate(q);
    report["certificate"] = Json{{"subset", vectors_json(cert.subset)},
                                 {"det_w", to_json(cert.det_w)},
                                 {"simplex_volume", to_json(cert.simplex_volume)}};
    if (q.dim() >= 2) {
        VolumeCheckReport vol = volume_lower_bound_check(q);
        report["volume_check"] = Json{{"representative", to_json(vol.representative.result.reduced)},
                                      {"simplex_volume", to_json(vol.certificate.simplex_volume)},
                                      {"ell_d", to_json(vol.ell)},
                                      {"holds", vol.holds}};
        out << render(report, pretty) << '\n';
        return vol.holds ? kOk : kCheckFailed;
    }
    out << render(report, pretty) << '\n';
    return kOk;
}

int cmd_reduce(const std::string& path, const std::string& mode, bool pretty, std::ostream& out) {
    QuadForm q = load_form(path);
    require_pd(q);
    Json report{{"command", "reduce"}, {"mode", mode}};
    int code = kOk;
    if (mode == "lll") {
        report["result"] = to_json(lll_reduce(q));
    } else if (mode == "hkz") {
        report["result"] = to_json(hkz_reduce(q));
    } else {
        SmallRepresentative rep = small_minvec_representative(q);
        report["result"] = to_json(rep.result, rep.scale);
        report["minimal_vectors"] = to_json(rep.minimal_vectors);
        report["max_norm"] = to_json(rep.max_norm);
        report["dual_trace"] = to_json(rep.dual_trace);
        report["bound"] = to_json(rep.bound);
        report["within_bound"] = rep.within_bound();
        if (!rep.within_bound()) code = kCheckFailed;
    }
    out << render(report, pretty) << '\n';
    return code;
}

Json bound_entry(const BigFloat& ln_value) {
    const unsigned bits = ln_value.bits();
    BigFloat log10 = ln_value / BigFloat(10L, bits).log();
    return Json{{"ln", ln_value.to_string(30)}, {"log10", log10.to_string(30)}, {"value", ln_value.exp().to_string(25)}};
}

Json closed_form_json(const ClosedForm& c) {
    return Json{{"coefficient", to_json(c.coefficient)}, {"radicand", to_json(c.radicand)}, {"pi_power", c.pi_power}};
}

int cmd_bound(long d, bool json, bool pretty, std::ostream& out) {
    if (d < 2) throw Failure{kUsage, "bound: --dim must be at least 2"};
    const auto dim = static_cast<std::size_t>(d);
    BoundReport r = bound_report(dim);
    if (!json) {
        auto row = [&](const char* name, const BigFloat& v) {
            Json e = bound_entry(v);
            out << std::left << std::setw(20) << name << " log10 = " << e["log10"].get<std::string>()
                << "  value = " << e["value"].get<std::string>() << '\n';
        };
        out << "d = " << r.d << ", n = " << r.n << ", precision = " << precision_bits() << " bits\n";
        row("ell_d", r.log_ell);
        row("u_d", r.log_u);
        row("p_d bound", r.log_pd_bound);
        row("lambda1 bound", r.log_lambda1_bound);
        return kOk;
    }
    Json report{{"command", "bound"},
                {"d", r.d},
                {"n", r.n},
                {"precision_bits", precision_bits()},
                {"ell_d", bound_entry(r.log_ell)},
                {"u_d", bound_entry(r.log_u)},
                {"pd_upper_bound", bound_entry(r.log_pd_bound)},
                {"lambda1_upper_bound", bound_entry(r.log_lambda1_bound)},
                {"closed_forms",
                 Json{{"ell_d", closed_form_json(ell_d_exact(dim))},
                      {"u_d", closed_form_json(u_d_exact(dim))},
                      {"pd_upper_bound", closed_form_json(pd_upper_bound_exact(dim))},
                      {"lambda1_upper_bound", closed_form_json(lambda1_upper_bound_exact(dim))}}}};
    out << render(report, pretty) << '\n';
    return kOk;
}

Json class_json(const PerfectFormClass& c) {
    return Json{{"representative", to_json(c.representative)},
                {"lambda1", to_json(c.lambda1)},
                {"min_count", c.min_count},
                {"det", to_json(c.det)},
                {"path_length", c.path_length}};
}

int cmd_enumerate(long d, bool cap_override, bool pretty, std::ostream& out) {
    if (d < 2) throw Failure{kUsage, "enumerate: --dim must be at least 2"};
    WalkOptions opts;
    opts.cap = cap_override ? kMaxWalkCap : kDefaultWalkCap;
    std::size_t discovered = 0;
    opts.on_discovered = [&](const PerfectFormClass& c) {
        Json line{{"index", discovered++}};
        line.update(class_json(c));
        out << render(line, pretty) << '\n' << std::flush;
    };
    std::vector<PerfectFormClass> classes;
    try {
        classes = enumerate_perfect_forms(static_cast<std::size_t>(d), opts);
    } catch (const CapExceededError& e) {
        throw Failure{kCapExceeded, std::string("cap exceeded: ") + e.what()};
    }
    Json summary{{"dim", d}, {"classes", classes.size()}};
    out << render(summary, pretty) << '\n';
    return kOk;
}

Json rational_pair(const Rational& x, const Rational& y) { return Json::array({to_json(x), to_json(y)}); }

int cmd_plot2d(bool csv, bool pretty, std::ostream& out) {
    PlanePartition p = trace_plane_partition();
    if (csv) {
        out << "record,id,a,b,x,y,q11,q12,q22,depth,labeled,rays\n";
        for (std::size_t i = 0; i < p.rays.size(); ++i) {
            const PlaneRay& r = p.rays[i];
            out << "ray," << i << ',' << r.x[0] << ',' << r.x[1] << ',' << shortest(approx(r.px)) << ','
                << shortest(approx(r.py)) << ",,,,,,\n";
        }
        for (std::size_t i = 0; i < p.cells.size(); ++i) {
            const PlaneCell& c = p.cells[i];
            out << "cell," << i << ",,,,," << c.form(0, 0) << ',' << c.form(0, 1) << ',' << c.form(1, 1) << ',' << c.depth
                << ',' << (c.labeled ? 1 : 0) << ',';
            for (std::size_t k = 0; k < c.rays.size(); ++k) out << (k ? ";" : "") << c.rays[k];
            out << '\n';
        }
        return kOk;
    }
    Json rays = Json::array();
    for (const auto& r : p.rays)
        rays.push_back(Json{{"x", to_json(r.x)},
                            {"point", rational_pair(r.px, r.py)},
                            {"point_approx", Json::array({approx(r.px), approx(r.py)})}});
    Json cells = Json::array();
    for (const auto& c : p.cells) {
        Json polygon = Json::array();
        for (auto k : c.rays) polygon.push_back(Json::array({approx(p.rays[k].px), approx(p.rays[k].py)}));
        cells.push_back(Json{{"label", to_json(*c.form.integer_matrix())},
                             {"depth", c.depth},
                             {"labeled", c.labeled},
                             {"rays", c.rays},
                             {"polygon", std::move(polygon)}});
    }
    Json incidences = Json::array();
    for (auto [c, r] : p.incidences) incidences.push_back(Json::array({c, r}));
    Json report{{"command", "plot2d"}, {"rays", std::move(rays)}, {"cells", std::move(cells)}, {"incidences", std::move(incidences)}};
    out << render(report, pretty) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with perfect quadratic forms", "perfectforms"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indent JSON output");

    std::string certify_path;
    auto* certify = app.add_subcommand("certify", "Certify perfection and check the volume lower bound");
    certify->add_option("file", certify_path, "Quadratic form JSON")->required();

    std::string reduce_path, mode = "lll";
    auto* reduce = app.add_subcommand("reduce", "Reduce a form");
    reduce->add_option("file", reduce_path, "Quadratic form JSON")->required();
    reduce->add_option("--mode", mode, "lll, hkz or smallrep")->check(CLI::IsMember({"lll", "hkz", "smallrep"}));

    long bound_dim = 0;
    bool bound_json = false;
    auto* bound = app.add_subcommand("bound", "Volume and counting bounds");
    bound->add_option("--dim", bound_dim, "Dimension d")->required();
    bound->add_flag("--json", bound_json, "JSON output");

    long enum_dim = 0;
    bool cap_override = false;
    auto* enumerate = app.add_subcommand("enumerate", "Classify perfect forms with Voronoi's algorithm");
    enumerate->add_option("--dim", enum_dim, "Dimension d")->required();
    enumerate->add_flag("--cap-override", cap_override, "Allow d = 6");

    bool csv = false;
    auto* plot2d = app.add_subcommand("plot2d", "Export the d = 2 trace-plane partition");
    plot2d->add_flag("--csv", csv, "CSV output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*certify) return cmd_certify(certify_path, pretty, out);
        if (*reduce) return cmd_reduce(reduce_path, mode, pretty, out);
        if (*bound) return cmd_bound(bound_dim, bound_json, pretty, out);
        if (*enumerate) return cmd_enumerate(enum_dim, cap_override, pretty, out);
        if (*plot2d) return cmd_plot2d(csv, pretty, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const NotPerfectError& e) {
        err << "error: " << e.what() << '\n';
        return kNotPerfect;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace perfectforms::cli
