#include "cli.hpp"

#include "diagcell/cover.hpp"
#include "diagcell/forms.hpp"
#include "diagcell/tor.hpp"
#include "diagcell/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace diagcell::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
    std::string family = "tl";
    std::size_t n = 3;
    std::string ring = "F5";
    std::string delta = "1";
    std::size_t qmax = 3;
    std::string out;
    std::string format = "text";
    std::size_t max_dim = 5000;
    // gram
    std::optional<int> level;
    // verify
    std::vector<std::size_t> mutate;
    // tor
    std::string mode = "greedy";
    bool reversed = false;
    bool oracle = false;
    std::size_t cap = 0;
    // sweep
    std::string run = "tor";
    std::vector<std::string> deltas;
    std::vector<std::string> rings;
};

struct Report {
    std::string family;
    std::size_t n = 0;
    std::string ring;
    std::string delta;
    std::string command;
    std::string result = "pass";
    std::vector<std::string> certificates;
    std::vector<std::size_t> dims;
    std::optional<std::size_t> height;
    std::optional<std::size_t> width;
    std::vector<std::string> lines;  // free text for the text format
    json extra = json::object();
    std::string csv;                 // gram tables
    int code = ok;
};

json to_json(const Report& r) {
    json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["ring"] = r.ring;
    j["delta"] = r.delta;
    j["command"] = r.command;
    j["result"] = r.result;
    j["certificates"] = r.certificates;
    j["dims"] = r.dims;
    j["height"] = r.height ? json(*r.height) : json(nullptr);
    j["width"] = r.width ? json(*r.width) : json(nullptr);
    for (const auto& [k, v] : r.extra.items()) j[k] = v;
    return j;
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << "command " << r.command << "\nfamily " << r.family << "\nn " << r.n << "\nring " << r.ring << "\ndelta " << r.delta
       << "\nresult " << r.result << "\n";
    if (!r.dims.empty()) {
        os << "dims";
        for (auto d : r.dims) os << " " << d;
        os << "\n";
    }
    if (r.height) os << "height " << *r.height << "\n";
    if (r.width) os << "width " << *r.width << "\n";
    for (const auto& l : r.lines) os << l << "\n";
    for (const auto& c : r.certificates) os << "certificate " << c << "\n";
    return os.str();
}

std::string to_csv(const Report& r) {
    if (!r.csv.empty()) return r.csv;
    std::ostringstream os;
    os << "field,value\nfamily," << r.family << "\nn," << r.n << "\nring," << r.ring << "\ndelta," << r.delta << "\ncommand,"
       << r.command << "\nresult," << r.result << "\n";
    for (std::size_t q = 0; q < r.dims.size(); ++q) os << "tor_" << q << "," << r.dims[q] << "\n";
    if (r.height) os << "height," << *r.height << "\n";
    if (r.width) os << "width," << *r.width << "\n";
    return os.str();
}

struct Setup {
    Family family;
    Ring ring;
    Scalar delta;
};

Setup parse_setup(const Config& c) {
    Family f = parse_family(c.family);
    Ring r = Ring::parse(c.ring);
    return {f, r, r.parse_element(c.delta)};
}

Report base_report(const Config& c, const Setup& s, std::string command) {
    Report r;
    r.family = family_name(s.family);
    r.n = c.n;
    r.ring = s.ring.name();
    r.delta = s.delta.to_string();
    r.command = std::move(command);
    return r;
}

StructureAlgebra make_algebra(const Config& c, const Setup& s) {
    BuildOptions o;
    o.max_dim = c.max_dim;
    return build_algebra(s.family, c.n, s.delta, s.ring, o);
}

Report cmd_dim(const Config& c, const Setup& s) {
    Report r = base_report(c, s, "dim");
    auto a = make_algebra(c, s);
    r.extra["dimension"] = a.dim();
    r.lines.push_back("dimension " + std::to_string(a.dim()));
    if (!a.has_diagrams()) return r;
    auto d = CellDatum::for_family(s.family, c.n);
    json levels = json::array();
    std::size_t total = 0;
    for (const auto& lv : d.levels()) {
        const std::size_t cells = lv.states.size() * lv.states.size() * lv.group.size();
        total += cells;
        levels.push_back({{"t", lv.t}, {"states", lv.states.size()}, {"group", lv.group.size()}, {"cells", cells}});
        r.lines.push_back("t " + std::to_string(lv.t) + " states " + std::to_string(lv.states.size()) + " group " +
                          std::to_string(lv.group.size()) + " cells " + std::to_string(cells));
    }
    r.extra["levels"] = levels;
    r.extra["cell_total"] = total;
    r.lines.push_back("cell total " + std::to_string(total));
    if (total != a.dim()) {
        r.result = "fail";
        r.code = verification_failed;
        r.certificates.push_back("sum |M(t)|^2 |G(t)| = " + std::to_string(total) + " differs from the dimension");
    }
    return r;
}

Report cmd_verify(const Config& c, const Setup& s) {
    Report r = base_report(c, s, "verify");
    auto a = make_algebra(c, s);
    if (!a.has_diagrams()) {
        r.result = "skipped";
        r.lines.push_back("no cell datum for " + family_name(s.family) + "; skipped");
        return r;
    }
    if (!c.mutate.empty()) {
        if (c.mutate.size() != 2 || c.mutate[0] >= a.dim() || c.mutate[1] >= a.dim())
            throw std::invalid_argument("--mutate needs two basis indices below the dimension");
        auto pr = a.product(c.mutate[0], c.mutate[1]);
        std::uint32_t target = pr.empty() ? 0u : static_cast<std::uint32_t>((pr[0].index + 1) % a.dim());
        a = a.with_product(c.mutate[0], c.mutate[1], {Term{target, s.ring.one()}});
        r.lines.push_back("mutated product (" + std::to_string(c.mutate[0]) + "," + std::to_string(c.mutate[1]) + ")");
    }
    auto d = CellDatum::build(a);
    auto v1 = verify_naive_cellular(a, d);
    auto v2 = verify_diagram_like(a, d);
    for (const auto* v : {&v1, &v2})
        r.lines.push_back(v->name + (v->passed ? " pass " : " FAIL ") + std::to_string(v->checked) + " checks");
    r.extra["naive_cellular"] = v1.passed;
    r.extra["diagram_like"] = v2.passed;
    for (const auto* v : {&v1, &v2})
        for (const auto& cert : v->certificates) r.certificates.push_back(v->name + ": " + cert);
    if (!v1.passed || !v2.passed) {
        r.result = "fail";
        r.code = verification_failed;
    }
    return r;
}

Report cmd_gram(const Config& c, const Setup& s) {
    Report r = base_report(c, s, "gram");
    auto a = make_algebra(c, s);
    if (!a.has_diagrams()) throw std::invalid_argument("gram needs a diagram family");
    if (!c.level) throw std::invalid_argument("gram needs --level");
    auto d = CellDatum::build(a);
    int li = d.level_of_t(*c.level);
    r.extra["level"] = *c.level;
    if (li < 0 || d.level(li).states.empty()) {
        r.result = "empty";
        r.csv = "q\n";
        r.extra["table"] = json::array();
        return r;
    }
    auto g = gram_table(a, d, li);
    const auto& lv = d.level(li);
    r.csv = g.to_csv(d);
    json table = json::array();
    for (std::size_t q = 0; q < g.value.size(); ++q)
        for (std::size_t p = 0; p < g.value[q].size(); ++p)
            for (std::size_t t = 0; t < g.value[q][p].size(); ++t)
                table.push_back({{"q", lv.states[q].to_string()},
                                 {"p", lv.states[p].to_string()},
                                 {"tau", lv.group[t].to_string()},
                                 {"value", g.value[q][p][t].to_string()}});
    r.extra["table"] = table;
    std::istringstream is(r.csv);
    for (std::string line; std::getline(is, line);) r.lines.push_back(line);
    return r;
}

Report cmd_cover(const Config& c, const Setup& s) {
    Report r = base_report(c, s, "cover");
    if (s.family != Family::tl) throw std::invalid_argument("cover needs --family tl");
    auto a = make_algebra(c, s);
    auto cov = tl_cover(a);
    r.height = cov.height;
    r.width = cov.width;
    r.extra["covers"] = cov.covers;
    json entries = json::array();
    for (const auto& e : cov.entries) {
        entries.push_back({{"subset", e.subset},
                           {"status", status_name(e.status)},
                           {"dim", e.dim},
                           {"q", e.q ? json(e.q->to_string()) : json(nullptr)},
                           {"note", e.note}});
    }
    r.extra["entries"] = entries;
    std::istringstream is(cov.to_string());
    for (std::string line; std::getline(is, line);)
        if (line.rfind("S=", 0) == 0) r.lines.push_back(line);
    if (!cov.covers) {
        r.result = "fail";
        r.code = verification_failed;
        r.certificates.push_back("K_1 + ... + K_w differs from I_<=n-1");
    }
    return r;
}

Report cmd_tor(const Config& c, const Setup& s) {
    Report r = base_report(c, s, "tor");
    if (s.family == Family::group_cyclic && c.n == 0) throw std::invalid_argument("n must be positive");
    auto a = make_algebra(c, s);
    TorOptions o;
    o.qmax = c.qmax;
    o.reversed = c.reversed;
    o.cap = c.cap;
    if (c.mode == "greedy") o.mode = GeneratorMode::greedy;
    else if (c.mode == "all") o.mode = GeneratorMode::all_kernel;
    else if (c.mode == "prune") o.mode = GeneratorMode::prune;
    else throw std::invalid_argument("unknown --mode " + c.mode);
    auto t = tor_dims(a, o);
    r.dims = t.dims;
    r.extra["qmax"] = c.qmax;
    r.extra["generators"] = t.generators;
    r.extra["kernels"] = t.kernel_dims;
    r.extra["partial"] = t.partial;
    r.extra["complex_ok"] = t.complex_ok;
    std::ostringstream gs;
    for (auto g : t.generators) gs << " " << g;
    r.lines.push_back("generators" + gs.str());
    if (t.partial) {
        r.result = "partial";
        r.code = resource_cap;
        r.lines.push_back("partial " + t.note);
    }
    if (!t.complex_ok) {
        r.result = "fail";
        r.code = verification_failed;
        r.certificates.push_back("d d != 0 in the resolution");
    }
    if (c.oracle) {
        if (s.family != Family::group_cyclic && s.family != Family::jones)
            throw std::invalid_argument("--oracle compares jones or group_cyclic with the cyclic group");
        auto ref = cyclic_group_oracle(c.n, s.ring, c.qmax);
        bool same = same_dims(t, ref);
        r.extra["oracle_dims"] = ref.dims;
        r.extra["oracle_match"] = same;
        std::ostringstream os;
        for (auto d : ref.dims) os << " " << d;
        r.lines.push_back("oracle" + os.str() + (same ? " (match)" : " (MISMATCH)"));
        if (!same) {
            r.result = "fail";
            r.code = verification_failed;
            r.certificates.push_back("dims differ from the cyclic group oracle");
        }
    }
    return r;
}

Report dispatch(const std::string& cmd, const Config& c) {
    const Setup s = parse_setup(c);
    if (cmd == "dim") return cmd_dim(c, s);
    if (cmd == "verify") return cmd_verify(c, s);
    if (cmd == "gram") return cmd_gram(c, s);
    if (cmd == "cover") return cmd_cover(c, s);
    if (cmd == "tor") return cmd_tor(c, s);
    throw std::invalid_argument("unknown command " + cmd);
}

void add_common(CLI::App* app, Config& c) {
    app->add_option("--family", c.family, "brauer | tl | jones | group_cyclic");
    app->add_option("--n", c.n, "number of points")->check(CLI::Range(std::size_t{1}, std::size_t{16}));
    app->add_option("--ring", c.ring, "prime field (F5, 5) or Q");
    app->add_option("--delta", c.delta, "loop value, e.g. 0, 2, 3/7");
    app->add_option("--qmax", c.qmax, "highest Tor degree");
    app->add_option("--out", c.out, "write the report to this file");
    app->add_option("--format", c.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app->add_option("--max-dim", c.max_dim, "refuse algebras above this dimension");
}

std::string render(const std::vector<Report>& reports, const std::string& format, bool many) {
    if (format == "json") {
        if (!many) return to_json(reports.front()).dump(2) + "\n";
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        return arr.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out += "\n";
        out += format == "csv" ? to_csv(reports[i]) : to_text(reports[i]);
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"diagcell: diagram algebras, cellular axioms, idempotent covers and Tor"};
    app.require_subcommand(1);
    Config c;
    auto* dim = app.add_subcommand("dim", "dimension and link-state counts");
    auto* verify = app.add_subcommand("verify", "naive-cellular and diagram-like axioms");
    auto* gram = app.add_subcommand("gram", "Gram table of the bilinear forms at one level");
    auto* cover = app.add_subcommand("cover", "K_i cover of a Temperley-Lieb algebra");
    auto* tor = app.add_subcommand("tor", "Tor_q(k, k) by a free resolution");
    auto* sweep = app.add_subcommand("sweep", "run a command over lists of rings and delta values");
    for (auto* s : {dim, verify, gram, cover, tor, sweep}) add_common(s, c);
    verify->add_option("--mutate", c.mutate, "replace the product of two basis indices (fault injection)")->expected(2);
    gram->add_option("--level", c.level, "number of defects t");
    for (auto* s : {tor, sweep}) {
        s->add_option("--mode", c.mode, "greedy | all | prune")->check(CLI::IsMember({"greedy", "all", "prune"}));
        s->add_flag("--reversed", c.reversed, "scan kernel vectors last to first");
        s->add_flag("--oracle", c.oracle, "compare with the cyclic group resolution");
        s->add_option("--cap", c.cap, "bound on generators times dimension");
    }
    sweep->add_option("--run", c.run, "dim | verify | cover | tor")->check(CLI::IsMember({"dim", "verify", "cover", "tor"}));
    sweep->add_option("--deltas", c.deltas, "delta values")->delimiter(',');
    sweep->add_option("--rings", c.rings, "rings")->delimiter(',');

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    }

    std::vector<Report> reports;
    bool many = false;
    try {
        auto* chosen = app.get_subcommands().front();
        if (chosen == sweep) {
            many = true;
            auto rings = c.rings.empty() ? std::vector<std::string>{c.ring} : c.rings;
            auto deltas = c.deltas.empty() ? std::vector<std::string>{c.delta} : c.deltas;
            for (const auto& rg : rings)
                for (const auto& dl : deltas) {
                    Config point = c;
                    point.ring = rg;
                    point.delta = dl;
                    try {
                        reports.push_back(dispatch(c.run, point));
                    } catch (const std::length_error& e) {
                        Report r;
                        r.family = c.family;
                        r.n = c.n;
                        r.ring = rg;
                        r.delta = dl;
                        r.command = c.run;
                        r.result = "cap";
                        r.code = resource_cap;
                        r.certificates.push_back(e.what());
                        reports.push_back(std::move(r));
                    }
                }
        } else {
            reports.push_back(dispatch(chosen->get_name(), c));
        }
    } catch (const std::length_error& e) {
        err << "resource cap: " << e.what() << "\n";
        return resource_cap;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    }

    const std::string text = render(reports, c.format, many);
    if (c.out.empty()) {
        out << text;
    } else {
        std::ofstream f(c.out);
        if (!f) {
            err << "usage error: cannot write " << c.out << "\n";
            return usage_error;
        }
        f << text;
    }
    int code = ok;
    for (const auto& r : reports) code = std::max(code, r.code);
    return code;
}

}  // namespace diagcell::cli
