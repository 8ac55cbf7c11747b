#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gitcurve/basin.hpp"
#include "gitcurve/chow_multiplicity.hpp"
#include "gitcurve/divisor_classes.hpp"
#include "gitcurve/families.hpp"
#include "gitcurve/ideal_engine.hpp"
#include "gitcurve/paper_check.hpp"
#include "gitcurve/stability.hpp"

using namespace gitcurve;
using nlohmann::json;

namespace {

struct Options {
    bool json = false;
    std::string in;
    std::string family;
    int g = 0;
    int r = 0;
    std::string m = "2,3";
    std::string weights;
    std::string exponents;
    std::string mode = "c";
    std::string only;
    std::string chow_case;
    std::string divisor_kind;
    int n = 2;
    std::string alpha = "7/10";
    std::string out;
    bool monomials = false;
    bool serial = false;
};

Configuration build(const Options& o) {
    if (o.family == "open-rosary") return build_open_rosary_config(o.g, o.r);
    if (o.family == "closed-rosary") return build_closed_rosary_config(o.r);
    if (o.family == "broken-bead") return build_broken_bead_config(o.r);
    if (o.family == "tacnodal-tail") return build_tacnodal_tail_config(o.g);
    throw Error("unknown family '" + o.family + "'");
}

OneParamSubgroup weights_for(const Options& o, const Configuration& c) {
    if (!o.weights.empty() && !o.exponents.empty()) throw Error("give --weights or --exponents, not both");
    if (!o.weights.empty()) return {parse_int_list(o.weights)};
    if (!o.exponents.empty()) {
        auto gens = torus_generators(c.graph);
        auto e = parse_int_list(o.exponents);
        if (e.size() != gens.size())
            throw Error("expected " + std::to_string(gens.size()) + " exponents, got " + std::to_string(e.size()));
        std::map<BranchRef, long> bw;
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (const auto& [br, w] : gens[i].branch_weight) bw[br] += w * e[i];
        return coordinate_weights(c, bw);
    }
    return canonical_1ps(c);
}

void emit(const Options& o, const json& j, const std::string& table) {
    if (o.json) std::cout << j.dump(2) << "\n";
    else std::cout << table;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const Options& o) {
    auto g = read_graph(o.in);
    auto rep = classify_report(g);
    json j{{"graph", describe(g)}, {"genus", arithmetic_genus(g)}, {"flags", to_json(rep.flags)}, {"reasons", rep.reasons}};
    json tails = json::array(), bridges = json::array(), chains = json::array(), weak = json::array();
    for (const auto& t : rep.tails) tails.push_back(t);
    for (const auto& b : rep.bridges) bridges.push_back(b);
    for (const auto& c : rep.chains) chains.push_back(to_json(c));
    for (const auto& c : rep.weak_chains) weak.push_back(to_json(c));
    j["elliptic_tails"] = tails;
    j["elliptic_bridges"] = bridges;
    j["elliptic_chains"] = chains;
    j["weak_elliptic_chains"] = weak;
    std::ostringstream os;
    os << describe(g) << "\narithmetic genus " << arithmetic_genus(g) << "\n";
    const auto& f = rep.flags;
    os << "dm_stable     " << yes(f.dm_stable) << "\npseudostable  " << yes(f.pseudostable) << "\nc_semistable  "
       << yes(f.c_semistable) << "\nc_stable      " << yes(f.c_stable) << "\nh_semistable  " << yes(f.h_semistable)
       << "\nh_stable      " << yes(f.h_stable) << "\n";
    for (const auto& r : rep.reasons) os << "  " << r << "\n";
    emit(o, j, os.str());
    return 0;
}

int cmd_family(const Options& o) {
    auto c = build(o);
    json j = to_json(c);
    j["canonical_weights"] = to_json(canonical_1ps(c));
    std::ostringstream os;
    os << family_name(c.family) << ": genus " << c.genus << ", " << c.total_coordinates << " coordinates\n"
       << describe(c.graph) << "\ncanonical weights " << j["canonical_weights"].dump() << "\n";
    if (o.json) std::cout << j.dump(2) << "\n";
    else std::cout << os.str();
    return 0;
}

int cmd_index(const Options& o) {
    auto c = build(o);
    auto rho = weights_for(o, c);
    std::vector<int> ms;
    for (long m : parse_int_list(o.m)) ms.push_back(static_cast<int>(m));
    auto reports = index_series(c, rho, ms);
    json j{{"family", family_name(c.family)}, {"genus", c.genus}, {"weights", to_json(rho)}};
    json rows = json::array();
    std::ostringstream os;
    os << family_name(c.family) << " genus " << c.genus << " weights " << to_json(rho).dump() << "\n";
    os << "m  weight_sum  average  mu  standard\n";
    for (const auto& r : reports) {
        json row = to_json(r);
        if (o.monomials) {
            auto s = evaluate_slice(c, r.m, make_order(rho));
            json st = json::array(), in = json::array();
            for (const auto& x : standard_monomials(s)) st.push_back(monomial_string(x));
            for (const auto& x : initial_monomials(s)) in.push_back(monomial_string(x));
            row["standard_monomials"] = st;
            row["initial_monomials"] = in;
        }
        rows.push_back(row);
        os << r.m << "  " << to_string(r.weight_sum) << "  " << to_string(r.average) << "  " << to_string(r.mu) << "  "
           << r.standard_count << (r.count_deviates ? " (count differs from expected)" : "") << "\n";
        if (r.chow_sign) os << "chow_sign " << *r.chow_sign << "\n";
    }
    j["degrees"] = rows;
    emit(o, j, os.str());
    return 0;
}

int cmd_basin(const Options& o) {
    BasinReport rep;
    if (!o.in.empty()) {
        auto g = read_graph(o.in);
        auto gens = torus_generators(g);
        rep = basin_membership(g, gens, parse_int_list(o.exponents));
    } else {
        auto c = build(o);
        rep = basin_membership(c, weights_for(o, c));
    }
    json j = to_json(rep);
    std::ostringstream os;
    for (const auto& e : rep.entries) {
        os << e.versal.ref.name << "  (";
        for (std::size_t i = 0; i < e.versal.parameter_weights.size(); ++i)
            os << (i ? "," : "") << to_string(e.versal.parameter_weights[i]);
        os << ")  " << (e.fate == Fate::Smoothable ? "smoothable" : "frozen") << "\n";
    }
    os << "generic member: " << describe(rep.generic) << "\n";
    emit(o, j, os.str());
    return 0;
}

int cmd_closed_orbit(const Options& o) {
    auto g = read_graph(o.in);
    if (o.mode != "c" && o.mode != "h") throw Error("--mode must be c or h");
    auto rep = o.mode == "c" ? c_closed_orbit_rep(g) : h_closed_orbit_rep(g);
    json j{{"mode", o.mode}, {"input", describe(g)}, {"representative", to_json(rep)}, {"summary", describe(rep)}};
    emit(o, j, describe(rep) + "\n");
    return 0;
}

int cmd_replacements(const Options& o) {
    auto g = read_graph(o.in);
    auto all = enumerate_c_replacements(g);
    json arr = json::array();
    std::ostringstream os;
    for (const auto& h : all) {
        arr.push_back({{"summary", describe(h)}, {"graph", to_json(h)}});
        os << describe(h) << "\n";
    }
    emit(o, {{"input", describe(g)}, {"count", all.size()}, {"configurations", arr}}, os.str());
    return 0;
}

int cmd_chow(const Options& o) {
    auto cert = certify_unstable(parse_chow_case(o.chow_case), o.g == 0 ? 4 : o.g);
    std::ostringstream os;
    for (const auto& [k, v] : cert.contributions) os << k << "  " << to_string(v) << "\n";
    os << "lower bound " << to_string(cert.lower_bound) << "\nthreshold   " << to_string(cert.threshold) << "\nverdict     "
       << (cert.verdict == Verdict::Unstable ? "unstable" : "inconclusive") << "\n";
    emit(o, to_json(cert), os.str());
    return 0;
}

int cmd_divisor(const Options& o) {
    const std::string& k = o.divisor_kind;
    int g = o.g == 0 ? 10 : o.g;
    json j{{"kind", k}};
    std::string text;
    if (k == "lambda-n") {
        auto d = lambda_n(o.n, g);
        j["class"] = to_json(d);
        text = d.str();
    } else if (k == "viehweg") {
        int m = static_cast<int>(parse_int_list(o.m).front());
        auto d = viehweg_class(o.n, m, g);
        j["class"] = to_json(d);
        j["asymptotic"] = to_json(viehweg_asymptotic(o.n, g));
        text = d.str() + "\nleading term in m: " + viehweg_asymptotic(o.n, g).str();
    } else if (k == "moriwaki") {
        auto d = moriwaki_decomposition(g);
        json cs = json::array();
        for (const auto& q : d.coefficients) {
            cs.push_back(to_string(q));
            text += to_string(q) + "\n";
        }
        j["coefficients"] = cs;
        j["identity_holds"] = d.identity_holds;
        j["all_positive"] = d.all_positive;
        text += std::string("identity ") + (d.identity_holds ? "holds" : "fails");
    } else if (k == "epsilon") {
        int m = static_cast<int>(parse_int_list(o.m).front());
        j["m"] = m;
        j["epsilon"] = to_string(epsilon_of_m(m));
        text = to_string(epsilon_of_m(m));
    } else if (k == "canonical") {
        auto d = canonical_alpha_class(parse_rational(o.alpha), g);
        j["class"] = to_json(d);
        text = d.str();
    } else {
        throw Error("unknown divisor kind '" + k + "'");
    }
    emit(o, j, text + "\n");
    return 0;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_paper_check(const Options& o) {
    auto m = run_paper_check(split_csv(o.only), !o.serial);
    if (o.json) {
        std::cout << to_json(m).dump(2) << "\n";
    } else {
        for (const auto& i : m.items) {
            std::cout << (i.pass ? "PASS " : "FAIL ") << i.id;
            if (!i.pass) std::cout << "  " << i.detail;
            std::cout << "\n";
        }
    }
    return m.all_pass() ? 0 : 1;
}

int cmd_fixtures(const Options& o) {
    std::filesystem::create_directories(o.out);
    for (const auto& [name, g] : paper_fixtures()) {
        std::ofstream f(std::filesystem::path(o.out) / (name + ".json"));
        f << to_json(g).dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GIT stability of bicanonical curves"};
    app.require_subcommand(1);
    Options o;
    auto fam = [&](CLI::App* s) {
        s->add_option("--family", o.family, "open-rosary, closed-rosary, broken-bead or tacnodal-tail");
        s->add_option("--g", o.g, "genus");
        s->add_option("--r", o.r, "rosary length");
    };
    auto common = [&](CLI::App* s) { s->add_flag("--json", o.json, "structured output"); };

    auto* classify = app.add_subcommand("classify", "stability flags of a curve graph");
    classify->add_option("--in", o.in, "graph document")->required();
    common(classify);

    auto* family = app.add_subcommand("family", "build a parametrized configuration");
    family->add_option("family", o.family)->required();
    family->add_option("--g", o.g);
    family->add_option("--r", o.r);
    common(family);

    auto* index = app.add_subcommand("index", "Hilbert-Mumford indices");
    fam(index);
    index->add_option("--m", o.m, "degrees, comma separated");
    index->add_option("--weights", o.weights, "coordinate weights");
    index->add_option("--exponents", o.exponents, "exponents of the torus generators");
    index->add_flag("--monomials", o.monomials, "list standard and initial monomials");
    common(index);

    auto* basin = app.add_subcommand("basin", "versal weights and basin of attraction");
    fam(basin);
    basin->add_option("--in", o.in, "graph document");
    basin->add_option("--weights", o.weights);
    basin->add_option("--exponents", o.exponents);
    common(basin);

    auto* orbit = app.add_subcommand("closed-orbit", "closed-orbit representative");
    orbit->add_option("--mode", o.mode, "c or h");
    orbit->add_option("--in", o.in)->required();
    common(orbit);

    auto* repl = app.add_subcommand("replacements", "c-semistable curves with a given pseudostable reduction");
    repl->add_option("--in", o.in)->required();
    common(repl);

    auto* chow = app.add_subcommand("chow-certify", "multiplicity certificate");
    chow->add_option("--case", o.chow_case)->required();
    chow->add_option("--g", o.g);
    common(chow);

    auto* div = app.add_subcommand("divisor", "divisor class identities");
    div->add_option("kind", o.divisor_kind, "lambda-n, viehweg, moriwaki, epsilon or canonical")->required();
    div->add_option("--n", o.n);
    div->add_option("--m", o.m);
    div->add_option("--g", o.g);
    div->add_option("--alpha", o.alpha);
    common(div);

    auto* check = app.add_subcommand("paper-check", "pinned golden suite");
    check->add_option("--only", o.only, "comma separated id prefixes");
    check->add_flag("--serial", o.serial, "run items one at a time");
    common(check);

    auto* fixtures = app.add_subcommand("fixtures", "write the built-in graph fixtures");
    fixtures->add_option("--out", o.out)->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*classify) return cmd_classify(o);
        if (*family) return cmd_family(o);
        if (*index) return cmd_index(o);
        if (*basin) return cmd_basin(o);
        if (*orbit) return cmd_closed_orbit(o);
        if (*repl) return cmd_replacements(o);
        if (*chow) return cmd_chow(o);
        if (*div) return cmd_divisor(o);
        if (*check) return cmd_paper_check(o);
        if (*fixtures) return cmd_fixtures(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
