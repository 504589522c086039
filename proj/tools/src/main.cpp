// windex: command-line front end
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "windex/error.hpp"
#include "windex/fibrations.hpp"
#include "windex/io.hpp"

using namespace windex;
using io::json;

namespace {

struct BackendOpts {
    std::string kind = "cpn";
    int p = 2;
    int n = 1;
    int order = 1;
    std::string table;  // json file for group / semilattice / custom presentations
};

void add_backend_opts(CLI::App* app, BackendOpts& b) {
    app->add_option("--backend", b.kind, "cpn | group | semilattice | bg | point | file")->capture_default_str();
    app->add_option("--p", b.p, "prime for cpn")->capture_default_str();
    app->add_option("--n", b.n, "exponent for cpn")->capture_default_str();
    app->add_option("--order", b.order, "group order for bg");
    app->add_option("--table", b.table, "json with a cayley_table, a meet_table or a presentation");
}

PresPtr make_pres(const BackendOpts& b) {
    if (b.kind == "cpn") return chain_presentation(b.p, b.n);
    if (b.kind == "bg") return build_presentation(OneObjectGroupoid{b.order});
    if (b.kind == "point") return build_presentation(TrivialPoint{});
    if (b.table.empty()) throw invalid_spec("--backend " + b.kind + " needs --table");
    json j = io::read_json_file(b.table);
    if (b.kind == "group")
        return build_presentation(FiniteGroupSpec{j.at("cayley_table").get<std::vector<std::vector<int>>>()});
    if (b.kind == "semilattice")
        return build_presentation(MeetSemilattice{j.at("elements").get<std::vector<std::string>>(),
                                                  j.at("meet_table").get<std::vector<std::vector<int>>>()});
    if (b.kind == "file") return io::presentation_from_json(j);
    throw invalid_spec("unknown backend '" + b.kind + "'");
}

// a system file, or a rep file carrying its support
Wis read_wis(const std::string& path) {
    json j = io::read_json_file(path);
    if (j.is_object() && j.contains("support")) return io::wis_from_json(j.at("support"));
    return io::wis_from_json(j);
}

// "c2", "c9", "c6": cyclic groups; prime powers use the chain backend
PresPtr group_by_name(const std::string& name) {
    if (name.size() < 2 || (name[0] != 'c' && name[0] != 'C')) throw invalid_spec("groups are named cN");
    const int n = std::stoi(name.substr(name[1] == '_' ? 2 : 1));
    if (n < 1) throw invalid_spec("bad group order");
    for (int p = 2; p <= n; ++p) {
        if (n % p) continue;
        int m = n, k = 0;
        while (m % p == 0) m /= p, ++k;
        if (m == 1) return chain_presentation(p, k);
        break;
    }
    return build_presentation(FiniteGroupSpec{FiniteGroup::cyclic(n).table()});
}

void emit(const json& j, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw invalid_spec("cannot write " + out);
    f << j.dump(2) << "\n";
}

void emit_text(const std::string& s, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << s;
        return;
    }
    std::ofstream f(out);
    if (!f) throw invalid_spec("cannot write " + out);
    f << s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumerate and check weak indexing systems"};
    app.require_subcommand(1);
    int status = 0;

    BackendOpts eb;
    std::string cls = "aE_unital", out, format, method = "brute";
    auto* en = app.add_subcommand("enumerate", "enumerate a class of systems and write its Hasse diagram");
    add_backend_opts(en, eb);
    en->add_option("--class", cls, "aE_unital | a_unital | unital | one_color_aE | indexing")->capture_default_str();
    en->add_option("--method", method, "brute | fiber")->capture_default_str();
    en->add_option("--out", out, "output file (.dot or .json)");
    en->add_option("--format", format, "dot | json (default from --out)");
    en->callback([&] {
        PresPtr p = make_pres(eb);
        const WisClass k = parse_wis_class(cls);
        Enumeration e;
        if (method == "fiber") {
            if (k != WisClass::unital) throw invalid_spec("fiberwise enumeration covers the unital class only");
            e = enumerate_wis_fiberwise(p).result;
        } else if (method == "brute") {
            e = enumerate_wis_bruteforce(p, k);
        } else {
            throw invalid_spec("unknown method '" + method + "'");
        }
        const HasseDiagram d = hasse(e);
        std::string fmt = format;
        if (fmt.empty()) fmt = out.size() > 5 && out.substr(out.size() - 5) == ".json" ? "json" : "dot";
        std::cerr << p->name << " " << wis_class_name(k) << ": " << e.systems.size() << " systems, "
                  << d.edges.size() << " covers\n";
        if (fmt == "dot")
            emit_text(export_dot(d, p->name + " " + wis_class_name(k)), out);
        else if (fmt == "json")
            emit_text(export_json(d), out);
        else
            throw invalid_spec("unknown format '" + fmt + "'");
    });

    BackendOpts tb;
    auto* tr = app.add_subcommand("transfers", "count and list transfer systems");
    add_backend_opts(tr, tb);
    tr->callback([&] {
        PresPtr p = make_pres(tb);
        const auto rs = enumerate_transfer_systems(*p);
        json j = {{"count", rs.size()}, {"systems", json::array()}};
        for (const auto& r : rs) j["systems"].push_back(io::transfer_to_json(*p, r));
        emit(j, "");
    });

    std::string vfile;
    int vbound = 0;
    auto* va = app.add_subcommand("validate", "check the axioms of a system");
    va->add_option("wis", vfile)->required();
    va->add_option("--bound", vbound, "closure bound (default from the presentation)")->envname("WINDEX_BOUND");
    va->callback([&] {
        Wis w = read_wis(vfile);
        const auto v = validate_wic(w, vbound);
        for (const auto& a : v.axioms)
            std::cout << (a.pass ? "ok   " : "FAIL ") << a.name << (a.witness.empty() ? "" : ": " + a.witness) << "\n";
        std::cout << annotate(w) << "\n";
        if (!v.ok()) status = 1;
    });

    std::string ja, jb;
    auto* jo = app.add_subcommand("join", "join of two systems");
    jo->add_option("a", ja)->required();
    jo->add_option("b", jb)->required();
    jo->callback([&] {
        Wis a = read_wis(ja);
        Wis b = read_wis(jb);
        emit(io::wis_to_json(join(a, b)), "");
    });

    BackendOpts fb;
    std::string rfile, ffile;
    auto* fi = app.add_subcommand("fiber", "unital systems with given fR and fold family, by sieves");
    add_backend_opts(fi, fb);
    fi->add_option("--R", rfile, "transfer system json")->required();
    fi->add_option("--family", ffile, "family json")->required();
    fi->callback([&] {
        json rj = io::read_json_file(rfile);
        PresPtr p = rj.contains("backend") || rj.contains("presentation") ? io::presentation_of(rj) : make_pres(fb);
        const TransferSystem r = io::transfer_from_json(*p, rj);
        const Family f = io::family_from_json(*p, io::read_json_file(ffile));
        json j = {{"admissible", admissible(p, r, f)}, {"systems", json::array()}};
        if (admissible(p, r, f))
            for (const auto& s : enumerate_sieves(p, r, codomain(*p, r) - f)) {
                json e = io::wis_to_json(fiber_from_sieve(p, r, f, s));
                e["sieve"] = io::sieve_to_json(*p, s);
                j["systems"].push_back(e);
            }
        j["count"] = j["systems"].size();
        emit(j, "");
    });

    std::string map_name, to_file, tw_file;
    auto* tp = app.add_subcommand("transport", "cocartesian transport along a fibration");
    tp->add_option("--map", map_name, "color | unit | fold | transfer | transfer_fold")->required();
    tp->add_option("--to", to_file, "target json: {\"members\":[...]} and/or {\"pairs\":[...]}")->required();
    tp->add_option("wis", tw_file)->required();
    tp->callback([&] {
        Wis w = read_wis(tw_file);
        const auto& p = w.pres();
        json tj = io::read_json_file(to_file);
        const FibMap m = parse_fib_map(map_name);
        Target t = fib_image(m, w);
        if (tj.contains("members")) t.family = io::family_from_json(p, tj);
        if (tj.contains("pairs")) t.transfer = io::transfer_from_json(p, tj);
        emit(io::wis_to_json(cocartesian_transport(m, w, t)), "");
    });

    std::string rep_name, group_name = "c2";
    auto* rp = app.add_subcommand("rep", "arity support of a named representation");
    rp->add_option("--name", rep_name, "sigma | lambda | lambda_Cp | lambda_Cp2 | trivial | zero")->required();
    rp->add_option("--group", group_name, "cN")->capture_default_str();
    rp->callback([&] {
        PresPtr p = group_by_name(group_name);
        const RepDescriptor v = named_rep(p, rep_name);
        json j = io::rep_to_json(v);
        j["support"] = io::wis_to_json(arity_support(v));
        emit(j, "");
    });

    std::string hfile;
    int product_bound = 4;
    auto* hu = app.add_subcommand("hull", "multiplicative hull of a unital system");
    hu->add_option("wis", hfile)->required();
    hu->add_option("--product-bound", product_bound)->capture_default_str();
    hu->callback([&] {
        Wis w = read_wis(hfile);
        Wis m = multiplicative_hull(w, product_bound);
        json j = io::wis_to_json(m);
        j["indexing_system"] = classify(m).indexing_system;
        emit(j, "");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const windex::error& e) {
        std::cerr << "windex: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "windex: bad json: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "windex: " << e.what() << "\n";
        return 2;
    }
    return status;
}
