// latcon: congruence counts, planarity and exhaustive sweeps for finite
// lattices given as cover lists.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latcon/latcon.hpp"

namespace {

using namespace latcon;

const char* yes_no(bool v) { return v ? "true" : "false"; }

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string format_map(const std::vector<int>& map) {
    std::string s;
    for (std::size_t i = 0; i < map.size(); ++i)
        s += (i ? " " : "") + std::to_string(i) + "->" + std::to_string(map[i]);
    return s;
}

std::string analyze(const Lattice& l) {
    std::ostringstream out;
    const IrreducibleSets irr = irreducibles(l);
    out << "n=" << l.size() << '\n';
    out << "Jir=" << bits::count(irr.jir) << '\n';
    out << "Mir=" << bits::count(irr.mir) << '\n';
    out << "Jred=" << bits::count(irr.jred) << '\n';
    out << "Mred=" << bits::count(irr.mred) << '\n';

    const std::uint64_t con = con_count(l);
    out << "Con=" << con << '\n';
    if (l.size() <= kOracleMaxSize) {
        const std::uint64_t oracle = con_count_oracle(l);
        out << "Con_oracle=" << oracle << '\n';
        out << "Con_agree=" << yes_no(oracle == con) << '\n';
    }

    const JirQuasiorder q = jir_quasiorder(l);
    out << "Qu_size=" << q.qu_poset.size() << '\n';
    out << "Qu_covers=" << cover_list(q.qu_poset) << '\n';
    out << "Qu_classes=";
    for (int c = 0; c < q.qu_poset.size(); ++c) {
        std::vector<int> members;
        for (std::size_t i = 0; i < q.jir_list.size(); ++i)
            if (q.block_of[i] == c) members.push_back(q.jir_list[i]);
        out << (c ? " | " : "") << join_ints(members);
    }
    out << '\n';

    const PlanarityVerdict kr = is_planar_kr(l);
    out << "planar=" << yes_no(kr.planar) << '\n';
    if (kr.witness)
        out << "planar_witness=" << kr.witness->entry << (kr.witness->into_dual ? " (dual)" : "") << ": "
            << format_map(kr.witness->embedding.map) << '\n';
    out << "planar_graph=" << yes_no(is_planar_graph_oracle(l)) << '\n';
    out << "dismantlable=" << yes_no(is_dismantlable(l)) << '\n';
    const bool many = exceeds_threshold(con, l.size());
    out << "congruences=" << (many ? "many" : "few") << '\n';
    return out.str();
}

Lattice construct(const std::string& family, const std::vector<std::string>& args) {
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw Error("UsageError", "construct " + family + " takes " + std::to_string(k) + " argument(s)");
    };
    auto integer = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw Error("UsageError", "expected an integer, got '" + s + "'");
        }
    };
    if (family == "chain") return want(1), make_chain(integer(args[0]));
    if (family == "boolean") return want(1), make_boolean(integer(args[0]));
    if (family == "mk") return want(1), make_mk(integer(args[0]));
    if (family == "lfamily") return want(1), make_l_family(integer(args[0]));
    if (family == "n5") return want(0), make_n5();
    if (family == "ordsum") return want(2), make_ordinal_sum(read_lattice(args[0]), read_lattice(args[1]));
    if (family == "product") return want(2), make_product(read_lattice(args[0]), read_lattice(args[1]));
    if (family == "dual") return want(1), dual(read_lattice(args[0]));
    if (family == "kr") {
        want(1);
        for (const KRCatalogEntry& e : kr_catalog_all())
            if (e.name == args[0]) return validate_lattice(e.poset);
        throw Error("UsageError", "no catalog entry named '" + args[0] + "'");
    }
    throw Error("UsageError", "unknown family '" + family + "'");
}

std::string embed(const Poset& k, const Poset& l) {
    std::ostringstream out;
    auto side = [&](const char* label, const Poset& target) {
        out << label << '=';
        if (auto m = find_embedding(k, target))
            out << format_map(m->map) << '\n';
        else
            out << "none\n";
    };
    side("embedding", l);
    side("embedding_dual", l.dual());
    return out.str();
}

std::string catalog(int max_size, const std::string& write_dir) {
    std::ostringstream out;
    out << "name size Jred Mred Jir Mir self_dual\n";
    for (const KRCatalogEntry& e : kr_catalog(max_size)) {
        out << e.name << ' ' << e.size << ' ' << e.jred << ' ' << e.mred << ' ' << e.jir << ' ' << e.mir << ' '
            << yes_no(e.self_dual) << '\n';
        if (!write_dir.empty()) {
            std::filesystem::create_directories(write_dir);
            const std::string file = write_dir + "/" + e.family + "_" + std::to_string(e.index) + ".lat";
            write_text(file, serialize_lattice(validate_lattice(e.poset), {e.name}));
        }
    }
    return out.str();
}

// One line on stderr: error: kind=<Kind> message=<text>
int fail(const std::string& kind, const std::string& message) {
    std::string flat = message;
    for (char& c : flat)
        if (c == '\n' || c == '\r') c = ' ';
    std::cerr << "error: kind=" << kind << " message=" << flat << '\n';
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Congruences and planarity of finite lattices"};
    app.require_subcommand(1);

    std::string file, file2, out_path = "-", family, write_dir;
    std::vector<std::string> params;
    int n = 0, jobs = 1, max_n = kDefaultMaxEnumeration, max_size = 16;
    bool records = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Report irreducibles, |Con|, Qu(L), planarity");
    analyze_cmd->add_option("file", file, "Lattice file, - for stdin")->required();

    auto* construct_cmd = app.add_subcommand("construct", "Build a lattice: chain n | boolean k | mk k | lfamily n | n5 | "
                                                          "ordsum A B | product A B | dual A | kr NAME");
    construct_cmd->add_option("family", family)->required();
    construct_cmd->add_option("params", params);
    construct_cmd->add_option("-o,--output", out_path, "Output file, - for stdout");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List every n-element lattice up to isomorphism");
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Distinct |Con| values over all n-element lattices");
    auto* verify_cmd = app.add_subcommand("verify", "Check that many congruences imply planarity");
    for (auto* cmd : {enumerate_cmd, spectrum_cmd, verify_cmd}) {
        cmd->add_option("n", n)->required()->check(CLI::Range(1, kHardMaxEnumeration));
        cmd->add_option("--max-n", max_n, "Largest n accepted")->check(CLI::Range(1, kHardMaxEnumeration));
    }
    for (auto* cmd : {spectrum_cmd, verify_cmd})
        cmd->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--records", records, "Print one record per class");

    auto* embed_cmd = app.add_subcommand("embed", "Find K as a subposet of L and of dual L");
    embed_cmd->add_option("K", file)->required();
    embed_cmd->add_option("L", file2)->required();

    auto* dot_cmd = app.add_subcommand("dot", "Hasse diagram in DOT");
    dot_cmd->add_option("file", file)->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "List the forbidden lattices");
    catalog_cmd->add_option("--max-size", max_size)->check(CLI::Range(1, kMaxElements));
    catalog_cmd->add_option("--write-dir", write_dir, "Also write one .lat file per entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("UsageError", e.what());
    }

    try {
        if (analyze_cmd->parsed()) {
            std::cout << analyze(read_lattice(file));
        } else if (construct_cmd->parsed()) {
            const Lattice l = construct(family, params);
            write_text(out_path, serialize_lattice(l));
        } else if (enumerate_cmd->parsed()) {
            const std::vector<Lattice> level = enumerate_lattices(n, max_n);
            std::cout << "n=" << n << "\nclasses=" << level.size() << '\n';
            for (const Lattice& l : level) std::cout << cover_list(l.poset()) << '\n';
        } else if (spectrum_cmd->parsed()) {
            std::cout << format_spectrum(spectrum(n, jobs, max_n));
        } else if (verify_cmd->parsed()) {
            const TheoremReport r = verify_theorem(n, jobs, max_n);
            std::cout << format_theorem(r, records);
            return r.violations.empty() ? 0 : 1;
        } else if (embed_cmd->parsed()) {
            std::cout << embed(read_poset(file), read_poset(file2));
        } else if (dot_cmd->parsed()) {
            std::cout << emit_dot(read_lattice(file));
        } else if (catalog_cmd->parsed()) {
            std::cout << catalog(max_size, write_dir);
        }
    } catch (const Error& e) {
        return fail(e.kind(), e.what());
    } catch (const std::exception& e) {
        return fail("InternalError", e.what());
    }
    return 0;
}
