#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qspec/analysis.hpp"
#include "qspec/document.hpp"
#include "qspec/errors.hpp"
#include "qspec/instances.hpp"

namespace {

using namespace qspec;

long parse_number(const std::string& s, const char* what) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(std::string(what) + ": expected a number, got \"" + s +
                         "\"");
    return v;
}

/// Generator grammar:
///   zn:N | chain:K | boolean:K | downset:N[:a<b,c<d,...]
///   | random:SEED[,SIZE] | product:SPEC*SPEC | interval:LABEL:SPEC
/// product splits at the first top-level '*'; interval takes the floor
/// element by label. Only random can come back empty.
std::optional<Quantale> generate(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("generator spec needs kind:args, got \"" + spec +
                         "\"");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);

    if (kind == "zn") return zn_ideals(parse_number(rest, "zn"));
    if (kind == "chain")
        return chain_frame(static_cast<int>(parse_number(rest, "chain")));
    if (kind == "boolean")
        return boolean_frame(static_cast<int>(parse_number(rest, "boolean")));

    if (kind == "downset") {
        Poset p;
        const auto c2 = rest.find(':');
        p.n = static_cast<int>(
            parse_number(c2 == std::string::npos ? rest : rest.substr(0, c2),
                         "downset points"));
        if (c2 != std::string::npos) {
            std::istringstream pairs(rest.substr(c2 + 1));
            std::string tok;
            while (std::getline(pairs, tok, ',')) {
                const auto lt = tok.find('<');
                if (lt == std::string::npos)
                    throw ParseError("downset relation \"" + tok +
                                     "\" needs the form a<b");
                p.below.emplace_back(
                    static_cast<int>(
                        parse_number(tok.substr(0, lt), "downset relation")),
                    static_cast<int>(
                        parse_number(tok.substr(lt + 1), "downset relation")));
            }
        }
        return downset_frame(p);
    }

    if (kind == "random") {
        const auto comma = rest.find(',');
        const auto seed = static_cast<std::uint64_t>(parse_number(
            comma == std::string::npos ? rest : rest.substr(0, comma),
            "random seed"));
        const int size =
            comma == std::string::npos
                ? 3 + static_cast<int>(seed % 4)
                : static_cast<int>(
                      parse_number(rest.substr(comma + 1), "random size"));
        return random_quantale(seed, size);
    }

    if (kind == "product") {
        const auto star = rest.find('*');
        if (star == std::string::npos)
            throw ParseError("product spec needs two factors: \"" + rest +
                             "\"");
        auto left = generate(rest.substr(0, star));
        auto right = generate(rest.substr(star + 1));
        if (!left || !right) return std::nullopt;
        return product_quantale(*left, *right);
    }

    if (kind == "interval") {
        const auto c2 = rest.find(':');
        if (c2 == std::string::npos)
            throw ParseError("interval spec needs interval:LABEL:SPEC");
        const std::string label = rest.substr(0, c2);
        auto base = generate(rest.substr(c2 + 1));
        if (!base) return std::nullopt;
        for (Elem x = 0; x < base->size(); ++x)
            if (base->label(x) == label)
                return interval_quantale(*base, x).q;
        throw ParseError("no element labeled \"" + label +
                         "\" in the base instance");
    }

    throw ParseError("unknown generator kind \"" + kind + "\"");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"finite integral commutative quantales: spectra, "
                 "reticulation, topologies, and the characterization registry"};
    app.require_subcommand(1);

    std::string val_path;
    CLI::App* validate =
        app.add_subcommand("validate", "check a JSON instance against the "
                                       "lattice and quantale laws");
    validate->add_option("path", val_path, "instance document")->required();

    std::string ana_path, gen_spec, theorems = "all", dot_dir, json_out;
    bool topology = false;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "full report: spectra, classes, registry verdicts");
    analyze->add_option("path", ana_path, "instance document");
    analyze->add_option("--gen", gen_spec, "generate instead of reading");
    analyze->add_option("--theorems", theorems,
                        "comma-separated registry ids, or all");
    analyze->add_flag("--topology", topology, "include per-space tables");
    analyze->add_option("--dot", dot_dir, "write DOT diagrams here");
    analyze->add_option("--json", json_out, "write the JSON report here");

    std::string families = "zn,chain,downset,product,random";
    int max_size = 0, seeds = 200;
    std::uint64_t seed_base = 1;
    CLI::App* batch = app.add_subcommand(
        "batch", "run every battery over a generated family");
    batch->add_option("--family", families,
                      "comma-separated: zn, chain, downset, product, random");
    batch->add_option("--max-size", max_size,
                      "cap the generator parameter per family");
    batch->add_option("--seed", seed_base, "first random seed");
    batch->add_option("--seeds", seeds, "number of random seeds");

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) {
        const QuantaleDocument doc = load_document(val_path);
        std::cout << "valid: " << (doc.name.empty() ? val_path : doc.name)
                  << " (" << doc.q.size() << " elements)\n";
        return 0;
    }

    if (analyze->parsed()) {
        if (ana_path.empty() == gen_spec.empty())
            throw ParseError("analyze needs exactly one of: path, --gen");
        std::string name;
        std::optional<Quantale> q;
        if (!ana_path.empty()) {
            QuantaleDocument doc = load_document(ana_path);
            name = doc.name.empty() ? ana_path : doc.name;
            q = std::move(doc.q);
        } else {
            name = gen_spec;
            q = generate(gen_spec);
            if (!q) {
                std::cout << "no quantale found for " << gen_spec
                          << " within the attempt budget\n";
                return 0;
            }
        }
        const std::vector<std::string> ids =
            theorems == "all" ? std::vector<std::string>{}
                              : split_commas(theorems);
        const InstanceAnalysis a =
            analyze_instance(std::move(name), *std::move(q), ids);
        std::cout << render_text(a, topology);
        if (!json_out.empty()) {
            std::ofstream out(json_out, std::ios::binary);
            if (!out) throw ParseError("cannot write " + json_out);
            out << render_json(a, topology);
        }
        if (!dot_dir.empty()) write_dot_files(a, dot_dir);
        return a.mismatch ? 3 : 0;
    }

    BatteryOptions opts;
    opts.families = split_commas(families);
    opts.random_seeds = seeds;
    opts.seed_base = seed_base;
    if (max_size > 0) {
        opts.zn_max = max_size;
        opts.chain_max = max_size;
        opts.poset_points_max = std::min(max_size, 5);
    }
    const BatterySummary s = run_battery(opts, &std::cout);
    std::cout << render_summary(s);
    return s.clean() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
