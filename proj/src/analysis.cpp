#include "qspec/analysis.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "qspec/errors.hpp"
#include "qspec/instances.hpp"

namespace qspec {
namespace {

using nlohmann::ordered_json;

const char* yn(bool b) { return b ? "yes" : "no"; }

const char* verdict_name(TheoremVerdict v) {
    switch (v) {
        case TheoremVerdict::kVerified: return "VERIFIED";
        case TheoremVerdict::kMismatch: return "MISMATCH";
        case TheoremVerdict::kNotApplicable: return "NOT APPLICABLE";
    }
    return "?";
}

const char* verdict_key(TheoremVerdict v) {
    switch (v) {
        case TheoremVerdict::kVerified: return "verified";
        case TheoremVerdict::kMismatch: return "mismatch";
        case TheoremVerdict::kNotApplicable: return "not-applicable";
    }
    return "?";
}

std::string labels_of(const Quantale& q, const std::vector<Elem>& es) {
    std::string out = "{";
    for (Elem e : es) {
        if (out.size() > 1) out += ", ";
        out += q.label(e);
    }
    return out + "}";
}

std::string labels_of(const Quantale& q, const ElemSet& es) {
    std::vector<Elem> v;
    for (std::size_t x = es.find_first(); x != kNoElem; x = es.find_next(x))
        v.push_back(static_cast<Elem>(x));
    return labels_of(q, v);
}

void property_row(std::ostream& out, const std::string& name,
                  const FiniteSpace& sp) {
    const SpaceProperties p = space_properties(sp);
    out << "  " << std::left << std::setw(10) << name << std::right
        << std::setw(7) << std::popcount(sp.ground) << std::setw(5) << yn(p.t0)
        << std::setw(5) << yn(p.t1) << std::setw(5) << yn(p.hausdorff)
        << std::setw(10) << yn(p.discrete) << std::setw(9)
        << yn(p.zero_dimensional) << std::setw(8) << yn(p.normal_space)
        << std::setw(9) << yn(p.compact) << std::setw(9)
        << yn(p.boolean_space) << "\n";
}

ordered_json property_json(const FiniteSpace& sp) {
    const SpaceProperties p = space_properties(sp);
    ordered_json j;
    j["points"] = std::popcount(sp.ground);
    j["t0"] = p.t0;
    j["t1"] = p.t1;
    j["hausdorff"] = p.hausdorff;
    j["discrete"] = p.discrete;
    j["zero_dimensional"] = p.zero_dimensional;
    j["normal"] = p.normal_space;
    j["compact"] = p.compact;
    j["boolean"] = p.boolean_space;
    return j;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string sanitize_filename(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
                c == '-' || c == '_')
                   ? c
                   : '_';
    return out;
}

}  // namespace

InstanceAnalysis analyze_instance(std::string name, Quantale q,
                                  const std::vector<std::string>& ids) {
    std::vector<std::string> wanted = ids.empty() ? theorem_ids() : ids;
    for (const auto& id : wanted) {
        const auto& known = theorem_ids();
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw ParseError("unknown theorem id: " + id);
    }
    InstanceAnalysis a{std::move(name), make_context(std::move(q)), {}, false};
    for (const auto& id : wanted) {
        a.theorems.push_back(verify_theorem(a.ctx, id));
        if (a.theorems.back().verdict == TheoremVerdict::kMismatch)
            a.mismatch = true;
    }
    return a;
}

std::string render_text(const InstanceAnalysis& a, bool topology) {
    const AnalysisContext& ctx = a.ctx;
    const Quantale& q = ctx.q;
    std::ostringstream out;

    out << "instance " << a.name << ": " << q.size() << " elements\n";
    const ClassReport& c = ctx.classes;
    out << "classes: hyperarchimedean=" << yn(c.hyperarchimedean)
        << " normal=" << yn(c.normal) << " b-normal=" << yn(c.b_normal)
        << " mp=" << yn(c.mp) << " pf=" << yn(c.pf)
        << " semiprime=" << yn(c.semiprime) << "\n";
    out << "spec: " << labels_of(q, ctx.sr.spec)
        << "  max: " << labels_of(q, ctx.sr.max_elems)
        << "  min: " << labels_of(q, ctx.sr.min_elems) << "\n";
    out << "radical of bottom: " << q.label(ctx.sr.radical_map[q.bottom()])
        << "  jacobson: " << q.label(ctx.sr.jacobson) << "\n";
    out << "center: " << labels_of(q, ctx.center) << "\n";
    out << "reticulation: " << ctx.ret.lat.size() << " classes";
    if (q.size() <= 64) {
        out << "; lambda:";
        for (Elem x = 0; x < q.size(); ++x)
            out << " " << q.label(x) << "->"
                << q.label(ctx.ret.carrier[ctx.ret.lambda[x]]);
    }
    out << "\n";
    out << "pierce spectrum: " << labels_of(q, ctx.pierce.points) << "\n";

    for (const TheoremReport& r : a.theorems) {
        out << r.id << " " << r.title << ": " << verdict_name(r.verdict);
        if (!r.guard.empty()) out << " (" << r.guard << ")";
        out << "\n";
        for (const ClauseReport& cl : r.clauses) {
            const char* mark = cl.vacuous ? "[v]"
                               : cl.skipped ? "[s]"
                               : cl.holds ? "[+]"
                                          : "[-]";
            out << "  " << mark << " " << cl.label;
            if (!cl.witness.empty()) out << " -- " << cl.witness;
            out << "\n";
        }
    }

    if (topology) {
        out << "topology:\n  " << std::left << std::setw(10) << "space"
            << std::right << std::setw(7) << "points" << std::setw(5) << "T0"
            << std::setw(5) << "T1" << std::setw(5) << "T2" << std::setw(10)
            << "discrete" << std::setw(9) << "zerodim" << std::setw(8)
            << "normal" << std::setw(9) << "compact" << std::setw(9)
            << "boolean" << "\n";
        property_row(out, "zariski", ctx.top.zariski);
        property_row(out, "flat", ctx.top.flat);
        property_row(out, "patch", ctx.top.patch);
        property_row(out, "max-z", ctx.top.max_z);
        property_row(out, "max-f", ctx.top.max_f);
        property_row(out, "min-z", ctx.top.min_z);
        property_row(out, "min-f", ctx.top.min_f);
        property_row(out, "pierce", ctx.pierce.space);
    }
    return out.str();
}

std::string render_json(const InstanceAnalysis& a, bool topology) {
    const AnalysisContext& ctx = a.ctx;
    const Quantale& q = ctx.q;
    ordered_json j;
    j["name"] = a.name;
    j["elements"] = q.size();

    ordered_json cls;
    cls["hyperarchimedean"] = ctx.classes.hyperarchimedean;
    cls["normal"] = ctx.classes.normal;
    cls["b_normal"] = ctx.classes.b_normal;
    cls["mp"] = ctx.classes.mp;
    cls["pf"] = ctx.classes.pf;
    cls["semiprime"] = ctx.classes.semiprime;
    j["classes"] = std::move(cls);

    auto label_array = [&q](const std::vector<Elem>& es) {
        ordered_json arr = ordered_json::array();
        for (Elem e : es) arr.push_back(q.label(e));
        return arr;
    };
    ordered_json sp;
    sp["spec"] = label_array(ctx.sr.spec);
    sp["max"] = label_array(ctx.sr.max_elems);
    sp["min"] = label_array(ctx.sr.min_elems);
    sp["radical_of_bottom"] = q.label(ctx.sr.radical_map[q.bottom()]);
    sp["jacobson"] = q.label(ctx.sr.jacobson);
    sp["semiprime"] = ctx.sr.semiprime;
    j["spectrum"] = std::move(sp);

    ordered_json center = ordered_json::array();
    for (std::size_t x = ctx.center.find_first(); x != kNoElem;
         x = ctx.center.find_next(x))
        center.push_back(q.label(static_cast<Elem>(x)));
    j["center"] = std::move(center);

    ordered_json ret;
    ret["classes"] = ctx.ret.lat.size();
    ordered_json lambda = ordered_json::array();
    for (Elem x = 0; x < q.size(); ++x)
        lambda.push_back(ordered_json::array(
            {q.label(x), q.label(ctx.ret.carrier[ctx.ret.lambda[x]])}));
    ret["lambda"] = std::move(lambda);
    j["reticulation"] = std::move(ret);

    j["pierce"] = ordered_json{{"points", label_array(ctx.pierce.points)}};

    ordered_json ths = ordered_json::array();
    for (const TheoremReport& r : a.theorems) {
        ordered_json tj;
        tj["id"] = r.id;
        tj["title"] = r.title;
        tj["verdict"] = verdict_key(r.verdict);
        if (!r.guard.empty()) tj["guard"] = r.guard;
        ordered_json cs = ordered_json::array();
        for (const ClauseReport& cl : r.clauses) {
            ordered_json cj;
            cj["label"] = cl.label;
            cj["holds"] = cl.holds;
            cj["vacuous"] = cl.vacuous;
            cj["skipped"] = cl.skipped;
            if (!cl.witness.empty()) cj["witness"] = cl.witness;
            cs.push_back(std::move(cj));
        }
        tj["clauses"] = std::move(cs);
        ths.push_back(std::move(tj));
    }
    j["theorems"] = std::move(ths);

    if (topology) {
        ordered_json tops;
        tops["zariski"] = property_json(ctx.top.zariski);
        tops["flat"] = property_json(ctx.top.flat);
        tops["patch"] = property_json(ctx.top.patch);
        tops["max_z"] = property_json(ctx.top.max_z);
        tops["max_f"] = property_json(ctx.top.max_f);
        tops["min_z"] = property_json(ctx.top.min_z);
        tops["min_f"] = property_json(ctx.top.min_f);
        tops["pierce"] = property_json(ctx.pierce.space);
        j["topology"] = std::move(tops);
    }
    return j.dump(2) + "\n";
}

void write_dot_files(const InstanceAnalysis& a, const std::string& dir) {
    const Quantale& q = a.ctx.q;
    const std::string base = dir + "/" + sanitize_filename(a.name);

    std::ofstream hasse(base + "-hasse.dot");
    if (!hasse) throw ParseError("cannot write " + base + "-hasse.dot");
    hasse << "digraph order {\n  rankdir=BT;\n";
    for (Elem x = 0; x < q.size(); ++x)
        hasse << "  n" << x << " [label=\"" << dot_escape(q.label(x))
              << "\"];\n";
    for (auto [lo, hi] : q.lattice().cover_pairs())
        hasse << "  n" << lo << " -> n" << hi << ";\n";
    hasse << "}\n";

    // Specialization order of the spectrum: edges follow the cover relation
    // of the induced order on primes.
    const auto& pts = a.ctx.top.points;
    std::ofstream spec(base + "-spec.dot");
    if (!spec) throw ParseError("cannot write " + base + "-spec.dot");
    spec << "digraph spectrum {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
        spec << "  p" << i << " [label=\"" << dot_escape(q.label(pts[i]))
             << "\"];\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j || !q.leq(pts[i], pts[j])) continue;
            bool covered = true;
            for (std::size_t k = 0; k < pts.size() && covered; ++k)
                covered = k == i || k == j || !q.leq(pts[i], pts[k]) ||
                          !q.leq(pts[k], pts[j]);
            if (covered) spec << "  p" << i << " -> p" << j << ";\n";
        }
    spec << "}\n";
}

namespace {

/// In any space, a point misses cl(S) exactly when some open around it
/// misses S; with the full open family on hand this is the definitional
/// closure, independent of the neighborhood tables the engine uses.
PointSet closure_from_opens(const FiniteSpace& sp, PointSet s) {
    PointSet miss = 0;
    for (PointSet o : sp.opens)
        if ((o & s) == 0) miss |= o;
    return sp.ground & ~miss;
}

bool flat_closure_oracle(const AnalysisContext& ctx, std::string* w) {
    const FiniteSpace& fl = ctx.top.flat;
    const int np = static_cast<int>(ctx.top.points.size());
    const PointSet all =
        np >= 64 ? ~PointSet(0) : (PointSet(1) << np) - 1;

    std::vector<PointSet> below(np, 0);  // primes below each point, by order
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            if (ctx.q.leq(ctx.top.points[j], ctx.top.points[i]))
                below[i] |= PointSet(1) << j;

    auto closed_under = [&](PointSet s) {
        PointSet want = 0;
        for (int i = 0; i < np; ++i)
            if (s >> i & 1) want |= below[i];
        const PointSet got = fl.materialized ? closure_from_opens(fl, s)
                                             : closure(fl, s);
        return got == want;
    };

    for (int i = 0; i < np; ++i)
        if (!closed_under(PointSet(1) << i)) {
            *w = "flat closure of {" + ctx.q.label(ctx.top.points[i]) +
                 "} is not the set of primes below it";
            return false;
        }
    if (np <= 8) {
        for (PointSet s = 0; s <= all; ++s)
            if (!closed_under(s)) {
                *w = "flat closure of a subset is not the union of the "
                     "per-point closures";
                return false;
            }
    } else {
        std::uint64_t x = 0x9e3779b97f4a7c15ull + np;
        for (int t = 0; t < 256; ++t) {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            if (!closed_under(x & all)) {
                *w = "flat closure of a sampled subset is not the union of "
                     "the per-point closures";
                return false;
            }
        }
    }
    return true;
}

/// Radical-element frame against the reticulation: the class map restricted
/// to radical elements must be an isomorphism turning joins into joins and
/// multiplication into meet.
bool radical_lattice_isomorphism(const AnalysisContext& ctx, std::string* w) {
    const RadicalFrame& rf = ctx.radical;
    const Lattice& L = ctx.ret.lat;
    const int n = static_cast<int>(rf.to_parent.size());
    if (n != L.size()) {
        *w = "radical frame has " + std::to_string(n) +
             " elements, reticulation " + std::to_string(L.size());
        return false;
    }
    for (Elem x = 0; x < n; ++x) {
        const Elem a = rf.to_parent[x];
        if (ctx.ret.carrier[ctx.ret.lambda[a]] != a) {
            *w = "class of radical element " + ctx.q.label(a) +
                 " has a different representative";
            return false;
        }
    }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem la = ctx.ret.lambda[rf.to_parent[x]];
            const Elem lb = ctx.ret.lambda[rf.to_parent[y]];
            if (L.join(la, lb) !=
                    ctx.ret.lambda[rf.to_parent[rf.q.join(x, y)]] ||
                L.meet(la, lb) !=
                    ctx.ret.lambda[rf.to_parent[rf.q.mul(x, y)]]) {
                *w = "frame operations disagree at " +
                     ctx.q.label(rf.to_parent[x]) + ", " +
                     ctx.q.label(rf.to_parent[y]);
                return false;
            }
        }
    return true;
}

/// Spectrum transport: u carries the prime spectrum onto the meet-primes of
/// the reticulation; it must be a homeomorphism for all three topologies.
bool reticulation_transport(const AnalysisContext& ctx, std::string* w) {
    const SpecTransfer tr = spec_transfer_maps(ctx.q, ctx.sr, ctx.ret);
    Quantale lq = frame_quantale(ctx.ret.lat);
    const SpectrumReport lsr = compute_spectra(lq);
    if (lsr.spec != tr.lattice_primes) {
        *w = "reticulation spectrum disagrees with the transfer primes";
        return false;
    }
    const SpectralTopologies ltop = build_topologies(lq, lsr);

    const int np = static_cast<int>(ctx.top.points.size());
    std::vector<int> pmap(np);
    for (int i = 0; i < np; ++i) pmap[i] = static_cast<int>(tr.u[i]);

    const struct {
        const FiniteSpace& from;
        const FiniteSpace& to;
        const char* what;
    } rows[] = {{ctx.top.zariski, ltop.zariski, "zariski"},
                {ctx.top.patch, ltop.patch, "patch"},
                {ctx.top.flat, ltop.flat, "flat"}};
    std::string detail;
    for (const auto& r : rows)
        if (!homeomorphic_by(r.from, r.to, pmap, &detail)) {
            *w = std::string(r.what) + " transport: " + detail;
            return false;
        }
    return true;
}

void note_failure(BatterySummary& s, long& counter, const std::string& name,
                  const std::string& what, const std::string& witness) {
    ++counter;
    if (s.failures.size() < 200)
        s.failures.push_back(name + ": " + what +
                             (witness.empty() ? "" : ": " + witness));
}

/// All acceptance batteries on one instance.
void process_instance(const std::string& name, Quantale q,
                      BatterySummary& s) {
    ++s.instances;
    AnalysisContext ctx = make_context(std::move(q));
    std::string w;

    // Law batteries over the raw structure.
    const auto law_start = std::chrono::steady_clock::now();
    if (!check_comaximal_laws(ctx.q, &w))
        note_failure(s, s.law_failures, name, "comaximal laws", w);
    if (!check_residuation_laws(ctx.q, &w))
        note_failure(s, s.law_failures, name, "residuation laws", w);
    if (!check_center_laws(ctx.q, ctx.center, &w))
        note_failure(s, s.law_failures, name, "center laws", w);
    if (!check_radical_laws(ctx.q, ctx.sr, &w))
        note_failure(s, s.law_failures, name, "radical laws", w);
    s.law_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      law_start)
            .count();

    // Reticulation duality.
    if (!check_reticulation_map_laws(ctx.q, ctx.sr, ctx.ret, &w))
        note_failure(s, s.duality_failures, name, "reticulation map laws", w);
    if (!check_transfer_laws(ctx.q, ctx.sr, ctx.ret, &w))
        note_failure(s, s.duality_failures, name, "transfer laws", w);
    if (!verify_center_isomorphism(ctx.q, ctx.center, ctx.ret, &w))
        note_failure(s, s.duality_failures, name, "center isomorphism", w);
    if (!radical_lattice_isomorphism(ctx, &w))
        note_failure(s, s.duality_failures, name, "radical frame isomorphism",
                     w);
    if (!reticulation_transport(ctx, &w))
        note_failure(s, s.duality_failures, name, "spectrum transport", w);

    // Topological facts plus the independent closure oracle.
    if (!check_topology_facts(ctx.q, ctx.sr, ctx.top, &w))
        note_failure(s, s.closure_failures, name, "topology facts", w);
    if (!flat_closure_oracle(ctx, &w))
        note_failure(s, s.closure_failures, name, "flat-closure oracle", w);

    // The registry.
    std::vector<TheoremReport> reports;
    classify_all(ctx, &reports);
    for (const TheoremReport& r : reports) {
        ++s.reports;
        switch (r.verdict) {
            case TheoremVerdict::kVerified:
                ++s.verified;
                break;
            case TheoremVerdict::kNotApplicable:
                ++s.not_applicable;
                break;
            case TheoremVerdict::kMismatch: {
                std::string detail;
                for (const ClauseReport& cl : r.clauses)
                    if (!cl.vacuous && !cl.skipped && !cl.holds) {
                        detail = cl.label +
                                 (cl.witness.empty() ? "" : " (" + cl.witness +
                                                                ")");
                        break;
                    }
                note_failure(s, s.mismatches, name, r.id + " MISMATCH",
                             detail);
                break;
            }
        }
        for (const ClauseReport& cl : r.clauses) {
            if (cl.vacuous) ++s.vacuous_clauses[r.id + " " + cl.label];
            if (cl.skipped) ++s.skipped_clauses;
        }
    }

    // Finite-scale degeneracy facts backing the ledger in the summary.
    if (!is_hyperarchimedean(ctx.above_jacobson.q, ctx.above_jacobson_center,
                             &w))
        note_failure(s, s.degeneracy_failures, name,
                     "interval above the jacobson element not "
                     "hyperarchimedean",
                     w);
    if (!same_topology(ctx.top.max_z, ctx.top.max_f) ||
        !space_properties(ctx.top.max_z).discrete)
        note_failure(s, s.degeneracy_failures, name,
                     "maximal subspace not discrete in both topologies", "");
    if (!same_topology(ctx.top.min_z, ctx.top.min_f) ||
        !space_properties(ctx.top.min_z).discrete)
        note_failure(s, s.degeneracy_failures, name,
                     "minimal subspace not discrete in both topologies", "");
    if (ctx.classes.normal != ctx.classes.b_normal)
        note_failure(s, s.degeneracy_failures, name,
                     "normal and b-normal disagree", "");
    for (const TheoremReport& r : reports)
        if (r.id == "T7.9" && r.verdict != TheoremVerdict::kNotApplicable)
            for (const ClauseReport& cl : r.clauses)
                if (!cl.vacuous && !cl.skipped && !cl.holds)
                    note_failure(s, s.degeneracy_failures, name,
                                 "normal instance without a flat retraction "
                                 "onto max",
                                 cl.witness);
}

}  // namespace

BatterySummary run_battery(const BatteryOptions& opts,
                           std::ostream* progress) {
    BatterySummary s;
    const auto wants = [&opts](const char* f) {
        return std::find(opts.families.begin(), opts.families.end(), f) !=
               opts.families.end();
    };
    const auto tick = [&s, progress]() {
        if (progress && s.instances % 2000 == 0)
            *progress << "  ..." << s.instances << " instances\n" << std::flush;
    };

    struct Base {
        std::string name;
        Quantale q;
    };
    const auto timed = [&s](auto&& make) {
        const auto t0 = std::chrono::steady_clock::now();
        auto result = make();
        s.law_seconds +=
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        return result;
    };

    std::vector<Base> bases;
    if (wants("zn"))
        for (long n = 2; n <= opts.zn_max; ++n)
            bases.push_back(
                {"zn:" + std::to_string(n), timed([n] { return zn_ideals(n); })});
    if (wants("chain"))
        for (int k = 2; k <= opts.chain_max; ++k)
            bases.push_back({"chain:" + std::to_string(k),
                             timed([k] { return chain_frame(k); })});
    if (wants("downset")) {
        int idx = 0;
        for (const Poset& p : all_posets_up_to(opts.poset_points_max))
            bases.push_back({"downset:" + std::to_string(p.n) + "." +
                                 std::to_string(idx++),
                             timed([&p] { return downset_frame(p); })});
    }

    for (const Base& b : bases) {
        ++s.family_counts[b.name.substr(0, b.name.find(':'))];
        process_instance(b.name, b.q, s);
        tick();
    }

    if (wants("product"))
        for (std::size_t i = 0; i < bases.size(); ++i)
            for (std::size_t j = i; j < bases.size(); ++j) {
                if (bases[i].q.size() * bases[j].q.size() > kMaxElements)
                    continue;
                ++s.family_counts["product"];
                process_instance(bases[i].name + "*" + bases[j].name,
                                 timed([&] {
                                     return product_quantale(bases[i].q,
                                                             bases[j].q);
                                 }),
                                 s);
                tick();
            }

    if (wants("random"))
        for (int i = 0; i < opts.random_seeds; ++i) {
            const std::uint64_t seed = opts.seed_base + i;
            const int size = 3 + static_cast<int>(seed % 4);
            std::optional<Quantale> q =
                timed([&] { return random_quantale(seed, size); });
            if (!q) {
                ++s.random_misses;
                continue;
            }
            ++s.family_counts["random"];
            process_instance("random:" + std::to_string(seed), *std::move(q),
                             s);
            tick();
        }

    s.degeneracies = {
        "compactness clauses hold on every finite space; they are flagged "
        "vacuous and never count toward a verdict",
        "Max carries the same topology under Zariski and flat, discrete, on "
        "every finite instance",
        "Min carries the same topology under Zariski and flat, discrete, on "
        "every finite instance, so the minimal-spectra coincidence clause "
        "cannot fail here",
        "normal and B-normal coincide on every finite instance (the interval "
        "above the Jacobson element is always hyperarchimedean)",
    };
    return s;
}

std::string render_summary(const BatterySummary& s) {
    std::ostringstream out;
    out << "instances analyzed: " << s.instances;
    if (!s.family_counts.empty()) {
        out << " (";
        bool first = true;
        for (const auto& [fam, n] : s.family_counts) {
            if (!first) out << ", ";
            out << fam << " " << n;
            first = false;
        }
        out << ")";
    }
    out << "\n";
    if (s.random_misses)
        out << "random seeds without a table: " << s.random_misses << "\n";
    out << "law batteries: " << s.law_failures << " failures ("
        << std::fixed << std::setprecision(1) << s.law_seconds
        << "s in generation, validation and laws)\n";
    out << "reticulation duality: " << s.duality_failures << " failures\n";
    out << "closure oracles: " << s.closure_failures << " failures\n";
    out << "finite-scale degeneracy checks: " << s.degeneracy_failures
        << " failures\n";
    out << "registry: " << s.reports << " reports -- " << s.verified
        << " verified, " << s.not_applicable << " not applicable, "
        << s.mismatches << " MISMATCH\n";
    out << "clauses skipped by search caps: " << s.skipped_clauses << "\n";
    out << "vacuous clauses (compactness only; finite spaces are compact):\n";
    if (s.vacuous_clauses.empty()) out << "  none\n";
    for (const auto& [k, n] : s.vacuous_clauses)
        out << "  " << k << ": " << n << "\n";
    out << "finite-scale degeneracies covered by this battery:\n";
    for (const auto& line : s.degeneracies) out << "  - " << line << "\n";
    if (!s.failures.empty()) {
        out << "failure detail:\n";
        for (const auto& line : s.failures) out << "  " << line << "\n";
    }
    return out.str();
}

}  // namespace qspec
