// prior-forge: plan prioritary-bundle constructions on ruled surfaces, sweep
// parameter grids, verify emitted plan documents, and expose the divisor/Chern
// calculus as desk-calculator subcommands.
//
// Exit codes: 0 accepted/clean, 1 sound rejection (checklist/verification),
// 2 input or I/O error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "priorforge/oracle.hpp"
#include "priorforge/plan_io.hpp"
#include "priorforge/planner.hpp"

using namespace priorforge;

namespace {

DivisorClass parse_pair(const std::string& s)
{
    size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw InputError("expected a comma pair like 2,-2; got '" + s + "'");
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

struct Range {
    Int lo = 0, hi = -1;  // empty when lo > hi
};

Range parse_range(const std::string& s)
{
    size_t dots = s.find("..");
    if (dots == std::string::npos) {
        Int v = std::stoll(s);
        return {v, v};
    }
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

int write_out(const std::string& path, const std::string& payload)
{
    if (path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open " << path << " for writing\n";
        return 2;
    }
    f << payload;
    return f.good() ? 0 : 2;
}

unsigned sweep_threads(size_t npoints)
{
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0)
        n = 1;
    if (const char* cap = std::getenv("PRIOR_FORGE_THREADS")) {
        long v = std::atol(cap);
        if (v >= 1 && (unsigned)v < n)
            n = (unsigned)v;
    }
    if (npoints < n)
        n = npoints ? (unsigned)npoints : 1;
    return n;
}

int cmd_plan(Int g, Int e, Int rank, const std::string& c1, Int c2, const std::string& theorem,
             const std::string& format, const std::string& out)
{
    PlanRequest req;
    req.g = g;
    req.e = e;
    req.rank = rank;
    DivisorClass c1d = parse_pair(c1);
    req.s = c1d.a;
    req.t = c1d.b;
    req.c2 = c2;
    req.theorem = theorem;
    ConstructionPlan P = plan(req);
    std::string payload =
        format == "text" ? plan_to_text(P) : plan_to_json(P).dump(2) + "\n";
    int io = write_out(out, payload);
    if (io != 0)
        return io;
    if (!P.accepted) {
        std::cerr << "ChecklistFailed:";
        for (const auto& it : P.checklist)
            if (it.status == CheckStatus::Failed)
                std::cerr << " " << it.name;
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

int cmd_sweep(const std::string& gs, const std::string& es, const std::string& rs,
              const std::string& ss, const std::string& ts, const std::string& c2s,
              const std::string& out)
{
    Range gr = parse_range(gs), er = parse_range(es), rr = parse_range(rs), sr = parse_range(ss),
          tr = parse_range(ts), cr = parse_range(c2s);
    std::vector<PlanRequest> grid;
    for (Int g = gr.lo; g <= gr.hi; ++g)
        for (Int e = er.lo; e <= er.hi; ++e)
            for (Int r = rr.lo; r <= rr.hi; ++r)
                for (Int s = sr.lo; s <= sr.hi; ++s)
                    for (Int t = tr.lo; t <= tr.hi; ++t)
                        for (Int c2 = cr.lo; c2 <= cr.hi; ++c2)
                            grid.push_back({g, e, r, s, t, c2, ""});

    std::vector<Json> rows(grid.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= grid.size())
                return;
            const PlanRequest& q = grid[i];
            Json row;
            row["genus"] = q.g;
            row["e"] = q.e;
            row["rank"] = q.rank;
            row["c1"] = Json::array({q.s, q.t});
            row["c2"] = q.c2;
            try {
                ConstructionPlan P = plan(q);
                row["status"] = P.accepted ? "accepted" : "rejected";
                row["reason"] = P.accepted ? "" : "ChecklistFailed";
                row["theorem"] = P.theorem;
                row["h0_lower"] = P.h0_lower;
                row["c2_threshold"] = P.c2_threshold;
            } catch (const C2BelowThreshold& ex) {
                row["status"] = "rejected";
                row["reason"] = std::string("C2BelowThreshold: ") + ex.what();
                row["theorem"] = "";
                row["h0_lower"] = nullptr;
                row["c2_threshold"] = ex.threshold;
            } catch (const InputError& ex) {
                row["status"] = "rejected";
                row["reason"] = std::string("InputOutOfRange: ") + ex.what();
                row["theorem"] = "";
                row["h0_lower"] = nullptr;
                row["c2_threshold"] = nullptr;
            } catch (const std::exception& ex) {
                row["status"] = "rejected";
                row["reason"] = std::string("error: ") + ex.what();
                row["theorem"] = "";
                row["h0_lower"] = nullptr;
                row["c2_threshold"] = nullptr;
            }
            rows[i] = std::move(row);
        }
    };
    unsigned nthreads = sweep_threads(grid.size());
    std::vector<std::thread> pool;
    for (unsigned k = 0; k + 1 < nthreads; ++k)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    Int accepted = 0, rejected = 0;
    for (const auto& row : rows)
        (row.at("status") == "accepted" ? accepted : rejected)++;
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["rows"] = rows;
    doc["counts"] = {{"total", (Int)rows.size()}, {"accepted", accepted},
                     {"rejected", rejected}};
    return write_out(out, doc.dump(2) + "\n");
}

int cmd_check(const std::string& file)
{
    std::ifstream f(file);
    if (!f) {
        std::cerr << "cannot read " << file << "\n";
        return 2;
    }
    Json j;
    try {
        f >> j;
    } catch (const std::exception& ex) {
        std::cerr << "bad JSON in " << file << ": " << ex.what() << "\n";
        return 2;
    }
    ConstructionPlan P = plan_from_json(j);
    SurfaceParams S = make_surface(P.request.g, P.request.e);
    VerifyReport rep = verify_plan(S, P);
    oracle::Report orep = oracle::cross_check_plan(S, P);
    for (const auto& m : rep.mismatches)
        std::cout << "mismatch: " << m << "\n";
    for (const auto& m : orep.mismatches)
        std::cout << "oracle mismatch: " << m << "\n";
    if (rep.clean() && orep.clean()) {
        std::cout << "clean: " << P.checklist.size() << " checklist items replayed, oracle "
                  << orep.checked << " comparisons\n";
        return 0;
    }
    return 1;
}

int cmd_oracle(Int trees, unsigned long long seed, const std::string& out)
{
    oracle::Report cf = oracle::closed_form_suite();
    oracle::Report tr = oracle::tree_equivalence_suite(trees, seed);
    Json doc;
    doc["closed_forms"] = {{"checked", cf.checked}, {"mismatches", cf.mismatches}};
    doc["tree_equivalence"] = {{"checked", tr.checked}, {"mismatches", tr.mismatches}};
    int io = write_out(out, doc.dump(2) + "\n");
    if (io != 0)
        return io;
    return cf.clean() && tr.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"prior-forge: exact-integer construction planner for prioritary vector "
                 "bundles on ruled surfaces"};
    app.require_subcommand(1);

    // plan
    Int g = 0, e = 0, rank = 3, c2 = 0;
    std::string c1 = "0,0", theorem, format = "json", out;
    auto* plan_cmd = app.add_subcommand("plan", "plan one construction");
    plan_cmd->add_option("--genus", g, "genus of the base curve")->required();
    plan_cmd->add_option("--e", e, "invariant e >= 0")->required();
    plan_cmd->add_option("--rank", rank, "rank >= 3")->required();
    plan_cmd->add_option("--c1", c1, "target c1 as S,T")->required();
    plan_cmd->add_option("--c2", c2, "target c2")->required();
    plan_cmd->add_option("--theorem", theorem, "explicit case tag");
    plan_cmd->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    plan_cmd->add_option("--out", out, "write the document here instead of stdout");

    // sweep
    std::string gs = "0..0", es = "0..0", rs = "3..3", ss = "0..0", ts = "0..0", c2s = "0..0",
                sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "plan a parameter grid");
    sweep_cmd->add_option("--genus", gs, "range A..B (or single value)");
    sweep_cmd->add_option("--e", es, "range A..B");
    sweep_cmd->add_option("--rank", rs, "range A..B");
    sweep_cmd->add_option("--s", ss, "range A..B for the C0-coefficient of c1");
    sweep_cmd->add_option("--t", ts, "range A..B for the f-coefficient of c1");
    sweep_cmd->add_option("--c2", c2s, "range A..B");
    sweep_cmd->add_option("--out", sweep_out, "report file");

    // calc
    auto* calc = app.add_subcommand("calc", "desk-calculator access to the lattice calculus");
    calc->require_subcommand(1);
    Int cg = 0, ce = 0, crank = 1, cc2 = 0;
    std::string d1 = "0,0", d2 = "0,0", cd = "0,0", cc1 = "0,0";
    auto* ci = calc->add_subcommand("intersect", "intersection number of two classes");
    ci->add_option("--genus", cg, "");
    ci->add_option("--e", ce, "")->required();
    ci->add_option("--d1", d1, "")->required();
    ci->add_option("--d2", d2, "")->required();
    auto* cx = calc->add_subcommand("chi", "Euler characteristic chi(rank; c1, c2)");
    cx->add_option("--genus", cg, "")->required();
    cx->add_option("--e", ce, "")->required();
    cx->add_option("--rank", crank, "")->required();
    cx->add_option("--c1", cc1, "")->required();
    cx->add_option("--c2", cc2, "")->required();
    auto* ck = calc->add_subcommand("canonical", "canonical class of the surface");
    ck->add_option("--genus", cg, "")->required();
    ck->add_option("--e", ce, "")->required();
    auto* ch = calc->add_subcommand("h0upper", "upper bound for h0 of a line bundle");
    ch->add_option("--genus", cg, "")->required();
    ch->add_option("--e", ce, "")->required();
    ch->add_option("--d", cd, "")->required();

    // check
    std::string check_file;
    auto* check_cmd = app.add_subcommand("check", "verify an emitted plan document");
    check_cmd->add_option("file", check_file, "plan JSON file")->required();

    // oracle
    Int trees = 1000;
    unsigned long long seed = 20240915ULL;
    std::string oracle_out;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "closed-form grid suite and random-tree Whitney checks");
    oracle_cmd->add_option("--trees", trees, "number of random trees");
    oracle_cmd->add_option("--seed", seed, "rng seed");
    oracle_cmd->add_option("--out", oracle_out, "report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return 2;
    }

    try {
        if (plan_cmd->parsed())
            return cmd_plan(g, e, rank, c1, c2, theorem, format, out);
        if (sweep_cmd->parsed())
            return cmd_sweep(gs, es, rs, ss, ts, c2s, sweep_out);
        if (calc->parsed()) {
            SurfaceParams S = make_surface(cg, ce);
            if (ci->parsed())
                std::cout << intersect(S, parse_pair(d1), parse_pair(d2)) << "\n";
            else if (cx->parsed())
                std::cout << euler_char(S, ChernData{crank, parse_pair(cc1), cc2}) << "\n";
            else if (ck->parsed())
                std::cout << to_string(S.K) << "\n";
            else if (ch->parsed())
                std::cout << h0_upper(S, parse_pair(cd)) << "\n";
            return 0;
        }
        if (check_cmd->parsed())
            return cmd_check(check_file);
        if (oracle_cmd->parsed())
            return cmd_oracle(trees, seed, oracle_out);
    } catch (const C2BelowThreshold& ex) {
        std::cerr << "C2BelowThreshold: " << ex.what() << "\n";
        std::cerr << "threshold: " << ex.threshold << "\n";
        return 2;
    } catch (const InputError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
