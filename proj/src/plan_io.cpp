#include "priorforge/plan_io.hpp"

#include "priorforge/engine.hpp"

namespace priorforge {

Json divisor_to_json(DivisorClass d)
{
    return Json::array({d.a, d.b});
}

DivisorClass divisor_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw InputError("divisor must be a [a, b] pair");
    return {j[0].get<Int>(), j[1].get<Int>()};
}

Json sheaf_to_json(const SheafPtr& e)
{
    Json j;
    if (e->is_line()) {
        j["node"] = "line";
        j["d"] = divisor_to_json(e->as_line().d);
        return j;
    }
    if (e->is_ideal()) {
        const auto& iz = e->as_ideal();
        j["node"] = "ideal";
        j["d"] = divisor_to_json(iz.d);
        j["length"] = iz.length;
        j["generic"] = iz.generic;
        j["label"] = iz.label;
        return j;
    }
    const auto& ext = e->as_extension();
    j["node"] = "ext";
    j["nontrivial"] = ext.nontrivial;
    j["sub"] = sheaf_to_json(ext.sub);
    j["quot"] = sheaf_to_json(ext.quot);
    return j;
}

SheafPtr sheaf_from_json(const Json& j)
{
    const std::string kind = j.at("node").get<std::string>();
    if (kind == "line")
        return SheafExpr::line(divisor_from_json(j.at("d")));
    if (kind == "ideal")
        return SheafExpr::ideal(divisor_from_json(j.at("d")), j.at("length").get<Int>(),
                                j.at("generic").get<bool>(), j.at("label").get<std::string>());
    if (kind == "ext")
        return SheafExpr::extension(sheaf_from_json(j.at("sub")), sheaf_from_json(j.at("quot")),
                                    j.at("nontrivial").get<bool>());
    throw InputError("unknown sheaf node kind '" + kind + "'");
}

namespace {

Json opt_to_json(const std::optional<Int>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

std::optional<Int> opt_from_json(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    return j.get<Int>();
}

Verdict verdict_from_string(const std::string& s)
{
    if (s == "Zero")
        return Verdict::Zero;
    if (s == "NonZero")
        return Verdict::NonZero;
    if (s == "Unknown")
        return Verdict::Unknown;
    throw InputError("unknown verdict '" + s + "'");
}

CheckStatus status_from_string(const std::string& s)
{
    if (s == "Certified")
        return CheckStatus::Certified;
    if (s == "PaperAsserted")
        return CheckStatus::PaperAsserted;
    if (s == "Failed")
        return CheckStatus::Failed;
    throw InputError("unknown status '" + s + "'");
}

}  // namespace

Json cert_to_json(const Certificate& c)
{
    Json j;
    j["kind"] = c.query.kind;
    j["twist"] = divisor_to_json(c.query.twist);
    j["verdict"] = to_string(c.verdict);
    Json steps = Json::array();
    for (const auto& st : c.trace) {
        Json s;
        s["rule"] = st.rule;
        s["path"] = st.path;
        s["divisor"] = divisor_to_json(st.divisor);
        s["n1"] = opt_to_json(st.n1);
        s["n2"] = opt_to_json(st.n2);
        s["note"] = st.note;
        steps.push_back(std::move(s));
    }
    j["trace"] = std::move(steps);
    return j;
}

Certificate cert_from_json(const Json& j)
{
    Certificate c;
    c.query.kind = j.at("kind").get<std::string>();
    c.query.twist = divisor_from_json(j.at("twist"));
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const auto& s : j.at("trace")) {
        TraceStep st;
        st.rule = s.at("rule").get<std::string>();
        st.path = s.at("path").get<std::string>();
        st.divisor = divisor_from_json(s.at("divisor"));
        st.n1 = opt_from_json(s.at("n1"));
        st.n2 = opt_from_json(s.at("n2"));
        st.note = s.at("note").get<std::string>();
        c.trace.push_back(std::move(st));
    }
    return c;
}

Json request_to_json(const PlanRequest& r)
{
    Json j;
    j["genus"] = r.g;
    j["e"] = r.e;
    j["rank"] = r.rank;
    j["c1"] = Json::array({r.s, r.t});
    j["c2"] = r.c2;
    j["theorem"] = r.theorem;
    return j;
}

PlanRequest request_from_json(const Json& j)
{
    PlanRequest r;
    r.g = j.at("genus").get<Int>();
    r.e = j.at("e").get<Int>();
    r.rank = j.at("rank").get<Int>();
    r.s = j.at("c1").at(0).get<Int>();
    r.t = j.at("c1").at(1).get<Int>();
    r.c2 = j.at("c2").get<Int>();
    r.theorem = j.at("theorem").get<std::string>();
    return r;
}

namespace {

Json chern_to_json(const ChernData& c)
{
    Json j;
    j["rank"] = c.rank;
    j["c1"] = divisor_to_json(c.c1);
    j["c2"] = c.c2;
    return j;
}

ChernData chern_from_json(const Json& j)
{
    return {j.at("rank").get<Int>(), divisor_from_json(j.at("c1")), j.at("c2").get<Int>()};
}

Json spec_to_json(const CheckSpec& s)
{
    Json j;
    j["kind"] = s.kind;
    j["node"] = s.node;
    j["twist"] = divisor_to_json(s.twist);
    j["quot_node"] = s.quot_node;
    j["sub_node"] = s.sub_node;
    Json ds = Json::array();
    for (const auto& d : s.divisors)
        ds.push_back(divisor_to_json(d));
    j["divisors"] = std::move(ds);
    j["divisor"] = divisor_to_json(s.divisor);
    j["length"] = s.length;
    j["generic"] = s.generic;
    j["lhs"] = s.lhs;
    j["rhs"] = s.rhs;
    j["op"] = s.op;
    return j;
}

CheckSpec spec_from_json(const Json& j)
{
    CheckSpec s;
    s.kind = j.at("kind").get<std::string>();
    s.node = j.at("node").get<std::string>();
    s.twist = divisor_from_json(j.at("twist"));
    s.quot_node = j.at("quot_node").get<std::string>();
    s.sub_node = j.at("sub_node").get<std::string>();
    for (const auto& d : j.at("divisors"))
        s.divisors.push_back(divisor_from_json(d));
    s.divisor = divisor_from_json(j.at("divisor"));
    s.length = j.at("length").get<Int>();
    s.generic = j.at("generic").get<bool>();
    s.lhs = j.at("lhs").get<Int>();
    s.rhs = j.at("rhs").get<Int>();
    s.op = j.at("op").get<std::string>();
    return s;
}

}  // namespace

Json plan_to_json(const ConstructionPlan& p)
{
    Json j;
    j["schema_version"] = p.schema_version;
    j["request"] = request_to_json(p.request);
    j["accepted"] = p.accepted;
    j["theorem"] = p.theorem;
    j["normalizing_twist"] = divisor_to_json(p.normalizing_twist);
    Json params;
    params["b"] = opt_to_json(p.params.b);
    params["l"] = opt_to_json(p.params.l);
    params["twist_divisor"] =
        p.params.twist_divisor ? divisor_to_json(*p.params.twist_divisor) : Json(nullptr);
    Json ds = Json::array();
    for (const auto& d : p.params.divisors)
        ds.push_back(divisor_to_json(d));
    params["divisors"] = std::move(ds);
    params["lengths"] = p.params.lengths;
    j["parameters"] = std::move(params);
    j["chain"] = sheaf_to_json(p.chain);
    j["computed"] = chern_to_json(p.computed);
    j["computed_normalized"] = chern_to_json(p.computed_normalized);
    j["chain_chi"] = p.chain_chi;
    j["h0_lower"] = p.h0_lower;
    j["h0_theorem"] = p.h0_theorem;
    j["c2_threshold"] = p.c2_threshold;
    j["threshold_strict"] = p.threshold_strict;
    Json items = Json::array();
    for (const auto& it : p.checklist) {
        Json ji;
        ji["name"] = it.name;
        ji["hypothesis"] = it.hypothesis;
        ji["status"] = to_string(it.status);
        ji["spec"] = spec_to_json(it.spec);
        ji["certificate"] = cert_to_json(it.cert);
        ji["note"] = it.note;
        items.push_back(std::move(ji));
    }
    j["checklist"] = std::move(items);
    j["warnings"] = p.warnings;
    return j;
}

ConstructionPlan plan_from_json(const Json& j)
{
    ConstructionPlan p;
    p.schema_version = j.at("schema_version").get<std::string>();
    if (p.schema_version != kSchemaVersion)
        throw InputError("unsupported schema_version '" + p.schema_version + "'");
    p.request = request_from_json(j.at("request"));
    p.accepted = j.at("accepted").get<bool>();
    p.theorem = j.at("theorem").get<std::string>();
    p.normalizing_twist = divisor_from_json(j.at("normalizing_twist"));
    const Json& params = j.at("parameters");
    p.params.b = opt_from_json(params.at("b"));
    p.params.l = opt_from_json(params.at("l"));
    if (!params.at("twist_divisor").is_null())
        p.params.twist_divisor = divisor_from_json(params.at("twist_divisor"));
    for (const auto& d : params.at("divisors"))
        p.params.divisors.push_back(divisor_from_json(d));
    p.params.lengths = params.at("lengths").get<std::vector<Int>>();
    p.chain = sheaf_from_json(j.at("chain"));
    p.computed = chern_from_json(j.at("computed"));
    p.computed_normalized = chern_from_json(j.at("computed_normalized"));
    p.chain_chi = j.at("chain_chi").get<Int>();
    p.h0_lower = j.at("h0_lower").get<Int>();
    p.h0_theorem = j.at("h0_theorem").get<Int>();
    p.c2_threshold = j.at("c2_threshold").get<Int>();
    p.threshold_strict = j.at("threshold_strict").get<bool>();
    for (const auto& ji : j.at("checklist")) {
        ChecklistItem it;
        it.name = ji.at("name").get<std::string>();
        it.hypothesis = ji.at("hypothesis").get<std::string>();
        it.status = status_from_string(ji.at("status").get<std::string>());
        it.spec = spec_from_json(ji.at("spec"));
        it.cert = cert_from_json(ji.at("certificate"));
        it.note = ji.at("note").get<std::string>();
        p.checklist.push_back(std::move(it));
    }
    p.warnings = j.at("warnings").get<std::vector<std::string>>();
    return p;
}

std::string plan_to_text(const ConstructionPlan& p)
{
    std::string out;
    out += "theorem: " + p.theorem + (p.accepted ? "  [accepted]\n" : "  [NOT accepted]\n");
    out += "surface: g=" + std::to_string(p.request.g) + " e=" + std::to_string(p.request.e) +
           "\n";
    out += "target:  rank " + std::to_string(p.request.rank) + ", c1=(" +
           std::to_string(p.request.s) + "," + std::to_string(p.request.t) +
           "), c2=" + std::to_string(p.request.c2) + "\n";
    if (p.normalizing_twist != DivisorClass{0, 0})
        out += "normalizing twist: " + to_string(p.normalizing_twist) + "\n";
    if (p.params.b)
        out += "b = " + std::to_string(*p.params.b) + "\n";
    if (p.params.l)
        out += "l = " + std::to_string(*p.params.l) + "\n";
    if (p.params.twist_divisor)
        out += "D = " + to_string(*p.params.twist_divisor) + "\n";
    if (!p.params.divisors.empty()) {
        out += "divisors:";
        for (const auto& d : p.params.divisors)
            out += " " + to_string(d);
        out += "\n";
    }
    if (!p.params.lengths.empty()) {
        out += "lengths:";
        for (Int n : p.params.lengths)
            out += " " + std::to_string(n);
        out += "\n";
    }
    out += "c2 threshold: " + std::to_string(p.c2_threshold) +
           (p.threshold_strict ? " (strict)\n" : "\n");
    out += "h0 lower bound: " + std::to_string(p.h0_lower) +
           " (theorem: " + std::to_string(p.h0_theorem) + ")\n";
    out += "checklist:\n";
    for (const auto& it : p.checklist) {
        out += "  [" + to_string(it.status) + "] " + it.name + " -- " + it.hypothesis + "\n";
        for (const auto& st : it.cert.trace) {
            out += "      " + st.rule + "[" + st.path + "] " + to_string(st.divisor);
            if (st.n1)
                out += " n1=" + std::to_string(*st.n1);
            if (st.n2)
                out += " n2=" + std::to_string(*st.n2);
            if (!st.note.empty())
                out += " " + st.note;
            out += "\n";
        }
    }
    if (!p.warnings.empty()) {
        out += "warnings:\n";
        for (const auto& w : p.warnings)
            out += "  - " + w + "\n";
    }
    return out;
}

}  // namespace priorforge
