#include "jobs.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "rspan/chow_formal.hpp"
#include "rspan/error.hpp"
#include "rspan/grothendieck.hpp"
#include "rspan/lattice_geometry.hpp"
#include "rspan/oracle.hpp"
#include "rspan/subspaces.hpp"
#include "rspan/toric_bdiv.hpp"

#ifndef RSPAN_VERSION
#define RSPAN_VERSION "unknown"
#endif

namespace rspan::jobs {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what)
{
    throw ValidationError(what);
}

void require_keys(const json& obj, const std::string& where, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {})
{
    if (!obj.is_object())
        invalid(where + ": expected an object");
    std::set<std::string> known;
    for (auto k : required) {
        known.insert(k);
        if (!obj.contains(k))
            invalid(where + ": missing field '" + k + "'");
    }
    for (auto k : optional)
        known.insert(k);
    for (const auto& [key, value] : obj.items())
        if (!known.count(key))
            invalid(where + ": unknown field '" + key + "'");
}

Integer to_integer(const json& v, const std::string& where)
{
    if (v.is_number_integer())
        return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            invalid(where + ": '" + s + "' is not a decimal integer");
        return Integer(s);
    }
    invalid(where + ": expected an integer");
}

std::uint64_t to_u64(const json& v, const std::string& where, std::uint64_t max = std::numeric_limits<std::uint64_t>::max())
{
    const Integer i = to_integer(v, where);
    if (i < 0 || i > max)
        invalid(where + ": out of range");
    return static_cast<std::uint64_t>(i);
}

json from_integer(const Integer& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json from_rational(const Rational& r)
{
    if (denominator(r) == 1)
        return from_integer(numerator(r));
    return numerator(r).str() + "/" + denominator(r).str();
}

LatticePoint to_point(const json& v, const std::string& where)
{
    if (!v.is_array() || v.empty())
        invalid(where + ": expected a nonempty integer array");
    std::vector<Integer> c;
    for (std::size_t i = 0; i < v.size(); ++i)
        c.push_back(to_integer(v[i], where + "[" + std::to_string(i) + "]"));
    return LatticePoint(std::move(c));
}

json from_point(const LatticePoint& p)
{
    json out = json::array();
    for (const auto& c : p.coords())
        out.push_back(from_integer(c));
    return out;
}

json from_points(const std::vector<LatticePoint>& pts)
{
    json out = json::array();
    for (const auto& p : pts)
        out.push_back(from_point(p));
    return out;
}

MonomialSubspace to_support(const json& v, const std::string& where)
{
    if (!v.is_array() || v.empty())
        invalid(where + ": expected a nonempty array of exponent vectors");
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < v.size(); ++i)
        pts.push_back(to_point(v[i], where + "[" + std::to_string(i) + "]"));
    const std::size_t n = pts.front().dim();
    for (const auto& p : pts)
        if (p.dim() != n)
            invalid(where + ": exponent vectors of different lengths");
    return MonomialSubspace(n, std::move(pts));
}

std::vector<MonomialSubspace> to_supports(const json& v, const std::string& where)
{
    if (!v.is_array() || v.empty())
        invalid(where + ": expected a nonempty array of supports");
    std::vector<MonomialSubspace> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(to_support(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

json from_support(const MonomialSubspace& l)
{
    return from_points(l.support());
}

unsigned to_unsigned(const json& v, const std::string& where)
{
    return static_cast<unsigned>(to_u64(v, where, std::numeric_limits<unsigned>::max()));
}

std::string witness_name(WitnessStatus s)
{
    switch (s) {
    case WitnessStatus::not_requested: return "not_requested";
    case WitnessStatus::found: return "found";
    case WitnessStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

json count_report(const CountReport& r)
{
    json by_ext = json::object();
    for (const auto& [k, c] : r.counts_by_extension)
        by_ext[std::to_string(k)] = c;
    return {{"generic_count", r.generic_count},
            {"mv_reference", from_integer(r.mv_reference)},
            {"counts_by_extension", by_ext},
            {"trial_counts", r.trial_counts},
            {"enumerated_points", r.enumerated_points}};
}

ToricDivisor to_divisor(const json& v, const std::string& where)
{
    require_keys(v, where, {"model", "cones"});
    const auto base_pts = to_support(v["model"], where + ".model");
    const ToricModel model = ToricModel::from_base(base_pts.newton_polytope());
    const json& cones = v["cones"];
    if (!cones.is_array())
        invalid(where + ".cones: expected an array");
    std::map<LatticePoint, LatticePoint> by_vertex;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const std::string w = where + ".cones[" + std::to_string(i) + "]";
        require_keys(cones[i], w, {"vertex", "functional"});
        if (!by_vertex.emplace(to_point(cones[i]["vertex"], w + ".vertex"), to_point(cones[i]["functional"], w + ".functional")).second)
            invalid(w + ": repeated vertex");
    }
    std::vector<LatticePoint> functionals;
    for (const auto& c : model.cones()) {
        auto it = by_vertex.find(c.vertex);
        if (it == by_vertex.end())
            invalid(where + ": no functional for model vertex " + c.vertex.to_string());
        functionals.push_back(it->second);
        by_vertex.erase(it);
    }
    if (!by_vertex.empty())
        invalid(where + ": cone vertex " + by_vertex.begin()->first.to_string() + " is not a vertex of the model");
    return ToricDivisor(model, std::move(functionals));
}

json from_divisor(const ToricDivisor& d)
{
    json cones = json::array();
    for (std::size_t i = 0; i < d.model().cones().size(); ++i)
        cones.push_back({{"vertex", from_point(d.model().cones()[i].vertex)}, {"functional", from_point(d.functionals()[i])}});
    return {{"model", from_points(d.model().base().vertices())}, {"cones", cones}};
}

using Handler = std::function<json(const json& payload, const Overrides& o, json& echo)>;

json cmd_mixed_volume(const json& p, const Overrides&, json&)
{
    require_keys(p, "payload", {"supports"});
    std::vector<LatticePolytope> hulls;
    for (const auto& s : to_supports(p["supports"], "supports"))
        hulls.push_back(s.newton_polytope());
    return {{"mixed_volume", from_integer(mixed_volume(hulls))}};
}

json cmd_index(const json& p, const Overrides&, json&)
{
    require_keys(p, "payload", {"classes"});
    if (!p["classes"].is_array() || p["classes"].empty())
        invalid("classes: expected a nonempty array");
    std::vector<VirtualClass> classes;
    for (std::size_t i = 0; i < p["classes"].size(); ++i) {
        const json& c = p["classes"][i];
        const std::string w = "classes[" + std::to_string(i) + "]";
        require_keys(c, w, {"plus"}, {"minus"});
        const LatticePolytope plus = to_support(c["plus"], w + ".plus").newton_polytope();
        const LatticePolytope minus = c.contains("minus") ? to_support(c["minus"], w + ".minus").newton_polytope()
                                                          : LatticePolytope::point(origin(plus.ambient_dim()));
        classes.emplace_back(plus, minus);
    }
    return {{"index", from_integer(index(classes))}};
}

json cmd_completion(const json& p, const Overrides& o, json& echo)
{
    require_keys(p, "payload", {"support"}, {"q_max"});
    const auto l = to_support(p["support"], "support");
    unsigned q_max = p.contains("q_max") ? to_unsigned(p["q_max"], "q_max") : 12;
    if (o.q_max)
        q_max = *o.q_max;
    echo["q_max"] = q_max;

    const MonomialSubspace c = completion(l);
    json certs = json::array();
    json uncertified = json::array();
    for (const auto& b : c.support()) {
        if (l.contains(b))
            continue;
        if (auto cert = is_integral(b, l, q_max))
            certs.push_back({{"exponent", from_point(cert->exponent)},
                             {"degree", cert->degree},
                             {"decomposition", from_points(cert->decomposition)}});
        else
            uncertified.push_back(from_point(b));
    }
    return {{"support", from_support(c)}, {"certificates", certs}, {"uncertified", uncertified}};
}

json cmd_equivalent(const json& p, const Overrides& o, json& echo)
{
    require_keys(p, "payload", {"first", "second"}, {"k_max"});
    const auto l = to_support(p["first"], "first");
    const auto m = to_support(p["second"], "second");
    unsigned k_max = p.contains("k_max") ? to_unsigned(p["k_max"], "k_max") : 6;
    if (o.k_max)
        k_max = *o.k_max;
    echo["k_max"] = k_max;
    const auto r = equivalent_with_witness(l, m, k_max);
    json out = {{"equivalent", r.equivalent}, {"witness_status", witness_name(r.witness_status)}};
    if (r.witness) {
        out["witness"] = from_support(*r.witness);
        out["witness_power"] = r.witness_power;
    }
    return out;
}

json cmd_degree(const json& p, const Overrides&, json&)
{
    require_keys(p, "payload", {"support"});
    const auto d = degree_decomposition(to_support(p["support"], "support"));
    return {{"index", from_integer(d.index)},
            {"mapping_degree", d.mapping_degree.is_finite() ? from_integer(d.mapping_degree.value()) : json("infinite")},
            {"image_degree", d.mapping_degree.is_finite() ? from_rational(d.image_degree) : json(0)}};
}

json cmd_oracle(const json& p, const Overrides& o, json&)
{
    require_keys(p, "payload", {"supports", "p", "trials", "K_max", "seed"});
    const auto r = generic_count(to_supports(p["supports"], "supports"), to_unsigned(p["p"], "p"),
                                 to_unsigned(p["trials"], "trials"), to_unsigned(p["K_max"], "K_max"),
                                 to_u64(p["seed"], "seed"), o.threads);
    return count_report(r);
}

json cmd_multiadd(const json& p, const Overrides& o, json&)
{
    require_keys(p, "payload", {"first", "second", "rest", "p", "trials", "K_max", "seed"});
    const auto first = to_support(p["first"], "first");
    const auto second = to_support(p["second"], "second");
    std::vector<MonomialSubspace> rest;
    if (!p["rest"].is_array())
        invalid("rest: expected an array of supports");
    for (std::size_t i = 0; i < p["rest"].size(); ++i)
        rest.push_back(to_support(p["rest"][i], "rest[" + std::to_string(i) + "]"));
    const auto r = verify_multiadditivity(first, second, rest, to_unsigned(p["p"], "p"), to_unsigned(p["trials"], "trials"),
                                          to_unsigned(p["K_max"], "K_max"), to_u64(p["seed"], "seed"), o.threads);
    json out = {{"product", count_report(r.product)},
                {"first", count_report(r.first)},
                {"second", count_report(r.second)},
                {"mv_identity", r.mv_identity},
                {"saturated", r.saturated}};
    out["count_identity"] = r.count_identity ? json(*r.count_identity) : json(nullptr);
    return out;
}

json cmd_bdiv_index(const json& p, const Overrides&, json&)
{
    require_keys(p, "payload", {}, {"divisors", "supports"});
    if (p.contains("divisors") == p.contains("supports"))
        invalid("payload: give exactly one of 'divisors' or 'supports'");
    std::vector<BDivisor> bdivs;
    if (p.contains("supports")) {
        for (const auto& s : to_supports(p["supports"], "supports"))
            bdivs.emplace_back(divisor_of_subspace(s));
    } else {
        if (!p["divisors"].is_array() || p["divisors"].empty())
            invalid("divisors: expected a nonempty array");
        for (std::size_t i = 0; i < p["divisors"].size(); ++i)
            bdivs.emplace_back(to_divisor(p["divisors"][i], "divisors[" + std::to_string(i) + "]"));
    }
    json splits = json::array();
    for (const auto& b : bdivs) {
        const auto s = decompose_very_ample(b);
        splits.push_back({{"plus", from_divisor(s.plus)}, {"minus", from_divisor(s.minus)}, {"multiplier", from_integer(s.multiplier)}});
    }
    return {{"bdiv_index", from_integer(bdiv_index(bdivs))}, {"splits", splits}};
}

json cmd_roundtrip(const json& p, const Overrides&, json&)
{
    require_keys(p, "payload", {"support", "companions"});
    const auto l = to_support(p["support"], "support");
    std::vector<MonomialSubspace> companions;
    if (!p["companions"].is_array())
        invalid("companions: expected an array of supports");
    for (std::size_t i = 0; i < p["companions"].size(); ++i)
        companions.push_back(to_support(p["companions"][i], "companions[" + std::to_string(i) + "]"));
    const ToricDivisor d = divisor_of_subspace(l);
    const auto r = isomorphism_roundtrip(l, companions);
    const auto sections = subspace_of_divisor(d);
    return {{"divisor", from_divisor(d)},
            {"sections", sections ? from_support(*sections) : json::array()},
            {"contains_source", r.contains_source},
            {"within_completion", r.within_completion},
            {"equivalent_to_source", r.equivalent_to_source},
            {"bdiv_index", from_integer(r.bdiv_index)},
            {"mixed_volume", from_integer(r.mixed_volume)},
            {"ok", r.ok()}};
}

json cmd_chow_check(const json& p, const Overrides&, json&)
{
    require_keys(p, "payload", {"signature", "first"}, {"power"});
    if (!p["signature"].is_array() || p["signature"].empty())
        invalid("signature: expected a nonempty array");
    std::vector<unsigned> sig;
    for (std::size_t i = 0; i < p["signature"].size(); ++i)
        sig.push_back(to_unsigned(p["signature"][i], "signature[" + std::to_string(i) + "]"));
    const auto first = static_cast<std::size_t>(to_u64(p["first"], "first"));
    if (first + 1 >= sig.size())
        invalid("first: needs a following factor");
    const unsigned power = p.contains("power") ? to_unsigned(p["power"], "power") : 1;

    const SplittingCheck check = verify_segre_splitting(sig, first);

    std::vector<unsigned> merged(sig.begin(), sig.begin() + static_cast<std::ptrdiff_t>(first));
    merged.push_back(segre_dimension(sig[first], sig[first + 1]));
    merged.insert(merged.end(), sig.begin() + static_cast<std::ptrdiff_t>(first) + 2, sig.end());
    const ChowClass pulled = segre_pullback(ChowClass::hyperplane(merged, first).pow(power), first, sig[first], sig[first + 1]);
    json terms = json::array();
    for (const auto& e : pulled.monomials()) {
        const Integer c = pulled.coefficient(e);
        if (c != 0)
            terms.push_back({{"exponents", e}, {"coefficient", from_integer(c)}});
    }
    return {{"cases", check.cases}, {"failures", check.failures}, {"ok", check.ok()}, {"merged_signature", merged},
            {"pullback_expansion", terms}};
}

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> table = {
        {"mixed-volume", cmd_mixed_volume}, {"index", cmd_index},         {"completion", cmd_completion},
        {"equivalent", cmd_equivalent},     {"degree", cmd_degree},       {"oracle", cmd_oracle},
        {"multiadd", cmd_multiadd},         {"bdiv-index", cmd_bdiv_index}, {"roundtrip", cmd_roundtrip},
        {"chow-check", cmd_chow_check},
    };
    return table;
}

} // namespace

json parse_job_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        invalid("cannot read job file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        invalid(std::string("job file is not valid JSON: ") + e.what());
    }
}

json run(const json& job, const Overrides& overrides)
{
    require_keys(job, "job", {"version", "command", "payload"});
    if (!job["version"].is_number_integer() || job["version"].get<std::int64_t>() != 1)
        invalid("job: version must be 1");
    if (!job["command"].is_string())
        invalid("job: command must be a string");
    const auto cmd = job["command"].get<std::string>();
    const auto it = handlers().find(cmd);
    if (it == handlers().end())
        invalid("job: unknown command '" + cmd + "'");

    json echo = job;
    json effective = json::object();
    json result = it->second(job["payload"], overrides, effective);
    if (!effective.empty())
        echo["effective"] = effective;
    return {{"artifact_version", RSPAN_VERSION}, {"input", echo}, {"result", result}};
}

int run_to_report(const json& job, const Overrides& overrides, json& report)
{
    try {
        report = run(job, overrides);
        return exit_ok;
    } catch (const ValidationError& e) {
        report = {{"artifact_version", RSPAN_VERSION}, {"error", {{"code", "validation"}, {"message", e.what()}}}};
        return exit_validation;
    } catch (const Error& e) {
        report = {{"artifact_version", RSPAN_VERSION}, {"input", job},
                  {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
        return e.code() == ErrorCode::invariant_breach ? exit_breach : exit_validation;
    }
}

std::string serialize(const json& report)
{
    return report.dump(2) + "\n";
}

} // namespace rspan::jobs
