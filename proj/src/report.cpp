#include "tinsep/report.hpp"

#include "tinsep/cycles.hpp"
#include "tinsep/errors.hpp"

namespace tinsep {

using Json = nlohmann::ordered_json;

std::vector<int> report_partition(const std::vector<int>& zero_based_pred)
{
    std::vector<int> out(zero_based_pred.size());
    for (std::size_t k = 0; k < zero_based_pred.size(); ++k) {
        out[k] = zero_based_pred[k] == static_cast<int>(k) ? 0 : zero_based_pred[k] + 1;
    }
    return out;
}

namespace {

Json rat(const Rational& v)
{
    return to_string(v);
}

Json rats(const std::vector<Rational>& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat(x));
    return a;
}

Rational get_rat(const Json& j)
{
    if (!j.is_string()) throw InputError("malformed report: rational values must be strings");
    return parse_rational(j.get<std::string>());
}

std::vector<Rational> get_rats(const Json& j)
{
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(get_rat(x));
    return out;
}

Json partition_json(const std::vector<int>& pred)
{
    Json a = Json::array();
    for (int p : pred) {
        if (p == 0) a.push_back(nullptr);
        else a.push_back(p);
    }
    return a;
}

std::vector<int> get_partition(const Json& j)
{
    std::vector<int> out;
    for (const auto& x : j) out.push_back(x.is_null() ? 0 : x.get<int>());
    return out;
}

Json tin_json(const TinVerdict& t)
{
    Json v = Json::array();
    for (const auto& x : t.violations) {
        v.push_back(Json{{"user", x.user + 1},
                         {"desired", rat(x.desired)},
                         {"max_incoming", rat(x.max_incoming)},
                         {"max_outgoing", rat(x.max_outgoing)}});
    }
    return Json{{"holds", t.holds}, {"strict", t.strict}, {"violations", v}};
}

TinVerdict get_tin(const Json& j)
{
    TinVerdict t;
    t.holds = j.at("holds").get<bool>();
    t.strict = j.at("strict").get<bool>();
    for (const auto& x : j.at("violations")) {
        t.violations.push_back({x.at("user").get<int>() - 1, get_rat(x.at("max_incoming")), get_rat(x.at("max_outgoing")),
                                get_rat(x.at("desired"))});
    }
    return t;
}

Json member_json(const MemberSection& m)
{
    Json j{{"tuple", rats(m.tuple)}, {"inside", m.inside}};
    if (m.violated) j["violated"] = *m.violated;
    return j;
}

MemberSection get_member(const Json& j)
{
    MemberSection m;
    m.tuple = get_rats(j.at("tuple"));
    m.inside = j.at("inside").get<bool>();
    if (j.contains("violated")) m.violated = j.at("violated").get<std::string>();
    return m;
}

Json sum_json(const SumSection& s)
{
    Json j{{"value", rat(s.value)}, {"partition", partition_json(s.partition)}};
    if (!s.methods.empty()) {
        Json methods = Json::object();
        for (const auto& [name, value] : s.methods) methods[name] = rat(value);
        j["methods"] = methods;
    }
    if (s.methods_agree) j["methods_agree"] = *s.methods_agree;
    if (s.label) j["label"] = *s.label;
    if (!s.lp_point.empty()) j["lp_point"] = rats(s.lp_point);
    if (s.scheme) {
        j["scheme"] = Json{{"offsets", s.scheme->offsets}, {"rates", s.scheme->rates}, {"total", s.scheme->total}};
    }
    return j;
}

SumSection get_sum(const Json& j)
{
    SumSection s;
    s.value = get_rat(j.at("value"));
    s.partition = get_partition(j.at("partition"));
    if (j.contains("methods")) {
        for (const auto& [name, value] : j.at("methods").items()) s.methods.emplace_back(name, get_rat(value));
    }
    if (j.contains("methods_agree")) s.methods_agree = j.at("methods_agree").get<bool>();
    if (j.contains("label")) s.label = j.at("label").get<std::string>();
    if (j.contains("lp_point")) s.lp_point = get_rats(j.at("lp_point"));
    if (j.contains("scheme")) {
        const auto& sc = j.at("scheme");
        s.scheme = SchemeSection{sc.at("offsets").get<std::vector<long>>(), sc.at("rates").get<std::vector<long>>(),
                                 sc.at("total").get<long>()};
    }
    return s;
}

Json channel_json(const ChannelSection& c)
{
    Json j{{"index", c.index}};
    if (c.tin) j["tin"] = tin_json(*c.tin);
    if (c.sum) j["sum"] = sum_json(*c.sum);
    if (c.region) {
        Json rows = Json::array();
        for (const auto& r : c.region->constraints) rows.push_back(Json{{"users", r.users}, {"rhs", rat(r.rhs)}});
        j["region"] = Json{{"label", c.region->label}, {"constraints", rows}};
    }
    if (c.member) j["member"] = member_json(*c.member);
    if (c.invertibility) {
        const auto& inv = *c.invertibility;
        Json certs = Json::array();
        for (const auto& cert : inv.certificates) {
            Json cj{{"partition", partition_json(cert.partition)},
                    {"rows", cert.rows},
                    {"cols", cert.cols},
                    {"rank", cert.rank},
                    {"invertible", cert.invertible}};
            if (cert.kernel) cj["kernel"] = *cert.kernel;
            certs.push_back(cj);
        }
        j["invertibility"] =
            Json{{"invertible", inv.invertible}, {"basis", inv.basis}, {"detail", inv.detail}, {"certificates", certs}};
    }
    return j;
}

ChannelSection get_channel(const Json& j)
{
    ChannelSection c;
    c.index = j.at("index").get<int>();
    if (j.contains("tin")) c.tin = get_tin(j.at("tin"));
    if (j.contains("sum")) c.sum = get_sum(j.at("sum"));
    if (j.contains("region")) {
        RegionSection r;
        r.label = j.at("region").at("label").get<std::string>();
        for (const auto& row : j.at("region").at("constraints")) {
            r.constraints.push_back({row.at("users").get<std::vector<int>>(), get_rat(row.at("rhs"))});
        }
        c.region = std::move(r);
    }
    if (j.contains("member")) c.member = get_member(j.at("member"));
    if (j.contains("invertibility")) {
        const auto& ij = j.at("invertibility");
        InvertibilitySection inv;
        inv.invertible = ij.at("invertible").get<bool>();
        inv.basis = ij.at("basis").get<std::string>();
        inv.detail = ij.at("detail").get<std::string>();
        for (const auto& cj : ij.at("certificates")) {
            CertificateSection cert;
            cert.partition = get_partition(cj.at("partition"));
            cert.rows = cj.at("rows").get<std::size_t>();
            cert.cols = cj.at("cols").get<std::size_t>();
            cert.rank = cj.at("rank").get<std::size_t>();
            cert.invertible = cj.at("invertible").get<bool>();
            if (cj.contains("kernel")) cert.kernel = cj.at("kernel").get<std::vector<std::string>>();
            inv.certificates.push_back(std::move(cert));
        }
        c.invertibility = std::move(inv);
    }
    return c;
}

}  // namespace

Json save_report(const AnalysisReport& r)
{
    Json j{{"command", r.command}, {"mode", std::string(to_string(r.mode))}, {"users", r.users}, {"subchannels", r.subchannels}};
    if (r.fixture) j["fixture"] = *r.fixture;
    if (r.epsilon) j["epsilon"] = rat(*r.epsilon);
    if (r.log2_power) j["logP"] = rat(*r.log2_power);
    if (!r.channels.empty()) {
        Json chans = Json::array();
        for (const auto& c : r.channels) chans.push_back(channel_json(c));
        j["channels"] = chans;
    }
    if (r.combined) {
        Json subsets = Json::array();
        for (const auto& s : r.combined->subsets) {
            subsets.push_back(Json{{"users", s.users}, {"per_channel", rats(s.per_channel)}, {"total", rat(s.total)}});
        }
        Json cj{{"tight", r.combined->tight}, {"subsets", subsets}};
        if (r.combined->label) cj["label"] = *r.combined->label;
        if (r.combined->member) cj["member"] = member_json(*r.combined->member);
        j["combined"] = cj;
    }
    if (r.decomposition) {
        const auto& d = *r.decomposition;
        Json dj{{"tuple", rats(d.tuple)}, {"feasible", d.feasible}};
        if (d.feasible) {
            Json parts = Json::array();
            for (const auto& p : d.parts) parts.push_back(rats(p));
            dj["parts"] = parts;
        } else {
            Json refutation = Json::array();
            for (const auto& [row, y] : d.refutation) refutation.push_back(Json{{"constraint", row}, {"multiplier", rat(y)}});
            dj["refutation"] = refutation;
        }
        dj["certificate_verified"] = d.certificate_verified;
        j["decomposition"] = dj;
    }
    if (r.separability) {
        const auto& s = *r.separability;
        Json sj{{"separable", s.separable}, {"conclusion", s.conclusion}};
        if (s.total) sj["total"] = rat(*s.total);
        if (!s.failing_premises.empty()) sj["failing_premises"] = s.failing_premises;
        j["separability"] = sj;
    }
    if (r.total) j["total"] = rat(*r.total);
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    return j;
}

AnalysisReport load_report(const Json& j)
{
    try {
        AnalysisReport r;
        r.command = j.at("command").get<std::string>();
        r.mode = parse_mode(j.at("mode").get<std::string>());
        r.users = j.at("users").get<int>();
        r.subchannels = j.at("subchannels").get<int>();
        if (j.contains("fixture")) r.fixture = j.at("fixture").get<std::string>();
        if (j.contains("epsilon")) r.epsilon = get_rat(j.at("epsilon"));
        if (j.contains("logP")) r.log2_power = get_rat(j.at("logP"));
        if (j.contains("channels")) {
            for (const auto& c : j.at("channels")) r.channels.push_back(get_channel(c));
        }
        if (j.contains("combined")) {
            const auto& cj = j.at("combined");
            CombinedSection c;
            c.tight = cj.at("tight").get<bool>();
            for (const auto& s : cj.at("subsets")) {
                c.subsets.push_back({s.at("users").get<std::vector<int>>(), get_rats(s.at("per_channel")), get_rat(s.at("total"))});
            }
            if (cj.contains("label")) c.label = cj.at("label").get<std::string>();
            if (cj.contains("member")) c.member = get_member(cj.at("member"));
            r.combined = std::move(c);
        }
        if (j.contains("decomposition")) {
            const auto& dj = j.at("decomposition");
            DecompositionSection d;
            d.tuple = get_rats(dj.at("tuple"));
            d.feasible = dj.at("feasible").get<bool>();
            if (dj.contains("parts")) {
                for (const auto& p : dj.at("parts")) d.parts.push_back(get_rats(p));
            }
            if (dj.contains("refutation")) {
                for (const auto& row : dj.at("refutation")) {
                    d.refutation.emplace_back(row.at("constraint").get<std::string>(), get_rat(row.at("multiplier")));
                }
            }
            d.certificate_verified = dj.at("certificate_verified").get<bool>();
            r.decomposition = std::move(d);
        }
        if (j.contains("separability")) {
            const auto& sj = j.at("separability");
            SeparabilitySection s;
            s.separable = sj.at("separable").get<bool>();
            s.conclusion = sj.at("conclusion").get<std::string>();
            if (sj.contains("total")) s.total = get_rat(sj.at("total"));
            if (sj.contains("failing_premises")) s.failing_premises = sj.at("failing_premises").get<std::vector<std::string>>();
            r.separability = std::move(s);
        }
        if (j.contains("total")) r.total = get_rat(j.at("total"));
        if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
}

namespace {

std::string join(const std::vector<Rational>& v, const char* sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += to_string(v[i]);
    }
    return s;
}

std::string partition_text(const std::vector<int>& pred)
{
    std::vector<int> zero_based(pred.size());
    for (std::size_t k = 0; k < pred.size(); ++k) zero_based[k] = pred[k] == 0 ? static_cast<int>(k) : pred[k] - 1;
    return CyclicPartition::from_predecessors(std::move(zero_based)).str();
}

std::string users_text(const std::vector<int>& users, const char* prefix)
{
    std::string s;
    for (std::size_t i = 0; i < users.size(); ++i) {
        if (i) s += " + ";
        s += prefix + std::to_string(users[i]);
    }
    return s;
}

}  // namespace

void render_text(const AnalysisReport& r, std::ostream& out)
{
    out << r.command << ": " << to_string(r.mode) << " network, K = " << r.users << ", M = " << r.subchannels;
    if (r.fixture) out << " (fixture " << *r.fixture << ")";
    out << "\n";
    if (r.epsilon) out << "epsilon = " << to_string(*r.epsilon) << "\n";
    if (r.log2_power) out << "quantized at log2 P = " << to_string(*r.log2_power) << "\n";
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";

    for (const auto& c : r.channels) {
        out << "sub-channel " << c.index << ":\n";
        if (c.tin) {
            out << "  TIN condition: " << (c.tin->holds ? (c.tin->strict ? "holds (strict)" : "holds") : "fails") << "\n";
            for (const auto& v : c.tin->violations) {
                out << "    user " << v.user + 1 << ": desired " << to_string(v.desired) << " < incoming "
                    << to_string(v.max_incoming) << " + outgoing " << to_string(v.max_outgoing) << "\n";
            }
        }
        if (c.sum) {
            out << "  sum value: " << to_string(c.sum->value) << " with partition " << partition_text(c.sum->partition) << "\n";
            for (const auto& [name, value] : c.sum->methods) out << "    " << name << ": " << to_string(value) << "\n";
            if (c.sum->methods_agree) out << "    methods agree: " << (*c.sum->methods_agree ? "yes" : "no") << "\n";
            if (c.sum->label) out << "    " << *c.sum->label << "\n";
            if (!c.sum->lp_point.empty()) out << "    LP point: (" << join(c.sum->lp_point) << ")\n";
            if (c.sum->scheme) {
                out << "    power control: offsets";
                for (long d : c.sum->scheme->offsets) out << " " << d;
                out << ", rates";
                for (long v : c.sum->scheme->rates) out << " " << v;
                out << ", total " << c.sum->scheme->total << "\n";
            }
        }
        if (c.region) {
            out << "  " << c.region->label << ":\n";
            for (const auto& row : c.region->constraints) {
                out << "    " << users_text(row.users, "d") << " <= " << to_string(row.rhs) << "\n";
            }
        }
        if (c.member) {
            out << "  tuple (" << join(c.member->tuple) << ") " << (c.member->inside ? "inside" : "outside") << " the region";
            if (c.member->violated) out << "; violates " << *c.member->violated;
            out << "\n";
        }
        if (c.invertibility) {
            const auto& inv = *c.invertibility;
            out << "  invertibility: " << (inv.invertible ? "invertible" : "not invertible") << " [" << inv.basis << "] "
                << inv.detail << "\n";
            for (const auto& cert : inv.certificates) {
                out << "    partition " << partition_text(cert.partition) << ": " << cert.rows << "x" << cert.cols
                    << ", rank " << cert.rank << (cert.invertible ? ", injective" : ", not injective");
                if (cert.kernel) {
                    out << "; kernel witness";
                    for (const auto& b : *cert.kernel) out << " " << b;
                }
                out << "\n";
            }
        }
    }
    if (r.combined) {
        out << "combined sum bounds" << (r.combined->tight ? "" : " (not tight)") << ":\n";
        if (r.combined->label) out << "  " << *r.combined->label << "\n";
        for (const auto& s : r.combined->subsets) {
            out << "  " << users_text(s.users, "d") << " <= " << join(s.per_channel, " + ") << " = " << to_string(s.total) << "\n";
        }
        if (r.combined->member) {
            const auto& m = *r.combined->member;
            out << "  tuple (" << join(m.tuple) << ") " << (m.inside ? "meets" : "violates") << " the combined bounds";
            if (m.violated) out << " at " << *m.violated;
            out << "\n";
        }
    }
    if (r.decomposition) {
        const auto& d = *r.decomposition;
        out << "separate-TIN decomposition of (" << join(d.tuple) << "): " << (d.feasible ? "feasible" : "infeasible") << "\n";
        for (std::size_t m = 0; m < d.parts.size(); ++m) out << "  sub-channel " << m + 1 << ": (" << join(d.parts[m]) << ")\n";
        if (!d.feasible) {
            out << "  refutation (Farkas multipliers):\n";
            for (const auto& [row, y] : d.refutation) out << "    " << to_string(y) << " x [" << row << "]\n";
        }
        out << "  certificate verified: " << (d.certificate_verified ? "yes" : "no") << "\n";
    }
    if (r.separability) {
        out << "separability: " << r.separability->conclusion << "\n";
        for (const auto& p : r.separability->failing_premises) out << "  failing premise: " << p << "\n";
    }
    if (r.total) out << "total: " << to_string(*r.total) << "\n";
}

}  // namespace tinsep
