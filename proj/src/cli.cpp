#include "tinsep/cli.hpp"

#include "tinsep/assignment.hpp"
#include "tinsep/detmodel.hpp"
#include "tinsep/errors.hpp"
#include "tinsep/fixtures.hpp"
#include "tinsep/network_io.hpp"
#include "tinsep/region.hpp"
#include "tinsep/report.hpp"
#include "tinsep/separability.hpp"
#include "tinsep/sum_gdof.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace tinsep {

namespace {

struct Options
{
    std::string command;
    std::string input;
    bool json = false;
    std::optional<std::string> epsilon;
    std::optional<std::string> log2_power;
    std::optional<std::string> partition;
    std::optional<std::string> tuple;
    std::optional<int> subchannel;
};

struct Outcome
{
    AnalysisReport report;
    int code = kExitOk;
};

std::vector<int> selected_channels(const ParallelNetwork& network, const Options& opt)
{
    if (opt.subchannel) {
        if (*opt.subchannel < 1 || *opt.subchannel > network.subchannels()) {
            throw InputError("--subchannel " + std::to_string(*opt.subchannel) + " is out of range 1.."
                             + std::to_string(network.subchannels()));
        }
        return {*opt.subchannel - 1};
    }
    std::vector<int> all(static_cast<std::size_t>(network.subchannels()));
    for (int m = 0; m < network.subchannels(); ++m) all[static_cast<std::size_t>(m)] = m;
    return all;
}

// "k:p,..." with 1-based users; unlisted users sit in trivial cycles.
CyclicPartition parse_partition(const std::string& text, int users)
{
    std::vector<int> pred(static_cast<std::size_t>(users));
    for (int k = 0; k < users; ++k) pred[static_cast<std::size_t>(k)] = k;
    std::vector<bool> given(static_cast<std::size_t>(users), false);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw InputError("--partition entries look like k:p, got \"" + item + "\"");
        int k = 0;
        int p = 0;
        try {
            k = std::stoi(item.substr(0, colon));
            p = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("--partition entries look like k:p, got \"" + item + "\"");
        }
        if (k < 1 || k > users || p < 1 || p > users) throw InputError("--partition user out of range in \"" + item + "\"");
        if (given[static_cast<std::size_t>(k - 1)]) throw InputError("--partition lists user " + std::to_string(k) + " twice");
        given[static_cast<std::size_t>(k - 1)] = true;
        pred[static_cast<std::size_t>(k - 1)] = p - 1;
    }
    return CyclicPartition::from_predecessors(std::move(pred));
}

GdofTuple require_tuple(const Options& opt, int users)
{
    if (!opt.tuple) throw InputError(opt.command + " needs --tuple");
    GdofTuple t(parse_rational_list(*opt.tuple));
    if (t.users() != users) {
        throw InputError("--tuple has " + std::to_string(t.users()) + " entries, the network has " + std::to_string(users)
                         + " users");
    }
    return t;
}

std::vector<int> one_based(const std::vector<int>& users)
{
    std::vector<int> out;
    for (int u : users) out.push_back(u + 1);
    return out;
}

std::string cycle_text(const RegionConstraint& c)
{
    return c.cycle.str() + " (rhs " + to_string(c.rhs) + ")";
}

std::string subset_text(unsigned mask, int users)
{
    std::string s = "{";
    for (int k = 0; k < users; ++k) {
        if (mask & (1u << k)) {
            if (s.size() > 1) s += ",";
            s += std::to_string(k + 1);
        }
    }
    return s + "}";
}

SumSection sum_section(const StrengthMatrix& matrix)
{
    SumGdofResult r = sum_gdof(matrix);
    SumSection s;
    s.value = r.value;
    s.partition = report_partition(r.best.partition.permutation());
    if (r.lp) s.methods.emplace_back("lp1", *r.lp);
    s.methods.emplace_back("assignment", r.assignment);
    if (r.brute_force) s.methods.emplace_back("brute-force", *r.brute_force);
    s.methods_agree = r.methods_agree;
    s.label = r.label;
    s.lp_point = r.lp_point;
    if (matrix.deterministic() && r.tin_holds) {
        try {
            PowerControlScheme scheme = best_tin_scheme(matrix);
            s.scheme = SchemeSection{scheme.offsets, scheme.rates, scheme.total_rate()};
        } catch (const GuardError&) {
            // Too large to search; the LP and assignment values still stand.
        }
    }
    return s;
}

CertificateSection certificate_section(const InvertibilityCertificate& cert)
{
    CertificateSection c;
    c.partition = report_partition(cert.partition.permutation());
    c.rows = cert.rows;
    c.cols = cert.cols;
    c.rank = cert.rank;
    c.invertible = cert.invertible;
    if (cert.kernel) {
        std::vector<std::string> bits;
        for (std::size_t i = 0; i < cert.columns.size(); ++i) {
            if ((*cert.kernel)[i]) {
                bits.push_back("X" + std::to_string(cert.columns[i].user + 1) + "(" + std::to_string(cert.columns[i].bit) + ")");
            }
        }
        c.kernel = std::move(bits);
    }
    return c;
}

MemberSection region_member(const StrengthMatrix& matrix, const GdofTuple& tuple)
{
    auto constraints = region_constraints(matrix);
    const RegionConstraint* violated = nullptr;
    MemberSection m;
    m.tuple = tuple.values();
    m.inside = contains(constraints, tuple, &violated);
    if (violated) m.violated = cycle_text(*violated);
    return m;
}

CombinedSection combined_section(const ParallelNetwork& network, const std::optional<GdofTuple>& tuple)
{
    CombinedSumBounds b = combined_sum_bounds(network);
    CombinedSection c;
    c.tight = b.tight;
    c.label = b.label;
    for (const auto& s : b.bounds) {
        std::vector<int> users;
        for (int k = 0; k < b.users; ++k) {
            if (s.mask & (1u << k)) users.push_back(k + 1);
        }
        c.subsets.push_back({std::move(users), s.per_channel, s.total});
    }
    if (tuple) {
        const SubsetBound* violated = nullptr;
        MemberSection m;
        m.tuple = tuple->values();
        m.inside = contains(b, *tuple, &violated);
        if (violated) m.violated = "sum over " + subset_text(violated->mask, b.users) + " <= " + to_string(violated->total);
        c.member = std::move(m);
    }
    return c;
}

DecompositionSection decomposition_section(const ParallelNetwork& network, const GdofTuple& tuple)
{
    Decomposition d = separate_tin_decomposable(network, tuple);
    DecompositionSection s;
    s.tuple = tuple.values();
    s.feasible = d.feasible;
    if (d.feasible) {
        s.parts = d.parts;
        bool ok = true;
        std::vector<Rational> total(static_cast<std::size_t>(network.users()), Rational(0));
        for (int m = 0; m < network.subchannels(); ++m) {
            const auto& part = d.parts[static_cast<std::size_t>(m)];
            ok = ok && contains(region_constraints(network.channel(m)), GdofTuple(part));
            for (std::size_t k = 0; k < part.size(); ++k) total[k] += part[k];
        }
        s.certificate_verified = ok && total == tuple.values();
    } else {
        for (std::size_t row = 0; row < d.farkas.size(); ++row) {
            if (sgn(d.farkas[row]) != 0) s.refutation.emplace_back(describe_decomposition_row(network, row), d.farkas[row]);
        }
        s.certificate_verified = is_farkas_certificate(d.lp, d.farkas);
    }
    return s;
}

AnalysisReport blank_report(const Options& opt, const NetworkDocument& doc)
{
    AnalysisReport r;
    r.command = opt.command;
    r.mode = doc.network.mode();
    r.users = doc.network.users();
    r.subchannels = doc.network.subchannels();
    r.fixture = doc.fixture;
    r.warnings = doc.warnings;
    return r;
}

Outcome analyze(const Options& opt, const NetworkDocument& doc)
{
    const ParallelNetwork& net = doc.network;
    Outcome o{blank_report(opt, doc), kExitOk};
    AnalysisReport& r = o.report;
    const auto channels = selected_channels(net, opt);
    auto channel_section = [&](int m) -> ChannelSection& {
        r.channels.push_back(ChannelSection{m + 1, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
        return r.channels.back();
    };

    if (opt.command == "check-tin") {
        for (int m : channels) {
            auto& c = channel_section(m);
            c.tin = check_tin(net.channel(m));
            if (!c.tin->holds) o.code = kExitNegative;
        }
    } else if (opt.command == "sum") {
        Rational total = 0;
        for (int m : channels) {
            auto& c = channel_section(m);
            c.tin = check_tin(net.channel(m));
            c.sum = sum_section(net.channel(m));
            total += c.sum->value;
            if (!c.tin->holds) o.code = kExitNegative;
        }
        r.total = total;
    } else if (opt.command == "region") {
        for (int m : channels) {
            auto& c = channel_section(m);
            RegionDescription d = describe_region(net.channel(m));
            RegionSection s;
            s.label = d.label;
            for (const auto& rc : d.constraints) s.constraints.push_back({one_based(rc.cycle.users()), rc.rhs});
            c.region = std::move(s);
            if (!d.tin_holds) o.code = kExitNegative;
        }
    } else if (opt.command == "member") {
        GdofTuple tuple = require_tuple(opt, net.users());
        bool inside = true;
        for (int m : channels) {
            auto& c = channel_section(m);
            c.member = region_member(net.channel(m), tuple);
            if (opt.subchannel) inside = c.member->inside;
        }
        if (!opt.subchannel) {
            r.combined = combined_section(net, tuple);
            inside = r.combined->member->inside;
        }
        if (!inside) o.code = kExitNegative;
    } else if (opt.command == "combined-bounds") {
        std::optional<GdofTuple> tuple;
        if (opt.tuple) tuple = require_tuple(opt, net.users());
        r.combined = combined_section(net, tuple);
        if (!r.combined->tight || (r.combined->member && !r.combined->member->inside)) o.code = kExitNegative;
    } else if (opt.command == "decompose") {
        GdofTuple tuple = require_tuple(opt, net.users());
        r.combined = combined_section(net, tuple);
        r.decomposition = decomposition_section(net, tuple);
        if (!r.decomposition->feasible) o.code = kExitNegative;
    } else if (opt.command == "invertibility") {
        if (net.mode() != Mode::deterministic) {
            throw InputError("invertibility is decided on deterministic networks; quantize with --logP p/q");
        }
        std::optional<CyclicPartition> given;
        if (opt.partition) given = parse_partition(*opt.partition, net.users());
        for (int m : channels) {
            auto& c = channel_section(m);
            const StrengthMatrix& matrix = net.channel(m);
            InvertibilitySection s;
            if (given) {
                InvertibilityCertificate cert = invertible_gf2(matrix, *given);
                s.invertible = cert.invertible;
                s.basis = "exact-gf2, given partition";
                bool optimal = partition_bound(*given, matrix).bound == best_partition_assignment(matrix).bound.bound;
                s.detail = "partition " + given->str() + (optimal ? " is optimal" : " is not optimal");
                s.certificates.push_back(certificate_section(cert));
            } else {
                InvertibilityVerdict v = invertibility_verdict(matrix);
                s.invertible = v.invertible;
                s.basis = "exact-gf2";
                s.detail = v.invertible ? "invertible under optimal partition " + v.certificates[*v.witness].partition.str()
                                        : "no optimal partition is invertible";
                for (const auto& cert : v.certificates) s.certificates.push_back(certificate_section(cert));
            }
            if (!s.invertible) o.code = kExitNegative;
            c.invertibility = std::move(s);
        }
    } else if (opt.command == "separability") {
        SeparabilityVerdict v = separability_verdict(net);
        for (int m = 0; m < net.subchannels(); ++m) {
            const auto& ch = v.channels[static_cast<std::size_t>(m)];
            auto& c = channel_section(m);
            c.tin = ch.tin;
            SumSection s;
            s.value = ch.best.bound;
            s.partition = report_partition(ch.best.partition.permutation());
            c.sum = std::move(s);
            InvertibilitySection inv;
            inv.invertible = ch.invertible;
            inv.basis = ch.basis;
            inv.detail = ch.detail;
            if (ch.gf2) {
                for (const auto& cert : ch.gf2->certificates) inv.certificates.push_back(certificate_section(cert));
            }
            c.invertibility = std::move(inv);
        }
        r.separability = SeparabilitySection{v.separable, v.total, v.conclusion, v.failing_premises};
        r.total = v.total;
        if (!v.separable) o.code = kExitNegative;
    } else {
        throw InputError("unknown command " + opt.command);
    }
    return o;
}

// --- demo -----------------------------------------------------------------

struct DemoLine
{
    std::string name;
    std::string expected;
    std::string observed;
    bool ok;
};

std::vector<DemoLine> run_demo(const Rational& epsilon)
{
    std::vector<DemoLine> lines;
    auto add = [&](std::string name, std::string expected, std::string observed) {
        bool ok = expected == observed;
        lines.push_back({std::move(name), std::move(expected), std::move(observed), ok});
    };

    {
        ParallelNetwork ex1 = fixtures::example1();
        auto stated = fixtures::example1_partitions();
        std::string sums;
        std::string inv;
        for (int m = 0; m < ex1.subchannels(); ++m) {
            SumGdofResult s = sum_gdof(ex1.channel(m));
            sums += (m ? "+" : "") + to_string(s.value) + (s.methods_agree && s.tin_holds ? "" : "?");
            inv += (m ? "," : "") + std::string(invertible_gf2(ex1.channel(m), stated[static_cast<std::size_t>(m)]).invertible ? "yes" : "no");
        }
        SeparabilityVerdict v = separability_verdict(ex1);
        add("example1 per-channel sums", "6+6+6", sums);
        add("example1 invertible under stated partitions", "yes,yes,yes", inv);
        add("example1 separability", "separable, total 18",
            std::string(v.separable ? "separable" : "inapplicable") + ", total " + (v.total ? to_string(*v.total) : "none"));
    }
    {
        ParallelNetwork ex2 = fixtures::example2();
        std::string inv;
        std::string witness = "none";
        for (int m = 0; m < ex2.subchannels(); ++m) {
            InvertibilityVerdict v = invertibility_verdict(ex2.channel(m));
            inv += (m ? "," : "") + std::string(v.invertible ? "yes" : "no");
            if (!v.invertible) {
                bool all = std::all_of(v.certificates.begin(), v.certificates.end(),
                                       [&](const auto& c) { return verify_kernel(ex2.channel(m), c); });
                witness = all ? "verified" : "unverified";
            }
        }
        SeparabilityVerdict v = separability_verdict(ex2);
        add("example2 invertibility", "yes,yes,no", inv);
        add("example2 kernel witness", "verified", witness);
        add("example2 separability", "inapplicable", v.separable ? "separable" : "inapplicable");
    }
    {
        ParallelNetwork gap = fixtures::gap(epsilon);
        CombinedSumBounds b = combined_sum_bounds(gap);
        GdofTuple skewed({2, Rational(1, 2), Rational(1, 2)});
        GdofTuple even({1, 1, 1});
        Decomposition ds = separate_tin_decomposable(gap, skewed);
        Decomposition de = separate_tin_decomposable(gap, even);
        add("gap (2,1/2,1/2) within combined bounds", "yes", contains(b, skewed) ? "yes" : "no");
        add("gap (2,1/2,1/2) decomposable", "no, refutation verified",
            std::string(ds.feasible ? "yes" : "no") + (ds.feasible ? "" : is_farkas_certificate(ds.lp, ds.farkas) ? ", refutation verified" : ", refutation invalid"));
        std::string parts;
        if (de.feasible) {
            for (const auto& p : de.parts) {
                for (const auto& x : p) parts += (parts.empty() ? "" : ",") + to_string(x);
            }
        }
        add("gap (1,1,1) decomposable", "yes: 1/2,1/2,1/2,1/2,1/2,1/2", std::string(de.feasible ? "yes: " : "no") + parts);
    }
    {
        LpSolution with = solve_lp(fixtures::caution_lp(true));
        LpSolution without = solve_lp(fixtures::caution_lp(false));
        auto point = [](const LpSolution& s) {
            std::string p;
            for (const auto& x : s.point) p += (p.empty() ? "" : ",") + to_string(x);
            return to_string(s.value) + " at (" + p + ")";
        };
        add("lp-caution with nonnegativity", "20 at (0,10,10)", point(with));
        add("lp-caution without nonnegativity", "25 at (-5,15,15)", point(without));
    }
    return lines;
}

int demo(const Options& opt, std::ostream& out)
{
    Rational epsilon = opt.epsilon ? parse_rational(*opt.epsilon) : fixtures::default_epsilon();
    auto lines = run_demo(epsilon);
    bool all = std::all_of(lines.begin(), lines.end(), [](const DemoLine& l) { return l.ok; });
    if (opt.json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& l : lines) {
            j.push_back({{"name", l.name}, {"expected", l.expected}, {"observed", l.observed}, {"ok", l.ok}});
        }
        out << nlohmann::ordered_json{{"command", "demo"}, {"epsilon", to_string(epsilon)}, {"checks", j}, {"all_ok", all}}.dump(2)
            << "\n";
    } else {
        for (const auto& l : lines) {
            out << (l.ok ? "ok   " : "FAIL ") << l.name << ": " << l.observed;
            if (!l.ok) out << " (expected " << l.expected << ")";
            out << "\n";
        }
        out << (all ? "all fixture outcomes reproduced" : "some fixture outcomes did not reproduce") << "\n";
    }
    return all ? kExitOk : kExitNegative;
}

int dispatch(const Options& opt, std::ostream& out)
{
    if (opt.command == "demo") return demo(opt, out);

    NetworkDocument doc = load_network_file(opt.input);
    std::optional<Rational> epsilon;
    std::optional<Rational> log2_power;
    if (opt.epsilon) {
        if (doc.fixture != "gap-counterexample") {
            throw InputError("--epsilon only applies to documents tagged \"fixture\": \"gap-counterexample\"");
        }
        epsilon = parse_rational(*opt.epsilon);
        doc.network = fixtures::gap(*epsilon);
    }
    if (opt.log2_power) {
        if (doc.network.mode() != Mode::gdof) throw InputError("--logP quantizes gdof networks; this one is deterministic");
        log2_power = parse_rational(*opt.log2_power);
        doc.network = quantize(doc.network, *log2_power);
    }
    if (opt.partition && opt.command != "invertibility") throw InputError("--partition only applies to invertibility");

    Outcome o = analyze(opt, doc);
    o.report.epsilon = epsilon;
    o.report.log2_power = log2_power;
    if (opt.json) {
        out << save_report(o.report).dump(2) << "\n";
    } else {
        render_text(o.report, out);
    }
    return o.code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact TIN-optimality, sum-GDoF and separability analysis of parallel interference networks", "tinsep"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "Machine-readable JSON report");
    app.add_option("--epsilon", opt.epsilon, "Gap fixture parameter p/q, 0 < epsilon < 1/2");
    app.add_option("--logP", opt.log2_power, "Quantize a gdof network at this rational log2 P");
    app.add_option("--partition", opt.partition, "Cyclic partition k1:p1,... (user:predecessor, 1-based)");
    app.add_option("--tuple", opt.tuple, "Per-user tuple, comma-separated rationals");
    app.add_option("--subchannel", opt.subchannel, "Restrict to one sub-channel (1-based)");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"check-tin", "Check the TIN-optimality condition per sub-channel"},
        {"sum", "Sum-GDoF / sum-capacity per sub-channel by LP, assignment and brute force"},
        {"region", "List the per-cycle region constraints"},
        {"member", "Test a tuple against the per-channel regions and the combined bounds"},
        {"combined-bounds", "Subset sum bounds of the parallel network"},
        {"decompose", "Split a tuple into per-sub-channel TIN-achievable tuples"},
        {"invertibility", "GF(2) invertibility of each deterministic sub-channel"},
        {"separability", "Decide whether separate TIN per sub-channel is sum-optimal"},
        {"demo", "Replay the bundled fixtures and check their known outcomes"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (name != "demo") sub->add_option("network", opt.input, "Network JSON document")->required();
        sub->callback([&opt, name = name] { opt.command = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        return dispatch(opt, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace tinsep
