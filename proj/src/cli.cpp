#include "radrank/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "radrank/claborn.hpp"
#include "radrank/cones.hpp"
#include "radrank/io.hpp"
#include "radrank/rank.hpp"
#include "radrank/semilattice.hpp"

namespace radrank {

namespace {

struct Outcome {
    Json results = Json::object();
    std::string text;
    ExitCode code = ExitCode::computed;
};

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

std::string format_set(const std::vector<PrimeId>& ids, PrimeSet s)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i : s.indices()) {
        out += (first ? "" : ", ") + ids.at(i);
        first = false;
    }
    return out + "}";
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

ExitCode verdict(bool positive)
{
    return positive ? ExitCode::computed : ExitCode::negative;
}

Outcome cmd_validate(const Model& m, std::size_t max_primes)
{
    const ModelReport r = validate(m, max_primes);
    Outcome o;
    o.results = {{"primes", m.size()},
                 {"ambient_rank", m.ambient_rank()},
                 {"positively_spanning", r.positively_spanning},
                 {"witness_rich", r.witness_rich},
                 {"linear_rank", r.linear_rank}};
    std::ostringstream t;
    t << "primes: " << m.size() << ", ambient rank: " << m.ambient_rank() << "\n"
      << "positively spanning: " << yes_no(r.positively_spanning) << "\n"
      << "witness-rich: " << yes_no(r.witness_rich) << "\n"
      << "linear rank: " << r.linear_rank << "\n";
    o.text = t.str();
    o.code = verdict(r.positively_spanning);
    return o;
}

Outcome cmd_v_member(const Model& m, const std::string& support)
{
    std::vector<PrimeId> ids;
    std::string_view rest = support;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        ids.emplace_back(rest.substr(0, comma));
        if (ids.back().empty()) throw FormatError("support '" + support + "': empty prime id");
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (ids.empty()) throw FormatError("support is empty");
    const PrimeSet set = m.set_of(ids);
    const bool member = v_membership(m, set);
    Outcome o;
    o.results = {{"support", set_to_json(m.ids(), set)}, {"member", member}};
    o.text = std::string(member ? "true" : "false") + "\n";
    o.code = verdict(member);
    return o;
}

Outcome cmd_enumerate_v(const Model& m, std::size_t max_primes)
{
    const PrincipalSupports v(m, max_primes);
    Outcome o;
    o.results = {{"count", v.members().size()}, {"members", family_to_json(v.ids(), v.members())}};
    std::ostringstream t;
    for (PrimeSet s : v.members()) t << format_set(v.ids(), s) << "\n";
    t << v.members().size() << " members\n";
    o.text = t.str();
    return o;
}

Outcome cmd_coprime(const Model& m, const std::vector<std::string>& supports, std::size_t max_primes)
{
    const PrincipalSupports v(m, max_primes);
    std::vector<PrimeSet> tuple;
    for (const auto& s : supports) {
        const PrimeSet set = parse_support(v, s);
        if (set.empty()) throw FormatError("empty support");
        tuple.push_back(set);
    }
    const bool disjoint = product_coprime_supports(tuple);
    const bool in_v = std::all_of(tuple.begin(), tuple.end(), [&](PrimeSet s) { return v.contains(s); });
    std::optional<bool> raw;
    if (in_v) raw = product_coprime_raw(v, tuple);

    Outcome o;
    Json list = Json::array();
    for (PrimeSet s : tuple) list.push_back(set_to_json(v.ids(), s));
    o.results = {{"tuple", list}, {"coprime_supports", disjoint}, {"coprime_semigroup", raw ? Json(*raw) : Json()}};
    std::ostringstream t;
    t << "empty common support: " << (disjoint ? "true" : "false") << "\n"
      << "product-coprime in V: " << (raw ? (*raw ? "true" : "false") : "n/a (some member is not in V)") << "\n";
    o.text = t.str();
    o.code = verdict(disjoint);
    return o;
}

Outcome cmd_mprop(const Model& m, std::size_t max_primes)
{
    const PrincipalSupports v(m, max_primes);
    const std::vector<Family> families = mprop(v);
    Outcome o;
    Json list = Json::array();
    std::ostringstream t;
    for (const Family& f : families) {
        const PrimeId& p = v.id(theta(v, f));
        list.push_back({{"prime", p}, {"members", family_to_json(v.ids(), f)}});
        t << p << ": " << f.size() << " members";
        for (PrimeSet s : f) t << " " << format_set(v.ids(), s);
        t << "\n";
    }
    o.results = {{"families", std::move(list)}};
    o.text = t.str();
    return o;
}

Outcome cmd_inv(const Model& m, const std::vector<std::string>& primes, std::size_t max_primes)
{
    const PrimeSet delta = m.set_of(primes);
    const PrimeSet poset = inv_enum(m, delta, max_primes);
    const PrimeSet cone = inv_cone(m, delta);
    Outcome o;
    o.results = {{"delta", set_to_json(m.ids(), delta)},
                 {"inverses", set_to_json(m.ids(), poset)},
                 {"inverses_cone", set_to_json(m.ids(), cone)},
                 {"self_inverse", delta.subset_of(poset)}};
    std::ostringstream t;
    t << "Inv(" << format_set(m.ids(), delta) << ") = " << format_set(m.ids(), poset) << "\n";
    if (cone != poset) t << "negative-cone preimage differs: " << format_set(m.ids(), cone) << "\n";
    o.text = t.str();
    return o;
}

Outcome cmd_rank(const Model& m, std::size_t max_primes)
{
    const PrincipalSupports v(m, max_primes);
    const RankAnalysis r = analyze_rank(v);
    Outcome o;
    Json chain = Json::array();
    for (PrimeSet level : r.chain.levels) chain.push_back(set_to_json(v.ids(), level));
    o.results = {{"rank", r.rank},
                 {"inverse_basis", set_to_json(v.ids(), r.inverse_basis)},
                 {"reay_chain", std::move(chain)},
                 {"blocks", r.chain.blocks()}};
    std::ostringstream t;
    t << "rank = " << r.rank << "\n"
      << "inverse basis: " << format_set(v.ids(), r.inverse_basis) << "\n"
      << "weak Reay chain (" << r.chain.blocks() << " blocks):";
    for (PrimeSet level : r.chain.levels) t << " " << format_set(v.ids(), level);
    t << "\n";
    o.text = t.str();
    return o;
}

Outcome cmd_iso(const Model& ma, const Model& mb, std::size_t max_primes)
{
    const PrincipalSupports a(ma, max_primes);
    const PrincipalSupports b(mb, max_primes);
    const auto eta = find_iso(a, b);
    Outcome o;
    o.results = {{"isomorphic", eta.has_value()}, {"bijection", eta ? bijection_to_json(a, b, *eta) : Json()}};
    if (eta) {
        std::ostringstream t;
        t << "isomorphism:";
        for (std::size_t i = 0; i < eta->size(); ++i) t << " " << a.id(i) << "->" << b.id((*eta)[i]);
        t << "\n";
        o.text = t.str();
    } else {
        o.text = "no isomorphism\n";
    }
    o.code = verdict(eta.has_value());
    return o;
}

Outcome cmd_extend_iso(const Model& ma, const Model& mb, const Json& phi_json, std::size_t max_primes)
{
    const PrincipalSupports a(ma, max_primes);
    const PrincipalSupports b(mb, max_primes);
    const SupportMap phi = support_map_from_json(phi_json, a, b);
    const ExtendedIso ext = extend_iso(a, b, phi);
    Outcome o;
    o.results = {{"eta", bijection_to_json(a, b, ext.eta)}, {"verified", ext.verified}};
    std::ostringstream t;
    t << "eta:";
    for (std::size_t i = 0; i < ext.eta.size(); ++i) t << " " << a.id(i) << "->" << b.id(ext.eta[i]);
    t << "\nextends phi: " << (ext.verified ? "true" : "false") << "\n";
    o.text = t.str();
    o.code = verdict(ext.verified);
    return o;
}

Outcome cmd_gen(const std::string& family, std::size_t k)
{
    const Model m = family == "d1" ? gen_d1(k) : family == "d2" ? gen_d2(k) : gen_d3(k);
    Outcome o;
    o.results = {{"model", to_json(m)}};
    o.text = serialize_model(m);
    return o;
}

Outcome cmd_reay(const GeneratorSet& x)
{
    const Eigen::Index rank = linear_rank(x.vectors());
    const bool subspace = positively_spans_its_span(x);
    Outcome o;
    o.results = {{"dimension", x.dimension()},
                 {"size", x.size()},
                 {"linear_rank", rank},
                 {"positively_spans_its_span", subspace},
                 {"positive_basis_of_span", false},
                 {"blocks", Json()},
                 {"partition", Json()}};
    std::ostringstream t;
    t << x.size() << " vectors in Q^" << x.dimension() << ", span of dimension " << rank << "\n";
    if (!subspace) {
        t << "positive cone is not a linear subspace: no weak Reay partition\n";
        o.text = t.str();
        o.code = ExitCode::negative;
        return o;
    }
    // A positive basis of its span: pos(X) = span(X) and no element is redundant.
    bool basis = true;
    for (std::size_t i = 0; i < x.size() && basis; ++i) {
        const GeneratorSet rest = x.subset(x.all().without(i));
        basis = !(linear_rank(rest.vectors()) == rank && positively_spans_its_span(rest));
    }
    const WeakReayPartition p = max_weak_reay(x);
    Json blocks = Json::array();
    for (const auto& b : p.blocks) blocks.push_back(b);
    o.results["positive_basis_of_span"] = basis;
    o.results["blocks"] = p.size();
    o.results["partition"] = std::move(blocks);
    t << "positive basis of its span: " << yes_no(basis) << "\n"
      << "maximum weak Reay partition: " << p.size() << " blocks";
    for (const auto& b : p.blocks) {
        t << " {";
        for (std::size_t i = 0; i < b.size(); ++i) t << (i ? ", " : "") << b[i];
        t << "}";
    }
    t << "\n";
    o.text = t.str();
    return o;
}

}  // namespace

ExitCode run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rank of the class group from the poset of radicals of principal ideals", "radrank"};
    bool json = false;
    bool timing = false;
    std::size_t max_primes = 12;
    app.add_flag("--json", json, "Print the report as JSON");
    app.add_flag("--timing", timing, "Include wall-clock timing in the JSON report");
    app.add_option("--max-primes", max_primes, "Bound on enumerated primes")->check(CLI::Range(1, 24));
    app.require_subcommand(1);

    std::string model_a;
    std::string model_b;
    std::string extra_file;
    std::string support;
    std::vector<std::string> items;
    std::string family;
    std::size_t k = 0;

    auto* validate_cmd = app.add_subcommand("validate", "Check that a model is valid class data");
    validate_cmd->add_option("model", model_a, "Model file")->required();
    auto* member_cmd = app.add_subcommand("v-member", "Is a support in V?");
    member_cmd->add_option("model", model_a, "Model file")->required();
    member_cmd->add_option("support", support, "Comma-separated prime ids")->required();
    auto* enumerate_cmd = app.add_subcommand("enumerate-v", "List the members of V");
    enumerate_cmd->add_option("model", model_a, "Model file")->required();
    auto* coprime_cmd = app.add_subcommand("coprime", "Product coprimality of supports");
    coprime_cmd->add_option("model", model_a, "Model file")->required();
    coprime_cmd->add_option("supports", items, "Comma-separated prime ids, one argument per support")->required();
    auto* mprop_cmd = app.add_subcommand("mprop", "Maximal product-proper subsets of V");
    mprop_cmd->add_option("model", model_a, "Model file")->required();
    auto* inv_cmd = app.add_subcommand("inv", "Almost inverses of a set of primes");
    inv_cmd->add_option("model", model_a, "Model file")->required();
    inv_cmd->add_option("primes", items, "Prime ids (none for the empty set)");
    auto* rank_cmd = app.add_subcommand("rank", "Recover the rank of the class group from V");
    rank_cmd->add_option("model", model_a, "Model file")->required();
    auto* iso_cmd = app.add_subcommand("iso", "Search for an isomorphism of the two V's");
    iso_cmd->add_option("model_a", model_a, "Model file")->required();
    iso_cmd->add_option("model_b", model_b, "Model file")->required();
    auto* extend_cmd = app.add_subcommand("extend-iso", "Extend an isomorphism of V's to the primes");
    extend_cmd->add_option("model_a", model_a, "Model file")->required();
    extend_cmd->add_option("model_b", model_b, "Model file")->required();
    extend_cmd->add_option("phi", extra_file, "JSON array of support pairs")->required();
    auto* gen_cmd = app.add_subcommand("gen", "Generate a counterexample truncation");
    gen_cmd->add_option("family", family, "d1, d2 or d3")->required()->check(CLI::IsMember({"d1", "d2", "d3"}));
    gen_cmd->add_option("--k", k, "Number of primes")->required();
    auto* reay_cmd = app.add_subcommand("reay", "Maximum weak Reay partition of a vector set");
    reay_cmd->add_option("vectors", extra_file, "Vectors file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ExitCode::computed;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return ExitCode::usage;
    }

    const CLI::App* cmd = app.get_subcommands().front();
    const auto start = std::chrono::steady_clock::now();
    Json inputs = {{"command", cmd->get_name()}};
    Outcome outcome;
    try {
        if (cmd == gen_cmd) {
            inputs["family"] = family;
            inputs["k"] = k;
            outcome = cmd_gen(family, k);
        } else if (cmd == reay_cmd) {
            const GeneratorSet x = generators_from_json(read_json_file(extra_file));
            Json vecs = Json::array();
            for (std::size_t i = 0; i < x.size(); ++i) vecs.push_back({x.labels()[i], to_json(x.vector(i))});
            inputs["dimension"] = x.dimension();
            inputs["vectors"] = std::move(vecs);
            outcome = cmd_reay(x);
        } else {
            const Model ma = load_model(model_a);
            inputs["model"] = to_json(ma);
            if (cmd == validate_cmd) {
                outcome = cmd_validate(ma, max_primes);
            } else if (cmd == member_cmd) {
                inputs["support"] = support;
                outcome = cmd_v_member(ma, support);
            } else if (cmd == enumerate_cmd) {
                outcome = cmd_enumerate_v(ma, max_primes);
            } else if (cmd == coprime_cmd) {
                inputs["supports"] = items;
                outcome = cmd_coprime(ma, items, max_primes);
            } else if (cmd == mprop_cmd) {
                outcome = cmd_mprop(ma, max_primes);
            } else if (cmd == inv_cmd) {
                inputs["primes"] = items;
                outcome = cmd_inv(ma, items, max_primes);
            } else if (cmd == rank_cmd) {
                outcome = cmd_rank(ma, max_primes);
            } else {
                const Model mb = load_model(model_b);
                inputs["model_b"] = to_json(mb);
                if (cmd == iso_cmd) {
                    outcome = cmd_iso(ma, mb, max_primes);
                } else {
                    const Json phi = read_json_file(extra_file);
                    inputs["phi"] = phi;
                    outcome = cmd_extend_iso(ma, mb, phi, max_primes);
                }
            }
        }
    } catch (const std::exception& e) {
        err << "radrank " << cmd->get_name() << ": " << e.what() << "\n";
        return ExitCode::usage;
    }

    if (json) {
        Json report = {{"command", cmd->get_name()},
                       {"inputs_digest", "sha256:" + sha256_hex(inputs.dump())},
                       {"results", std::move(outcome.results)},
                       {"exit_code", static_cast<int>(outcome.code)}};
        if (timing) {
            const auto elapsed = std::chrono::steady_clock::now() - start;
            report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
        }
        out << report.dump(2) << "\n";
    } else {
        out << outcome.text;
    }
    return outcome.code;
}

}  // namespace radrank
