#include "wblocks/cli/cli.hpp"

#include "wblocks/blockan/cartan.hpp"
#include "wblocks/blockan/recover.hpp"
#include "wblocks/center/center.hpp"
#include "wblocks/characters/comp_char.hpp"
#include "wblocks/characters/weights.hpp"
#include "wblocks/cli/cache.hpp"
#include "wblocks/cli/io.hpp"
#include "wblocks/combinat/block_key.hpp"
#include "wblocks/qcanon/canonical.hpp"
#include "wblocks/qcanon/pairing.hpp"
#include "wblocks/qcanon/rmatrix.hpp"
#include "wblocks/qcanon/salgebra.hpp"
#include "wblocks/verify/suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

namespace wblocks::cli {

namespace {

struct BlockOpts {
    std::string block;
    int m = -1;
    int n = -1;

    void add(CLI::App* sub)
    {
        sub->add_option("--block", block, "block key mu=<comp>;nu=<comp>;t=<t>")->required();
        sub->add_option("--m", m, "top row size (checked against the block)");
        sub->add_option("--n", n, "bottom row size (checked against the block)");
    }
    BlockKey get() const
    {
        BlockKey xi = parse_block(block);
        if ((m >= 0 && m != xi.m) || (n >= 0 && n != xi.n))
            throw UsageError("block " + block + " has m=" + std::to_string(xi.m) + ", n=" + std::to_string(xi.n) +
                             ", which contradicts --m/--n");
        return xi;
    }
};

std::string big(const mpz_class& v)
{
    return v.get_str();
}

std::string csv_quote(const std::string& s)
{
    return "\"" + s + "\"";
}

Key parse_key(const std::string& s, const std::string& signs, int& m_out)
{
    auto [top, bot] = parse_rows(s);
    Key k = top;
    k.insert(k.end(), bot.begin(), bot.end());
    if (k.size() != signs.size())
        throw UsageError("key '" + s + "' has " + std::to_string(k.size()) + " entries but signs have " +
                         std::to_string(signs.size()));
    m_out = static_cast<int>(top.size());
    return k;
}

int count_plus_prefix(const std::string& signs)
{
    int m = 0;
    while (m < static_cast<int>(signs.size()) && signs[m] == '+')
        ++m;
    for (std::size_t r = m; r < signs.size(); ++r)
        if (signs[r] != '-')
            throw UsageError("signs must be +^m -^n for this operation, got '" + signs + "'");
    return m;
}

struct Command {
    CLI::App* app;
    std::function<std::string()> run;
    bool cacheable = true;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in)
{
    CLI::App app{"Block invariants of integral category O for gl(m|n) and its Whittaker quotient"};
    app.name("wblocks");
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a TOML/INI file");
    bool use_cache = false;
    app.add_flag("--cache", use_cache, "reuse results stored under $WBLOCKS_CACHE_DIR (default ./cache)");

    std::vector<Command> cmds;
    int verify_exit = kOk;

    // blocks
    int b_m = 0;
    int b_n = 0;
    int b_t = -1;
    std::string b_window;
    bool b_normalize = false;
    {
        auto* s = app.add_subcommand("blocks", "enumerate block keys with supports in a window");
        s->add_option("--m", b_m)->required();
        s->add_option("--n", b_n)->required();
        s->add_option("--t", b_t, "atypicality (default: all)");
        s->add_option("--window", b_window, "lo..hi")->required();
        s->add_flag("--normalize", b_normalize, "one key per translation/duality class");
        cmds.push_back({s, [&] {
                            if (b_m < 0 || b_n < 0)
                                throw UsageError("m and n must be non-negative");
                            Window w = parse_window(b_window);
                            std::vector<BlockKey> keys;
                            for (int t = 0; t <= std::min(b_m, b_n); ++t)
                                if (b_t < 0 || b_t == t)
                                    for (BlockKey& k : block_keys_in(b_m, b_n, t, w))
                                        keys.push_back(b_normalize ? normalize_key(k) : k);
                            std::sort(keys.begin(), keys.end());
                            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
                            Json j = Json::array();
                            for (const auto& k : keys)
                                j.push_back(to_json(k));
                            return j.dump();
                        }});
    }

    // char
    BlockOpts c_block;
    std::string c_lambda;
    std::string c_kind = "both";
    bool c_decompose = false;
    {
        auto* s = app.add_subcommand("char", "W-side Verma and simple characters");
        c_block.add(s);
        s->add_option("--lambda", c_lambda, "composition of t")->required();
        s->add_option("--kind", c_kind, "verma, simple or both")->check(CLI::IsMember({"verma", "simple", "both"}));
        s->add_flag("--decompose", c_decompose, "also decompose the Verma character into simples");
        cmds.push_back({s, [&] {
                            BlockKey xi = c_block.get();
                            Composition l = parse_composition(c_lambda);
                            Json j;
                            j["block"] = xi.to_string();
                            j["lambda"] = to_json(l);
                            if (c_kind != "simple") {
                                CompChar v = ch_verma_w(xi, l);
                                j["verma"] = to_json(v);
                                j["verma_dimension"] = big(char_dimension(v));
                                if (c_decompose) {
                                    Json d = Json::array();
                                    for (const auto& [k, mult] : decompose_char(v, xi))
                                        d.push_back(Json{{"kappa", to_json(k)}, {"multiplicity", big(mult)}});
                                    j["decomposition"] = d;
                                }
                            }
                            if (c_kind != "verma") {
                                CompChar v = ch_simple_w(xi, l);
                                j["simple"] = to_json(v);
                                j["simple_dimension"] = big(char_dimension(v));
                            }
                            return j.dump();
                        }});
    }

    // verma-char (g side, truncated)
    std::string vc_rows;
    int vc_s_minus = 0;
    int vc_depth = 2;
    std::string vc_order = "natural";
    {
        auto* s = app.add_subcommand("verma-char", "truncated Verma character of a tableau");
        s->add_option("--tableau", vc_rows, "a1,a2;b1,b2,b3")->required();
        s->add_option("--s-minus", vc_s_minus);
        s->add_option("--depth", vc_depth);
        s->add_option("--order", vc_order, "natural or column")->check(CLI::IsMember({"natural", "column"}));
        cmds.push_back({s, [&] {
                            auto [top, bot] = parse_rows(vc_rows);
                            Pyramid p(static_cast<int>(top.size()), static_cast<int>(bot.size()), vc_s_minus);
                            Tableau a(p, top, bot);
                            BoxOrder o = vc_order == "natural" ? natural_order(p) : column_order(p);
                            Json j = to_json(verma_char_trunc(p, o, a, vc_depth));
                            j["tableau"] = to_json(a);
                            return j.dump();
                        }});
    }

    // verma-mult
    BlockOpts vm_block;
    std::string vm_lambda;
    std::string vm_kappa;
    {
        auto* s = app.add_subcommand("verma-mult", "[M(lambda) : L(kappa)]");
        vm_block.add(s);
        s->add_option("--lambda", vm_lambda)->required();
        s->add_option("--kappa", vm_kappa)->required();
        cmds.push_back({s, [&] {
                            return big(verma_mult(vm_block.get(), parse_composition(vm_lambda),
                                                  parse_composition(vm_kappa)));
                        }});
    }

    // cartan and graded-cartan
    BlockOpts ca_block;
    std::string ca_window;
    std::string ca_format = "json";
    unsigned ca_threads = 0;
    bool ca_q1 = false;
    auto add_cartan = [&](const std::string& name, bool graded) {
        auto* s = app.add_subcommand(name, graded ? "graded Cartan matrix on a window" : "Cartan matrix on a window");
        ca_block.add(s);
        s->add_option("--window", ca_window, "lo..hi for the labels")->required();
        s->add_option("--format", ca_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        s->add_option("--threads", ca_threads, "worker threads (0 = all cores)");
        if (graded)
            s->add_flag("--q-at-1", ca_q1, "evaluate at q = 1");
        cmds.push_back({s, [&, graded] {
                            BlockKey xi = ca_block.get();
                            Window w = parse_window(ca_window);
                            std::vector<Composition> labels;
                            std::vector<std::vector<std::string>> cells;
                            std::vector<std::vector<Json>> jcells;
                            if (graded && !ca_q1) {
                                auto win = graded_cartan_window(xi, w, ca_threads);
                                labels = win.labels;
                                for (const auto& row : win.entries) {
                                    cells.emplace_back();
                                    jcells.emplace_back();
                                    for (const auto& e : row) {
                                        cells.back().push_back(e.to_string());
                                        jcells.back().push_back(to_json(e));
                                    }
                                }
                            } else {
                                auto win = cartan_window(xi, w, ca_threads);
                                labels = win.labels;
                                for (const auto& row : win.entries) {
                                    cells.emplace_back();
                                    jcells.emplace_back();
                                    for (const auto& e : row) {
                                        cells.back().push_back(big(e));
                                        jcells.back().push_back(big(e));
                                    }
                                }
                            }
                            if (ca_format == "csv") {
                                std::ostringstream os;
                                os << "label";
                                for (const auto& l : labels)
                                    os << "," << csv_quote(comp_short(l));
                                for (std::size_t r = 0; r < labels.size(); ++r) {
                                    os << "\n" << csv_quote(comp_short(labels[r]));
                                    for (const auto& c : cells[r])
                                        os << "," << (graded && !ca_q1 ? csv_quote(c) : c);
                                }
                                return os.str();
                            }
                            Json j;
                            j["block"] = xi.to_string();
                            Json ls = Json::array();
                            Json hs = Json::array();
                            for (const auto& l : labels) {
                                ls.push_back(comp_short(l));
                                hs.push_back(big(h_count(l)));
                            }
                            j["labels"] = ls;
                            j["matrix"] = jcells;
                            j["h"] = hs;
                            return j.dump();
                        }});
    };
    add_cartan("cartan", false);
    add_cartan("graded-cartan", true);

    // h
    std::string h_lambda;
    {
        auto* s = app.add_subcommand("h", "number of composition factors of P(lambda)");
        s->add_option("--lambda", h_lambda)->required();
        cmds.push_back({s, [&] { return big(h_count(parse_composition(h_lambda))); }});
    }

    // end-dim
    BlockOpts e_block;
    int e_i = 0;
    {
        auto* s = app.add_subcommand("end-dim", "dim End(P(t e_i)) and the rescaled invariant");
        e_block.add(s);
        s->add_option("--i", e_i)->required();
        cmds.push_back({s, [&] {
                            BlockKey xi = e_block.get();
                            Json j;
                            j["end_dim"] = big(end_dim(xi, e_i));
                            j["d_invariant"] = d_invariant(xi, e_i).get_str();
                            j["stable"] = end_dim_stable(xi).get_str();
                            return j.dump();
                        }});
    }

    // recover
    {
        auto* s = app.add_subcommand("recover", "recover t and gamma from Cartan JSON on stdin");
        cmds.push_back({s,
                        [&] {
                            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
                            Json j = Json::parse(text, nullptr, false);
                            if (j.is_discarded() || !j.is_object() || !j.contains("matrix") || !j.contains("h"))
                                throw UsageError("recover expects JSON with \"matrix\" and \"h\" on stdin");
                            auto num = [](const Json& v) {
                                mpz_class z;
                                std::string s = v.is_string() ? v.get<std::string>() : v.dump();
                                if (z.set_str(s, 10) != 0)
                                    throw UsageError("bad number '" + s + "' in recover input");
                                return z;
                            };
                            std::vector<std::vector<mpz_class>> mat;
                            for (const auto& row : j["matrix"]) {
                                mat.emplace_back();
                                for (const auto& v : row)
                                    mat.back().push_back(num(v));
                            }
                            std::vector<mpz_class> h;
                            for (const auto& v : j["h"])
                                h.push_back(num(v));
                            RecoveredInvariants r = recover_invariants(MatrixOracle(mat, h));
                            Json o;
                            o["t"] = r.t;
                            o["gamma"] = to_json(r.gamma);
                            o["gamma_short"] = comp_short(r.gamma);
                            o["chain"] = r.chain;
                            return o.dump();
                        },
                        false});
    }

    // equiv
    BlockOpts q_block;
    int q_width = 4;
    {
        auto* s = app.add_subcommand("equiv", "Morita and derived closures with invariant signatures");
        q_block.add(s);
        s->add_option("--max-width", q_width, "largest gamma support width explored");
        cmds.push_back({s, [&] {
                            BlockKey xi = q_block.get();
                            Signature sg = invariant_signature(xi);
                            Json j;
                            j["key"] = normalize_key(xi).to_string();
                            j["signature"] = Json{{"t", sg.t}, {"m", sg.m}, {"n", sg.n}, {"gamma_transpose", sg.gamma_transpose}};
                            Json mor = Json::array();
                            for (const auto& k : morita_closure(xi, q_width))
                                mor.push_back(k.to_string());
                            Json der = Json::array();
                            bool same = true;
                            for (const auto& k : derived_closure(xi, q_width)) {
                                der.push_back(k.to_string());
                                same = same && invariant_signature(k) == sg;
                            }
                            j["morita_class"] = mor;
                            j["derived_class"] = der;
                            j["signature_constant_on_derived_class"] = same;
                            return j.dump();
                        }});
    }

    // center
    int z_m = 0;
    int z_n = 0;
    int z_r = 1;
    int z_s = 0;
    {
        auto* s = app.add_subcommand("center", "supersymmetric polynomials and membership tests");
        s->add_option("--m", z_m)->required();
        s->add_option("--n", z_n)->required();
        s->add_option("--r", z_r)->required();
        s->add_option("--s-minus", z_s, "offset used by the J test");
        cmds.push_back({s, [&] {
                            if (z_m < 0 || z_n < 0 || z_r < 1)
                                throw UsageError("need m, n >= 0 and r >= 1");
                            MultiPoly e = e_super(z_r, z_m, z_n);
                            MultiPoly sc = hc_series_coeff(z_r, z_m, z_n);
                            Json j;
                            j["e_super"] = to_json(e);
                            j["in_I"] = in_I(e, z_m, z_n);
                            if (z_m <= z_n && z_s >= 0 && z_s <= z_n - z_m)
                                j["in_J"] = in_J(e, z_m, z_n, z_s);
                            j["series_coeff"] = to_json(sc);
                            j["series_matches"] = sc == e;
                            return j.dump();
                        }});
    }

    // cb
    int cb_N = 2;
    std::string cb_signs;
    std::string cb_key;
    std::string cb_op = "dual";
    std::string cb_pair;
    std::string cb_format = "terms";
    std::string cb_block;
    std::string cb_lambda;
    std::string cb_kappa;
    {
        auto* s = app.add_subcommand("cb", "canonical and dual canonical bases of the quantum tensor space");
        s->add_option("--N", cb_N, "rank of sl_N")->required();
        s->add_option("--signs", cb_signs, "sign sequence, +^m -^n for the bases");
        s->add_option("--key", cb_key, "index tableau a1,..;b1,..");
        s->add_option("--op", cb_op, "dual, canonical, psi, psi-star, project or pairing-formula")
            ->check(CLI::IsMember({"dual", "canonical", "psi", "psi-star", "project", "pairing-formula"}));
        s->add_option("--pair", cb_pair, "pair the result with the same basis vector of this key");
        s->add_option("--format", cb_format, "terms or tensor")->check(CLI::IsMember({"terms", "tensor"}));
        s->add_option("--block", cb_block, "block for pairing-formula");
        s->add_option("--lambda", cb_lambda, "lambda for pairing-formula");
        s->add_option("--kappa", cb_kappa, "kappa for pairing-formula");
        cmds.push_back({s, [&] {
                            if (cb_N < 1)
                                throw UsageError("N must be positive");
                            if (cb_op == "pairing-formula") {
                                if (cb_block.empty() || cb_lambda.empty() || cb_kappa.empty())
                                    throw UsageError("pairing-formula needs --block, --lambda and --kappa");
                                Laurent v = pairing_formula(parse_block(cb_block), parse_composition(cb_kappa),
                                                            parse_composition(cb_lambda), cb_N);
                                return Json{{"pairing", to_json(v)}}.dump();
                            }
                            if (cb_key.empty())
                                throw UsageError("--key is required");
                            int top = 0;
                            Key key = parse_key(cb_key, cb_signs, top);
                            for (int v : key)
                                if (v < 1 || v > cb_N)
                                    throw UsageError("key entries must lie in [1, N]");
                            TensorVec v(cb_N, cb_signs);
                            if (cb_op == "psi" || cb_op == "psi-star") {
                                TensorVec b = TensorVec::basis(cb_N, cb_signs, key);
                                v = cb_op == "psi" ? psi(b) : psi_star(b);
                            } else {
                                int m = count_plus_prefix(cb_signs);
                                if (m != top)
                                    throw UsageError("the top row of the key must match the + signs");
                                CanonicalEngine engine(cb_N, m, static_cast<int>(cb_signs.size()) - m);
                                bool canon = cb_op == "canonical";
                                v = canon ? engine.canonical(key) : engine.dual_canonical(key);
                                if (!cb_pair.empty()) {
                                    int top2 = 0;
                                    Key k2 = parse_key(cb_pair, cb_signs, top2);
                                    TensorVec w = canon ? engine.canonical(k2) : engine.dual_canonical(k2);
                                    return Json{{"pairing", to_json(pairing(v, w))}}.dump();
                                }
                                if (cb_op == "project") {
                                    SVec sv = project_to_S(v, m);
                                    Json terms = Json::array();
                                    for (auto it = sv.terms.rbegin(); it != sv.terms.rend(); ++it)
                                        terms.push_back(Json{{"key", it->first}, {"coeff", coeff_map(it->second)}});
                                    return Json{{"terms", terms}}.dump();
                                }
                            }
                            if (cb_format == "tensor")
                                return to_json(v).dump();
                            return Json{{"terms", terms_json(v)}}.dump();
                        }});
    }

    // verify
    std::string v_profile = "quick";
    int v_fault = 0;
    std::vector<int> v_ids;
    {
        auto* s = app.add_subcommand("verify", "run the cross-oracle acceptance suite");
        s->add_option("--profile", v_profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
        s->add_option("--inject-fault", v_fault, "perturb one value inside this criterion")
            ->check(CLI::Range(0, verify::kCriteria));
        s->add_option("--criteria", v_ids, "run only these criteria")->delimiter(',')->check(CLI::Range(1, verify::kCriteria));
        cmds.push_back({s,
                        [&] {
                            verify::Options o;
                            o.profile = verify::parse_profile(v_profile);
                            o.inject_fault = v_fault;
                            Json j;
                            j["profile"] = v_profile;
                            j["inject_fault"] = v_fault;
                            Json list = Json::array();
                            bool all = true;
                            for (const auto& r : verify::run_suite(o, v_ids)) {
                                Json notes = Json::object();
                                for (const auto& [k, v] : r.notes)
                                    notes[k] = v;
                                list.push_back(Json{{"id", r.id},
                                                    {"title", r.title},
                                                    {"passed", r.passed},
                                                    {"checks", r.checks},
                                                    {"seconds", r.seconds},
                                                    {"detail", r.detail},
                                                    {"notes", notes}});
                                all = all && r.passed;
                            }
                            j["passed"] = all;
                            j["criteria"] = list;
                            verify_exit = all ? kOk : kVerifyFailed;
                            return j.dump(2);
                        },
                        false});
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    for (const Command& c : cmds) {
        if (!c.app->parsed())
            continue;
        try {
            Cache cache(Cache::default_dir(), use_cache && c.cacheable);
            const std::string request = c.app->get_name() + "\n" + c.app->config_to_str(true, false);
            std::string result;
            if (auto hit = cache.get(request)) {
                result = *hit;
            } else {
                result = c.run();
                cache.put(request, result);
            }
            out << result << "\n";
            return c.app->get_name() == "verify" ? verify_exit : kOk;
        } catch (const UsageError& e) {
            err << "wblocks: " << e.what() << "\n";
            return kUsage;
        } catch (const InvalidArgument& e) {
            err << "wblocks: " << e.what() << "\n";
            return kUsage;
        } catch (const std::exception& e) {
            err << "wblocks: " << e.what() << "\n";
            return kComputation;
        }
    }
    return kUsage;
}

} // namespace wblocks::cli
