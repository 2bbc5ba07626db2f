#include "freeid/cli.hpp"

#include "freeid/analytic.hpp"
#include "freeid/chains.hpp"
#include "freeid/checks.hpp"
#include "freeid/cumulants.hpp"
#include "freeid/errors.hpp"
#include "freeid/fid.hpp"
#include "freeid/hopf.hpp"
#include "freeid/jacobi.hpp"
#include "freeid/partitions.hpp"
#include "freeid/trees_dyck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace freeid {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    Json result;
    Table table;
    int status = 0;
};

std::string fmt_double(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

void emit(std::ostream& out, const std::string& format, const Json& config, const Output& o) {
    if (format == "json") {
        Json j;
        j["config"] = config;
        j["result"] = o.result;
        out << j.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        out << "# config " << config.dump() << "\n";
        for (std::size_t i = 0; i < o.table.columns.size(); ++i) out << (i ? "," : "") << csv_cell(o.table.columns[i]);
        out << "\n";
        for (const auto& row : o.table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
            out << "\n";
        }
        return;
    }
    // pretty
    for (const auto& [k, v] : config.items()) out << "# " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    std::vector<std::size_t> width(o.table.columns.size());
    for (std::size_t i = 0; i < width.size(); ++i) width[i] = o.table.columns[i].size();
    for (const auto& row : o.table.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        s.erase(s.find_last_not_of(' ') + 1);
        out << s << "\n";
    };
    line(o.table.columns);
    for (const auto& row : o.table.rows) line(row);
}

Json resolved_config(const CLI::App& top, const CLI::App& sub) {
    Json cfg;
    cfg["subcommand"] = sub.get_name();
    auto add = [&](const CLI::App& app) {
        for (const CLI::Option* opt : app.get_options()) {
            std::string name = opt->get_single_name();
            if (name == "help" || name == "h") continue;
            if (opt->get_expected_min() == 0) {
                cfg[name] = opt->count() > 0;
                continue;
            }
            if (opt->count() > 0) {
                auto r = opt->results();
                std::string v;
                for (std::size_t i = 0; i < r.size(); ++i) v += (i ? " " : "") + r[i];
                cfg[name] = v;
            } else {
                cfg[name] = opt->get_default_str();
            }
        }
    };
    add(top);
    add(sub);
    return cfg;
}

Complex parse_complex(const std::string& s) {
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("expected a complex number 're,im', got '" + s + "'");
    }
}

std::vector<double> parse_range(const std::string& s) {
    double a, b, h;
    char c1, c2;
    std::istringstream in(s);
    if (!(in >> a >> c1 >> b >> c2 >> h) || c1 != ':' || c2 != ':' || !(h > 0) || b < a)
        throw ParseError("expected a range 'start:stop:step', got '" + s + "'");
    const long n = static_cast<long>(std::floor((b - a) / h + 1e-9)) + 1;
    if (n > 1000000) throw BoundError("range with " + std::to_string(n) + " points", 1000000);
    std::vector<double> out;
    for (long i = 0; i < n; ++i) out.push_back(a + static_cast<double>(i) * h);
    return out;
}

std::vector<Complex> parse_grid(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("expected a grid 'x0:x1:dx,y0:y1:dy', got '" + s + "'");
    std::vector<Complex> out;
    for (double x : parse_range(s.substr(0, comma)))
        for (double y : parse_range(s.substr(comma + 1))) out.emplace_back(x, y);
    return out;
}

Output sequence_table(const std::vector<Rational>& v, int first_index) {
    Output o;
    o.result = to_strings(v);
    o.table.columns = {"n", "exact", "approx"};
    for (std::size_t i = 0; i < v.size(); ++i)
        o.table.rows.push_back({std::to_string(first_index + static_cast<int>(i)), to_string(v[i]), fmt_double(to_double(v[i]))});
    return o;
}

RationalSeq preset_moments(const std::string& name, int N) {
    std::vector<Rational> v(N + 1);
    for (int n = 0; n <= N; ++n) {
        if (name == "gaussian") v[n] = n % 2 ? Rational(0) : Rational(double_factorial(n - 1));
        else if (name == "semicircle") v[n] = n % 2 ? Rational(0) : Rational(catalan(n / 2));
        else if (name == "uniform") v[n] = Rational(1, n + 1);
        else if (name == "bell") {
            // Poisson(1) moments via the Bell triangle
            static std::vector<BigInt> bell{1};
            while (static_cast<int>(bell.size()) <= n) {
                int m = static_cast<int>(bell.size()) - 1;
                BigInt s = 0;
                for (int k = 0; k <= m; ++k) s += binomial(m, k) * bell[k];
                bell.push_back(s);
            }
            v[n] = Rational(bell[n]);
        } else {
            throw ParseError("unknown preset '" + name + "' (gaussian, semicircle, uniform, bell)");
        }
    }
    return {v, SeqRole::Moment};
}

Json combination_json(const DyckCombination& c) {
    Json j = Json::object();
    for (const auto& [w, x] : c) j[w] = to_string(x);
    return j;
}

Output from_combination(const DyckCombination& c) {
    Output o;
    o.result = combination_json(c);
    o.table.columns = {"word", "coefficient"};
    for (const auto& [w, x] : c) o.table.rows.push_back({w, to_string(x)});
    return o;
}

Output from_tree_combination(const TreeCombination& c) {
    Output o;
    o.result = Json::object();
    o.table.columns = {"tree", "coefficient"};
    for (const auto& [t, x] : c) {
        o.result[t.to_json()] = to_string(x);
        o.table.rows.push_back({t.to_json(), to_string(x)});
    }
    return o;
}

Output from_tensor(const TensorCombination& c) {
    Output o;
    o.result = Json::array();
    o.table.columns = {"left", "right", "coefficient"};
    for (const auto& [p, x] : c) {
        o.result.push_back(Json{{"left", Json::parse(p.first.to_json())}, {"right", Json::parse(p.second.to_json())}, {"coefficient", to_string(x)}});
        o.table.rows.push_back({p.first.to_json(), p.second.to_json(), to_string(x)});
    }
    return o;
}

Output law_output(const std::vector<std::pair<std::string, LawCheck>>& laws) {
    Output o;
    o.result = Json::array();
    o.table.columns = {"law", "ok", "counterexample"};
    for (const auto& [name, c] : laws) {
        o.result.push_back(Json{{"law", name}, {"ok", c.ok}, {"counterexample", c.counterexample}});
        o.table.rows.push_back({name, c.ok ? "true" : "false", c.counterexample});
        if (!c.ok) o.status = 2;
    }
    return o;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
    Json j;
    j["error"] = Json{{"kind", kind}, {"message", message}};
    err << j.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cumulant calculus, tree and Dyck structures, and free infinite divisibility tests", "freeid"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--seed", seed, "Seed for random simulation");

    // sequence
    auto* seq = app.add_subcommand("sequence", "Integer and rational sequences");
    std::string seq_name = "a000699", seq_route = "recursion", seq_c = "0";
    int seq_max = 12;
    seq->add_option("name", seq_name, "a000699 | gaussian-free | mu-c-moments | mu-c-free")
        ->check(CLI::IsMember({"a000699", "gaussian-free", "mu-c-moments", "mu-c-free"}));
    seq->add_option("--max", seq_max, "Largest order");
    seq->add_option("--route", seq_route, "For a000699: recursion | recursion2 | trees | pairings")
        ->check(CLI::IsMember({"recursion", "recursion2", "trees", "pairings"}));
    seq->add_option("--c", seq_c, "Parameter c of mu_c");

    // cumulants
    auto* cum = app.add_subcommand("cumulants", "Moment-cumulant conversions and weighted pairings");
    std::string cum_action = "convert", cum_input, cum_preset = "gaussian", cum_to = "free", cum_route = "series", cum_weight = "cr",
                cum_param = "1";
    int cum_order = 10;
    cum->add_option("action", cum_action, "convert | weighted")->check(CLI::IsMember({"convert", "weighted"}));
    cum->add_option("--input", cum_input, "Moments m0..mN as a JSON array of \"p/q\" strings");
    cum->add_option("--preset", cum_preset, "gaussian | semicircle | uniform | bell");
    cum->add_option("--order", cum_order, "Order N");
    cum->add_option("--to", cum_to, "classical | free | boolean")->check(CLI::IsMember({"classical", "free", "boolean"}));
    cum->add_option("--route", cum_route, "series | lattice")->check(CLI::IsMember({"series", "lattice"}));
    cum->add_option("--weight", cum_weight, "cc | cr | bdj");
    cum->add_option("--param", cum_param, "Weight parameter");

    // chains
    auto* ch = app.add_subcommand("chains", "Tree and Dyck word Markov chains");
    std::string ch_action = "stationary", ch_model = "nt";
    int ch_n = 3;
    long ch_steps = 100000;
    ch->add_option("action", ch_action, "stationary | matrix | return-time | simulate")
        ->check(CLI::IsMember({"stationary", "matrix", "return-time", "simulate"}));
    ch->add_option("--model", ch_model, "mtr | nt");
    ch->add_option("--n", ch_n, "Size");
    ch->add_option("--steps", ch_steps, "Simulation steps after burn-in");

    // hopf
    auto* hp = app.add_subcommand("hopf", "Hopf algebra of anti-increasingly ordered trees");
    std::string hp_action = "coproduct", hp_tree = "[1]", hp_other = "[1]";
    int hp_n = 3;
    hp->add_option("action", hp_action, "coproduct | product | antipode | bf-coproduct | over | dimension | list | laws")
        ->check(CLI::IsMember({"coproduct", "product", "antipode", "bf-coproduct", "over", "dimension", "list", "laws"}));
    hp->add_option("--tree", hp_tree, "Tree as nested [label, left, right]");
    hp->add_option("--other", hp_other, "Second tree for products");
    hp->add_option("--n", hp_n, "Size for dimension, list and laws");

    // dyck
    auto* dy = app.add_subcommand("dyck", "Dyck words, trees and the mu operator");
    std::string dy_action = "mu", dy_word = "UUDUDD", dy_tree;
    int dy_n = 3;
    dy->add_option("action", dy_action, "mu | nu | list | factorial | to-tree | from-tree")
        ->check(CLI::IsMember({"mu", "nu", "list", "factorial", "to-tree", "from-tree"}));
    dy->add_option("--word", dy_word, "Dyck word over U, D");
    dy->add_option("--tree", dy_tree, "Tree string, (left)right");
    dy->add_option("--n", dy_n, "Semilength for list");

    // fid
    auto* fd = app.add_subcommand("fid", "Exact free infinite divisibility test for mu_c");
    std::string fd_c = "0";
    int fd_order = 200;
    bool fd_confirm = false;
    fd->add_option("--c", fd_c, "Parameter c >= -1 (p/q or decimal)");
    fd->add_option("--order", fd_order, "Highest free cumulant order");
    fd->add_flag("--confirm", fd_confirm, "Recompute the Hankel determinants around the failure by direct elimination");

    // transform
    auto* tr = app.add_subcommand("transform", "Analytic transforms of mu_c");
    std::string tr_c = "0", tr_quantity = "G", tr_z = "0,2", tr_grid, tr_precision = "double";
    double tr_step = 1e-5, tr_tol = 1e-14, tr_rlo = -40, tr_rhi = 12, tr_ftol = kDefaultFTol, tr_sample = 0.01;
    tr->add_option("--c", tr_c, "Parameter c");
    tr->add_option("--quantity", tr_quantity, "G | F | cf | series | riccati | phi | decomposition | c1 | f-trajectory")
        ->check(CLI::IsMember({"G", "F", "cf", "series", "riccati", "phi", "decomposition", "c1", "f-trajectory"}));
    tr->add_option("--z", tr_z, "Point 're,im'");
    tr->add_option("--grid", tr_grid, "Grid 'x0:x1:dx,y0:y1:dy' (overrides --z)");
    tr->add_option("--precision", tr_precision, "Continued fraction precision: double | extended")
        ->check(CLI::IsMember({"double", "extended"}));
    tr->add_option("--step", tr_step, "Central difference step");
    tr->add_option("--tol", tr_tol, "Continued fraction tolerance");
    tr->add_option("--r-lo", tr_rlo, "f trajectory lower end");
    tr->add_option("--r-hi", tr_rhi, "f trajectory upper end");
    tr->add_option("--ode-tol", tr_ftol, "f trajectory integration tolerance");
    tr->add_option("--sample-step", tr_sample, "f trajectory sample spacing");

    // density
    auto* de = app.add_subcommand("density", "Density of mu_c from the boundary values of G");
    std::string de_c = "0", de_range = "-4:4:0.5";
    double de_eps = 1e-10;
    de->add_option("--c", de_c, "Parameter c");
    de->add_option("--range", de_range, "Points 'start:stop:step'");
    de->add_option("--eps", de_eps, "Distance above the real axis");

    // check
    auto* ck = app.add_subcommand("check", "Invariant suite");
    std::string ck_module = "all", ck_level = "desk";
    ck->add_option("module", ck_module, "all or a module name");
    ck->add_option("--level", ck_level, "desk | full")->check(CLI::IsMember({"desk", "full"}));

    std::vector<std::string> argv_store{"freeid"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        print_error(err, "usage", e.what());
        return 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    const Json config = resolved_config(app, *sub);
    Output o;
    try {
        if (sub == seq) {
            if (seq_max < 0) throw DomainError("--max must be nonnegative");
            if (seq_name == "a000699") {
                std::vector<Rational> v;
                const int top = seq_max / 2;
                if (seq_route == "recursion" || seq_route == "recursion2") {
                    auto r = seq_route == "recursion" ? shifted_by_recursion1(std::max(top - 1, 0)) : shifted_by_recursion2(std::max(top - 1, 0));
                    for (int n = 1; n <= top; ++n) v.emplace_back(r[n - 1]);
                } else if (seq_route == "trees") {
                    for (int n = 1; n <= top; ++n) v.emplace_back(s_via_trees(n - 1));
                } else {
                    for (int n = 1; n <= top; ++n) v.emplace_back(count_connected_pairings(2 * n));
                }
                o = sequence_table(v, 1);
            } else if (seq_name == "gaussian-free") {
                o = sequence_table(free_cumulants_of_mu_c(0, seq_max).values, 0);
            } else if (seq_name == "mu-c-moments") {
                Rational c = parse_rational(seq_c);
                o = sequence_table(moments_from_jacobi(mu_c_jacobi(c, seq_max / 2 + 1), seq_max).values, 0);
            } else {
                o = sequence_table(free_cumulants_of_mu_c(parse_rational(seq_c), seq_max).values, 0);
            }
        } else if (sub == cum) {
            if (cum_action == "weighted") {
                auto kind = parse_weight_kind(cum_weight);
                Rational q = parse_rational(cum_param);
                std::vector<Rational> v;
                for (int n = 0; n <= cum_order; ++n) v.push_back(n == 0 ? Rational(1) : weighted_pairing_moment(n, {kind, q}));
                o = sequence_table(v, 0);
            } else {
                RationalSeq m;
                if (!cum_input.empty()) {
                    Json j;
                    try {
                        j = Json::parse(cum_input);
                    } catch (const std::exception& e) {
                        throw ParseError(std::string("--input: ") + e.what());
                    }
                    std::vector<Rational> v;
                    for (const auto& x : j) v.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
                    m = RationalSeq(v, SeqRole::Moment);
                } else {
                    m = preset_moments(cum_preset, cum_order);
                }
                RationalSeq k;
                if (cum_route == "lattice") {
                    auto kind = cum_to == "classical" ? LatticeKind::All : cum_to == "free" ? LatticeKind::NonCrossing : LatticeKind::Interval;
                    k = lattice_cumulants_from_moments(m, kind);
                } else {
                    k = cum_to == "classical" ? classical_from_moments(m) : cum_to == "free" ? free_from_moments(m) : boolean_from_moments(m);
                }
                o = sequence_table(k.values, 0);
            }
        } else if (sub == ch) {
            auto model = parse_chain_model(ch_model);
            if (ch_action == "return-time") {
                auto r = return_time_sum(ch_n, model);
                o.result = Json{{"sum", to_string(r.sum)}, {"states", to_string(r.state_count)}, {"mean_return_time", to_string(r.mean_return_time)}};
                o.table.columns = {"sum", "states", "mean_return_time"};
                o.table.rows.push_back({to_string(r.sum), to_string(r.state_count), to_string(r.mean_return_time)});
            } else {
                auto P = transition_matrix(model, ch_n);
                if (ch_action == "simulate") {
                    auto pi = stationary(P);
                    auto freq = simulate(P, ch_steps, seed);
                    o.result = Json::object();
                    o.result["burn_in"] = kDefaultBurnIn;
                    o.result["total_variation"] = total_variation(freq, pi.weights);
                    o.result["states"] = Json::array();
                    o.table.columns = {"state", "frequency", "stationary"};
                    for (std::size_t i = 0; i < P.size(); ++i) {
                        o.result["states"].push_back(Json{{"state", P.states[i]}, {"frequency", freq[i]}, {"stationary", to_string(pi.weights[i])}});
                        o.table.rows.push_back({P.states[i], fmt_double(freq[i], 6), to_string(pi.weights[i])});
                    }
                } else {
                    std::vector<Rational> weights;
                    if (ch_action == "stationary") weights = stationary(P).weights;
                    o.result = Json::array();
                    o.table.columns = ch_action == "stationary" ? std::vector<std::string>{"state", "weight", "approx"}
                                                                : std::vector<std::string>{"from", "to", "probability"};
                    for (std::size_t i = 0; i < P.size(); ++i) {
                        Json edges = Json::array();
                        for (std::size_t j = 0; j < P.size(); ++j)
                            if (sgn(P.rows[i][j]) != 0) {
                                edges.push_back(Json{{"to", P.states[j]}, {"p", to_string(P.rows[i][j])}});
                                if (ch_action == "matrix") o.table.rows.push_back({P.states[i], P.states[j], to_string(P.rows[i][j])});
                            }
                        Json node{{"state", P.states[i]}};
                        if (ch_action == "stationary") {
                            node["weight"] = to_string(weights[i]);
                            o.table.rows.push_back({P.states[i], to_string(weights[i]), fmt_double(to_double(weights[i]))});
                        }
                        node["out_edges"] = edges;
                        o.result.push_back(node);
                    }
                }
            }
        } else if (sub == hp) {
            if (hp_action == "dimension") {
                std::vector<Rational> v;
                for (int n = 0; n <= hp_n; ++n) v.emplace_back(hilbert_dimension(n));
                o = sequence_table(v, 0);
            } else if (hp_action == "list") {
                o.result = Json::array();
                o.table.columns = {"tree", "shape"};
                for (const auto& t : enumerate_ordered_trees(hp_n)) {
                    o.result.push_back(Json::parse(t.to_json()));
                    o.table.rows.push_back({t.to_json(), t.tree().shape().to_string()});
                }
            } else if (hp_action == "laws") {
                o = law_output({{"coassociativity", coassociativity_check(hp_n)},
                                {"counit", counit_check(hp_n)},
                                {"antipode", antipode_check(hp_n)},
                                {"associativity", associativity_check(hp_n)},
                                {"charge coassociativity", bf_coassociativity_check(hp_n)}});
            } else {
                auto parse_tree = [](const std::string& s) {
                    return s == "[]" ? OrderedTree() : OrderedTree::parse_json(s);
                };
                OrderedTree t = parse_tree(hp_tree);
                if (hp_action == "coproduct") o = from_tensor(lr_coproduct(t));
                else if (hp_action == "bf-coproduct") o = from_tensor(bf_coproduct(t));
                else if (hp_action == "antipode") o = from_tree_combination(antipode(t));
                else if (hp_action == "product") o = from_tree_combination(lr_product(t, parse_tree(hp_other)));
                else o = from_tree_combination({{bf_over(t, parse_tree(hp_other)), Rational(1)}});
            }
        } else if (sub == dy) {
            if (dy_action == "mu") o = from_combination(mu_operator(dy_word));
            else if (dy_action == "nu") o = from_combination(nu_operator(dy_word));
            else if (dy_action == "list") {
                o.result = Json::array();
                o.table.columns = {"word", "factorial", "tree"};
                for (const auto& w : enumerate_dyck_words(dy_n)) {
                    o.result.push_back(w);
                    o.table.rows.push_back({w, to_string(dyck_factorial(w)), dyck_to_tree(w).to_string()});
                }
            } else if (dy_action == "factorial") {
                auto f = dyck_factorial(dy_word);
                o.result = to_string(f);
                o.table = {{"word", "factorial"}, {{dy_word, to_string(f)}}};
            } else if (dy_action == "to-tree") {
                auto t = dyck_to_tree(dy_word).to_string();
                o.result = t;
                o.table = {{"word", "tree"}, {{dy_word, t}}};
            } else {
                auto w = tree_to_dyck(BinaryTree::parse(dy_tree));
                o.result = w;
                o.table = {{"tree", "word"}, {{dy_tree, w}}};
            }
        } else if (sub == fd) {
            Rational c = parse_rational(fd_c);
            auto r = fid_test(c, fd_order);
            o.result = Json::parse(r.to_json());
            o.table.columns = {"c", "order", "verdict", "first_negative_index"};
            o.table.rows.push_back({to_string(c), std::to_string(fd_order), to_string(r.verdict),
                                    r.first_negative_index ? std::to_string(*r.first_negative_index) : ""});
            if (fd_confirm && r.first_negative_index) {
                auto s = integer_shifted_sequence(c, fd_order);
                const int k = *r.first_negative_index;
                Json conf = Json::array();
                for (int j : {k - 1, k}) {
                    if (j < 0) continue;
                    int sg = sgn(hankel_determinant_int(s, j, k));
                    conf.push_back(Json{{"index", j}, {"sign", sg}});
                }
                o.result["direct_hankel_signs"] = conf;
                std::string signs;
                for (const auto& e : conf) signs += (signs.empty() ? "" : " ") + std::string("H") + std::to_string(e["index"].get<int>()) + (e["sign"].get<int>() > 0 ? ">0" : e["sign"].get<int>() < 0 ? "<0" : "=0");
                o.table.columns.push_back("direct_hankel");
                o.table.rows.back().push_back(signs);
            }
            if (r.verdict == Verdict::Fail) o.status = 2;
        } else if (sub == tr) {
            Rational c = parse_rational(tr_c);
            CfOptions opt;
            opt.tol = tr_tol;
            opt.precision = parse_precision(tr_precision);
            if (tr_quantity == "f-trajectory") {
                auto t = f_trajectory(c, tr_rlo, tr_rhi, tr_ftol, tr_sample);
                o.result = Json::parse(t.to_json());
                o.table.columns = {"r", "f", "fprime"};
                for (std::size_t i = 0; i < t.r.size(); ++i)
                    o.table.rows.push_back({fmt_double(t.r[i]), fmt_double(t.f[i]), fmt_double(t.fprime[i])});
                if (!t.ok()) o.status = 2;
            } else if (tr_quantity == "c1") {
                Complex closed = odd_coefficient_over_c(c), fitted = calibrate_odd_coefficient_over_c(c);
                o.result = Json{{"c1_over_c_closed_form", complex_json(closed)},
                                {"c1_over_c_calibrated", complex_json(fitted)},
                                {"calibration_point", complex_json(Complex(0, 10))},
                                {"difference", std::abs(closed - fitted)}};
                o.table.columns = {"closed_im", "calibrated_im", "difference"};
                o.table.rows.push_back({fmt_double(closed.imag(), 15), fmt_double(fitted.imag(), 15), fmt_double(std::abs(closed - fitted), 3)});
            } else {
                std::vector<Complex> pts = tr_grid.empty() ? std::vector<Complex>{parse_complex(tr_z)} : parse_grid(tr_grid);
                o.result = Json::array();
                o.table.columns = {"re_z", "im_z", "value_re", "value_im", "extra"};
                if (tr_quantity == "riccati") o.table.columns = {"re_z", "im_z", "g_form", "f_form", ""};
                if (tr_quantity == "decomposition") o.table.columns = {"re_z", "im_z", "shift", "dilation", ""};
                if (tr_quantity == "G") o.table.columns[4] = "route";
                if (tr_quantity == "cf") o.table.columns[4] = "depth";
                if (tr_quantity == "series") o.table.columns[4] = "precision";
                if (tr_quantity == "phi") o.table.columns[4] = "residual";
                for (Complex z : pts) {
                    Json row{{"z", complex_json(z)}};
                    Complex v;
                    std::string extra;
                    if (tr_quantity == "G") {
                        auto g = G_eval(c, z, opt);
                        v = g.value;
                        extra = to_string(g.route);
                        row["route"] = extra;
                    } else if (tr_quantity == "F") {
                        v = F_eval(c, z, opt);
                    } else if (tr_quantity == "cf") {
                        auto g = cf_eval(c, z, opt);
                        v = g.value;
                        row["depth"] = g.depth;
                        extra = std::to_string(g.depth);
                    } else if (tr_quantity == "series") {
                        auto g = g_series(c, z);
                        v = g.value;
                        extra = to_string(g.precision);
                        row["precision"] = extra;
                    } else if (tr_quantity == "riccati") {
                        auto r = riccati_residual(c, z, tr_step);
                        v = Complex(r.g_form, r.f_form);
                        row["g_form"] = r.g_form;
                        row["f_form"] = r.f_form;
                    } else if (tr_quantity == "phi") {
                        auto p = voiculescu_phi(c, z);
                        v = p.phi;
                        row["newton_steps"] = p.newton_steps;
                        extra = fmt_double(p.residual, 3);
                    } else {
                        auto d = decomposition_residual(c, z);
                        v = Complex(d.shift, d.dilation);
                        row["shift"] = d.shift;
                        row["dilation"] = d.dilation;
                    }
                    if (tr_quantity != "riccati" && tr_quantity != "decomposition") row["value"] = complex_json(v);
                    o.result.push_back(row);
                    o.table.rows.push_back({fmt_double(z.real()), fmt_double(z.imag()), fmt_double(v.real()), fmt_double(v.imag()), extra});
                }
            }
        } else if (sub == de) {
            Rational c = parse_rational(de_c);
            o.result = Json::array();
            o.table.columns = {"u", "density"};
            for (double u : parse_range(de_range)) {
                double p = density_eval(c, u, de_eps);
                o.result.push_back(Json{{"u", u}, {"density", p}});
                o.table.rows.push_back({fmt_double(u), fmt_double(p)});
            }
        } else if (sub == ck) {
            auto items = run_checks(ck_module, parse_check_level(ck_level));
            o.result = Json::array();
            o.table.columns = {"module", "check", "status", "detail"};
            for (const auto& it : items) {
                o.result.push_back(Json{{"module", it.module}, {"check", it.name}, {"ok", it.ok}, {"detail", it.detail}});
                o.table.rows.push_back({it.module, it.name, it.ok ? "PASS" : "FAIL", it.detail});
                if (!it.ok) o.status = 2;
            }
        }
    } catch (const Error& e) {
        print_error(err, e.kind(), e.what());
        return 1;
    } catch (const std::exception& e) {
        print_error(err, "internal", e.what());
        return 1;
    }
    emit(out, format, config, o);
    return o.status;
}

}  // namespace freeid
