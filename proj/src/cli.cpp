#include "mipl/cli.hpp"
#include "mipl/error.hpp"
#include "mipl/sampling.hpp"
#include "mipl/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace mipl {

namespace {

using nlohmann::json;

struct Config {
    Setting setting;
    std::optional<Rational> max_hom;
    bool json_out = false;
    std::uint64_t seed = 0;
    int trials = 200;
    std::vector<std::string> char_files;
};

struct Output {
    std::vector<std::string> lines;
    json value;
    int status = exit_ok;
};

struct Command {
    int nargs;
    bool needs_budget;
    std::function<Output(const Config&, const std::vector<std::string>&)> run;
};

const Rational& budget(const Config& c)
{
    return *c.max_hom;
}

json rat_json(const Rational& q)
{
    return to_string(q);
}

Output of_rational(const Rational& q)
{
    return {{to_string(q)}, rat_json(q)};
}

Output of_poly(const Polynomial& p, int dim)
{
    json arr = json::array();
    for (const auto& [g, c] : p) arr.push_back({{"coeff", to_string(c)}, {"monomial", "z" + format(g, dim)}});
    return {{format(p, dim)}, arr};
}

Output of_series(const TruncatedSeries& s)
{
    Output o = of_poly(s.terms(), s.dim());
    o.lines.back() += "  + O(|.| > " + to_string(s.cutoff()) + ")";
    o.value = {{"cutoff", to_string(s.cutoff())}, {"terms", o.value}};
    return o;
}

Output of_lelem(const LElement& a, int dim)
{
    json arr = json::array();
    for (const auto& [g, c] : a) arr.push_back({{"coeff", to_string(c)}, {"generator", format(g, dim)}});
    return {{format(a, dim)}, arr};
}

Output of_uelem(const UElement& u, int dim)
{
    json arr = json::array();
    for (const auto& [w, c] : u) arr.push_back({{"coeff", to_string(c)}, {"word", format(w, dim)}});
    return {{format(u, dim)}, arr};
}

template <class Right, class F>
Output of_records(const Linear<std::pair<BasisWord, Right>>& t, int dim, F&& right)
{
    Output o;
    o.value = json::array();
    for (const auto& [pair, c] : t) {
        std::string l = format(pair.first, dim), r = right(pair.second);
        o.lines.push_back(to_string(c) + " | " + l + " | " + r);
        o.value.push_back({{"coeff", to_string(c)}, {"left", l}, {"right", r}});
    }
    if (o.lines.empty()) o.lines.push_back("0");
    return o;
}

MultiIndex parse_target(const std::string& src, int dim)
{
    std::string t = src;
    auto first = t.find_first_not_of(" \t");
    if (first != std::string::npos && t[first] == 'z') t.erase(0, first + 1);
    return parse_multiindex(t, dim);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Character> characters(const Config& c, std::size_t needed)
{
    if (c.char_files.size() != needed)
        throw ConfigError("command needs " + std::to_string(needed) + " --char file(s), got " +
                          std::to_string(c.char_files.size()));
    std::vector<Character> out;
    for (const auto& f : c.char_files) out.push_back(parse_character(read_file(f), c.setting));
    return out;
}

Rational eval_on(const Functional& f, const UElement& u)
{
    Rational r = 0;
    for (const auto& [w, c] : u) r += c * f(w);
    return r;
}

std::map<std::string, Command> commands()
{
    std::map<std::string, Command> m;
    auto lelem_binary = [](auto op) {
        return Command{2, false, [op](const Config& c, const std::vector<std::string>& a) {
                           const auto& s = c.setting;
                           return of_lelem(op(parse_lelement(a[0], s), parse_lelement(a[1], s)), s.dim);
                       }};
    };
    auto uelem_binary = [](auto op) {
        return Command{2, false, [op](const Config& c, const std::vector<std::string>& a) {
                           const auto& s = c.setting;
                           return of_uelem(op(parse_uelement(a[0], s), parse_uelement(a[1], s)), s.dim);
                       }};
    };
    m["grade"] = {1, false, [](const Config& c, const std::vector<std::string>& a) {
                      const auto& s = c.setting;
                      std::string src = a[0];
                      if (src.find_first_not_of(" \t") != std::string::npos && src[src.find_first_not_of(" \t")] == '{') {
                          MultiIndex g = parse_multiindex(src, s.dim);
                          auto bn = bar_norm(g);
                          Rational h = homogeneity(g, s.alpha);
                          Output o;
                          o.lines = {to_string(h), "bar_norm " + std::to_string(bn.value),
                                     std::string("in_M_minus ") + (bn.in_M_minus ? "true" : "false"),
                                     "sigma " + sigma(g).get_str()};
                          o.value = {{"homogeneity", to_string(h)},
                                     {"bar_norm", bn.value},
                                     {"in_M_minus", bn.in_M_minus},
                                     {"sigma", sigma(g).get_str()}};
                          return o;
                      }
                      UElement u = parse_uelement(src, s);
                      std::set<Rational> grades;
                      for (const auto& [w, coeff] : u) grades.insert(grade_u(w, s.alpha));
                      if (grades.size() > 1) throw ConfigError("element is not homogeneous");
                      return of_rational(grades.empty() ? Rational(0) : *grades.begin());
                  }};
    m["pl-prod"] = lelem_binary([](const LElement& x, const LElement& y) { return pl_product(x, y); });
    m["pl-bracket"] = lelem_binary([](const LElement& x, const LElement& y) { return pl_bracket(x, y); });
    m["comp-bracket"] = lelem_binary([](const LElement& x, const LElement& y) { return comp_bracket(x, y); });
    m["normal-form"] = {1, false, [](const Config& c, const std::vector<std::string>& a) {
                            return of_uelem(normal_form(parse_word(a[0], c.setting)), c.setting.dim);
                        }};
    m["conc"] = uelem_binary([](const UElement& x, const UElement& y) { return conc(x, y); });
    m["gl"] = uelem_binary([](const UElement& x, const UElement& y) { return gl(x, y); });
    m["gl-explicit"] = uelem_binary([](const UElement& x, const UElement& y) { return gl_explicit(x, y); });
    m["star"] = uelem_binary([](const UElement& x, const UElement& y) { return star(x, y); });
    m["cop-star"] = {1, false, [](const Config& c, const std::vector<std::string>& a) {
                         int d = c.setting.dim;
                         return of_records(delta_star(parse_uelement(a[0], c.setting)), d,
                                           [d](const BasisWord& w) { return format(w, d); });
                     }};
    m["cop-gl"] = {1, true, [](const Config& c, const std::vector<std::string>& a) {
                       int d = c.setting.dim;
                       return of_records(delta_gl(c.setting, parse_uelement(a[0], c.setting), budget(c)), d,
                                         [d](const BasisWord& w) { return format(w, d); });
                   }};
    m["theta"] = {2, false, [](const Config& c, const std::vector<std::string>& a) {
                      return of_poly(theta(c.setting, parse_basis_word(a[0], c.setting), parse_target(a[1], c.setting.dim)),
                                     c.setting.dim);
                  }};
    m["comodule"] = {1, true, [](const Config& c, const std::vector<std::string>& a) {
                         int d = c.setting.dim;
                         return of_records(comodule_delta(c.setting, parse_target(a[0], d), budget(c)), d,
                                           [d](const MultiIndex& g) { return "z" + format(g, d); });
                     }};
    m["char-eval"] = {1, false, [](const Config& c, const std::vector<std::string>& a) {
                          auto f = characters(c, 1)[0].functional();
                          return of_rational(eval_on(f, parse_uelement(a[0], c.setting)));
                      }};
    m["convolve"] = {1, true, [](const Config& c, const std::vector<std::string>& a) {
                         auto fs = characters(c, 2);
                         return of_rational(convolve_eval(c.setting, fs[0].functional(), fs[1].functional(),
                                                          parse_uelement(a[0], c.setting), budget(c)));
                     }};
    m["inverse"] = {1, true, [](const Config& c, const std::vector<std::string>& a) {
                        auto f = characters(c, 1)[0].functional();
                        return of_rational(eval_on(group_inverse(c.setting, f, budget(c)), parse_uelement(a[0], c.setting)));
                    }};
    auto series_cmd = [](bool with_unit_term) {
        return Command{1, true, [with_unit_term](const Config& c, const std::vector<std::string>& a) {
                           const auto& s = c.setting;
                           auto f = characters(c, 1)[0].functional();
                           TruncatedSeries in(s.dim, s.alpha, budget(c), parse_polynomial(a[0], s.dim));
                           return of_series(with_unit_term ? lambda_act(s, f, in) : char_act(s, f, in));
                       }};
    };
    m["char-act"] = series_cmd(false);
    m["lambda"] = series_cmd(true);
    m["gamma"] = {1, true, [](const Config& c, const std::vector<std::string>& a) {
                      auto f = characters(c, 1)[0].functional();
                      return of_poly(gamma_act(c.setting, f, parse_polynomial(a[0], c.setting.dim), budget(c)),
                                     c.setting.dim);
                  }};
    m["check-axioms"] = {0, false, [](const Config& c, const std::vector<std::string>&) {
                             Output o;
                             o.value = json::object();
                             bool ok = true;
                             json laws = json::array();
                             for (const auto& r : check_postlie_axioms(c.setting, c.trials, c.seed)) {
                                 ok = ok && r.passed == r.total;
                                 o.lines.push_back(r.name + " " + std::to_string(r.passed) + "/" + std::to_string(r.total));
                                 laws.push_back({{"law", r.name}, {"passed", r.passed}, {"total", r.total}});
                             }
                             o.lines.insert(o.lines.begin(), ok ? "OK" : "FAIL");
                             o.value = {{"ok", ok}, {"laws", laws}};
                             o.status = ok ? exit_ok : exit_internal;
                             return o;
                         }};
    return m;
}

int code_for(ErrorKind k)
{
    switch (k) {
    case ErrorKind::parse: return exit_parse;
    case ErrorKind::config: return exit_config;
    case ErrorKind::budget: return exit_budget;
    case ErrorKind::internal: return exit_internal;
    }
    return exit_internal;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    static const auto table = commands();
    CLI::App app{"Exact computations in the post-Lie algebra of multi-index derivations", "mipl"};
    app.require_subcommand(1);

    Config cfg;
    std::string alpha = "2/5", space = "L", max_hom;
    int dim = 1;
    auto* dim_opt = app.add_option("--dim", dim, "spatial dimension d");
    auto* alpha_opt = app.add_option("--alpha", alpha, "homogeneity of pure variables, p/q in ]0,1[");
    auto* space_opt = app.add_option("--space", space, "generator space: L or L0");
    app.add_option("--max-hom", max_hom, "homogeneity budget p/q for truncating commands");
    app.add_flag("--json", cfg.json_out, "emit JSON");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--trials", cfg.trials, "number of random trials");
    app.add_option("--char", cfg.char_files, "character JSON file (repeat for convolve)");

    static const std::map<std::string, std::string> help = {
        {"grade", "homogeneity/norm of a multi-index, or grade of a basis word"},
        {"pl-prod", "post-Lie product of two L elements"},
        {"pl-bracket", "Lie bracket of two L elements"},
        {"comp-bracket", "composition bracket of two L elements"},
        {"normal-form", "rewrite an enveloping algebra element into the PBW basis"},
        {"conc", "concatenation product"},
        {"gl", "associative product u trbar v"},
        {"gl-explicit", "the same product from the explicit E_m F_J expansion"},
        {"star", "star product on the dual basis"},
        {"cop-star", "coshuffle coproduct"},
        {"cop-gl", "coproduct dual to gl (needs --max-hom)"},
        {"theta", "Theta(u (x) z^target)"},
        {"comodule", "coaction on a monomial (needs --max-hom)"},
        {"char-eval", "value of a character on a basis element"},
        {"convolve", "convolution of two characters on an element (needs --max-hom)"},
        {"inverse", "group inverse of a character on an element (needs --max-hom)"},
        {"char-act", "action of a character on a polynomial, truncated (needs --max-hom)"},
        {"lambda", "left module map Lambda (needs --max-hom)"},
        {"gamma", "dual action Gamma_f on a polynomial (needs --max-hom)"},
        {"check-axioms", "post-Lie axioms on random generator triples"},
    };
    std::map<std::string, std::vector<std::string>> positional;
    for (const auto& [name, cmd] : table) {
        auto it = help.find(name);
        auto* sub = app.add_subcommand(name, it == help.end() ? "" : it->second);
        sub->fallthrough();
        if (cmd.nargs > 0) sub->add_option("args", positional[name])->expected(cmd.nargs)->required();
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }

    std::string name = app.get_subcommands().front()->get_name();
    const Command& cmd = table.at(name);
    try {
        // A character file may supply dim/alpha/space not given on the command line.
        if (!cfg.char_files.empty()) {
            json doc;
            try {
                doc = json::parse(read_file(cfg.char_files.front()));
            } catch (const json::parse_error& e) {
                throw ParseError(std::string("character file: ") + e.what(), 1, static_cast<int>(e.byte));
            }
            if (doc.is_object()) {
                if (!dim_opt->count() && doc.contains("dim") && doc["dim"].is_number_integer()) dim = doc["dim"];
                if (!alpha_opt->count() && doc.contains("alpha") && doc["alpha"].is_string()) alpha = doc["alpha"];
                if (!space_opt->count() && doc.contains("space") && doc["space"].is_string()) space = doc["space"];
            }
        }
        cfg.setting.dim = dim;
        cfg.setting.alpha = parse_rational(alpha);
        if (space == "L")
            cfg.setting.space = Space::L;
        else if (space == "L0")
            cfg.setting.space = Space::L0;
        else
            throw ConfigError("space must be L or L0");
        cfg.setting.validate();
        if (!max_hom.empty()) {
            cfg.max_hom = parse_rational(max_hom);
            if (*cfg.max_hom < 0) throw ConfigError("max-hom must be nonnegative");
        }
        if (cmd.needs_budget && !cfg.max_hom) throw BudgetError(name + " truncates and needs --max-hom");

        Output o = cmd.run(cfg, positional[name]);
        std::string mh = cfg.max_hom ? to_string(*cfg.max_hom) : "-";
        if (cfg.json_out) {
            json doc = {{"command", name},
                        {"config",
                         {{"dim", cfg.setting.dim},
                          {"alpha", to_string(cfg.setting.alpha)},
                          {"space", space_name(cfg.setting.space)},
                          {"max_hom", mh}}},
                        {"result", o.value}};
            out << doc.dump(2) << "\n";
        } else {
            out << "# mipl " << name << " dim=" << cfg.setting.dim << " alpha=" << to_string(cfg.setting.alpha)
                << " space=" << space_name(cfg.setting.space) << " max_hom=" << mh << "\n";
            for (const auto& l : o.lines) out << l << "\n";
        }
        return o.status;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

} // namespace mipl
