#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hookschur/enumerate.hpp"
#include "hookschur/genfun.hpp"
#include "hookschur/insertion.hpp"
#include "hookschur/json_io.hpp"
#include "hookschur/lr.hpp"
#include "hookschur/maps.hpp"
#include "hookschur/rsk.hpp"
#include "hookschur/verify.hpp"

namespace hs_cli {

using namespace hookschur;

Composition shape_arg(const std::string& text, const std::string& flag) {
    if (text.empty()) throw std::invalid_argument("empty " + flag);
    return parse_composition(text);
}

Partition partition_arg(const std::string& text, const std::string& flag) {
    Composition c = shape_arg(text, flag);
    return Partition(c.parts);
}

DescentSet descent_arg(int n, const std::string& text) {
    return DescentSet(n, parse_int_set(text));
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::string tableau_text(const Filling& f) {
    // Rows printed top to bottom, one per line, so the page layout matches
    // the French convention.
    std::string s;
    for (size_t i = f.rows.size(); i-- > 0;) {
        for (size_t j = 0; j < f.rows[i].size(); ++j) {
            if (j) s += ' ';
            s += to_string(f.rows[i][j]);
        }
        if (f.rows[i].empty()) s += '-';
        s += '\n';
    }
    return s;
}

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void print_polynomial(const Polynomial& p, const Options& opt) {
    if (opt.json())
        emit(polynomial_to_json(p));
    else
        std::cout << p.to_text() << "\n";
}

int print_report(const Report& r) {
    if (r.ok) {
        std::cout << "OK " << r.detail << "\n";
        return 0;
    }
    std::cout << "FAIL " << r.detail << "\n";
    return 1;
}

Family family_arg(const std::string& name) {
    if (name == "ssht") return Family::ssht;
    if (name == "hct") return Family::hct;
    if (name == "rhct") return Family::rhct;
    if (name == "ssyct") return Family::ssyct;
    if (name == "ssyrt") return Family::ssyrt;
    throw std::invalid_argument("unknown family '" + name + "'");
}

StandardFamily standard_family_arg(const std::string& name) {
    if (name == "syct") return StandardFamily::syct;
    if (name == "syrt") return StandardFamily::syrt;
    if (name == "shct") return StandardFamily::shct;
    throw std::invalid_argument("unknown family '" + name + "'");
}

bool is_standard_family(const std::string& name) {
    return name == "syct" || name == "syrt" || name == "shct";
}

struct ExpandArgs {
    std::string shape, mask, descents;
    int k = 0, l = 0, m = 0, n = 0;
    Options opt;
};

void setup_expand(CLI::App& app, ExpandArgs& a, int& rc) {
    CLI::App* expand = app.add_subcommand("expand", "print a generating polynomial");
    expand->require_subcommand(1);

    auto add_super = [&](const char* name, const char* help, auto compute) {
        CLI::App* c = expand->add_subcommand(name, help);
        c->add_option("--shape", a.shape, "shape parts")->required();
        c->add_option("--k", a.k, "unprimed letters")->required();
        c->add_option("--l", a.l, "primed letters")->required();
        add_format(c, a.opt);
        c->callback([&, compute]() {
            print_polynomial(compute(), a.opt);
            rc = 0;
        });
    };
    add_super("hs", "hook Schur polynomial of a partition",
              [&]() { return hs(partition_arg(a.shape, "--shape"), a.k, a.l); });
    add_super("hq", "quasisymmetric hook Schur polynomial",
              [&]() { return hq(shape_arg(a.shape, "--shape"), a.k, a.l); });
    add_super("rhq", "row-strict quasisymmetric hook Schur polynomial",
              [&]() { return rhq(shape_arg(a.shape, "--shape"), a.k, a.l); });

    auto add_single = [&](const char* name, const char* help, auto straight, auto skew) {
        CLI::App* c = expand->add_subcommand(name, help);
        c->add_option("--shape", a.shape, "shape parts")->required();
        c->add_option("--mask", a.mask, "inner shape parts, zeros allowed");
        c->add_option("--m", a.m, "number of letters")->required();
        add_format(c, a.opt);
        c->callback([&, straight, skew]() {
            Composition shape = shape_arg(a.shape, "--shape");
            if (a.mask.empty()) {
                print_polynomial(straight(shape), a.opt);
            } else {
                SkewMask mask{parse_weak_composition(a.mask)};
                print_polynomial(skew(shape, mask), a.opt);
            }
            rc = 0;
        });
    };
    add_single(
        "cs", "quasisymmetric Schur polynomial",
        [&](const Composition& s) { return cs(s, a.m); },
        [&](const Composition& s, const SkewMask& g) { return cs_skew(s, g, a.m); });
    add_single(
        "rs", "row-strict quasisymmetric Schur polynomial",
        [&](const Composition& s) { return rs(s, a.m); },
        [&](const Composition& s, const SkewMask& g) { return rs_skew(s, g, a.m); });

    CLI::App* fund = expand->add_subcommand("fund", "fundamental quasisymmetric polynomial");
    fund->add_option("--n", a.n, "degree")->required();
    fund->add_option("--descents", a.descents, "descent set, e.g. {2,3}")->required();
    fund->add_option("--m", a.m, "number of letters")->required();
    add_format(fund, a.opt);
    fund->callback([&]() {
        print_polynomial(fundamental(descent_arg(a.n, a.descents), a.m), a.opt);
        rc = 0;
    });

    CLI::App* sf = expand->add_subcommand("superfund", "super fundamental polynomial");
    sf->add_option("--n", a.n, "degree")->required();
    sf->add_option("--descents", a.descents, "descent set, e.g. {2,3}")->required();
    sf->add_option("--k", a.k, "unprimed letters")->required();
    sf->add_option("--l", a.l, "primed letters")->required();
    add_format(sf, a.opt);
    sf->callback([&]() {
        print_polynomial(super_fundamental(descent_arg(a.n, a.descents), a.k, a.l), a.opt);
        rc = 0;
    });
}

struct EnumArgs {
    std::string family, shape, mask;
    int k = 0, l = 0;
    Options opt;
};

void run_enumeration(const EnumArgs& a, bool count_only, int& rc) {
    Composition shape = shape_arg(a.shape, "--shape");
    if (is_standard_family(a.family)) {
        if (!a.mask.empty()) throw std::invalid_argument("--mask needs a semistandard family");
        long long n = 0;
        Json list = Json::array();
        for_each_standard(shape, standard_family_arg(a.family), [&](const Filling& f) {
            ++n;
            if (!count_only) {
                if (a.opt.json())
                    list.push_back(tableau_to_json(f));
                else
                    std::cout << to_string(f) << "\n";
            }
            return true;
        });
        if (count_only)
            std::cout << n << "\n";
        else if (a.opt.json())
            emit(list);
        rc = 0;
        return;
    }
    Family fam = family_arg(a.family);
    std::optional<SkewMask> mask;
    if (!a.mask.empty()) mask = SkewMask{parse_weak_composition(a.mask)};
    long long n = 0;
    Json list = Json::array();
    for_each_filling(shape, mask, fam, a.k, a.l, [&](const Filling& f) {
        ++n;
        if (!count_only) {
            if (a.opt.json())
                list.push_back(tableau_to_json(f, mask));
            else
                std::cout << to_string(f) << "\n";
        }
        return true;
    });
    if (count_only)
        std::cout << n << "\n";
    else if (a.opt.json())
        emit(list);
    rc = 0;
}

void setup_enumerate(CLI::App& app, EnumArgs& a, EnumArgs& b, int& rc) {
    auto wire = [&rc](CLI::App* c, EnumArgs& args, bool count_only) {
        c->add_option("--family", args.family,
                      "ssht|hct|rhct|ssyct|ssyrt|syct|syrt|shct")
            ->required();
        c->add_option("--shape", args.shape, "shape parts")->required();
        c->add_option("--mask", args.mask, "inner shape parts, zeros allowed");
        c->add_option("--k", args.k, "unprimed letters");
        c->add_option("--l", args.l, "primed letters");
        add_format(c, args.opt);
        c->callback([&args, count_only, &rc]() { run_enumeration(args, count_only, rc); });
    };
    wire(app.add_subcommand("enumerate", "list all fillings of a shape"), a, false);
    wire(app.add_subcommand("count", "count the fillings of a shape"), b, true);
}

struct MapArgs {
    std::string input;
    Options opt;
};

void setup_map(CLI::App& app, MapArgs& a, int& rc) {
    CLI::App* map = app.add_subcommand("map", "apply a bijection to a tableau");
    map->require_subcommand(1);
    auto wire = [&](const char* name, const char* help, auto run) {
        CLI::App* c = map->add_subcommand(name, help);
        c->add_option("--input", a.input, "tableau JSON file")->required();
        add_format(c, a.opt);
        c->callback([&, run]() {
            Filling in = tableau_from_json(load_json_file(a.input)).filling;
            run(in);
            rc = 0;
        });
    };
    auto print_tableau = [&](const Filling& f) {
        if (a.opt.json())
            emit(tableau_to_json(f));
        else
            std::cout << tableau_text(f);
    };
    wire("f", "partition-shape hook tableau to column tableau",
         [&, print_tableau](const Filling& in) { print_tableau(f_map(in)); });
    wire("finv", "column tableau back to partition shape",
         [&, print_tableau](const Filling& in) { print_tableau(f_inverse(in)); });
    wire("phihat", "column tableau to row tableau",
         [&, print_tableau](const Filling& in) { print_tableau(phi_hat(in)); });
    wire("stdz", "standardize a column tableau", [&](const Filling& in) {
        Standardization s = stdz(in);
        DescentSet d = descent_set(s.tableau, StandardFamily::shct);
        if (a.opt.json()) {
            Json j = Json::object();
            j["tableau"] = tableau_to_json(s.tableau);
            j["split"] = s.split;
            j["descents"] = d.members;
            emit(j);
        } else {
            std::cout << tableau_text(s.tableau);
            std::cout << "split: " << s.split << "\n";
            std::cout << "descents: {";
            for (size_t i = 0; i < d.members.size(); ++i)
                std::cout << (i ? "," : "") << d.members[i];
            std::cout << "}\n";
        }
    });
}

struct InsertArgs {
    std::string tableau, letter;
    bool trace = false;
    Options opt;
};

void setup_insert(CLI::App& app, InsertArgs& a, int& rc) {
    CLI::App* c = app.add_subcommand("insert", "insert a letter into a column tableau");
    c->add_option("--tableau", a.tableau, "tableau JSON file")->required();
    c->add_option("--letter", a.letter, "letter, e.g. 2'")->required();
    c->add_flag("--trace", a.trace, "print the bumping path");
    add_format(c, a.opt);
    c->callback([&]() {
        Filling in = tableau_from_json(load_json_file(a.tableau)).filling;
        InsertResult r = hct_insert(in, parse_letter(a.letter));
        if (a.opt.json()) {
            Json j = Json::object();
            j["tableau"] = tableau_to_json(r.tableau);
            if (a.trace) {
                Json steps = Json::array();
                for (const auto& [cell, bumped] : r.trace.steps) {
                    Json s = Json::object();
                    s["row"] = cell.row;
                    s["col"] = cell.col;
                    s["bumped"] = to_string(bumped);
                    steps.push_back(std::move(s));
                }
                j["steps"] = std::move(steps);
                j["terminal"] =
                    Json{{"row", r.trace.terminal_cell.row}, {"col", r.trace.terminal_cell.col}};
            }
            emit(j);
        } else {
            std::cout << tableau_text(r.tableau);
            if (a.trace) {
                for (const auto& [cell, bumped] : r.trace.steps)
                    std::cout << "bump (" << cell.row << "," << cell.col << ") evicting "
                              << to_string(bumped) << "\n";
                std::cout << "terminal (" << r.trace.terminal_cell.row << ","
                          << r.trace.terminal_cell.col << ")\n";
            }
        }
        rc = 0;
    });
}

struct RskArgs {
    std::string input, p, q;
    bool invert = false;
    int k1 = -1, l1 = -1, k2 = -1, l2 = -1;
    Options opt;
};

void infer_dims(const BiWord& w, RskArgs& a) {
    int k1 = 0, l1 = 0, k2 = 0, l2 = 0;
    for (const SuperLetter& x : w.bottom) {
        if (x.primed)
            l1 = std::max(l1, x.value);
        else
            k1 = std::max(k1, x.value);
    }
    for (const SuperLetter& x : w.top) {
        if (x.primed)
            l2 = std::max(l2, x.value);
        else
            k2 = std::max(k2, x.value);
    }
    if (a.k1 < 0) a.k1 = k1;
    if (a.l1 < 0) a.l1 = l1;
    if (a.k2 < 0) a.k2 = k2;
    if (a.l2 < 0) a.l2 = l2;
}

void setup_rsk(CLI::App& app, RskArgs& a, int& rc) {
    CLI::App* c = app.add_subcommand("rsk", "mixed-matrix insertion correspondence");
    c->add_option("--input", a.input, "matrix JSON file");
    c->add_flag("--invert", a.invert, "recover the matrix from a pair");
    c->add_option("--p", a.p, "insertion tableau JSON file");
    c->add_option("--q", a.q, "recording tableau JSON file");
    c->add_option("--k1", a.k1, "unprimed column letters");
    c->add_option("--l1", a.l1, "primed column letters");
    c->add_option("--k2", a.k2, "unprimed row letters");
    c->add_option("--l2", a.l2, "primed row letters");
    add_format(c, a.opt);
    c->callback([&]() {
        if (a.invert) {
            if (a.p.empty() || a.q.empty())
                throw std::invalid_argument("--invert needs --p and --q");
            Filling p = tableau_from_json(load_json_file(a.p)).filling;
            Filling q = tableau_from_json(load_json_file(a.q)).filling;
            if (a.k1 < 0 || a.l1 < 0 || a.k2 < 0 || a.l2 < 0) {
                // Infer the smallest alphabets covering the letters used.
                BiWord probe{row_word(q), row_word(p)};
                infer_dims(probe, a);
            }
            MixedMatrix m = rsk_inverse(p, q, a.k1, a.l1, a.k2, a.l2);
            if (a.opt.json()) {
                emit(matrix_to_json(m));
            } else {
                for (const auto& row : m.entries) {
                    for (size_t j = 0; j < row.size(); ++j)
                        std::cout << (j ? " " : "") << row[j];
                    std::cout << "\n";
                }
            }
            rc = 0;
            return;
        }
        if (a.input.empty()) throw std::invalid_argument("rsk needs --input or --invert");
        MixedMatrix m = matrix_from_json(load_json_file(a.input));
        BiWord w = matrix_to_biword(m);
        RskPair pair = rsk(m);
        if (a.opt.json()) {
            Json j = Json::object();
            j["biword"] = biword_to_json(w);
            j["p"] = tableau_to_json(pair.p);
            j["q"] = tableau_to_json(pair.q);
            emit(j);
        } else {
            std::cout << "biword top:";
            for (const SuperLetter& x : w.top) std::cout << " " << to_string(x);
            std::cout << "\nbiword bottom:";
            for (const SuperLetter& x : w.bottom) std::cout << " " << to_string(x);
            std::cout << "\nP:\n" << tableau_text(pair.p);
            std::cout << "Q:\n" << tableau_text(pair.q);
        }
        rc = 0;
    });
}

struct LrArgs {
    std::string alpha, mu, beta, u, t;
    bool verify = false;
    int k = 2, l = 2;
    Options opt;
};

void setup_lr(CLI::App& app, LrArgs& a, int& rc) {
    CLI::App* c = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
    CLI::App* bij = c->add_subcommand("bijection", "labeled insertion of a pair (U,T)");
    bij->add_option("--u", a.u, "column tableau JSON file")->required();
    bij->add_option("--t", a.t, "partition-shape tableau JSON file")->required();
    add_format(bij, a.opt);
    bij->callback([&]() {
        Filling u = tableau_from_json(load_json_file(a.u)).filling;
        Filling t = tableau_from_json(load_json_file(a.t)).filling;
        GResult g = g_map(u, t);
        if (a.opt.json()) {
            Json j = Json::object();
            j["v"] = lr_tableau_to_json(g.v);
            j["s"] = tableau_to_json(g.s);
            j["sigma"] = g.sigma;
            Json tau = Json::array();
            for (const SuperLetter& x : g.tau) tau.push_back(to_string(x));
            j["tau"] = std::move(tau);
            emit(j);
        } else {
            std::cout << "V beta: " << to_string(g.v.beta) << "\n";
            std::cout << "V gamma:";
            for (int p : g.v.gamma.parts) std::cout << " " << p;
            std::cout << "\nV labels:\n";
            for (size_t i = g.v.labels.size(); i-- > 0;) {
                for (size_t j = 0; j < g.v.labels[i].size(); ++j)
                    std::cout << (j ? " " : "") << g.v.labels[i][j];
                std::cout << "\n";
            }
            std::cout << "S:\n" << tableau_text(g.s);
            std::cout << "sigma:";
            for (int s : g.sigma) std::cout << " " << s;
            std::cout << "\ntau:";
            for (const SuperLetter& x : g.tau) std::cout << " " << to_string(x);
            std::cout << "\n";
        }
        rc = 0;
    });

    c->add_option("--alpha", a.alpha, "composition");
    c->add_option("--mu", a.mu, "partition");
    c->add_option("--beta", a.beta, "target composition");
    c->add_flag("--verify", a.verify, "check the product rule as polynomials");
    c->add_option("--k", a.k, "unprimed letters")->capture_default_str();
    c->add_option("--l", a.l, "primed letters")->capture_default_str();
    add_format(c, a.opt);
    c->callback([&, bij]() {
        if (bij->parsed()) return;
        if (a.alpha.empty() || a.mu.empty())
            throw std::invalid_argument("lr needs --alpha and --mu (or the bijection subcommand)");
        Composition alpha = shape_arg(a.alpha, "--alpha");
        Partition mu = partition_arg(a.mu, "--mu");
        if (a.verify) {
            rc = print_report(verify_lr_rule(alpha, mu, a.k, a.l));
            return;
        }
        if (!a.beta.empty()) {
            Composition beta = shape_arg(a.beta, "--beta");
            long long coeff = lr_coefficient(alpha, mu, beta);
            if (a.opt.json()) {
                Json j = Json::object();
                j["beta"] = beta.parts;
                j["coeff"] = coeff;
                emit(j);
            } else {
                std::cout << coeff << "\n";
            }
            rc = 0;
            return;
        }
        Json list = Json::array();
        for (const Composition& beta : compositions_of(alpha.size() + mu.size())) {
            long long coeff = lr_coefficient(alpha, mu, beta);
            if (coeff == 0) continue;
            if (a.opt.json()) {
                Json j = Json::object();
                j["beta"] = beta.parts;
                j["coeff"] = coeff;
                list.push_back(std::move(j));
            } else {
                std::cout << to_string(beta) << ": " << coeff << "\n";
            }
        }
        if (a.opt.json()) emit(list);
        rc = 0;
    });
}

struct VerifyArgs {
    std::string lambda, alpha, mu, descents;
    int k = 2, l = 2, m = 2, n = 0;
    int max_weight = 2, vars = 2, max_size = 3, random = 0;
    std::uint64_t seed = 1;
};

void setup_verify(CLI::App& app, VerifyArgs& a, int& rc) {
    CLI::App* verify = app.add_subcommand("verify", "check an identity on one instance");
    verify->require_subcommand(1);

    auto wire = [&rc](CLI::App* c, auto run) {
        c->callback([run, &rc]() { rc = print_report(run()); });
    };

    CLI::App* c = verify->add_subcommand("decomposition",
                                         "hook Schur vs sum of quasisymmetric pieces");
    c->add_option("--lambda", a.lambda, "partition")->required();
    c->add_option("--k", a.k, "")->capture_default_str();
    c->add_option("--l", a.l, "")->capture_default_str();
    wire(c, [&]() {
        return verify_decomposition(partition_arg(a.lambda, "--lambda"), a.k, a.l);
    });

    c = verify->add_subcommand("transpose", "column sums vs row sums of the conjugate");
    c->add_option("--lambda", a.lambda, "partition")->required();
    c->add_option("--k", a.k, "")->capture_default_str();
    c->add_option("--l", a.l, "")->capture_default_str();
    wire(c, [&]() { return verify_transpose(partition_arg(a.lambda, "--lambda"), a.k, a.l); });

    c = verify->add_subcommand("skew-cs-rs", "hq vs inner-shape products");
    c->add_option("--alpha", a.alpha, "composition")->required();
    c->add_option("--k", a.k, "")->capture_default_str();
    c->add_option("--l", a.l, "")->capture_default_str();
    wire(c, [&]() { return verify_skew_cs_rs(shape_arg(a.alpha, "--alpha"), a.k, a.l); });

    c = verify->add_subcommand("fundamental", "cs and rs vs fundamental expansions");
    c->add_option("--alpha", a.alpha, "composition")->required();
    c->add_option("--m", a.m, "")->capture_default_str();
    wire(c, [&]() { return verify_fundamental(shape_arg(a.alpha, "--alpha"), a.m); });

    c = verify->add_subcommand("superfund-split", "super fundamental vs split products");
    c->add_option("--n", a.n, "degree")->required();
    c->add_option("--descents", a.descents, "descent set")->required();
    c->add_option("--k", a.k, "")->capture_default_str();
    c->add_option("--l", a.l, "")->capture_default_str();
    wire(c, [&]() { return verify_superfund_split(descent_arg(a.n, a.descents), a.k, a.l); });

    c = verify->add_subcommand("hq-fundamental", "hq vs super fundamental expansion");
    c->add_option("--alpha", a.alpha, "composition")->required();
    c->add_option("--k", a.k, "")->capture_default_str();
    c->add_option("--l", a.l, "")->capture_default_str();
    wire(c, [&]() { return verify_hq_fundamental(shape_arg(a.alpha, "--alpha"), a.k, a.l); });

    c = verify->add_subcommand("cauchy", "paired sums vs the truncated product");
    c->add_option("--max-weight", a.max_weight, "shape weight bound")->capture_default_str();
    c->add_option("--vars", a.vars, "variables per family")->capture_default_str();
    wire(c, [&]() { return verify_cauchy(a.max_weight, a.vars); });

    c = verify->add_subcommand("lr-rule", "product rule as polynomials");
    c->add_option("--alpha", a.alpha, "composition")->required();
    c->add_option("--mu", a.mu, "partition")->required();
    c->add_option("--k", a.k, "")->capture_default_str();
    c->add_option("--l", a.l, "")->capture_default_str();
    wire(c, [&]() {
        return verify_lr_rule(shape_arg(a.alpha, "--alpha"), partition_arg(a.mu, "--mu"), a.k,
                              a.l);
    });

    c = verify->add_subcommand("insertion-commute", "row insertion commutes with f");
    c->add_option("--max-size", a.max_size, "tableau size bound")->capture_default_str();
    c->add_option("--k", a.k, "")->capture_default_str();
    c->add_option("--l", a.l, "")->capture_default_str();
    c->add_option("--random", a.random, "random cases instead of exhaustive");
    c->add_option("--seed", a.seed, "random seed, echoed in the report");
    wire(c, [&]() {
        if (a.random > 0)
            return verify_insertion_commute_random(a.random, a.max_size, a.k, a.l, a.seed);
        return verify_insertion_commute(a.max_size, a.k, a.l);
    });
}

int run(int argc, char** argv) {
    CLI::App app{"calculus of quasisymmetric hook Schur functions"};
    app.require_subcommand(1);

    int rc = 0;
    ExpandArgs expand_args;
    EnumArgs enum_args, count_args;
    MapArgs map_args;
    InsertArgs insert_args;
    RskArgs rsk_args;
    LrArgs lr_args;
    VerifyArgs verify_args;

    setup_expand(app, expand_args, rc);
    setup_enumerate(app, enum_args, count_args, rc);
    setup_map(app, map_args, rc);
    setup_insert(app, insert_args, rc);
    setup_rsk(app, rsk_args, rc);
    setup_lr(app, lr_args, rc);
    setup_verify(app, verify_args, rc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace hs_cli

int main(int argc, char** argv) { return hs_cli::run(argc, argv); }
