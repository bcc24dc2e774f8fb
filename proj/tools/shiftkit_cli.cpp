// Command-line front end: every analysis the library performs, exposed as a
// subcommand that reads exact-rational JSON and writes exact-rational JSON.
//
// Exit codes: 0 the computation ran and the property holds (or the requested
// object was produced), 2 the computation ran and the property fails, 1 the
// request itself could not be carried out.

#include "shiftkit/io.hpp"
#include "shiftkit/shiftkit.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <utility>

using namespace shiftkit;

namespace {

struct Common {
    std::string tol = "1e-12";
    std::size_t nmax = 50;
    long precision = 50;
    std::string out;

    BigRational tolerance() const {
        BigRational t = parse_number(tol);
        if (t <= 0) throw error("--tol must be positive");
        return t;
    }
};

void add_common(CLI::App& cmd, Common& c) {
    cmd.add_option("--tol", c.tol, "bisection tolerance (exact rational or decimal)")
        ->capture_default_str();
    cmd.add_option("--nmax", c.nmax, "verification horizon for index-by-index checks")
        ->capture_default_str();
    cmd.add_option("--precision", c.precision, "decimal digits for root enclosures")
        ->capture_default_str();
    cmd.add_option("--out", c.out, "write the JSON report to a file instead of stdout");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        // e.what() carries the byte position of the first offending token
        throw error(std::string("malformed JSON in '") + path + "': " + e.what());
    }
}

WeightSequence sequence_from_file(const std::string& path) {
    return weight_sequence_from_json(read_json_file(path));
}

// berger/extend accept either {"phi", "gamma"} or a recursively generated
// weight sequence; anything else has no finitely atomic measure to recover
RecursionSpec spec_from_file(const std::string& path) {
    json j = read_json_file(path);
    if (j.is_object() && j.contains("phi") && j.contains("gamma"))
        return recursion_spec_from_json(j);
    auto spec = globally_recursive_spec(weight_sequence_from_json(j));
    if (!spec)
        throw error("the sequence is not recursively generated; pass {\"phi\", \"gamma\"} instead");
    return *spec;
}

int emit(json j, const Common& c, std::chrono::steady_clock::time_point start, int code) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                    start)
                  .count();
    j["elapsed_ms"] = ms;
    std::string text = j.dump(2) + "\n";
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        if (!f) throw error("cannot write '" + c.out + "'");
        f << text;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision procedures for weighted-shift hyponormality"};
    app.require_subcommand(1);

    // one shared handler slot; each subcommand installs its computation
    std::function<int()> run;
    auto start = std::chrono::steady_clock::now();

    // --- analyze ------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("analyze", "run the full battery on a weight sequence");
        auto c = std::make_shared<Common>();
        auto file = std::make_shared<std::string>();
        auto kmax = std::make_shared<std::size_t>(2);
        add_common(*cmd, *c);
        cmd->add_option("--k", *kmax, "largest Hankel order to probe")->capture_default_str();
        cmd->add_option("input", *file, "weight sequence JSON")->required();
        cmd->callback([&run, c, file, kmax, start] {
            run = [=] {
                WeightSequence seq = sequence_from_file(*file);
                std::size_t N = c->nmax;
                json out;
                out["sequence"] = weight_sequence_to_json(seq);
                out["subnormal"] = subnormality_to_json(is_subnormal(seq, c->precision));
                bool fails = false;
                out["k_hyponormal"] = json::array();
                for (std::size_t k = 1; k <= *kmax; ++k) {
                    auto v = is_k_hyponormal(seq, k, N);
                    fails |= v.kind == KHypoVerdict::Kind::fails;
                    out["k_hyponormal"].push_back(khypo_to_json(v));
                }
                auto qh = is_quad_hyponormal(seq, N);
                fails |= !qh.holds;
                out["quad_hyponormal"] = qh_to_json(qh, N);
                auto pq = is_positively_quad_hyponormal(seq, N);
                fails |= !pq.holds;
                out["positively_quad_hyponormal"] = pqh_to_json(pq, N);
                return emit(std::move(out), *c, start, fails ? 2 : 0);
            };
        });
    }

    // --- khypo --------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("khypo", "k-hyponormality of a weight sequence");
        auto c = std::make_shared<Common>();
        auto file = std::make_shared<std::string>();
        auto k = std::make_shared<std::size_t>(2);
        add_common(*cmd, *c);
        cmd->add_option("--k", *k, "Hankel order")->capture_default_str();
        cmd->add_option("input", *file, "weight sequence JSON")->required();
        cmd->callback([&run, c, file, k, start] {
            run = [=] {
                auto v = is_k_hyponormal(sequence_from_file(*file), *k, c->nmax);
                return emit(khypo_to_json(v), *c, start,
                            v.kind == KHypoVerdict::Kind::fails ? 2 : 0);
            };
        });
    }

    // --- quadhypo -----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("quadhypo", "quadratic hyponormality of a weight sequence");
        auto c = std::make_shared<Common>();
        auto file = std::make_shared<std::string>();
        add_common(*cmd, *c);
        cmd->add_option("input", *file, "weight sequence JSON")->required();
        cmd->callback([&run, c, file, start] {
            run = [=] {
                auto v = is_quad_hyponormal(sequence_from_file(*file), c->nmax);
                return emit(qh_to_json(v, c->nmax), *c, start, v.holds ? 0 : 2);
            };
        });
    }

    // --- pqh ----------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "pqh", "positive quadratic hyponormality (termwise coefficient signs)");
        auto c = std::make_shared<Common>();
        auto file = std::make_shared<std::string>();
        auto strict = std::make_shared<bool>(false);
        add_common(*cmd, *c);
        cmd->add_flag("--strict", *strict, "require strictly positive coefficients");
        cmd->add_option("input", *file, "weight sequence JSON")->required();
        cmd->callback([&run, c, file, strict, start] {
            run = [=] {
                auto v = is_positively_quad_hyponormal(sequence_from_file(*file), c->nmax, *strict);
                return emit(pqh_to_json(v, c->nmax), *c, start, v.holds ? 0 : 2);
            };
        });
    }

    // --- berger -------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "berger", "finitely atomic representing measure of a recursive moment sequence");
        auto c = std::make_shared<Common>();
        auto file = std::make_shared<std::string>();
        add_common(*cmd, *c);
        cmd->add_option("input", *file, "recursion spec or weight sequence JSON")->required();
        cmd->callback([&run, c, file, start] {
            run = [=] {
                RecursionSpec spec = spec_from_file(*file);
                AtomicMeasure mu = berger_measure(spec, c->precision);
                json out = measure_to_json(mu);
                out["spec"] = recursion_spec_to_json(spec);
                return emit(std::move(out), *c, start, mu.valid ? 0 : 2);
            };
        });
    }

    // --- extend -------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "extend", "n-step backward subnormal extension of a recursive moment sequence");
        auto c = std::make_shared<Common>();
        auto file = std::make_shared<std::string>();
        auto steps = std::make_shared<std::size_t>(1);
        add_common(*cmd, *c);
        cmd->add_option("--steps", *steps, "number of weights to prepend")->capture_default_str();
        cmd->add_option("input", *file, "recursion spec or weight sequence JSON")->required();
        cmd->callback([&run, c, file, steps, start] {
            run = [=] {
                RecursionSpec spec = spec_from_file(*file);
                AtomicMeasure mu = berger_measure(spec, c->precision);
                if (!mu.valid)
                    throw error("the spec has no positive representing measure to extend");
                auto rep = extension_weights(mu, *steps);
                return emit(extension_to_json(rep), *c, start, rep.feasible ? 0 : 2);
            };
        });
    }

    // --- omega --------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "omega", "interval of single-weight perturbations preserving k-hyponormality");
        auto c = std::make_shared<Common>();
        auto file = std::make_shared<std::string>();
        auto k = std::make_shared<std::size_t>(2);
        auto j = std::make_shared<std::size_t>(0);
        add_common(*cmd, *c);
        cmd->add_option("--k", *k, "Hankel order")->capture_default_str();
        cmd->add_option("--j", *j, "index of the perturbed weight")->capture_default_str();
        cmd->add_option("input", *file, "weight sequence JSON")->required();
        cmd->callback([&run, c, file, k, j, start] {
            run = [=] {
                auto r = omega_interval(sequence_from_file(*file), *k, *j, c->tolerance(), c->nmax);
                json out = interval_to_json(r);
                out["k"] = *k;
                out["j"] = *j;
                return emit(std::move(out), *c, start, 0);
            };
        });
    }

    // --- h2 -----------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "h2", "largest front weight keeping the prepended three-weight germ 2-hyponormal");
        auto c = std::make_shared<Common>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto cc = std::make_shared<std::string>();
        add_common(*cmd, *c);
        cmd->add_option("--a", *a, "first squared weight")->required();
        cmd->add_option("--b", *b, "second squared weight")->required();
        cmd->add_option("--c", *cc, "third squared weight")->required();
        cmd->callback([&run, c, a, b, cc, start] {
            run = [=] {
                auto r = modulus_h2(parse_number(*a), parse_number(*b), parse_number(*cc),
                                    c->tolerance(), c->nmax);
                return emit(modulus_to_json(r), *c, start, 0);
            };
        });
    }

    // --- gap ----------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "gap", "perturbation that separates quadratic from 2-hyponormality");
        auto c = std::make_shared<Common>();
        auto file = std::make_shared<std::string>();
        auto j = std::make_shared<std::size_t>(1);
        add_common(*cmd, *c);
        cmd->add_option("--j", *j, "index of the perturbed weight")->capture_default_str();
        cmd->add_option("input", *file, "weight sequence JSON")->required();
        cmd->callback([&run, c, file, j, start] {
            run = [=] {
                auto g = gap_witness(sequence_from_file(*file), *j, c->tolerance(), c->nmax);
                return emit(gap_to_json(g), *c, start, 0);
            };
        });
    }

    // --- theorem32 ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "theorem32",
            "subnormality and 2-hyponormality after perturbing one weight of a recursive germ");
        auto c = std::make_shared<Common>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto cc = std::make_shared<std::string>();
        auto x = std::make_shared<std::string>();
        auto j = std::make_shared<std::size_t>(0);
        add_common(*cmd, *c);
        cmd->add_option("--a", *a, "first squared weight")->required();
        cmd->add_option("--b", *b, "second squared weight")->required();
        cmd->add_option("--c", *cc, "third squared weight")->required();
        cmd->add_option("--j", *j, "index of the perturbed weight")->capture_default_str();
        cmd->add_option("--x", *x, "replacement squared weight")->required();
        cmd->callback([&run, c, a, b, cc, x, j, start] {
            run = [=] {
                auto v = theorem32_check(parse_number(*a), parse_number(*b), parse_number(*cc), *j,
                                         parse_number(*x), c->nmax);
                json out;
                out["j"] = *j;
                out["x"] = rational_to_json(parse_number(*x));
                out["subnormal"] = v.subnormal;
                out["two_hyponormal"] = v.two_hyponormal;
                out["agree"] = v.subnormal == v.two_hyponormal;
                return emit(std::move(out), *c, start,
                            v.subnormal && v.two_hyponormal ? 0 : 2);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints usage; 0 for --help, nonzero for bad invocations
        return code == 0 ? 0 : 1;
    }
    try {
        return run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
