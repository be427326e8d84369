#include "riordan/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <random>

#include "riordan/cyclic.hpp"
#include "riordan/eigen.hpp"
#include "riordan/errors.hpp"
#include "riordan/finite_order.hpp"
#include "riordan/json_io.hpp"
#include "riordan/parser.hpp"

namespace riordan {

namespace {

using nlohmann::json;

struct GlobalOpts {
    int precision = 32;
    long conductor = 1;
    bool json_out = false;

    FieldRef field() const { return FieldContext::make(conductor); }
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string order_text(const OrderReport& report) {
    if (!report.finite())
        return "order: infinite (tested to precision " + std::to_string(report.verified_to) + ")";
    std::string s = "order: " + std::to_string(*report.order);
    if (report.lcm_witness)
        s += " = lcm(" + std::to_string(report.lcm_witness->first) + ", " +
             std::to_string(report.lcm_witness->second) + ")";
    s += ", verified to precision " + std::to_string(report.verified_to);
    return s;
}

RiordanPair parse_pair(const std::string& g_text, const std::string& f_text,
                       const GlobalOpts& opts, const FieldRef& field) {
    return {parse_series(g_text, field, opts.precision),
            parse_series(f_text, field, opts.precision)};
}

// Small random rationals, mixed with powers of w when the field has them.
class ArgSampler {
public:
    ArgSampler(FieldRef field, uint64_t seed) : field_(std::move(field)), engine_(seed) {}

    Scalar scalar(bool allow_zero) {
        std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
        std::uniform_int_distribution<int> zp(0, std::max(1, field_->degree() - 1));
        int p = num(engine_);
        if (!allow_zero)
            while (p == 0) p = num(engine_);
        Scalar value = Scalar::of(field_, rat(p, den(engine_)));
        if (field_->degree() > 1) value = value * pow(Scalar::zeta(field_), zp(engine_));
        return value;
    }

    /// Sparse series with zero constant term and a nonzero linear term.
    Series positive_series(int precision) {
        Series s(field_, precision);
        s.set_coeff(1, scalar(false));
        std::uniform_int_distribution<int> pick(0, 2);
        for (int i = 2; i <= precision; ++i)
            if (pick(engine_) == 0) s.set_coeff(i, scalar(true));
        return s;
    }

private:
    FieldRef field_;
    std::mt19937_64 engine_;
};

void cmd_eval(const GlobalOpts& opts, const std::string& expr, std::ostream& out) {
    FieldRef field = opts.field();
    Series s = parse_series(expr, field, opts.precision);
    if (opts.json_out)
        emit(out, to_json(s));
    else
        out << to_string(s) << "\n";
}

void cmd_matrix(const GlobalOpts& opts, const std::string& g_text, const std::string& f_text,
                int rows, std::ostream& out) {
    FieldRef field = opts.field();
    RiordanPair p = parse_pair(g_text, f_text, opts, field);
    RiordanMatrix m = expand_matrix(p, rows);
    if (opts.json_out)
        emit(out, to_json(m));
    else
        out << to_string(m);
}

void cmd_order(const GlobalOpts& opts, const std::string& g_text, const std::string& f_text,
               std::ostream& out) {
    FieldRef field = opts.field();
    OrderReport report = pair_order(parse_pair(g_text, f_text, opts, field));
    if (opts.json_out)
        emit(out, to_json(report));
    else
        out << order_text(report) << "\n";
}

void cmd_complete(const GlobalOpts& opts, const std::string& omega_text,
                  const std::vector<std::string>& coeff_args, std::ostream& out) {
    FieldRef field = opts.field();
    Scalar omega = parse_scalar(omega_text, field);
    std::map<int, Scalar> prescribed;
    for (const auto& item : coeff_args) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error(errc::syntax_error, "--coeff expects INDEX=EXPR, got `" + item + "`");
        int index = 0;
        try {
            index = std::stoi(item.substr(0, eq));
        } catch (const std::exception&) {
            throw Error(errc::syntax_error, "bad coefficient index in `" + item + "`");
        }
        prescribed.insert_or_assign(index, parse_scalar(item.substr(eq + 1), field));
    }
    Series F = complete_to_order(omega, prescribed, opts.precision);
    OrderReport report = series_order(F);
    if (opts.json_out) {
        emit(out, json{{"F", to_json(F)}, {"order", to_json(report)}});
    } else {
        out << "F = " << to_string(F) << "\n" << order_text(report) << "\n";
    }
}

void cmd_conjugate(const GlobalOpts& opts, const std::string& g_text, const std::string& f_text,
                   std::ostream& out) {
    FieldRef field = opts.field();
    RiordanPair p = parse_pair(g_text, f_text, opts, field);
    NormalForm nf = normal_form(p);
    if (opts.json_out) {
        emit(out, json{{"conjugator",
                        json{{"g", to_json(nf.conjugator.g())}, {"F", to_json(nf.conjugator.F())}}},
                       {"normal",
                        json{{"g", to_json(nf.normal.g())}, {"F", to_json(nf.normal.F())}}}});
    } else {
        out << "conjugator h = " << to_string(nf.conjugator.g()) << "\n";
        out << "conjugator S = " << to_string(nf.conjugator.F()) << "\n";
        out << "normal form  = (" << to_string(nf.normal.g().coeff(0)) << ", "
            << to_string(nf.normal.F()) << ")\n";
    }
}

EigenSpec make_spec(const RiordanPair& p, int k, const std::vector<std::string>& theta_args,
                    const FieldRef& field) {
    EigenSpec spec;
    spec.k = k;
    spec.b = series_order(p.F()).order.value_or(0);
    if (theta_args.empty())
        spec.theta.push_back(Scalar::one(field));
    else
        for (const auto& t : theta_args) spec.theta.push_back(parse_scalar(t, field));
    return spec;
}

void cmd_eigen(const GlobalOpts& opts, const std::string& g_text, const std::string& f_text,
               int k, const std::vector<std::string>& theta_args, std::ostream& out) {
    FieldRef field = opts.field();
    RiordanPair p = parse_pair(g_text, f_text, opts, field);
    EigenSpec spec = make_spec(p, k, theta_args, field);
    auto [v, lambda] = eigenvector(p, spec);
    bool verified = is_eigenvector(p, v, lambda);
    if (opts.json_out) {
        emit(out, json{{"v", to_json(v)},
                       {"lambda", to_string(lambda)},
                       {"verified", verified}});
    } else {
        out << "v      = " << to_string(v) << "\n";
        out << "lambda = " << to_string(lambda) << "\n";
        out << "verified: " << (verified ? "yes" : "NO") << "\n";
    }
}

void cmd_identity(const GlobalOpts& opts, const std::string& g_text, const std::string& f_text,
                  int k, const std::vector<std::string>& theta_args, int n, std::ostream& out) {
    FieldRef field = opts.field();
    RiordanPair p = parse_pair(g_text, f_text, opts, field);
    EigenSpec spec = make_spec(p, k, theta_args, field);
    IdentityRecord record = row_identity(p, spec, n);
    if (opts.json_out)
        emit(out, to_json(record, p, spec));
    else
        out << to_string(record) << "\n";
}

void cmd_marshall(const GlobalOpts& opts, const std::string& g_text, std::ostream& out) {
    FieldRef field = opts.field();
    Series g = parse_series(g_text, field, opts.precision);
    Series F = involution_partner(g);
    OrderReport report = pair_order(RiordanPair(g, F));
    bool involution = report.order == 2;
    if (opts.json_out) {
        emit(out, json{{"F", to_json(F)}, {"involution", involution}});
    } else {
        out << "F = " << to_string(F) << "\n";
        out << "(g, F) is an involution: " << (involution ? "yes" : "NO") << "\n";
    }
}

void cmd_cyclic_check(const GlobalOpts& opts, const std::string& g_text, int k, int trials,
                      uint64_t seed, const std::string& f_text, std::ostream& out, int& exit_code) {
    FieldRef field = opts.field();
    Series g = parse_series(g_text, field, opts.precision);
    ArgSampler sampler(field, seed);
    const Series zero(field, opts.precision);

    bool all_ok = true;
    json checks = json::array();

    if (k == 2) {
        bool ok = true;
        for (int t = 0; t < trials; ++t) {
            Series a = sampler.positive_series(opts.precision);
            Series b = sampler.positive_series(opts.precision);
            if (antisymmetric_eval(g, a, b) + antisymmetric_eval(g, b, a) != zero) ok = false;
        }
        checks.push_back(json{{"name", "antisymmetry"}, {"trials", trials}, {"ok", ok}});
        all_ok = all_ok && ok;
    }
    {
        CyclicEvaluator eval(g.coeff(0).is_one() ? g : g.coeff(0).inverse() * g, k);
        bool ok = true;
        for (int t = 0; t < trials; ++t) {
            std::vector<Series> args;
            for (int i = 0; i < k; ++i) args.push_back(sampler.positive_series(opts.precision));
            Series sum(field, opts.precision);
            for (int r = 0; r < k; ++r) {
                std::vector<Series> rotated;
                for (int i = 0; i < k; ++i)
                    rotated.push_back(args[static_cast<size_t>((i + r) % k)]);
                sum = sum + eval.eval(rotated);
            }
            if (sum != zero) ok = false;
        }
        checks.push_back(json{{"name", "cyclic_sum"}, {"trials", trials}, {"ok", ok}});
        all_ok = all_ok && ok;
    }
    if (!f_text.empty()) {
        // reconstruction: g = exp(phi(x, F, ..., F^(k-1))) for an order-k pair with g0 = 1
        Series F = parse_series(f_text, field, opts.precision);
        CyclicEvaluator eval(g, k);
        std::vector<Series> iterates;
        iterates.push_back(Series::identity(field, opts.precision));
        for (int i = 1; i < k; ++i) iterates.push_back(compose(F, iterates.back()));
        bool ok = exp_pos(eval.eval(iterates)) == g;
        checks.push_back(json{{"name", "reconstruction"}, {"ok", ok}});
        all_ok = all_ok && ok;
    }

    if (opts.json_out) {
        emit(out, json{{"k", k}, {"seed", seed}, {"ok", all_ok}, {"checks", std::move(checks)}});
    } else {
        for (const auto& c : checks)
            out << c.at("name").get<std::string>() << ": "
                << (c.at("ok").get<bool>() ? "ok" : "FAILED") << "\n";
    }
    if (!all_ok) exit_code = 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Riordan-group computation over cyclotomic coefficient fields"};
    app.name("riordan");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_option("--precision", opts.precision, "working precision N (coefficients 0..N)")
        ->capture_default_str()
        ->check(CLI::Range(1, 4096));
    app.add_option("--conductor", opts.conductor,
                   "conductor m of the coefficient field Q(zeta_m); 1 means Q")
        ->capture_default_str()
        ->check(CLI::Range(1l, 512l));
    app.add_flag("--json", opts.json_out, "emit JSON instead of plain text");

    std::string g_text, f_text, expr, omega_text;
    std::vector<std::string> coeffs, thetas;
    int rows = 8, k = 0, n = 0, trials = 10;
    uint64_t seed = 20170419;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a series expression");
    eval_cmd->add_option("--expr", expr, "series expression")->required();

    auto* matrix_cmd = app.add_subcommand("matrix", "expand the matrix of a pair (g, F)");
    matrix_cmd->add_option("--g", g_text, "series g with g0 != 0")->required();
    matrix_cmd->add_option("--F", f_text, "series F = f1*x + ... with f1 != 0")->required();
    matrix_cmd->add_option("--rows", rows, "number of rows")->capture_default_str();

    auto* order_cmd = app.add_subcommand("order", "order of a pair (g, F)");
    order_cmd->add_option("--g", g_text, "series g")->required();
    order_cmd->add_option("--F", f_text, "series F")->required();

    auto* complete_cmd = app.add_subcommand(
        "complete", "complete omega*x + ... to a series of compositional order ord(omega)");
    complete_cmd->add_option("--omega", omega_text, "root of unity (constant expression)")
        ->required();
    complete_cmd->add_option("--coeff", coeffs,
                             "prescribed coefficient INDEX=EXPR (repeatable); indices "
                             "congruent to 1 mod ord(omega) are solved, not prescribed");

    auto* conjugate_cmd =
        app.add_subcommand("conjugate", "conjugate a finite-order pair to (g0, f1*x)");
    conjugate_cmd->add_option("--g", g_text, "series g")->required();
    conjugate_cmd->add_option("--F", f_text, "series F")->required();

    auto* eigen_cmd = app.add_subcommand("eigen", "eigenvector of a finite-order pair");
    eigen_cmd->add_option("--g", g_text, "series g")->required();
    eigen_cmd->add_option("--F", f_text, "series F")->required();
    eigen_cmd->add_option("--k", k, "residue class of the eigenvector support")
        ->capture_default_str();
    eigen_cmd->add_option("--theta", thetas,
                          "free coefficients theta_{k+j*b} (repeatable, default 1)");

    auto* identity_cmd =
        app.add_subcommand("identity", "row identity sum_j d(n,j)*v_j = lambda*v_n");
    identity_cmd->add_option("--g", g_text, "series g")->required();
    identity_cmd->add_option("--F", f_text, "series F")->required();
    identity_cmd->add_option("--k", k, "residue class")->capture_default_str();
    identity_cmd->add_option("--theta", thetas, "free coefficients (repeatable, default 1)");
    identity_cmd->add_option("--n", n, "row index")->required();

    auto* marshall_cmd = app.add_subcommand(
        "marshall", "the unique F making (g, F) an involution, for bi-invertible g");
    marshall_cmd->add_option("--g", g_text, "bi-invertible series g with g0 = 1 or -1")
        ->required();

    auto* cyclic_cmd = app.add_subcommand(
        "cyclic-check", "verify antisymmetry / k-cyclic sums on random substituted arguments");
    cyclic_cmd->add_option("--g", g_text, "series g")->required();
    cyclic_cmd->add_option("--k", k, "arity")->required()->check(CLI::Range(2, 16));
    cyclic_cmd->add_option("--trials", trials, "random argument sets")->capture_default_str();
    cyclic_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    cyclic_cmd->add_option("--F", f_text,
                           "optional order-k series F for the reconstruction check "
                           "exp(phi(x, F, ..., F^(k-1))) = g (needs g0 = 1)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    int exit_code = 0;
    try {
        if (*eval_cmd) cmd_eval(opts, expr, out);
        if (*matrix_cmd) cmd_matrix(opts, g_text, f_text, rows, out);
        if (*order_cmd) cmd_order(opts, g_text, f_text, out);
        if (*complete_cmd) cmd_complete(opts, omega_text, coeffs, out);
        if (*conjugate_cmd) cmd_conjugate(opts, g_text, f_text, out);
        if (*eigen_cmd) cmd_eigen(opts, g_text, f_text, k, thetas, out);
        if (*identity_cmd) cmd_identity(opts, g_text, f_text, k, thetas, n, out);
        if (*marshall_cmd) cmd_marshall(opts, g_text, out);
        if (*cyclic_cmd) cmd_cyclic_check(opts, g_text, k, trials, seed, f_text, out, exit_code);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace riordan
