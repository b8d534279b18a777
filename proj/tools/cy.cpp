// cy: command-line front end for the operator library and the bundled dataset
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cy/constructions.hpp"
#include "cy/criteria.hpp"
#include "cy/dataset.hpp"
#include "cy/errors.hpp"
#include "cy/formula.hpp"
#include "cy/frobenius.hpp"
#include "cy/search.hpp"
#include "cy/theta_op.hpp"

using namespace cy;

namespace {

bool file_exists(const std::string& path) {
    std::ifstream f(path);
    return static_cast<bool>(f);
}

// an operator argument is either a .cyop file path or a dataset record id
ThetaOperator resolve_operator(const std::string& ref, const std::string& db_path) {
    if (file_exists(ref)) {
        std::ifstream is(ref);
        std::ostringstream buf;
        buf << is.rdbuf();
        return parse_cyop(buf.str()).op;
    }
    auto db = load_dataset(db_path);
    return find_record(db, ref).op;
}

Rat parse_rat_arg(const std::string& s, const std::string& what) {
    try {
        return rat_from_string(s);
    } catch (const std::exception&) {
        throw IOError("bad " + what + " value '" + s + "'");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw IOError("cannot open output file '" + out_path + "'");
    os << text;
}

std::string condition_line(const char* label, const ConditionResult& c) {
    std::ostringstream os;
    os << label << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
    return os.str();
}

int cmd_check(const std::string& ref, const std::string& db, int N, int M, int depth) {
    ThetaOperator op = resolve_operator(ref, db);
    CyVerdict v = classify(op, N, M, depth);
    std::ostringstream os;
    os << condition_line("C1 MUM point      ", v.c1);
    os << condition_line("C2 self-dual      ", v.c2);
    os << condition_line("C3 spectrum       ", v.c3);
    os << condition_line("C4 integrality    ", v.c4);
    os << condition_line("C5 instantons     ", v.c5);
    os << "overall           " << (v.overall ? "PASS" : "FAIL") << "\n";
    std::cout << os.str();
    return v.overall ? 0 : 1;
}

int cmd_solve(const std::string& ref, const std::string& db, int N) {
    ThetaOperator op = resolve_operator(ref, db);
    PowerSeries A = holomorphic_coeffs(op, N + 1);
    for (int n = 0; n <= N; ++n)
        std::cout << "A" << n << " = " << rat_to_string(A.coeff(n)) << "\n";
    return 0;
}

int cmd_spectrum(const std::string& ref, const std::string& db) {
    ThetaOperator op = resolve_operator(ref, db);
    SpectrumAnalysis sa = analyze_spectrum(op);
    std::cout << "lambda =";
    for (const Rat& l : sa.lambdas) std::cout << " " << rat_to_string(l);
    std::cout << "\n";
    if (sa.s) std::cout << "s = " << rat_to_string(*sa.s) << "\n";
    if (sa.cyclo) {
        std::cout << "cyclotomic =";
        for (int m : *sa.cyclo) std::cout << " phi_" << m;
        std::cout << "\n";
    }
    std::cout << (sa.pass ? "PASS" : "FAIL: " + sa.reason) << "\n";
    return sa.pass ? 0 : 1;
}

int cmd_instanton(const std::string& ref, const std::string& db, int depth) {
    ThetaOperator op = resolve_operator(ref, db);
    InstantonReport rep = yukawa_instantons(op, depth);
    std::cout << "N0 = " << rep.N0.get_str() << "\n";
    for (int m = 1; m <= rep.depth; ++m)
        std::cout << "N" << m << " = " << rat_to_string(rep.N[static_cast<size_t>(m - 1)])
                  << "\n";
    return 0;
}

int cmd_fingerprint(const std::string& ref, const std::string& db, int depth) {
    ThetaOperator op = resolve_operator(ref, db);
    auto [n0, n1, n3] = fingerprint(yukawa_instantons(op, depth));
    std::cout << "N0=" << n0.get_str() << " N1=" << n1.get_str()
              << " N3=" << n3.get_str() << "\n";
    return 0;
}

int cmd_powers(const std::string& ref, const std::string& db, int order) {
    ThetaOperator op = resolve_operator(ref, db);
    FrobeniusPair pair = frobenius_pair(op, order + 2);
    PowerExponents pe = power_exponents(pair, mirror_map(pair), order);
    if (!pe.r || !pe.s) {
        std::cout << "indeterminate\n";
        return 0;
    }
    std::cout << "r=" << *pe.r << " s=" << *pe.s << "\n";
    return 0;
}

int cmd_hadamard(const std::string& ref1, const std::string& ref2,
                 const std::string& db, int N, const std::string& out) {
    ThetaOperator a = resolve_operator(ref1, db);
    ThetaOperator b = resolve_operator(ref2, db);
    PowerSeries h = hadamard_series(holomorphic_coeffs(a, N + 1), holomorphic_coeffs(b, N + 1));
    std::ostringstream os;
    for (int n = 0; n <= N; ++n) os << rat_to_string(h.coeff(n)) << "\n";
    emit(os.str(), out);
    return 0;
}

int cmd_fit(const std::string& path, int order, int degree, int guard,
            const std::string& out) {
    std::vector<Rat> coeffs;
    auto read_from = [&](std::istream& is) {
        std::string w;
        while (is >> w) coeffs.push_back(parse_rat_arg(w, "coefficient"));
    };
    if (path == "-") {
        read_from(std::cin);
    } else {
        std::ifstream is(path);
        if (!is) throw IOError("cannot open coefficient file '" + path + "'");
        read_from(is);
    }
    if (coeffs.empty()) throw IOError("no coefficients supplied");
    FitSpec spec;
    spec.max_order = order;
    spec.max_degree = degree;
    spec.guard = guard;
    auto fitted = fit_operator(PowerSeries(std::move(coeffs)), spec);
    if (!fitted) {
        std::cerr << "no operator found within order " << order << ", degree "
                  << degree << "\n";
        return 1;
    }
    emit(serialize_cyop(normalize(*fitted)), out);
    return 0;
}

int cmd_search(const std::string& family, const std::vector<std::string>& ranges,
               const Rat& u, const Rat& v, const Rat& w, const Rat& x,
               int N, int M, int jobs, const std::string& out) {
    SweepConfig cfg;
    cfg.family = family_from_string(family);
    cfg.N = N;
    cfg.M = M;
    for (const std::string& r : ranges) {
        size_t eq = r.find('='), co = r.find(':');
        if (eq == std::string::npos || co == std::string::npos || co < eq)
            throw IOError("bad range '" + r + "', expected K=lo:hi");
        std::string key = r.substr(0, eq);
        long lo = std::stol(r.substr(eq + 1, co - eq - 1));
        long hi = std::stol(r.substr(co + 1));
        if (key == "A") cfg.A = {lo, hi};
        else if (key == "B") cfg.B = {lo, hi};
        else if (key == "C") cfg.C = {lo, hi};
        else if (key == "c") {
            cfg.c_values.clear();
            for (long c = lo; c <= hi; ++c) cfg.c_values.push_back(c);
        } else if (key == "p") cfg.pmax = static_cast<int>(hi);
        else if (key == "q") cfg.qmax = static_cast<int>(hi);
        else if (key == "r") cfg.rmax = static_cast<int>(hi);
        else if (key == "t") cfg.tmax = static_cast<int>(hi);
        else throw IOError("unknown range parameter '" + key + "'");
    }
    cfg.u = u;
    cfg.v = v;
    cfg.w = w;
    cfg.x = x;
    auto cands = filter_step2(sweep_step1(cfg, jobs));
    std::ostringstream os;
    os << "# sweep family=" << family_to_string(cfg.family)
       << " A=" << cfg.A.lo << ":" << cfg.A.hi
       << " B=" << cfg.B.lo << ":" << cfg.B.hi;
    if (cfg.family == Family::gen4) os << " C=" << cfg.C.lo << ":" << cfg.C.hi;
    os << " c={";
    for (size_t i = 0; i < cfg.c_values.size(); ++i)
        os << (i ? "," : "") << cfg.c_values[i];
    os << "} d=2^p3^q5^r7^t p<=" << cfg.pmax << " q<=" << cfg.qmax
       << " r<=" << cfg.rmax << " t<=" << cfg.tmax
       << " N=" << cfg.N << " M=" << cfg.M << "\n";
    int idx = 0;
    for (const auto& c : cands) {
        if (!c.step2_pass) continue;
        ++idx;
        os << serialize_cyop(c.op, "cand" + std::to_string(idx));
        os << "# point:";
        for (const auto& [k, v] : c.point.params) os << " " << k << "=" << rat_to_string(v);
        os << "\n";
        if (c.fp) {
            auto [n0, n1, n3] = *c.fp;
            os << "# fingerprint: " << n0.get_str() << " " << n1.get_str() << " "
               << n3.get_str() << "\n";
        }
        os << "---\n";
    }
    os << "# candidates: " << idx << "\n";
    emit(os.str(), out);
    return 0;
}

int cmd_verify(const std::string& id, const std::string& db_path, int N) {
    auto db = load_dataset(db_path);
    const DatasetRecord& rec = find_record(db, id);
    if (!rec.formula) {
        std::cerr << "record " << id << " has no formula\n";
        return 2;
    }
    VerifyResult vr = verify_entry(rec.op, formula_parse(*rec.formula), N + 1, rec.base_cases);
    if (vr.pass) {
        std::cout << "PASS\n";
        return 0;
    }
    std::cout << "FAIL at n=" << vr.first_mismatch << "\n";
    return 1;
}

int cmd_db(const std::string& db_path) {
    auto db = load_dataset(db_path);
    for (const auto& r : db) {
        std::cout << "#" << r.id << "  order=" << r.op.order() << " k=" << r.op.k()
                  << " formula=" << (r.formula ? "yes" : "no");
        for (const auto& n : r.notes) std::cout << " [" << n << "]";
        std::cout << "\n";
    }
    std::cout << db.size() << " records\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for fourth-order Calabi-Yau operators"};
    app.require_subcommand(1);
    std::string db_path = "data/aesz.cydb";
    if (const char* env = std::getenv("CY_DB")) db_path = env;
    app.add_option("--db", db_path, "dataset file for id lookups");

    std::string ref, ref2, out, z0, lam = "0", family = "fact4", fit_input = "-";
    int N = 50, M = 1000, depth = 20, jobs = 1;
    int fit_order = 4, fit_degree = 2, fit_guard = 8;
    std::vector<std::string> ranges;
    std::string p_u = "1", p_v = "3", p_w = "4", p_x = "3";

    auto* check = app.add_subcommand("check", "run the Calabi-Yau conditions");
    check->add_option("operator", ref)->required();
    check->add_option("-n,--coeffs", N, "screen length");
    check->add_option("-M,--confirm", M, "confirm length");
    check->add_option("--depth", depth);

    auto* solve = app.add_subcommand("solve", "holomorphic solution coefficients");
    solve->add_option("operator", ref)->required();
    solve->add_option("-n,--coeffs", N)->required();

    auto* spectrum = app.add_subcommand("spectrum", "spectrum at infinity");
    spectrum->add_option("operator", ref)->required();

    auto* instanton = app.add_subcommand("instanton", "instanton numbers");
    instanton->add_option("operator", ref)->required();
    instanton->add_option("--depth", depth);

    auto* fp = app.add_subcommand("fingerprint", "superseeker fingerprint");
    fp->add_option("operator", ref)->required();
    fp->add_option("--depth", depth);

    auto* powers = app.add_subcommand("powers", "integral power exponents (r, s)");
    powers->add_option("operator", ref)->required();
    powers->add_option("-n,--coeffs", N);

    auto* had = app.add_subcommand("hadamard", "Hadamard product of two solutions");
    had->add_option("first", ref)->required();
    had->add_option("second", ref2)->required();
    had->add_option("-n,--coeffs", N);
    had->add_option("--out", out);

    auto* fit = app.add_subcommand("fit", "fit an annihilating operator to coefficients");
    fit->add_option("coeffs", fit_input, "coefficient file, or - for stdin");
    fit->add_option("--order", fit_order);
    fit->add_option("--degree", fit_degree);
    fit->add_option("--guard", fit_guard);
    fit->add_option("--out", out);

    auto* translate = app.add_subcommand("translate", "move a MUM point to the origin");
    translate->add_option("operator", ref)->required();
    translate->add_option("--z0", z0)->required();
    translate->add_option("--exp", lam, "conjugation exponent");
    translate->add_option("--out", out);

    std::string twist = "0";
    auto* reflect = app.add_subcommand("reflect", "reflect at infinity");
    reflect->add_option("operator", ref)->required();
    reflect->add_option("--lambda", twist, "twist exponent");
    reflect->add_option("--out", out);

    auto* scale = app.add_subcommand("scale", "rescale z");
    scale->add_option("operator", ref)->required();
    scale->add_option("--lambda", lam)->required();
    scale->add_option("--out", out);

    auto* search = app.add_subcommand("search", "two-step family sweep");
    search->add_option("--family", family, "had2|had3|gen4|fact4");
    search->add_option("--range", ranges, "parameter range K=lo:hi")->allow_extra_args(false);
    search->add_option("--u", p_u, "spectrum parameter u");
    search->add_option("--v", p_v, "spectrum parameter v");
    search->add_option("--w", p_w, "spectrum parameter w");
    search->add_option("--x", p_x, "spectrum parameter x");
    search->add_option("-n,--coeffs", N);
    search->add_option("-M,--confirm", M);
    search->add_option("--jobs", jobs);
    search->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "check a dataset formula");
    verify->add_option("id", ref)->required();
    verify->add_option("-n,--coeffs", N);

    auto* db = app.add_subcommand("db", "list dataset records");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(ref, db_path, N, M, depth);
        if (solve->parsed()) return cmd_solve(ref, db_path, N);
        if (spectrum->parsed()) return cmd_spectrum(ref, db_path);
        if (instanton->parsed()) return cmd_instanton(ref, db_path, depth);
        if (fp->parsed()) return cmd_fingerprint(ref, db_path, depth);
        if (powers->parsed()) return cmd_powers(ref, db_path, N);
        if (had->parsed()) return cmd_hadamard(ref, ref2, db_path, N, out);
        if (fit->parsed()) return cmd_fit(fit_input, fit_order, fit_degree, fit_guard, out);
        if (translate->parsed()) {
            ThetaOperator op = resolve_operator(ref, db_path);
            ThetaOperator moved = translate_mum(op, parse_rat_arg(z0, "--z0"),
                                                parse_rat_arg(lam, "--exp"));
            emit(serialize_cyop(normalize(moved)), out);
            return 0;
        }
        if (reflect->parsed()) {
            ThetaOperator op = resolve_operator(ref, db_path);
            emit(serialize_cyop(normalize(
                     reflect_infinity(op, parse_rat_arg(twist, "--lambda")))),
                 out);
            return 0;
        }
        if (scale->parsed()) {
            ThetaOperator op = resolve_operator(ref, db_path);
            emit(serialize_cyop(normalize(scale_z(op, parse_rat_arg(lam, "--lambda")))),
                 out);
            return 0;
        }
        if (search->parsed())
            return cmd_search(family, ranges, parse_rat_arg(p_u, "--u"),
                              parse_rat_arg(p_v, "--v"), parse_rat_arg(p_w, "--w"),
                              parse_rat_arg(p_x, "--x"), N, M, jobs, out);
        if (verify->parsed()) return cmd_verify(ref, db_path, N);
        if (db->parsed()) return cmd_db(db_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
