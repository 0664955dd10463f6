#include "rankcrit/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "rankcrit/constructions.hpp"
#include "rankcrit/criticality.hpp"
#include "rankcrit/errors.hpp"
#include "rankcrit/json_io.hpp"
#include "rankcrit/lie.hpp"
#include "rankcrit/mpoly.hpp"

namespace rankcrit {

namespace {

struct CommonOpts {
    uint64_t seed = 1;
    int64_t height = 100;
    int stabilize = 5;
    int oversample = 3;
    uint64_t prime = 0;
    std::string format = "json";
    std::string output;
    std::string expect;

    SampleOptions sample() const {
        SampleOptions s;
        s.seed = seed;
        s.height = height;
        s.stabilize = stabilize;
        if (prime) s.prime = prime;
        return s;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "random seed governing the run");
    cmd->add_option("--height", o.height, "integer sampling height H")->check(CLI::PositiveNumber);
    cmd->add_option("--stabilize", o.stabilize, "consecutive stable samples before stopping")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--oversample", o.oversample, "extra samples per highest weight row")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--prime", o.prime, "fixed modular screening prime");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--output", o.output, "write the report to this path");
    cmd->add_option("--expect", o.expect, "exit nonzero unless this outcome is reached")
        ->check(CLI::IsMember({"certified"}));
}

void emit(const CommonOpts& o, const Json& j, const std::string& text) {
    std::string payload = o.format == "text" && !text.empty() ? text : j.dump(2) + "\n";
    if (o.output.empty())
        std::cout << payload;
    else
        write_text_file(o.output, payload);
}

// representation + root datum from builder arguments
struct BuiltRep {
    Representation rho;
    RootDatum rd;
};

BuiltRep build_g2_7() {
    DerivationAlgebra der = derivation_algebra(zorn_octonions());
    Representation rho = trivial_summand_complement(der.action);
    RootDatum rd = cartan_and_roots(der.algebra);
    return BuiltRep{std::move(rho), std::move(rd)};
}

BuiltRep build_rep(const std::string& kind, int m, int k, int a, int b,
                   const std::string& algebra_name) {
    if (kind == "sl-sym") {
        if (m < 2 || k < 0) throw ParseError("sl-sym needs --m >= 2 and --k >= 0");
        Representation rho = symmetric_power_poly_rep(m, k);
        RootDatum rd = sl_root_datum(rho.algebra_ptr(), m);
        return BuiltRep{std::move(rho), std::move(rd)};
    }
    if (kind == "adjoint") {
        LiePtr g;
        bool is_sl = false;
        int sl_m = 0;
        if (algebra_name.rfind("sl", 0) == 0) {
            sl_m = std::atoi(algebra_name.c_str() + 2);
            if (sl_m < 2) throw ParseError("unknown algebra name: " + algebra_name);
            g = sl(sl_m).first;
            is_sl = true;
        } else if (algebra_name.rfind("so", 0) == 0) {
            int n = std::atoi(algebra_name.c_str() + 2);
            if (n < 3) throw ParseError("unknown algebra name: " + algebra_name);
            g = so_split(n).first;
        } else if (algebra_name.rfind("sp", 0) == 0) {
            int n = std::atoi(algebra_name.c_str() + 2);
            if (n < 2 || n % 2) throw ParseError("unknown algebra name: " + algebra_name);
            g = sp_split(n).first;
        } else if (algebra_name == "g2") {
            g = derivation_algebra(zorn_octonions()).algebra;
        } else {
            throw ParseError("unknown algebra name: " + algebra_name);
        }
        Representation rho = adjoint_rep(g);
        RootDatum rd = is_sl ? sl_root_datum(g, sl_m) : cartan_and_roots(g);
        return BuiltRep{std::move(rho), std::move(rd)};
    }
    if (kind == "g2-7") return build_g2_7();
    if (kind == "g2-27") {
        BuiltRep seven = build_g2_7();
        Representation rho = trivial_summand_complement(symmetric_square_rep(seven.rho));
        return BuiltRep{std::move(rho), std::move(seven.rd)};
    }
    if (kind == "sl3-irrep") {
        if (a < 0 || b < 0) throw ParseError("sl3-irrep needs --a >= 0 and --b >= 0");
        Representation rho = irreducible_sl3_rep(a, b);
        RootDatum rd = sl_root_datum(rho.algebra_ptr(), 3);
        return BuiltRep{std::move(rho), std::move(rd)};
    }
    if (kind == "f4-26") {
        DerivationAlgebra der = derivation_algebra(jordan_h3(zorn_octonions()));
        Representation rho = trivial_summand_complement(der.action);
        RootDatum rd = cartan_and_roots(der.algebra);
        return BuiltRep{std::move(rho), std::move(rd)};
    }
    throw ParseError("unknown representation kind: " + kind);
}

std::string certificate_text(const CriticalityCertificate& c) {
    std::ostringstream os;
    os << "status: " << to_string(c.status) << "\n"
       << "generic rank: " << c.generic_rank << " (" << to_string(c.rank_provenance) << ")\n"
       << "rnd dim: " << c.rnd.dim() << "\n"
       << "samples: " << c.samples_used << "  seed: " << c.seed << "\n";
    return os.str();
}

int run(int argc, const char* const* argv) {
    CLI::App app{"exact rank-criticality certificates for matrix spaces and Lie module images"};
    app.require_subcommand(1);
    CommonOpts o;

    // ---- space ----
    CLI::App* space = app.add_subcommand("space", "operations on a matrix space file");
    space->require_subcommand(1);
    std::string space_file;
    CLI::App* sp_rank = space->add_subcommand("rank", "sampled generic rank");
    CLI::App* sp_rnd = space->add_subcommand("rnd", "rank-neutral directions");
    CLI::App* sp_cert = space->add_subcommand("certify", "rank-criticality certificate");
    for (CLI::App* c : {sp_rank, sp_rnd, sp_cert}) {
        c->add_option("file", space_file, "MatrixSpace JSON file")->required();
        add_common(c, o);
    }

    // ---- construct ----
    CLI::App* construct = app.add_subcommand("construct", "emit the classical singular space families");
    construct->require_subcommand(1);
    int cn = 0, ck = 0;
    std::string u_file, w_file, pencil_file, pare_file;
    CLI::App* c_comp = construct->add_subcommand("compression", "{A : A U <= W}");
    c_comp->add_option("--n", cn, "matrix size")->required();
    c_comp->add_option("--k", ck, "dim U (W gets dim k-1) for the standard flag");
    c_comp->add_option("--u", u_file, "subspace JSON for U");
    c_comp->add_option("--w", w_file, "subspace JSON for W");
    add_common(c_comp, o);
    CLI::App* c_skew = construct->add_subcommand("skew", "skew-symmetric matrices");
    c_skew->add_option("--n", cn, "matrix size")->required();
    add_common(c_skew, o);
    CLI::App* c_pare = construct->add_subcommand("pare", "columns A_i x for skew A_i");
    c_pare->add_option("--n", cn, "standard choice of size n");
    c_pare->add_option("--file", pare_file, "JSON array of skew matrices");
    add_common(c_pare, o);
    CLI::App* c_pencil = construct->add_subcommand(
        "pencil-witness", "compression witness of a singular 2-dim pencil");
    c_pencil->add_option("file", pencil_file, "MatrixSpace JSON with exactly 2 basis matrices")
        ->required();
    add_common(c_pencil, o);

    // ---- rep ----
    CLI::App* rep = app.add_subcommand("rep", "Lie representation images");
    rep->require_subcommand(1);
    std::string kind, algebra_name, rep_file;
    int rm = 3, rk = 3, ra = 0, rb = 0;
    CLI::App* r_build = rep->add_subcommand("build", "construct a representation");
    CLI::App* r_cert = rep->add_subcommand("certify", "highest-weight multiplicity report");
    for (CLI::App* c : {r_build, r_cert}) {
        c->add_option("kind", kind,
                      "one of: sl-sym, adjoint, g2-7, g2-27, sl3-irrep, f4-26");
        c->add_option("--m", rm, "sl-sym: number of variables");
        c->add_option("--k", rk, "sl-sym: polynomial degree");
        c->add_option("--a", ra, "sl3-irrep: first Dynkin label");
        c->add_option("--b", rb, "sl3-irrep: second Dynkin label");
        c->add_option("--algebra", algebra_name, "adjoint: slN | soN | spN | g2");
        add_common(c, o);
    }
    r_cert->add_option("--file", rep_file, "certify a representation JSON file instead");

    // ---- poly ----
    CLI::App* poly = app.add_subcommand("poly", "the coefficient polynomials");
    poly->require_subcommand(1);
    int pd = 0, pe = 1, emax = 10, dmax = 6;
    CLI::App* p_pde = poly->add_subcommand("pde", "print P_{d,e}");
    p_pde->add_option("--d", pd)->required();
    p_pde->add_option("--e", pe)->required();
    add_common(p_pde, o);
    CLI::App* p_qd = poly->add_subcommand("verify-qd", "Q_d sum vs closed form sweep");
    p_qd->add_option("--emax", emax);
    add_common(p_qd, o);
    CLI::App* p_brute = poly->add_subcommand("verify-brute",
                                             "operator coefficient vs d! P_{d,e} sweep");
    p_brute->add_option("--emax", emax);
    p_brute->add_option("--dmax", dmax);
    add_common(p_brute, o);

    // ---- algebra ----
    CLI::App* algebra = app.add_subcommand("algebra", "structure constant files");
    algebra->require_subcommand(1);
    std::string alg_file;
    CLI::App* a_val = algebra->add_subcommand("validate", "check antisymmetry, Jacobi, Cartan");
    a_val->add_option("file", alg_file)->required();
    add_common(a_val, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : 2;
    }

    // ---- space handlers ----
    if (sp_rank->parsed() || sp_rnd->parsed() || sp_cert->parsed()) {
        MatrixSpace a = matrix_space_from_json(load_json_file(space_file));
        if (sp_rank->parsed()) {
            if (a.dim() == 0) throw ParseError("space rank: basis is empty");
            GenericRank gr = generic_rank(a, o.sample());
            emit(o,
                 Json{{"generic_rank", gr.r},
                      {"rank_provenance", to_string(gr.provenance)},
                      {"samples_used", gr.samples_used},
                      {"seed", o.seed}},
                 "generic rank = " + std::to_string(gr.r) + "\n");
            return 0;
        }
        if (sp_rnd->parsed()) {
            if (a.dim() == 0) throw ParseError("space rnd: basis is empty");
            GenericRank gr = generic_rank(a, o.sample());
            RndResult res = rnd(a, gr.r, o.sample());
            Json j{{"generic_rank", gr.r},
                   {"rnd_dim", res.space.dim()},
                   {"space_dim", a.dim()},
                   {"samples_used", gr.samples_used + res.samples_used},
                   {"rnd_basis", matrix_to_json(res.space.basis())}};
            emit(o, j, "rnd dim = " + std::to_string(res.space.dim()) + "\n");
            return 0;
        }
        CriticalityCertificate cert = certify_rank_critical(a, o.sample());
        emit(o, certificate_to_json(cert), certificate_text(cert));
        return o.expect == "certified" && cert.status != CertStatus::Certified ? 1 : 0;
    }

    // ---- construct handlers ----
    if (c_comp->parsed()) {
        MatrixSpace a = !u_file.empty()
                            ? compression_space(cn, subspace_from_json(load_json_file(u_file)),
                                                subspace_from_json(load_json_file(w_file)))
                            : standard_compression_space(cn, ck);
        emit(o, matrix_space_to_json(a), "");
        return 0;
    }
    if (c_skew->parsed()) {
        emit(o, matrix_space_to_json(skew_space(cn)), "");
        return 0;
    }
    if (c_pare->parsed()) {
        MatrixSpace a = [&] {
            if (!pare_file.empty()) {
                std::vector<Matrix> skews;
                for (const Json& m : load_json_file(pare_file)) skews.push_back(matrix_from_json(m));
                return pare_space(skews);
            }
            return pare_standard(cn);
        }();
        emit(o, matrix_space_to_json(a), "");
        return 0;
    }
    if (c_pencil->parsed()) {
        MatrixSpace a = matrix_space_from_json(load_json_file(pencil_file));
        if (a.dim() != 2) throw ParseError("pencil-witness: need exactly 2 basis matrices");
        try {
            CompressionWitness wit = pencil_compression_witness(a.basis()[0], a.basis()[1]);
            emit(o, witness_to_json(wit),
                 "dim U = " + std::to_string(wit.U.dim()) +
                     ", dim W = " + std::to_string(wit.W.dim()) + "\n");
            return 0;
        } catch (const NotSingular& e) {
            emit(o, Json{{"error", "NotSingular"}, {"detail", e.what()}}, std::string(e.what()) + "\n");
            return 1;
        }
    }

    // ---- rep handlers ----
    if (r_build->parsed()) {
        if (kind.empty()) throw ParseError("rep build: a representation kind is required");
        BuiltRep built = build_rep(kind, rm, rk, ra, rb, algebra_name);
        emit(o, representation_to_json(built.rho), "");
        return 0;
    }
    if (r_cert->parsed()) {
        MultiplicityReport report = [&] {
            if (!rep_file.empty()) {
                Representation rho = representation_from_json(load_json_file(rep_file));
                RootDatum rd = cartan_and_roots(rho.algebra_ptr());
                return rnd_multiplicities(rho, rd, o.sample(), o.oversample);
            }
            if (kind.empty()) throw ParseError("rep certify: a kind or --file is required");
            BuiltRep built = build_rep(kind, rm, rk, ra, rb, algebra_name);
            return rnd_multiplicities(built.rho, built.rd, o.sample(), o.oversample);
        }();
        emit(o, report_to_json(report), report_to_text(report));
        return o.expect == "certified" && report.verdict != Verdict::Certified ? 1 : 0;
    }

    // ---- poly handlers ----
    if (p_pde->parsed()) {
        MPoly p = p_de(pd, pe);
        Json terms = Json::object();
        for (const auto& [exps, c] : p.terms()) {
            std::string key = std::to_string(exps[0]) + "," + std::to_string(exps[1]) + "," +
                              std::to_string(exps[2]);
            terms[key] = c.str();
        }
        emit(o, Json{{"d", pd}, {"e", pe}, {"terms", std::move(terms)}},
             p.str({"alpha", "beta", "gamma"}) + "\n");
        return 0;
    }
    if (p_qd->parsed()) {
        for (int e = 1; e <= emax; ++e)
            for (int d = 1; d <= 2 * e + 1; ++d)
                if (q_d_sum(d, e) != q_d_closed(d, e)) {
                    std::cout << "FAIL at d=" << d << " e=" << e << "\n";
                    return 1;
                }
        std::cout << "Q_d sum matches the closed form for e <= " << emax << "\n";
        return 0;
    }
    if (p_brute->parsed()) {
        for (int e = 1; e <= emax; ++e)
            for (int d = 0; d <= dmax; ++d) {
                MPoly brute = brute_operator_coefficient(d, e, 3);
                MPoly scaled = Rat(factorial((unsigned)d)) * p_de(d, e);
                if (brute != scaled) {
                    std::cout << "FAIL at d=" << d << " e=" << e << "\n";
                    return 1;
                }
            }
        std::cout << "operator coefficient equals d! P_{d,e} for e <= " << emax
                  << ", d <= " << dmax << "\n";
        return 0;
    }

    // ---- algebra handlers ----
    if (a_val->parsed()) {
        try {
            LiePtr g = algebra_from_json(load_json_file(alg_file));
            emit(o, Json{{"valid", true}, {"dim", g->dim()}, {"rank", g->rank()}},
                 "valid: dim " + std::to_string(g->dim()) + ", rank " +
                     std::to_string(g->rank()) + "\n");
            return 0;
        } catch (const AntisymmetryViolation& e) {
            throw ParseError(e.what());
        } catch (const JacobiViolation& e) {
            throw ParseError(e.what());
        } catch (const CartanNotCommuting& e) {
            throw ParseError(e.what());
        }
    }
    return 0;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rankcrit
