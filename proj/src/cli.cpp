#include "lagsieve/campaign.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace lagsieve {

namespace {

int emit(const nlohmann::json& j, const std::string& out_file, bool pretty) {
    std::string text = pretty ? j.dump(2) : j.dump();
    if (!out_file.empty()) {
        std::ofstream os(out_file);
        if (!os) {
            std::cerr << "cannot open output file: " << out_file << "\n";
            return 2;
        }
        os << text << "\n";
        return 0;
    }
    std::cout << text << "\n";
    return 0;
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"lagsieve: exact irreducibility and Galois sweeps for twisted Laguerre polynomials"};
    app.require_subcommand(1);

    std::uint64_t n = 0, prime = 0, limit = 100000000ull;
    std::int64_t alpha_u = 0, k = 1, nmax = 130;
    std::uint32_t alpha_a = 0, alpha_d = 1;
    bool json_out = false, squared = false;
    std::string out_file;
    int l_filaseta = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json_out, "emit JSON");
        cmd->add_option("--out", out_file, "write the report to FILE");
    };
    auto alpha_opts = [&](CLI::App* cmd) {
        cmd->add_option("--alpha-u", alpha_u, "integer part u of alpha")->required();
        cmd->add_option("--alpha-a", alpha_a, "numerator a of the fractional part");
        cmd->add_option("--alpha-d", alpha_d, "denominator d of the fractional part");
    };

    auto* np = app.add_subcommand("np", "Newton polygon of g_n^{(alpha)}");
    np->add_option("--n", n, "degree n")->required()->check(CLI::PositiveNumber);
    alpha_opts(np);
    np->add_option("--prime", prime, "prime p")->required();
    np->add_flag("--squared", squared, "polygon of g(x^2)");
    add_common(np);

    auto* excl = app.add_subcommand("exclude", "run the exclusion cascade for one (n, alpha, k)");
    excl->add_option("--n", n, "degree n")->required()->check(CLI::PositiveNumber);
    alpha_opts(excl);
    excl->add_option("--k", k, "factor degree to exclude")->required();
    excl->add_option("--prime", prime, "restrict to one prime (0 = search)");
    excl->add_option("--l", l_filaseta, "Filaseta l parameter");
    add_common(excl);

    auto* t1 = app.add_subcommand("theorem1", "integer-alpha sweep");
    t1->add_option("--nmax", nmax, "largest n");
    add_common(t1);

    auto* t2 = app.add_subcommand("theorem2", "half-alpha sweep on psi(x^2)");
    t2->add_option("--nmax", nmax, "largest n");
    add_common(t2);

    auto* tb = app.add_subcommand("tables", "re-derive every factor-witness table row");
    add_common(tb);

    auto* ga = app.add_subcommand("galois", "Galois-group campaign");
    ga->add_option("--nmax", nmax, "sweep bound");
    add_common(ga);

    auto* su = app.add_subcommand("sunit", "x + y = z in 13-smooth numbers");
    su->add_option("--limit", limit, "largest z");
    add_common(su);

    auto* bs = app.add_subcommand("bsq", "scan for square discriminant classes");
    bs->add_option("--nmax", nmax, "largest n");
    add_common(bs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    PrimeSieve sieve(1 << 16);
    try {
        if (np->parsed()) {
            AlphaParam ap(alpha_u, alpha_a, alpha_d);
            auto poly = newton_polygon_template(n, ap, prime, squared);
            return emit(nlohmann::json::parse(poly.to_json()), out_file, !json_out);
        }
        if (excl->parsed()) {
            AlphaParam ap(alpha_u, alpha_a, alpha_d);
            nlohmann::json j;
            j["schema"] = kSchemaTag;
            j["n"] = n;
            j["alpha"] = {{"u", alpha_u}, {"a", alpha_a}, {"d", alpha_d}};
            j["k"] = k;
            if (ap.is_integer()) {
                if (auto c = glemma_check(n, alpha_u, k, sieve))
                    j["glemma"] = {{"prime", c->prime_witness}};
                if (k <= 2)
                    if (auto c = glemma1_check(n, alpha_u, k, sieve))
                        j["glemma1"] = {{"prime", c->prime_witness}};
            }
            if (prime != 0) {
                auto fr = filaseta_exclusion(n, ap, prime, l_filaseta, k, squared);
                j["filaseta"] = {{"prime", prime},
                                 {"conclusive", fr.conclusive},
                                 {"notes", fr.notes}};
                DumasOptions d;
                d.squared = squared;
                auto dr = dumas_exclusion_all_coeffs(n, ap, prime, k, d);
                j["dumas"] = {{"prime", prime},
                              {"conclusive", dr.conclusive},
                              {"notes", dr.notes}};
            }
            if (k == 1 && ap.is_integer()) {
                auto dec = decide_linear_factor(n, ap, sieve);
                j["linear_factor_exists"] = dec.has_factor;
                if (dec.has_factor) j["witness_b"] = dec.witness_b.str();
            }
            return emit(j, out_file, !json_out);
        }
        if (t1->parsed()) {
            Theorem1Options o;
            o.n_max = static_cast<std::uint64_t>(nmax);
            auto rep = verify_theorem1(o, sieve);
            emit(rep.to_json(), out_file, !json_out);
            return rep.clean() ? 0 : 1;
        }
        if (t2->parsed()) {
            Theorem2Options o;
            o.n_max = static_cast<std::uint64_t>(nmax);
            auto rep = verify_theorem2(o, sieve);
            emit(rep.to_json(), out_file, !json_out);
            return rep.clean() ? 0 : 1;
        }
        if (tb->parsed()) {
            auto rep = verify_tables(sieve);
            emit(rep.to_json(), out_file, !json_out);
            return rep.clean() ? 0 : 1;
        }
        if (ga->parsed()) {
            GaloisOptions o;
            if (nmax != 130) o.n_sweep = static_cast<std::uint64_t>(nmax);
            auto rep = verify_galois(o, sieve);
            emit(rep.to_json(), out_file, !json_out);
            bool count_ok = rep.residual_pairs == 619;
            return (rep.clean() && count_ok) ? 0 : 1;
        }
        if (su->parsed()) {
            auto sols = sunit_solutions(13, limit);
            std::ostream* os = &std::cout;
            std::ofstream f;
            if (!out_file.empty()) {
                f.open(out_file);
                if (!f) {
                    std::cerr << "cannot open output file: " << out_file << "\n";
                    return 2;
                }
                os = &f;
            }
            for (const auto& s : sols) {
                nlohmann::json j{{"x", s.x}, {"y", s.y}, {"z", s.z}};
                nlohmann::json jo;
                for (const auto& [p, v] : s.ords(13)) jo[std::to_string(p)] = v;
                j["ords"] = jo;
                (*os) << j.dump() << "\n";
            }
            return 0;
        }
        if (bs->parsed()) {
            auto sq = bsq_scan(45, static_cast<std::uint64_t>(nmax), sieve);
            nlohmann::json j;
            j["schema"] = kSchemaTag;
            j["square_pairs"] = nlohmann::json::array();
            for (const auto& [u, nn] : sq) j["square_pairs"].push_back({u, nn});
            emit(j, out_file, !json_out);
            bool only_n1 = std::all_of(sq.begin(), sq.end(),
                                       [](const auto& p) { return p.second == 1; });
            return only_n1 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace lagsieve
