#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "siegel/error.hpp"
#include "siegel/io.hpp"
#include "siegel/numtheory.hpp"
#include "siegel/residue.hpp"
#include "siegel/sturm.hpp"

namespace {

using siegel::Error;
using siegel::Integer;
using siegel::Json;

void print_json(const Json& j) {
    std::cout << siegel::canonical_text(j);
}

Integer parse_prime(const std::string& s) {
    Integer p;
    if (mpz_set_str(p.get_mpz_t(), s.c_str(), 10) != 0)
        throw Error("InvalidArgument", "not an integer: '" + s + "'");
    if (!siegel::is_prime(p))
        throw Error("InvalidPrime", "not a prime: " + s);
    return p;
}

Json load_json_file(const std::string& path) {
    return siegel::parse_json_text(siegel::read_text_file(path));
}

siegel::RationalSiegel load_rational_siegel(const std::string& path) {
    auto any = siegel::expansion_from_json(load_json_file(path));
    if (auto* f = std::get_if<siegel::RationalSiegel>(&any))
        return std::move(*f);
    throw Error("ScalarRingMismatch", path + ": rational coefficients required");
}

std::string file_digest(const Json& j) {
    return siegel::sha256_hex(siegel::canonical_text(j));
}

std::string resolve_lattice(const std::string& lattice, const std::string& dir) {
    namespace fs = std::filesystem;
    if (fs::exists(lattice))
        return lattice;
    fs::path p = fs::path(dir) / lattice;
    if (fs::exists(p))
        return p.string();
    p = fs::path(dir) / (lattice + ".json");
    if (fs::exists(p))
        return p.string();
    throw Error("IoError", "lattice fixture not found: " + lattice);
}

struct BoundArgs {
    int64_t degree = 1;
    int64_t weight = 0;
    std::string prime;
    bool slope_only = false;
};

int run_bound(const BoundArgs& a) {
    Integer p = parse_prime(a.prime);
    siegel::SlopeBound slope = siegel::slope_bound(static_cast<int>(a.degree), p);
    Json out;
    out["degree"] = a.degree;
    out["prime"] = p.get_str();
    out["prime_class"] = slope.prime_class == siegel::PrimeClass::p_ge_5 ? "p_ge_5" : "generic";
    out["slope"] = siegel::rational_str(slope.value);
    if (!a.slope_only) {
        out["weight"] = a.weight;
        siegel::Rational bound =
            siegel::sturm_diagonal_bound(static_cast<int>(a.degree), a.weight, p);
        out["bound"] = siegel::rational_str(bound);
        out["cutoff"] = siegel::sturm_cutoff(static_cast<int>(a.degree), a.weight, p);
    }
    print_json(out);
    return 0;
}

int run_order(const std::string& in, const std::string& prime) {
    Integer p = parse_prime(prime);
    Json j = load_json_file(in);
    const Json& kind = j.contains("kind") ? j["kind"] : Json(nullptr);
    Json out;
    siegel::OrderResult res;
    if (kind == "jacobi") {
        res = siegel::jacobi_vanishing_order(siegel::jacobi_from_json(j), p);
        out["kind"] = "jacobi";
    } else {
        auto any = siegel::expansion_from_json(j);
        if (auto* f = std::get_if<siegel::RationalSiegel>(&any))
            res = siegel::diagonal_vanishing_order(*f, p);
        else
            res = siegel::diagonal_vanishing_order(std::get<siegel::CyclotomicSiegel>(any), p);
        out["kind"] = "siegel";
    }
    out["prime"] = p.get_str();
    out.update(siegel::order_to_json(res));
    print_json(out);
    return 0;
}

int run_check(const std::string& lhs_path, const std::string& rhs_path,
              const std::string& prime, const std::string& out_path) {
    Integer p = parse_prime(prime);
    Json jl = load_json_file(lhs_path);
    Json jr = load_json_file(rhs_path);
    auto lhs = siegel::expansion_from_json(jl);
    auto rhs = siegel::expansion_from_json(jr);
    auto* fl = std::get_if<siegel::RationalSiegel>(&lhs);
    auto* fr = std::get_if<siegel::RationalSiegel>(&rhs);
    if (!fl || !fr)
        throw Error("ScalarRingMismatch", "congruence checking requires rational coefficients");
    siegel::Certificate cert =
        siegel::check_congruence(*fl, *fr, p, file_digest(jl), file_digest(jr));
    Json cj = siegel::certificate_to_json(cert);
    siegel::write_text_file(out_path, siegel::canonical_text(cj));
    print_json(cj);
    return cert.verdict == siegel::Verdict::congruent ? 0 : 1;
}

int run_integrality(const std::string& in, const std::string& out_path,
                    const std::string& p_integral) {
    Json j = load_json_file(in);
    auto any = siegel::expansion_from_json(j);
    auto* f = std::get_if<siegel::RationalSiegel>(&any);
    if (!f)
        throw Error("ScalarRingMismatch", "integrality certification requires rational coefficients");
    std::optional<Integer> p;
    if (!p_integral.empty())
        p = parse_prime(p_integral);
    siegel::Certificate cert = siegel::certify_integrality(*f, p, file_digest(j));
    Json cj = siegel::certificate_to_json(cert);
    siegel::write_text_file(out_path, siegel::canonical_text(cj));
    print_json(cj);
    return cert.verdict == siegel::Verdict::integral ? 0 : 1;
}

int run_theta(const std::string& lattice, const std::string& dir, int64_t degree,
              int64_t bound, const std::string& out_path, bool serial) {
    siegel::EvenLattice l = siegel::lattice_from_json(load_json_file(resolve_lattice(lattice, dir)));
    siegel::RationalSiegel f = serial
                                   ? siegel::theta_series_serial(l, static_cast<int>(degree), bound)
                                   : siegel::theta_series(l, static_cast<int>(degree), bound);
    Json j = siegel::expansion_to_json(f);
    std::string text = siegel::canonical_text(j);
    siegel::write_text_file(out_path, text);
    Json out;
    out["lattice"] = l.name;
    out["weight"] = f.weight;
    out["written"] = out_path;
    out["digest"] = siegel::sha256_hex(text);
    print_json(out);
    return 0;
}

int run_fj(const std::string& in, int64_t index, const std::string& out_path) {
    siegel::RationalSiegel f = load_rational_siegel(in);
    siegel::JacobiExpansion phi = siegel::fourier_jacobi(f, index);
    std::string text = siegel::canonical_text(siegel::jacobi_to_json(phi));
    siegel::write_text_file(out_path, text);
    Json out;
    out["index"] = index;
    out["written"] = out_path;
    out["digest"] = siegel::sha256_hex(text);
    print_json(out);
    return 0;
}

int run_restrict(const std::string& in, int64_t n, std::vector<int64_t> alpha,
                 std::vector<int64_t> beta, const std::string& out_path) {
    siegel::JacobiExpansion phi = siegel::jacobi_from_json(load_json_file(in));
    if (alpha.empty())
        alpha.assign(static_cast<size_t>(phi.degree), 0);
    if (beta.empty())
        beta.assign(static_cast<size_t>(phi.degree), 0);
    siegel::TorsionPoint pt(n, std::move(alpha), std::move(beta));
    siegel::CyclotomicSiegel f = siegel::restrict_torsion(phi, pt);
    std::string text = siegel::canonical_text(siegel::expansion_to_json(f));
    siegel::write_text_file(out_path, text);
    Json out;
    out["N"] = n;
    out["written"] = out_path;
    out["digest"] = siegel::sha256_hex(text);
    print_json(out);
    return 0;
}

int run_det_a(int64_t n, const std::string& prime) {
    siegel::Cyclotomic det = siegel::torsion_matrix_det(n);
    Json out;
    out["N"] = n;
    Json dj;
    dj["order"] = det.order();
    Json coeffs = Json::array();
    for (const auto& c : det.coeffs())
        coeffs.push_back(siegel::rational_str(c));
    dj["coeffs"] = std::move(coeffs);
    out["det"] = std::move(dj);
    if (!prime.empty()) {
        Integer p = parse_prime(prime);
        siegel::PrimeIdealResidue res = siegel::reduce_mod_ideal(det, p);
        out["prime"] = p.get_str();
        Json rj = Json::array();
        for (const auto& c : res.value)
            rj.push_back(c.get_str());
        out["residue"] = std::move(rj);
        out["residue_nonzero"] = !res.is_zero();
    }
    print_json(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Sturm-bound toolkit for Siegel and Jacobi expansions"};
    app.require_subcommand(1);

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "slope and Sturm bounds for (degree, weight, prime)");
    bound->add_option("--degree", bound_args.degree, "expansion degree")->required();
    bound->add_option("--weight", bound_args.weight, "form weight");
    bound->add_option("--prime", bound_args.prime, "prime p")->required();
    bound->add_flag("--slope-only", bound_args.slope_only, "print only the slope bound");

    std::string in_path, lhs_path, rhs_path, out_path, prime, lattice, lattice_dir = "data",
                p_integral;
    int64_t index = 0, degree = 1, diag_bound = 0, torsion_n = 1;
    bool serial = false;
    std::vector<int64_t> alpha, beta;

    auto* order = app.add_subcommand("order", "diagonal vanishing order mod p of an expansion file");
    order->add_option("--in", in_path, "expansion file (siegel or jacobi)")->required();
    order->add_option("--prime", prime, "prime p")->required();

    auto* check = app.add_subcommand("check", "certify a coefficient congruence mod p");
    check->add_option("--lhs", lhs_path, "left expansion file")->required();
    check->add_option("--rhs", rhs_path, "right expansion file")->required();
    check->add_option("--prime", prime, "prime p")->required();
    check->add_option("--out", out_path, "certificate output file")->required();

    auto* integrality = app.add_subcommand("integrality", "certify coefficient integrality");
    integrality->add_option("--in", in_path, "expansion file")->required();
    integrality->add_option("--out", out_path, "certificate output file")->required();
    integrality->add_option("--p-integral", p_integral, "certify p-integrality for this prime only");

    auto* theta = app.add_subcommand("theta", "degree-g theta series of an even unimodular lattice");
    theta->add_option("--lattice", lattice, "fixture name or path")->required();
    theta->add_option("--lattice-dir", lattice_dir, "fixture directory (default: data)");
    theta->add_option("--degree", degree, "expansion degree")->required();
    theta->add_option("--diag-bound", diag_bound, "diagonal truncation")->required();
    theta->add_option("--out", out_path, "expansion output file")->required();
    theta->add_flag("--serial", serial, "use the serial reference kernel");

    auto* fj = app.add_subcommand("fj", "Fourier-Jacobi coefficient of a Siegel expansion");
    fj->add_option("--in", in_path, "siegel expansion file")->required();
    fj->add_option("--index", index, "Jacobi index m")->required();
    fj->add_option("--out", out_path, "jacobi output file")->required();

    auto* restrict_cmd = app.add_subcommand("restrict", "restrict a Jacobi expansion to a torsion point");
    restrict_cmd->add_option("--in", in_path, "jacobi expansion file")->required();
    restrict_cmd->add_option("--N", torsion_n, "torsion denominator")->required();
    restrict_cmd->add_option("--alpha", alpha, "alpha numerators over N (comma separated)")
        ->delimiter(',');
    restrict_cmd->add_option("--beta", beta, "beta numerators over N (comma separated)")
        ->delimiter(',');
    restrict_cmd->add_option("--out", out_path, "expansion output file")->required();

    auto* det_a = app.add_subcommand("det-a", "determinant of the torsion phase matrix");
    det_a->add_option("--N", torsion_n, "odd prime N")->required();
    det_a->add_option("--prime", prime, "also reduce mod this prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // help and friends
            return app.exit(e);
        Json err;
        err["code"] = "InvalidArgument";
        err["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }

    try {
        if (bound->parsed())
            return run_bound(bound_args);
        if (order->parsed())
            return run_order(in_path, prime);
        if (check->parsed())
            return run_check(lhs_path, rhs_path, prime, out_path);
        if (integrality->parsed())
            return run_integrality(in_path, out_path, p_integral);
        if (theta->parsed())
            return run_theta(lattice, lattice_dir, degree, diag_bound, out_path, serial);
        if (fj->parsed())
            return run_fj(in_path, index, out_path);
        if (restrict_cmd->parsed())
            return run_restrict(in_path, torsion_n, alpha, beta, out_path);
        if (det_a->parsed())
            return run_det_a(torsion_n, prime);
    } catch (const Error& e) {
        std::cerr << e.to_json().dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["code"] = "InternalError";
        err["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
    return 2;
}
