#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "bnharm/evaluation.hpp"
#include "bnharm/harmonic.hpp"
#include "bnharm/io.hpp"

using namespace bnharm;

namespace {

// Partition/rational strings are validated up front so that malformed
// input is a usage error (exit 2), distinct from domain errors (exit 1).
struct Args {
    int n = 0;
    int N = 0;
    std::string kappa = "1/2";
    std::string lambda, mu, nu;
    std::string which, format = "json", method = "both";
    bool tilde = false;
    bool closed = false;
    int max_n = 4;
};

void print_terms_json(const std::string& key, const Partition& p, int N,
                      const Rational& kappa, const SymPoly& f) {
    std::vector<std::pair<Partition, Rational>> terms(f.terms().begin(),
                                                      f.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return canonical_less(a.first, b.first);
    });
    nlohmann::json j;
    j[key] = p.str();
    j["N"] = N;
    j["kappa"] = to_string(kappa);
    j["terms"] = nlohmann::json::array();
    for (const auto& [part, c] : terms)
        j["terms"].push_back({part.str(), to_string(c)});
    std::cout << j.dump(2) << "\n";
}

bool verify_transition(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (int N = 2; N <= 4; ++N) {
            RatMatrix A = matrix_A(n, N);
            RatMatrix B = matrix_B_by_inversion(n, N);
            if (!A.multiply(B).is_identity()) return false;
            for (const auto& mu : B.row_labels())
                for (const auto& lambda : B.col_labels())
                    if (matrix_B_closed(mu, lambda) != B.at(mu, lambda))
                        return false;
        }
    return true;
}

bool verify_harmonicity(int max_n) {
    for (int n = 1; n <= std::min(max_n, 4); ++n)
        for (int N = 2; N <= 3; ++N)
            for (const Rational& kappa : {Rational(0), Rational(1, 2)})
                for (const auto& mu : enumerate_partitions(n, N, false))
                    if (!check_laph(mu, N, kappa)) return false;
    return true;
}

bool verify_gramdet(int max_n) {
    for (int n = 2; n <= max_n; ++n)
        for (int N = 2; N <= 3; ++N)
            for (const Rational& kappa : {Rational(1, 2), Rational(1)}) {
                Rational closed = gram_det_closed(n, N, kappa);
                if (gram_matrix(n, N, kappa, true).determinant() != closed)
                    return false;
                if (gram_det_unsimplified(n, N, kappa) != closed)
                    return false;
            }
    return true;
}

bool verify_biorthogonality(int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        auto tilde = enumerate_partitions(n, 4, true);
        for (const auto& lambda : tilde)
            for (const auto& mu : tilde)
                if (!biorthogonality_check(lambda, mu, 4, Rational(1, 2)))
                    return false;
    }
    return true;
}

bool verify_eval(int max_n) {
    for (int n = 2; n <= max_n + 2; ++n)
        for (const auto& lambda : enumerate_partitions(n, n, true)) {
            if (!eval_ones(lambda, Rational(1, 3)).match) return false;
            if (!q_degree_check(lambda).ok) return false;
        }
    return true;
}

bool verify_counting(int) {
    for (int n = 0; n <= 12; ++n)
        for (int N = 1; N <= 6; ++N)
            if (count_tilde(n, N) !=
                Integer(enumerate_partitions(n, N, true).size()))
                return false;
    return true;
}

int run_verify(int max_n) {
    bool all = true;
    const std::pair<const char*, bool (*)(int)> suites[] = {
        {"transition", verify_transition},
        {"harmonicity", verify_harmonicity},
        {"gramdet", verify_gramdet},
        {"biorthogonality", verify_biorthogonality},
        {"evaluation", verify_eval},
        {"counting", verify_counting},
    };
    for (const auto& [name, fn] : suites) {
        bool ok = fn(max_n);
        all = all && ok;
        std::cout << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"B_N-invariant spherical harmonics toolkit"};
    app.require_subcommand(1);
    Args a;

    auto* partitions = app.add_subcommand(
        "partitions", "List partitions of n with at most N parts");
    partitions->add_option("--n", a.n)->required();
    partitions->add_option("--N", a.N)->required();
    partitions->add_flag("--tilde", a.tilde,
                         "Only first two parts equal");

    auto* acoeff = app.add_subcommand(
        "acoeff", "Coefficient <lambda|nu> of m_lambda in e_1^j m_nu");
    acoeff->add_option("--lambda", a.lambda)->required();
    acoeff->add_option("--nu", a.nu)->required();

    auto* transition = app.add_subcommand(
        "transition", "Transition matrix between m and m~ bases");
    transition->add_option("--which", a.which)
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    transition->add_option("--n", a.n)->required();
    transition->add_option("--N", a.N)->required();
    transition->add_option("--format", a.format)
        ->check(CLI::IsMember({"json", "csv"}));

    auto* bcoeff = app.add_subcommand(
        "bcoeff", "Closed-formula entry B(mu, lambda)");
    bcoeff->add_option("--mu", a.mu)->required();
    bcoeff->add_option("--lambda", a.lambda)->required();

    auto* harmonic = app.add_subcommand(
        "harmonic", "m-basis expansion of the harmonic h_mu");
    harmonic->add_option("--mu", a.mu)->required();
    harmonic->add_option("--N", a.N)->required();
    harmonic->add_option("--kappa", a.kappa, "Rational, default 1/2");

    auto* gram = app.add_subcommand("gram", "Gram matrix of the h basis");
    gram->add_option("--n", a.n)->required();
    gram->add_option("--N", a.N)->required();
    gram->add_option("--kappa", a.kappa, "Rational, default 1/2");
    gram->add_flag("--tilde", a.tilde, "Restrict labels to P~");

    auto* gramdet = app.add_subcommand(
        "gramdet", "Determinant of the P~ Gram matrix");
    gramdet->add_option("--n", a.n)->required();
    gramdet->add_option("--N", a.N)->required();
    gramdet->add_option("--kappa", a.kappa, "Rational, default 1/2");
    gramdet->add_flag("--closed", a.closed, "Use the closed product formula");

    auto* eval_ones_cmd = app.add_subcommand(
        "eval-ones", "h_lambda at (1,...,1), direct and residue routes");
    eval_ones_cmd->add_option("--lambda", a.lambda)->required();
    eval_ones_cmd->add_option("--kappa", a.kappa, "Rational, default 1/2");
    eval_ones_cmd->add_option("--method", a.method)
        ->check(CLI::IsMember({"direct", "residue", "both"}));

    auto* eval_e1 = app.add_subcommand(
        "eval-e1", "h_lambda at (1,0,...,0)");
    eval_e1->add_option("--lambda", a.lambda)->required();
    eval_e1->add_option("--N", a.N)->required();
    eval_e1->add_option("--kappa", a.kappa, "Rational, default 1/2");

    auto* verify = app.add_subcommand(
        "verify", "Run the invariant suites up to weight max-n");
    verify->add_option("--max-n", a.max_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // Flag-string parsing failures are usage errors.
    Partition lambda, mu, nu;
    Rational kappa;
    try {
        if (!a.lambda.empty()) lambda = Partition::parse(a.lambda);
        if (!a.mu.empty()) mu = Partition::parse(a.mu);
        if (!a.nu.empty()) nu = Partition::parse(a.nu);
        kappa = parse_rational(a.kappa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (partitions->parsed()) {
            for (const auto& p : enumerate_partitions(a.n, a.N, a.tilde))
                std::cout << p.str() << "\n";
        } else if (acoeff->parsed()) {
            std::cout << to_string(e1_coeff(lambda, nu)) << "\n";
        } else if (transition->parsed()) {
            RatMatrix m = a.which == "A" ? matrix_A(a.n, a.N)
                                         : matrix_B_by_inversion(a.n, a.N);
            if (a.format == "csv")
                std::cout << matrix_to_csv(m);
            else
                std::cout << matrix_to_json(m).dump(2) << "\n";
        } else if (bcoeff->parsed()) {
            std::cout << to_string(matrix_B_closed(mu, lambda)) << "\n";
        } else if (harmonic->parsed()) {
            print_terms_json("mu", mu, a.N, kappa,
                             h_expansion(mu, a.N, kappa).coeffs);
        } else if (gram->parsed()) {
            std::cout << matrix_to_json(gram_matrix(a.n, a.N, kappa, a.tilde))
                             .dump(2)
                      << "\n";
        } else if (gramdet->parsed()) {
            Rational det =
                a.closed
                    ? gram_det_closed(a.n, a.N, kappa)
                    : gram_matrix(a.n, a.N, kappa, true).determinant();
            std::cout << to_string(det) << "\n";
        } else if (eval_ones_cmd->parsed()) {
            nlohmann::json j;
            j["lambda"] = lambda.str();
            j["kappa"] = to_string(kappa);
            if (a.method != "residue")
                j["direct"] = to_string(h_at_ones_direct(lambda, kappa));
            if (a.method != "direct")
                j["residue"] = to_string(h_at_ones_residue(lambda, kappa));
            if (a.method == "both")
                j["match"] = j["direct"] == j["residue"];
            std::cout << j.dump(2) << "\n";
        } else if (eval_e1->parsed()) {
            std::cout << to_string(h_at_first_unit(lambda, a.N, kappa))
                      << "\n";
        } else if (verify->parsed()) {
            return run_verify(a.max_n);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
