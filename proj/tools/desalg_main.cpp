// Command-line front end: spectra, minimal polynomials, face listings and
// the verification suite. All algebra lives in the library; this file only
// parses flags and formats output.
//
// Exit codes: 0 success, 1 failed verification, 2 usage error, 3 resource
// bound exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "desalg/bidigare.hpp"
#include "desalg/exact_linalg.hpp"
#include "desalg/json_io.hpp"
#include "desalg/theorems.hpp"

using namespace desalg;

namespace {

constexpr long long kFactorBound = 5040; // integer roots of desk-scale spectra fit here

struct CommonOpts {
    int n = 0;
    std::string alpha_str;
    std::string gamma_file;
    std::string field = "Q";
    std::uint64_t p = 3;
    std::string element;
    std::string claim;
    bool all_claims = false;
    std::string format = "pretty";
    int max_n_override = 0;
};

std::optional<Composition> parse_alpha(const CommonOpts& o) {
    if (o.alpha_str.empty()) return std::nullopt;
    Composition alpha = Composition::parse(o.alpha_str);
    if (alpha.n() != o.n)
        throw std::invalid_argument("--alpha " + o.alpha_str + " is not a composition of n = " +
                                    std::to_string(o.n));
    return alpha;
}

std::optional<WeightVector> parse_gamma(const CommonOpts& o) {
    if (o.gamma_file.empty()) return std::nullopt;
    std::ifstream in(o.gamma_file);
    if (!in) throw std::invalid_argument("cannot open weight file " + o.gamma_file);
    ordered_json j;
    in >> j;
    return weight_vector_from_json(o.n, j);
}

void check_bound(int n, int def_max, int hard_max, int override_n, const std::string& what) {
    int limit = def_max;
    if (override_n > 0) limit = std::min(override_n, hard_max);
    if (n > limit)
        throw BoundsError(what + " is bounded at n <= " + std::to_string(limit) +
                          " (requested n = " + std::to_string(n) + ")");
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// ---- spectrum ----------------------------------------------------------

template <class V>
ordered_json counted_json(const std::vector<V>& values, const std::vector<V>& distinct) {
    ordered_json arr = ordered_json::array();
    for (const V& v : distinct) {
        long long count = 0;
        for (const V& x : values)
            if (x == v) ++count;
        ordered_json entry;
        if constexpr (std::is_same_v<V, long long>)
            entry["value"] = std::to_string(v);
        else
            entry["value"] = v.str();
        entry["count"] = count;
        arr.push_back(entry);
    }
    return arr;
}

template <class V>
void print_counted(std::ostream& os, const std::string& head, const std::vector<V>& values,
                   const std::vector<V>& distinct) {
    os << head << " {";
    for (size_t i = 0; i < distinct.size(); ++i) {
        if (i) os << ",";
        if constexpr (std::is_same_v<V, long long>)
            os << distinct[i];
        else
            os << distinct[i].str();
    }
    os << "}\n";
    for (const V& v : distinct) {
        long long count = 0;
        for (const V& x : values)
            if (x == v) ++count;
        if constexpr (std::is_same_v<V, long long>)
            os << "  value " << v << ": " << count << " faces\n";
        else
            os << "  value " << v.str() << ": " << count << " faces\n";
    }
}

template <class V>
void print_counted_csv(std::ostream& os, const std::string& kind, const std::vector<V>& values,
                       const std::vector<V>& distinct) {
    for (const V& v : distinct) {
        long long count = 0;
        for (const V& x : values)
            if (x == v) ++count;
        if constexpr (std::is_same_v<V, long long>)
            os << kind << "," << v << "," << count << "\n";
        else
            os << kind << "," << csv_quote(v.str()) << "," << count << "\n";
    }
}

int cmd_spectrum(const CommonOpts& o) {
    check_n(o.n);
    check_bound(o.n, 8, 9, o.max_n_override, "spectrum");
    const auto alpha = parse_alpha(o);
    const auto gamma = parse_gamma(o);
    if (!alpha && !gamma) throw std::invalid_argument("spectrum: need --alpha or --gamma");

    if (alpha) {
        const auto& values = knapsack_values(*alpha);
        const auto signed_values = signed_knapsack_values(*alpha);
        const auto spec = knapsack_spectrum(*alpha);
        const auto sspec = signed_spectrum(*alpha);
        if (o.format == "json") {
            ordered_json j;
            j["n"] = o.n;
            j["alpha"] = alpha->str();
            j["knapsack"] = counted_json(values, spec);
            j["signed"] = counted_json(signed_values, sspec);
            std::cout << j.dump() << "\n";
        } else if (o.format == "csv") {
            std::cout << "kind,value,count\n";
            print_counted_csv(std::cout, "knapsack", values, spec);
            print_counted_csv(std::cout, "signed", signed_values, sspec);
        } else {
            print_counted(std::cout,
                          "knapsack spectrum of alpha=" + alpha->str() +
                              " (n=" + std::to_string(o.n) + "):",
                          values, spec);
            print_counted(std::cout, "signed spectrum:", signed_values, sspec);
        }
    } else {
        const auto values = weighted_knapsack_values(*gamma);
        const auto signed_values = weighted_signed_values(*gamma);
        const auto spec = weighted_spectrum(*gamma);
        const auto sspec = weighted_signed_spectrum(*gamma);
        if (o.format == "json") {
            ordered_json j;
            j["n"] = o.n;
            ordered_json gj = ordered_json::object();
            for (const auto& [c, w] : gamma->weights) gj[c.str()] = w.str();
            j["gamma"] = gj;
            j["knapsack"] = counted_json(values, spec);
            j["signed"] = counted_json(signed_values, sspec);
            std::cout << j.dump() << "\n";
        } else if (o.format == "csv") {
            std::cout << "kind,value,count\n";
            print_counted_csv(std::cout, "knapsack", values, spec);
            print_counted_csv(std::cout, "signed", signed_values, sspec);
        } else {
            print_counted(std::cout, "weighted knapsack spectrum (n=" + std::to_string(o.n) + "):",
                          values, spec);
            print_counted(std::cout, "weighted signed spectrum:", signed_values, sspec);
        }
    }
    return 0;
}

// ---- minpoly -----------------------------------------------------------

template <class K>
GroupElem<K> build_element(const std::string& sel, int n, const std::optional<Composition>& alpha,
                           const std::optional<GroupElem<K>>& bgamma) {
    const auto need_alpha = [&]() -> const Composition& {
        if (!alpha) throw std::invalid_argument("element " + sel + " requires --alpha");
        return *alpha;
    };
    const auto need_gamma = [&]() -> const GroupElem<K>& {
        if (!bgamma) throw std::invalid_argument("element " + sel + " requires --gamma");
        return *bgamma;
    };
    const GroupElem<K> w0 = GroupElem<K>::longest_word_elem(n);
    if (sel == "Balpha") return basis_B_comp<K>(need_alpha());
    if (sel == "w0Balpha") return w0 * basis_B_comp<K>(need_alpha());
    if (sel == "Balphaw0") return basis_B_comp<K>(need_alpha()) * w0;
    if (sel == "T1") return top_to_random<K>(n, 1);
    if (sel == "w0T1") return w0 * top_to_random<K>(n, 1);
    if (sel == "T1w0") return top_to_random<K>(n, 1) * w0;
    if (sel == "Bgamma") return need_gamma();
    if (sel == "w0Bgamma") return w0 * need_gamma();
    throw std::invalid_argument("unknown element selector '" + sel + "'");
}

int cmd_minpoly(const CommonOpts& o) {
    check_n(o.n);
    check_bound(o.n, 6, 7, o.max_n_override, "minpoly");
    const auto alpha = parse_alpha(o);
    const auto gamma = parse_gamma(o);
    if (o.element.empty()) throw std::invalid_argument("minpoly: need --element");

    if (o.field == "Q") {
        std::optional<GroupElem<Rat>> bg;
        if (gamma) bg = weighted_B(*gamma);
        const GroupElem<Rat> a = build_element<Rat>(o.element, o.n, alpha, bg);
        const Polynomial<Rat> mu = krylov_min_poly(a);
        const auto factored = factored_str(mu, kFactorBound);
        if (o.format == "json") {
            ordered_json j;
            j["n"] = o.n;
            j["element"] = o.element;
            j["field"] = "Q";
            j["degree"] = mu.degree();
            j["coeffs"] = poly_to_json(mu);
            if (factored) j["factored"] = *factored;
            std::cout << j.dump() << "\n";
        } else if (o.format == "csv") {
            std::cout << "degree," << mu.degree() << "\n";
            for (int i = 0; i <= mu.degree(); ++i)
                std::cout << "coeff_" << i << "," << mu.coeff(i).str() << "\n";
        } else {
            std::cout << "mu(" << o.element << ") over Q, n=" << o.n << ":\n";
            std::cout << "  coefficients (low to high):";
            for (int i = 0; i <= mu.degree(); ++i) std::cout << " " << mu.coeff(i).str();
            std::cout << "\n";
            if (factored) std::cout << "  factored: " << *factored << "\n";
        }
    } else if (o.field == "Fp") {
        if (gamma) throw std::invalid_argument("weighted elements require --field Q");
        if (!is_prime(o.p)) throw std::invalid_argument("--p must be prime");
        FpScope scope(o.p);
        const GroupElem<Fp> a = build_element<Fp>(o.element, o.n, alpha, std::nullopt);
        const Polynomial<Fp> mu = krylov_min_poly(a);
        if (o.format == "json") {
            ordered_json j;
            j["n"] = o.n;
            j["element"] = o.element;
            j["field"] = "Fp";
            j["p"] = o.p;
            j["degree"] = mu.degree();
            j["coeffs"] = poly_to_json(mu);
            std::cout << j.dump() << "\n";
        } else if (o.format == "csv") {
            std::cout << "degree," << mu.degree() << "\n";
            for (int i = 0; i <= mu.degree(); ++i)
                std::cout << "coeff_" << i << "," << mu.coeff(i).str() << "\n";
        } else {
            std::cout << "mu(" << o.element << ") over F_" << o.p << ", n=" << o.n << ":\n";
            std::cout << "  coefficients (low to high):";
            for (int i = 0; i <= mu.degree(); ++i) std::cout << " " << mu.coeff(i).str();
            std::cout << "\n";
        }
    } else {
        throw std::invalid_argument("--field must be Q or Fp");
    }
    return 0;
}

// ---- verify ------------------------------------------------------------

int cmd_verify(const CommonOpts& o) {
    check_n(o.n);
    if (!o.all_claims && o.claim.empty())
        throw std::invalid_argument("verify: need --claim NAME or --all");
    if (!is_prime(o.p)) throw std::invalid_argument("--p must be prime");
    SuiteOptions opts;
    opts.n = o.n;
    opts.claim = o.all_claims ? "all" : o.claim;
    opts.max_n_override = o.max_n_override;
    opts.p = o.p;
    opts.gamma = parse_gamma(o);

    bool all_pass = true;
    run_suite(opts, [&](const VerificationReport& rep) {
        if (!rep.pass) all_pass = false;
        if (o.format == "pretty") {
            std::cout << (rep.pass ? "ok   " : "FAIL ") << rep.claim << " "
                      << rep.params.dump() << " (" << rep.millis << " ms)";
            if (!rep.witness.empty()) std::cout << " witness: " << rep.witness;
            std::cout << "\n";
        } else {
            std::cout << rep.to_json().dump() << "\n";
        }
    });
    return all_pass ? 0 : 1;
}

// ---- faces -------------------------------------------------------------

int cmd_faces(const CommonOpts& o) {
    check_n(o.n);
    check_bound(o.n, 8, 9, o.max_n_override, "faces");
    const auto alpha = parse_alpha(o);
    const FaceBasis& basis = FaceBasis::get(o.n);
    const std::vector<long long>* values = nullptr;
    std::vector<long long> signed_values;
    if (alpha) {
        values = &knapsack_values(*alpha);
        signed_values = signed_knapsack_values(*alpha);
    }

    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (int i = 0; i < basis.size(); ++i) {
            const Face& f = basis.face(i);
            ordered_json row;
            row["face"] = f.str();
            row["type"] = f.type().str();
            row["length"] = f.length();
            if (alpha) {
                row["n_alpha"] = (*values)[i];
                row["signed"] = signed_values[i];
            }
            arr.push_back(row);
        }
        std::cout << arr.dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << (alpha ? "face,type,length,n_alpha,signed\n" : "face,type,length\n");
        for (int i = 0; i < basis.size(); ++i) {
            const Face& f = basis.face(i);
            std::cout << csv_quote(f.str()) << "," << csv_quote(f.type().str()) << ","
                      << f.length();
            if (alpha) std::cout << "," << (*values)[i] << "," << signed_values[i];
            std::cout << "\n";
        }
    } else {
        for (int i = 0; i < basis.size(); ++i) {
            const Face& f = basis.face(i);
            std::cout << f.str() << "  type=" << f.type().str() << "  len=" << f.length();
            if (alpha)
                std::cout << "  n=" << (*values)[i] << "  sn=" << signed_values[i];
            std::cout << "\n";
        }
    }
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_alpha = true, bool with_gamma = true) {
    cmd->add_option("--n", o.n, "ambient size n")->required();
    if (with_alpha) cmd->add_option("--alpha", o.alpha_str, "composition of n, e.g. 2,2");
    if (with_gamma) cmd->add_option("--gamma", o.gamma_file, "JSON weight file");
    cmd->add_option("--format", o.format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--max-n-override", o.max_n_override,
                    "raise the default desk-scale bound (up to a hard cap)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact descent-algebra, face-monoid and shuffle-spectrum computations"};
    app.require_subcommand(1);

    CommonOpts so, mo, vo, fo;

    CLI::App* spectrum = app.add_subcommand("spectrum", "knapsack and signed spectra");
    add_common(spectrum, so);

    CLI::App* minpoly = app.add_subcommand("minpoly", "minimal polynomial of a shuffle element");
    add_common(minpoly, mo);
    minpoly->add_option("--element", mo.element,
                        "Balpha|w0Balpha|Balphaw0|T1|w0T1|T1w0|Bgamma|w0Bgamma");
    minpoly->add_option("--field", mo.field, "Q|Fp")->check(CLI::IsMember({"Q", "Fp"}));
    minpoly->add_option("--p", mo.p, "prime modulus for Fp");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify, vo, /*with_alpha=*/false, /*with_gamma=*/true);
    verify->add_option("--claim", vo.claim, "claim name (see README)");
    verify->add_flag("--all", vo.all_claims, "run every claim in range");
    verify->add_option("--p", vo.p, "prime modulus for the finite-field spot check");

    CLI::App* faces = app.add_subcommand("faces", "list set compositions in canonical order");
    add_common(faces, fo, /*with_alpha=*/true, /*with_gamma=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(so);
        if (minpoly->parsed()) return cmd_minpoly(mo);
        if (verify->parsed()) return cmd_verify(vo);
        if (faces->parsed()) return cmd_faces(fo);
    } catch (const BoundsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
