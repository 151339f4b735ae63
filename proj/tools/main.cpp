#include "csl_lab/enumerate.hpp"
#include "csl_lab/json_io.hpp"
#include "csl_lab/presets.hpp"
#include "csl_lab/ssl.hpp"
#include "csl_lab/theorems.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace csl_lab;
using nlohmann::json;

constexpr int kUsageError = 1;
constexpr int kCheckFailed = 2;

// Evaluation is sequential; the env var caps what any parallel section may
// use and is echoed in the output header.
int thread_cap() {
    const char* s = std::getenv("CSL_LAB_THREADS");
    if (!s || !*s) return 1;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 1) return 1;
    return static_cast<int>(std::min(v, 64L));
}

bool is_json_path(const std::string& spec) {
    return spec.size() > 5 && spec.compare(spec.size() - 5, 5, ".json") == 0;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

std::string joined(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

Lattice load_lattice(const std::string& spec) {
    if (is_json_path(spec)) return lattice_from_json(read_json_file(spec));
    auto l = lattice_preset(spec);
    if (!l)
        throw std::runtime_error("unknown lattice '" + spec +
                                 "' (presets: " + joined(lattice_preset_names()) + ")");
    return *l;
}

Isometry load_isometry(const std::string& spec) {
    if (is_json_path(spec)) return isometry_from_json(read_json_file(spec));
    auto r = isometry_preset(spec);
    if (!r)
        throw std::runtime_error("unknown isometry '" + spec +
                                 "' (presets: " + joined(isometry_preset_names()) + ")");
    return *r;
}

json envelope(const std::string& command, unsigned long long seed) {
    json j;
    j["command"] = command;
    j["seed"] = seed;
    j["threads"] = thread_cap();
    return j;
}

void emit_json(const json& j, const std::string& output) {
    if (output.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(output, j);
}

void emit_text(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write '" + output + "'");
        out << text;
    }
}

std::vector<std::pair<Int, int>> factor(Int n) {
    std::vector<std::pair<Int, int>> fs;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) fs.emplace_back(p, e);
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

std::vector<Int> parse_prime_list(const std::string& arg) {
    std::vector<Int> ps;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        ps.push_back(parse_int(tok));
    }
    if (ps.empty()) throw std::runtime_error("empty prime list '" + arg + "'");
    return ps;
}

json witnesses_json(const std::vector<Witness>& ws) {
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(to_json(w));
    return arr;
}

int run_sigma(const std::string& lattice_arg, const std::string& isometry_arg,
              unsigned long long seed, const std::string& output) {
    Lattice l = load_lattice(lattice_arg);
    Isometry r = load_isometry(isometry_arg);
    if (l.dim() != r.dim())
        throw std::runtime_error("lattice and isometry dimensions differ");
    if (!is_coincidence(l, r)) {
        std::cerr << "not a coincidence isometry of this lattice\n";
        return kUsageError;
    }
    json out = envelope("sigma", seed);
    out["lattice_arg"] = lattice_arg;
    out.update(to_json(csl(l, r)));
    emit_json(out, output);
    return 0;
}

int run_enumerate(const std::string& lattice_arg, long long max_sigma,
                  long long max_den, unsigned long long seed,
                  const std::string& output) {
    Lattice l = load_lattice(lattice_arg);
    EnumerationResult e;
    if (max_den > 0) {
        EnumerateOptions opts;
        opts.den_limit = max_den;
        e = enumerate_brute(l, max_den, opts);
    } else {
        e = enumerate_auto(l, max_sigma);
    }
    json out = envelope("enumerate", seed);
    out["lattice_arg"] = lattice_arg;
    out["classes"] = e.records.size();
    out.update(to_json(e));
    emit_json(out, output);
    return 0;
}

int run_count(const std::string& lattice_arg, long long max_index,
              unsigned long long seed, const std::string& output,
              const std::string& format) {
    Lattice l = load_lattice(lattice_arg);
    MultiplicityTable t = multiplicity_table(enumerate_auto(l, max_index));
    if (format == "csv") {
        emit_text(csv_multiplicity(t), output);
        return 0;
    }
    json out = envelope("count", seed);
    out["lattice_arg"] = lattice_arg;
    out.update(to_json(t));
    emit_json(out, output);
    return 0;
}

int run_series(const std::string& lattice_arg, long long terms,
               unsigned long long seed, const std::string& output) {
    Lattice l = load_lattice(lattice_arg);
    MultiplicityTable t = multiplicity_table(enumerate_auto(l, terms));
    DirichletData d = dirichlet_coefficients(t, Multiplicity::f);
    json out = envelope("series", seed);
    out["lattice_arg"] = lattice_arg;
    out["series"] = to_json(d);
    bool failed = false;
    if (l == Lattice::standard(2)) {
        DirichletData ep = euler_product_square(terms);
        out["euler_product"] = to_json(ep);
        bool match = d.coefficients == ep.coefficients;
        out["match"] = match;
        failed = !match;
    } else {
        out["euler_product"] = nullptr;
    }
    emit_json(out, output);
    return failed ? kCheckFailed : 0;
}

int finish_check(json& out, bool failed, const std::string& output) {
    out["passed"] = !failed;
    emit_json(out, output);
    return failed ? kCheckFailed : 0;
}

int check_sweep(const std::string& name, const Lattice& l, long long range,
                json& out, const std::string& output) {
    PairSweepReport rep = sweep_pairs(enumerate_auto(l, range));
    out["pairs_tested"] = rep.pairs;
    out["coprime_pairs"] = rep.coprime_pairs;
    out["examples"] = json::array();
    for (const auto& ex : rep.examples) out["examples"].push_back(ex);
    long long failures = 0;
    if (name == "lemma1") {
        failures = rep.divisibility_failed;
    } else if (name == "thm2") {
        failures = rep.product_index_failed;
    } else if (name == "cor3") {
        failures = rep.intersection_failed;
    } else if (name == "tower") {
        out["tower_failed"] = rep.tower_failed;
        out["collapse_failed"] = rep.collapse_failed;
        failures = rep.tower_failed + rep.collapse_failed;
    } else if (name == "lemma6") {
        out["first_identity_failed"] = rep.recovery_first_failed;
        out["second_m_failed"] = rep.recovery_second_m_failed;
        out["second_n_failed"] = rep.recovery_second_n_failed;
        const bool m_uniform = rep.recovery_second_m_failed == 0;
        const bool n_uniform = rep.recovery_second_n_failed == 0;
        out["uniform_reading"] = m_uniform && n_uniform ? "both"
                                 : m_uniform            ? "m"
                                 : n_uniform            ? "n"
                                                        : "none";
        failures = rep.recovery_first_failed + rep.recovery_second_m_failed;
    }
    out["failures"] = failures;
    return finish_check(out, failures > 0, output);
}

int check_csl_decomposition(const Lattice& l, long long range, json& out,
                            const std::string& output) {
    EnumerationResult pool = enumerate_auto(l, range);
    MultiplicityTable t = multiplicity_table(pool);
    auto wit = check_multiplicative(t, Multiplicity::f);
    json undecomposable = json::array();
    long long tested = 0;
    long long unique_violations = 0;
    for (const auto& rec : pool.records) {
        if (rec.sigma <= 1 || factor(rec.sigma).size() < 2) continue;
        ++tested;
        try {
            if (!decompose_csl(l, rec, pool)) undecomposable.push_back(to_json(rec.sigma));
        } catch (const std::logic_error&) {
            ++unique_violations;
        }
    }
    bool consistent = wit.empty() == undecomposable.empty();
    out["f_multiplicative"] = wit.empty();
    out["f_witnesses"] = witnesses_json(wit);
    out["csls_tested"] = tested;
    out["undecomposable"] = undecomposable;
    out["unique_violations"] = unique_violations;
    out["consistent"] = consistent;
    out["failures"] = unique_violations + (consistent ? 0 : 1);
    return finish_check(out, !consistent || unique_violations > 0, output);
}

int check_pi_decomposition(const Lattice& l, long long range, json& out,
                           const std::string& output) {
    EnumerationResult pool = enumerate_auto(l, range);
    MultiplicityTable t = multiplicity_table(pool);
    auto wit = check_multiplicative(t, Multiplicity::f_iso);
    json failures = json::array();
    long long tested = 0;
    for (const auto& rec : pool.records) {
        if (rec.sigma <= 1) continue;
        auto fs = factor(rec.sigma);
        if (fs.size() < 2) continue;
        std::vector<Int> primes;
        for (const auto& [p, e] : fs) primes.push_back(p);
        std::sort(primes.begin(), primes.end());
        do {
            ++tested;
            if (!pi_decompose(l, rec.isometry, primes, pool)) {
                json f;
                f["sigma"] = to_json(rec.sigma);
                f["ordering"] = json::array();
                for (const auto& p : primes) f["ordering"].push_back(to_json(p));
                failures.push_back(f);
            }
        } while (std::next_permutation(primes.begin(), primes.end()));
    }
    out["f_iso_multiplicative"] = wit.empty();
    out["f_iso_witnesses"] = witnesses_json(wit);
    out["orderings_tested"] = tested;
    out["undecomposable"] = failures;
    bool failed = wit.empty() && !failures.empty();
    out["failures"] = failed ? failures.size() : 0;
    return finish_check(out, failed, output);
}

int check_iso_implies_csl(const Lattice& l, long long range, json& out,
                          const std::string& output) {
    MultiplicityTable t = multiplicity_table(enumerate_auto(l, range));
    auto wit_f = check_multiplicative(t, Multiplicity::f);
    auto wit_iso = check_multiplicative(t, Multiplicity::f_iso);
    bool violated = wit_iso.empty() && !wit_f.empty();
    out["f_iso_multiplicative"] = wit_iso.empty();
    out["f_multiplicative"] = wit_f.empty();
    out["f_iso_witnesses"] = witnesses_json(wit_iso);
    out["f_witnesses"] = witnesses_json(wit_f);
    out["failures"] = violated ? 1 : 0;
    return finish_check(out, violated, output);
}

int check_open_question(bool lattice_given, const std::string& lattice_arg,
                        long long range, json& out, const std::string& output) {
    std::vector<Lattice> family;
    if (lattice_given) {
        family.push_back(load_lattice(lattice_arg));
    } else {
        for (const auto& name : lattice_preset_names())
            family.push_back(*lattice_preset(name));
    }
    auto entries = open_question_experiment(family, range);
    json arr = json::array();
    bool converse_found = false;
    for (const auto& e : entries) {
        arr.push_back(to_json(e));
        converse_found = converse_found || e.converse_candidate;
    }
    out["entries"] = arr;
    out["converse_candidate_found"] = converse_found;
    out["failures"] = 0;
    return finish_check(out, false, output);
}

int run_check(const std::string& name, bool lattice_given,
              const std::string& lattice_arg, long long range,
              unsigned long long seed, const std::string& output) {
    json out = envelope("check", seed);
    out["theorem"] = name;
    out["lattice"] = name == "openq" && !lattice_given ? "all" : lattice_arg;
    out["range"] = range;
    if (name == "openq")
        return check_open_question(lattice_given, lattice_arg, range, out, output);
    Lattice l = load_lattice(lattice_arg);
    if (name == "thm7") return check_csl_decomposition(l, range, out, output);
    if (name == "thm8") return check_pi_decomposition(l, range, out, output);
    if (name == "thm9") return check_iso_implies_csl(l, range, out, output);
    return check_sweep(name, l, range, out, output);
}

int run_decompose(const std::string& lattice_arg, const std::string& isometry_arg,
                  const std::string& pi_arg, unsigned long long seed,
                  const std::string& output) {
    Lattice l = load_lattice(lattice_arg);
    Isometry r = load_isometry(isometry_arg);
    if (l.dim() != r.dim())
        throw std::runtime_error("lattice and isometry dimensions differ");
    if (!is_coincidence(l, r)) {
        std::cerr << "not a coincidence isometry of this lattice\n";
        return kUsageError;
    }
    CoincidenceRecord rec = csl(l, r);
    EnumerationResult pool = enumerate_auto(l, rec.sigma);
    json out = envelope("decompose", seed);
    out["lattice_arg"] = lattice_arg;
    out["sigma"] = to_json(rec.sigma);
    if (pi_arg.empty()) {
        auto d = decompose_csl(l, rec, pool);
        out["found"] = d.has_value();
        if (d) out["decomposition"] = to_json(*d);
    } else {
        auto d = pi_decompose(l, r, parse_prime_list(pi_arg), pool);
        out["found"] = d.has_value();
        if (d) out["decomposition"] = to_json(*d);
    }
    emit_json(out, output);
    return 0;
}

int run_ssl(const std::string& mode, const std::string& lattice_arg,
            long long max_index, unsigned long long seed,
            const std::string& output, const std::string& format) {
    Lattice l = load_lattice(lattice_arg);
    SublatticeOptions opts;
    opts.max_index = max_index;
    SSLTable t = ssl_table(l, max_index, opts);
    if (mode == "count") {
        if (format == "csv") {
            emit_text(csv_ssl(t), output);
            return 0;
        }
        json out = envelope("ssl", seed);
        out["lattice_arg"] = lattice_arg;
        out.update(to_json(t));
        emit_json(out, output);
        return 0;
    }
    auto wit = check_multiplicative(t);
    auto sup = check_supermultiplicative(t);
    json out = envelope("ssl", seed);
    out["lattice_arg"] = lattice_arg;
    out["max_index"] = to_json(t.max_index);
    out["g_multiplicative"] = wit.empty();
    out["witnesses"] = witnesses_json(wit);
    out["supermultiplicativity_violation"] = sup ? to_json(*sup) : json(nullptr);
    return finish_check(out, sup.has_value(), output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coincidence site lattice toolkit"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string output;
    std::string format = "json";
    unsigned long long seed = 0;
    app.add_option("--output", output, "write the result to this file instead of stdout");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "run seed, recorded in the output header");

    std::string lattice_arg = "square";
    std::string isometry_arg;
    std::string pi_arg;
    std::string check_name;
    std::string ssl_mode;
    long long max_sigma = 50;
    long long max_den = 0;
    long long max_index = 100;
    long long terms = 100;
    long long range = 50;

    const std::string lattice_help = "lattice preset name or path to a .json file";
    const std::string isometry_help = "isometry preset name or path to a .json file";

    auto* sc_sigma = app.add_subcommand(
        "sigma", "coincidence index and intersection lattice of one isometry");
    sc_sigma->add_option("--lattice", lattice_arg, lattice_help);
    sc_sigma->add_option("--isometry", isometry_arg, isometry_help)->required();

    auto* sc_enum = app.add_subcommand(
        "enumerate", "all coincidence classes up to an index bound");
    sc_enum->add_option("--lattice", lattice_arg, lattice_help);
    sc_enum->add_option("--max-sigma", max_sigma, "largest coincidence index");
    sc_enum->add_option("--max-den", max_den,
                        "use the generic denominator-bounded search instead");

    auto* sc_count = app.add_subcommand(
        "count", "multiplicity table f_iso, f_rot, f up to an index bound");
    sc_count->add_option("--lattice", lattice_arg, lattice_help);
    sc_count->add_option("--max-index", max_index, "largest index");

    auto* sc_series = app.add_subcommand(
        "series", "Dirichlet coefficients of f, with the closed product for Z^2");
    sc_series->add_option("--lattice", lattice_arg, lattice_help);
    sc_series->add_option("--terms", terms, "truncation index");

    auto* sc_check = app.add_subcommand(
        "check", "verify an identity over all enumerated pairs in range");
    sc_check
        ->add_option("name", check_name,
                     "one of lemma1, thm2, cor3, tower, lemma6, thm7, thm8, "
                     "thm9, openq")
        ->required()
        ->check(CLI::IsMember({"lemma1", "thm2", "cor3", "tower", "lemma6",
                               "thm7", "thm8", "thm9", "openq"}));
    auto* check_lattice_opt =
        sc_check->add_option("--lattice", lattice_arg, lattice_help);
    sc_check->add_option("--range", range, "largest coincidence index swept");

    auto* sc_dec = app.add_subcommand(
        "decompose", "split a coincidence into prime-power pieces");
    sc_dec->add_option("--lattice", lattice_arg, lattice_help);
    sc_dec->add_option("--isometry", isometry_arg, isometry_help)->required();
    sc_dec->add_option("--pi", pi_arg,
                       "comma-separated prime ordering for a factor chain; "
                       "default splits the intersection lattice instead");

    auto* sc_ssl = app.add_subcommand(
        "ssl", "similar sublattice counts g(m) and their multiplicativity");
    sc_ssl->add_option("mode", ssl_mode, "count or check")
        ->required()
        ->check(CLI::IsMember({"count", "check"}));
    sc_ssl->add_option("--lattice", lattice_arg, lattice_help);
    sc_ssl->add_option("--max-index", max_index, "largest index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    const bool csv_ok = sc_count->parsed() || (sc_ssl->parsed() && ssl_mode == "count");
    if (format == "csv" && !csv_ok) {
        std::cerr << "csv output is only defined for count and ssl count\n";
        return kUsageError;
    }

    try {
        if (sc_sigma->parsed())
            return run_sigma(lattice_arg, isometry_arg, seed, output);
        if (sc_enum->parsed())
            return run_enumerate(lattice_arg, max_sigma, max_den, seed, output);
        if (sc_count->parsed())
            return run_count(lattice_arg, max_index, seed, output, format);
        if (sc_series->parsed())
            return run_series(lattice_arg, terms, seed, output);
        if (sc_check->parsed())
            return run_check(check_name, check_lattice_opt->count() > 0,
                             lattice_arg, range, seed, output);
        if (sc_dec->parsed())
            return run_decompose(lattice_arg, isometry_arg, pi_arg, seed, output);
        if (sc_ssl->parsed())
            return run_ssl(ssl_mode, lattice_arg, max_index, seed, output, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
