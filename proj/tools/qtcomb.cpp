#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qtcomb/gen_trees.hpp"
#include "qtcomb/identity_suite.hpp"
#include "qtcomb/json_io.hpp"
#include "qtcomb/lattice_paths.hpp"
#include "qtcomb/perm_stats.hpp"
#include "qtcomb/schedules.hpp"

namespace {

using namespace qtcomb;

constexpr int kMaxEnumerateN = 8;
constexpr int kMaxStatsTableN = 8;
constexpr int kMaxScheduleListN = 9;
constexpr int kMaxBijectionTableN = 8;

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw CLI::ValidationError("--output", "cannot open " + path);
        stream = &file;
    }
};

std::vector<int> parse_digits(const std::string& text, const char* what) {
    std::vector<int> out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '9')
            throw CLI::ValidationError(what, std::string("expected digits, got '") + ch + "'");
        out.push_back(ch - '0');
    }
    return out;
}

Permutation parse_plain_permutation(const std::string& text, const char* what) {
    const Permutation sigma = parse_digits(text, what);
    if (!is_permutation(sigma))
        throw CLI::ValidationError(what, text + " is not a permutation of 1..n");
    return sigma;
}

DecoratedPermutation parse_decorated(const std::string& text, const char* what) {
    try {
        return DecoratedPermutation::parse(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(what, e.what());
    }
}

std::string csv_quote(const std::string& text) {
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string schedule_str(const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
    }
    return out;
}

class Progress {
  public:
    explicit Progress(bool enabled) : enabled_(enabled) {}

    void tick(const char* what) {
        if (!enabled_) return;
        if (++count_ % 100000 == 0)
            std::cerr << "progress: " << count_ << ' ' << what << '\n';
    }

    void done(const char* what) const {
        if (enabled_) std::cerr << "progress: " << count_ << ' ' << what << " total\n";
    }

  private:
    bool enabled_;
    std::uint64_t count_ = 0;
};

int cmd_enumerate(int n, int k, const std::string& format, OutputTarget& target, bool progress) {
    std::ostream& out = *target.stream;
    Progress counter(progress);
    if (format == "csv") {
        out << "area_word,labels,dv,area,dinv,diagonal_word\n";
        for_each_decorated(n, k, [&](const DecoratedLabelledPath& p) {
            std::string word, labels, dv;
            for (int a : p.path.area_word) word += static_cast<char>('0' + a);
            for (int w : p.labels) labels += static_cast<char>('0' + w);
            for (std::size_t i = 0; i < p.dv.size(); ++i) {
                if (i) dv += ' ';
                dv += std::to_string(p.dv[i]);
            }
            out << word << ',' << labels << ',' << csv_quote(dv) << ',' << area(p) << ','
                << dinv(p) << ',' << csv_quote(diagonal_word(p).str()) << '\n';
            counter.tick("objects");
        });
    } else {
        for_each_decorated(n, k, [&](const DecoratedLabelledPath& p) {
            out << path_json(p).dump() << '\n';
            counter.tick("objects");
        });
    }
    counter.done("objects");
    return 0;
}

int cmd_stats_table(int n, const std::string& format, OutputTarget& target) {
    std::ostream& out = *target.stream;
    if (format == "json") {
        for_each_permutation(n, [&](const Permutation& sigma) {
            Json row;
            row["sigma"] = perm_str(sigma);
            row["inv3"] = inv3(sigma);
            row["monot"] = monot(sigma);
            row["maj"] = maj(sigma);
            row["revmaj"] = revmaj(sigma);
            row["inv"] = inv(sigma);
            row["ihat"] = chebikin_ihat(sigma);
            row["c31_2"] = count_31_2(sigma);
            row["alternating"] = is_alternating(sigma);
            out << row.dump() << '\n';
        });
    } else {
        out << "sigma,inv3,monot,maj,revmaj,inv,ihat,c31_2,alternating\n";
        for_each_permutation(n, [&](const Permutation& sigma) {
            out << perm_str(sigma) << ',' << inv3(sigma) << ',' << monot(sigma) << ','
                << maj(sigma) << ',' << revmaj(sigma) << ',' << inv(sigma) << ','
                << chebikin_ihat(sigma) << ',' << count_31_2(sigma) << ','
                << (is_alternating(sigma) ? 1 : 0) << '\n';
        });
    }
    return 0;
}

int cmd_stats_perm(const DecoratedPermutation& tau, const std::string& format,
                   OutputTarget& target) {
    std::ostream& out = *target.stream;
    const auto s = sched(tau);
    Json row;
    row["tau"] = tau.str();
    row["n"] = tau.size();
    row["dec"] = tau.dec_count();
    row["revmaj"] = revmaj(tau);
    row["schedule"] = s;
    row["schedule_1n"] = has_schedule_1n(tau);
    if (tau.dec_count() == 0) {
        row["inv3"] = inv3(tau.values);
        row["monot"] = monot(tau.values);
        row["maj"] = maj(tau.values);
        row["inv"] = inv(tau.values);
        row["ihat"] = chebikin_ihat(tau.values);
        row["c31_2"] = count_31_2(tau.values);
        row["alternating"] = is_alternating(tau.values);
    }
    if (format == "json") {
        out << row.dump(2) << '\n';
    } else {
        for (const auto& [key, value] : row.items()) {
            if (key == "schedule")
                out << key << ": " << schedule_str(s) << '\n';
            else if (value.is_string())
                out << key << ": " << value.get<std::string>() << '\n';
            else
                out << key << ": " << value.dump() << '\n';
        }
    }
    return 0;
}

int cmd_stats_path(const std::string& word_text, const std::string& labels_text,
                   const std::string& dv_text, const std::string& format, OutputTarget& target) {
    DecoratedLabelledPath p;
    p.path.area_word = parse_digits(word_text, "--area-word");
    p.labels = parse_digits(labels_text, "--labels");
    p.dv = parse_digits(dv_text, "--dv");
    if (!p.valid())
        throw CLI::ValidationError("stats", "not a valid decorated labelled path");
    std::ostream& out = *target.stream;
    const Json row = path_json(p);
    if (format == "json") {
        out << row.dump(2) << '\n';
    } else {
        for (const auto& [key, value] : row.items()) {
            if (value.is_string())
                out << key << ": " << value.get<std::string>() << '\n';
            else
                out << key << ": " << value.dump() << '\n';
        }
        std::string cv_text;
        for (int v : contractible_valleys(p.path, p.labels)) {
            if (!cv_text.empty()) cv_text += ' ';
            cv_text += std::to_string(v);
        }
        out << "contractible_valleys: " << cv_text << '\n';
    }
    return 0;
}

int cmd_schedules_list(int n, std::optional<int> k, const std::string& format,
                       OutputTarget& target) {
    std::ostream& out = *target.stream;
    const auto taus = sched_1n_permutations(n, k);
    if (format == "json") {
        Json rows = Json::array();
        for (const auto& tau : taus) rows.push_back(tau.str());
        out << rows.dump(2) << '\n';
    } else {
        for (const auto& tau : taus) out << tau.str() << '\n';
    }
    return 0;
}

int cmd_bijection_table(int n, const std::string& format, OutputTarget& target) {
    std::ostream& out = *target.stream;
    if (format == "json") {
        for_each_sched_1n(n, [&](const DecoratedPermutation& tau) {
            Json row;
            row["tau"] = tau.str();
            row["phi"] = perm_str(phi(tau));
            row["revmaj"] = revmaj(tau);
            row["dec"] = tau.dec_count();
            out << row.dump() << '\n';
        });
    } else {
        for_each_sched_1n(n, [&](const DecoratedPermutation& tau) {
            out << tau.str() << " -> " << perm_str(phi(tau)) << '\n';
        });
    }
    return 0;
}

Polynomial poly_by_name(const std::string& name, int n, std::optional<int> k,
                        std::optional<int> j) {
    if (name == "t_analog") return t_analog(n);
    if (name == "q_analog") return q_analog(n);
    if (name == "t_factorial") return t_factorial(n);
    if (name == "euler") return euler_poly(n);
    if (name == "lhs") return k ? lhs_q_minus1(n, *k) : lhs_q_minus1_z(n);
    if (name == "dnj") {
        if (!j) throw CLI::RequiredError("--j");
        return dnj(n, *j);
    }
    throw CLI::ValidationError("poly", "unknown polynomial " + name);
}

int poly_cap(const std::string& name) {
    if (name == "t_analog" || name == "q_analog") return 64;
    if (name == "t_factorial") return 20;
    if (name == "lhs") return 8;
    return 9;
}

int cmd_verify(const std::vector<std::string>& names, int n, std::optional<int> k,
               unsigned threads, const std::string& format, OutputTarget& target, bool progress,
               bool timings) {
    std::ostream& out = *target.stream;
    std::vector<CheckReport> reports;
    for (const auto& name : names) {
        if (progress) std::cerr << "running " << name << " (n=" << n << ")...\n";
        reports.push_back(run_check(name, n, k, threads));
        if (progress) {
            const CheckReport& r = reports.back();
            std::cerr << "  " << (r.passed ? "pass" : "FAIL") << ", " << r.objects
                      << " objects, " << r.elapsed_ms << " ms\n";
        }
    }

    int failed = 0;
    for (const auto& r : reports)
        if (!r.passed) ++failed;

    if (format == "json") {
        Json rows = Json::array();
        for (const auto& r : reports) rows.push_back(report_json(r, timings));
        out << rows.dump(2) << '\n';
    } else if (format == "csv") {
        out << "name,n,k,passed,lhs,rhs,witness";
        if (timings) out << ",elapsed_ms";
        out << '\n';
        for (const auto& r : reports) {
            out << r.name << ',' << r.params.n << ','
                << (r.params.k ? std::to_string(*r.params.k) : "") << ','
                << (r.passed ? "true" : "false") << ',' << csv_quote(r.lhs.str()) << ','
                << csv_quote(r.rhs.str()) << ',' << csv_quote(r.witness.value_or(""));
            if (timings) out << ',' << r.elapsed_ms;
            out << '\n';
        }
    } else {
        for (const auto& r : reports) {
            out << r.name << " (n=" << r.params.n;
            if (r.params.k) out << ", k=" << *r.params.k;
            out << "): " << (r.passed ? "pass" : "FAIL") << '\n';
            if (r.passed && r.lhs == r.rhs) {
                out << "  both sides: " << r.lhs.str() << '\n';
            } else {
                out << "  lhs: " << r.lhs.str() << '\n';
                out << "  rhs: " << r.rhs.str() << '\n';
            }
            if (r.witness) out << "  witness: " << *r.witness << '\n';
            if (timings) out << "  elapsed: " << r.elapsed_ms << " ms\n";
        }
        out << reports.size() - failed << '/' << reports.size() << " checks passed\n";
    }
    return failed == 0 ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact verification suite for valley-decorated Dyck path identities"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string output_path;
    bool progress = false;

    auto add_common = [&](CLI::App* cmd, bool with_csv) {
        const std::vector<std::string> formats =
            with_csv ? std::vector<std::string>{"table", "json", "csv"}
                     : std::vector<std::string>{"table", "json"};
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        cmd->add_option("--output", output_path, "write to a file instead of standard output");
        cmd->add_flag("--progress", progress, "print enumeration counters to standard error");
    };

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "stream stLD(n)^{*k} objects");
    int enum_n = 0;
    int enum_k = 0;
    enumerate->add_option("--n", enum_n, "path size")
        ->required()
        ->check(CLI::Range(1, kMaxEnumerateN));
    enumerate->add_option("--k", enum_k, "number of decorations");
    add_common(enumerate, true);

    // stats
    auto* stats = app.add_subcommand("stats", "statistics of permutations and paths");
    std::string stats_tau;
    int stats_n = 0;
    std::string stats_word, stats_labels, stats_dv;
    stats->add_option("tau", stats_tau, "decorated permutation, e.g. *8*63*274*15");
    stats->add_option("--n", stats_n, "tabulate all of S_n")
        ->check(CLI::Range(1, kMaxStatsTableN));
    stats->add_option("--area-word", stats_word, "path area word, e.g. 01210100");
    stats->add_option("--labels", stats_labels, "path labels, e.g. 34516728");
    stats->add_option("--dv", stats_dv, "decorated valleys, e.g. 4578");
    add_common(stats, true);

    // schedules
    auto* schedules = app.add_subcommand("schedules", "schedule numbers and schedule-1^n lists");
    std::string schedules_tau;
    int schedules_n = 0;
    int schedules_k = -1;
    schedules->add_option("tau", schedules_tau, "decorated permutation");
    schedules->add_option("--n", schedules_n, "list schedule-1^n decorated permutations")
        ->check(CLI::Range(1, kMaxScheduleListN));
    schedules->add_option("--k", schedules_k, "restrict the list to k decorations");
    add_common(schedules, false);

    // bijection
    auto* bijection = app.add_subcommand("bijection", "the generating-tree bijection phi");
    std::string bijection_arg;
    bool bijection_inverse = false;
    int bijection_n = 0;
    bijection->add_option("tau", bijection_arg,
                          "schedule-1^n decorated permutation (or sigma with --inverse)");
    bijection->add_flag("--inverse", bijection_inverse, "map a permutation back through phi");
    bijection->add_option("--n", bijection_n, "tabulate phi on all of S_n^{*}(1^n)")
        ->check(CLI::Range(1, kMaxBijectionTableN));
    add_common(bijection, false);

    // poly
    auto* poly = app.add_subcommand("poly", "named polynomials");
    std::string poly_name;
    int poly_n = 0;
    std::optional<int> poly_k, poly_j;
    poly->add_option("name", poly_name, "t_analog|q_analog|t_factorial|euler|lhs|dnj")
        ->required()
        ->check(CLI::IsMember({"t_analog", "q_analog", "t_factorial", "euler", "lhs", "dnj"}));
    int poly_k_value = 0;
    int poly_j_value = 0;
    poly->add_option("--n", poly_n, "size parameter")->required();
    auto* poly_k_opt = poly->add_option("--k", poly_k_value, "decoration count (lhs)");
    auto* poly_j_opt = poly->add_option("--j", poly_j_value, "monotony bound (dnj)");
    add_common(poly, false);

    // verify
    auto* verify = app.add_subcommand("verify", "run identity checks");
    std::string verify_check;
    int verify_n = 0;
    std::optional<int> verify_k;
    unsigned verify_threads = 1;
    bool verify_timings = false;
    int verify_k_value = 0;
    verify->add_option("--check", verify_check, "check name or 'all'")->required();
    verify->add_option("--n", verify_n, "size parameter")->required();
    auto* verify_k_opt =
        verify->add_option("--k", verify_k_value, "decoration count (sched_q_minus1)");
    verify->add_option("--threads", verify_threads, "worker count")
        ->check(CLI::Range(1u, 64u));
    verify->add_flag("--timings", verify_timings, "include elapsed_ms in reports");
    add_common(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (poly_k_opt->count() > 0) poly_k = poly_k_value;
    if (poly_j_opt->count() > 0) poly_j = poly_j_value;
    if (verify_k_opt->count() > 0) verify_k = verify_k_value;

    OutputTarget target;
    target.open(output_path);

    if (enumerate->parsed()) {
        if (enum_k < 0 || enum_k > enum_n - 1)
            throw CLI::ValidationError("--k", "need 0 <= k <= n-1");
        return cmd_enumerate(enum_n, enum_k, format, target, progress);
    }

    if (stats->parsed()) {
        if (!stats_word.empty() || !stats_labels.empty() || !stats_dv.empty()) {
            if (stats_word.empty() || stats_labels.empty())
                throw CLI::RequiredError("--area-word and --labels");
            return cmd_stats_path(stats_word, stats_labels, stats_dv, format, target);
        }
        if (!stats_tau.empty())
            return cmd_stats_perm(parse_decorated(stats_tau, "tau"), format, target);
        if (stats_n > 0) return cmd_stats_table(stats_n, format, target);
        throw CLI::RequiredError("tau, --n, or --area-word/--labels");
    }

    if (schedules->parsed()) {
        if (!schedules_tau.empty()) {
            const auto tau = parse_decorated(schedules_tau, "tau");
            *target.stream << schedule_str(sched(tau)) << '\n';
            return 0;
        }
        if (schedules_n > 0) {
            std::optional<int> k;
            if (schedules_k >= 0) k = schedules_k;
            return cmd_schedules_list(schedules_n, k, format, target);
        }
        throw CLI::RequiredError("tau or --n");
    }

    if (bijection->parsed()) {
        if (bijection_n > 0) return cmd_bijection_table(bijection_n, format, target);
        if (bijection_arg.empty()) throw CLI::RequiredError("tau or --n");
        if (bijection_inverse) {
            const Permutation sigma = parse_plain_permutation(bijection_arg, "tau");
            *target.stream << phi_inverse(sigma).str() << '\n';
        } else {
            const auto tau = parse_decorated(bijection_arg, "tau");
            if (!has_schedule_1n(tau))
                throw CLI::ValidationError("tau", tau.str() + " does not have schedule 1^n");
            *target.stream << perm_str(phi(tau)) << '\n';
        }
        return 0;
    }

    if (poly->parsed()) {
        if (poly_n < 0 || poly_n > poly_cap(poly_name))
            throw CLI::ValidationError("--n", "supported range for " + poly_name + " is 0.." +
                                                  std::to_string(poly_cap(poly_name)));
        const Polynomial p = poly_by_name(poly_name, poly_n, poly_k, poly_j);
        if (format == "json")
            *target.stream << polynomial_json(p).dump(2) << '\n';
        else
            *target.stream << p.str() << '\n';
        return 0;
    }

    // verify
    std::vector<std::string> names;
    if (verify_check == "all") {
        for (const auto& info : check_registry())
            if (verify_n >= info.min_n && verify_n <= info.max_n) names.push_back(info.name);
        if (names.empty())
            throw std::out_of_range("no check supports n=" + std::to_string(verify_n));
    } else {
        names.push_back(verify_check);
    }
    return cmd_verify(names, verify_n, verify_k, verify_threads, format, target, progress,
                      verify_timings);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: coefficient overflow: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
