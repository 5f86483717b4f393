// Command-line front end: certify, enumerate, links, export-dot, diagram-check.
//
// Exit codes: 0 success, 1 a check failed, 2 malformed input or usage,
// 3 I/O failure or resource limit.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "pretzel/agreement.hpp"
#include "pretzel/aux_graph.hpp"
#include "pretzel/certifier.hpp"
#include "pretzel/json_io.hpp"
#include "pretzel/link_explorer.hpp"
#include "pretzel/parallel.hpp"
#include "pretzel/sign_seq.hpp"

namespace {

using namespace pretzel;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kIoOrLimit = 3;

struct RunConfig {
    std::string format = "text";
    std::string out;
    std::size_t jobs = default_jobs();
    std::size_t max_n = 12;
    std::size_t random_orders = 8;
    long twist = 3;
    double time_limit = 0;  // seconds, 0 = none
};

std::size_t max_n_default() {
    if (const char* env = std::getenv("PRETZEL_MAX_N")) {
        try {
            return std::stoul(env);
        } catch (...) {
            std::cerr << "ignoring malformed PRETZEL_MAX_N=" << env << "\n";
        }
    }
    return 12;
}

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw IoError("cannot open " + cfg.out + " for writing");
    file << text;
    if (!file) throw IoError("write failed for " + cfg.out);
}

std::string knot_label(const SignSeq& seq, long twist) {
    std::string out = "P(";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(seq.is_plus(i) ? twist : -twist);
    }
    return out + ")";
}

SignSeq parse_checked(const std::string& text, Mode mode) {
    SignSeq seq = SignSeq::parse(text);
    if (auto v = validate(seq, mode)) throw ParseError(v->message);
    return seq;
}

std::string join_counts(const std::vector<std::size_t>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " -> " : "") << xs[i];
    return os.str();
}

int cmd_certify(const RunConfig& cfg, const std::string& text) {
    const SignSeq seq = parse_checked(text, Mode::OddKnot);
    const SliceCertificate cert = certify(seq, {cfg.random_orders, 0x5eed});
    if (cfg.format == "json") {
        Json j;
        j["knot"] = knot_label(seq, cfg.twist);
        j.update(to_json(cert));
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << knot_label(seq, cfg.twist) << " [" << seq.str() << "]\n"
           << "  G(mu) path: " << (cert.path.is_path ? "yes" : "no") << "\n"
           << "  B onto K*A: " << join_counts(cert.b_onto_a.counts) << "\n"
           << "  A onto K*B: " << join_counts(cert.a_onto_b.counts) << "\n"
           << "  random band orders checked: " << cert.random_orders_checked << "\n"
           << "  verdict: " << (cert.certified() ? "certified" : "failed") << " (" << cert.reason
           << ")\n";
        emit(cfg, os.str());
    }
    return cert.certified() ? kOk : kCheckFailed;
}

struct SeqOutcome {
    bool certified = false;
    bool canonical = false;
    std::size_t orbit = 0;
    std::string reason;
};

int cmd_enumerate(const RunConfig& cfg, std::size_t n) {
    if (n > cfg.max_n) {
        std::cerr << "n=" << n << " exceeds --max-n " << cfg.max_n << "\n";
        return kBadInput;
    }
    const auto start = std::chrono::steady_clock::now();
    const std::size_t total = balanced_count(n, Mode::OddKnot);
    constexpr std::size_t kChunk = 1 << 15;

    std::size_t done = 0, certified = 0, classes = 0, classes_certified = 0;
    std::vector<std::pair<std::string, std::string>> failures;
    std::vector<std::tuple<std::string, std::size_t, bool>> class_rows;
    bool complete = true;

    std::vector<SignSeq> chunk;
    auto flush = [&] {
        const auto outcomes = parallel_map(chunk.size(), cfg.jobs, [&](std::size_t i) {
            SeqOutcome o;
            const SliceCertificate cert = certify(chunk[i], {cfg.random_orders, 0x5eed + i});
            o.certified = cert.certified();
            o.reason = cert.reason;
            o.canonical = canonical_form(chunk[i]).representative == chunk[i];
            if (o.canonical) o.orbit = orbit_size(chunk[i]);
            return o;
        });
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            const SeqOutcome& o = outcomes[i];
            certified += o.certified;
            if (!o.certified) failures.emplace_back(chunk[i].str(), o.reason);
            if (o.canonical) {
                ++classes;
                classes_certified += o.certified;
                class_rows.emplace_back(chunk[i].str(), o.orbit, o.certified);
            }
        }
        done += chunk.size();
        chunk.clear();
    };
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    for_each_balanced(n, Mode::OddKnot, [&](const SignSeq& s) {
        chunk.push_back(s);
        if (chunk.size() == kChunk) {
            flush();
            if (cfg.time_limit > 0 && elapsed() > cfg.time_limit) {
                complete = false;
                return false;
            }
        }
        return true;
    });
    if (complete) flush();

    if (cfg.format == "json") {
        Json j;
        j["n"] = n;
        j["sequences"] = total;
        j["checked"] = done;
        j["certified"] = certified;
        j["classes"] = classes;
        j["classes_certified"] = classes_certified;
        j["complete"] = complete;
        Json fails = Json::array();
        for (const auto& [s, r] : failures) fails.push_back({{"sequence", s}, {"reason", r}});
        j["failures"] = std::move(fails);
        Json rows = Json::array();
        for (const auto& [rep, orbit, ok] : class_rows)
            rows.push_back({{"class", rep}, {"orbit_size", orbit}, {"verdict", ok ? "certified" : "failed"}});
        j["class_results"] = std::move(rows);
        emit(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "class,orbit_size,verdict\n";
        for (const auto& [rep, orbit, ok] : class_rows)
            os << rep << "," << orbit << "," << (ok ? "certified" : "failed") << "\n";
        emit(cfg, os.str());
    } else {
        std::ostringstream os;
        os << "n=" << n << " (" << 2 * n + 1 << " twist boxes): " << certified << "/" << done
           << " certified";
        if (!complete) os << " of " << total << " (time limit reached, partial)";
        os << "\n  dihedral classes: " << classes_certified << "/" << classes << " certified\n";
        for (const auto& [s, r] : failures) os << "  FAILED " << s << ": " << r << "\n";
        emit(cfg, os.str());
    }
    std::cerr << "enumerate n=" << n << ": " << elapsed() << " s\n";
    if (!complete) return kIoOrLimit;
    return certified == done ? kOk : kCheckFailed;
}

int cmd_links(const RunConfig& cfg, std::size_t n, bool naive) {
    if (n > cfg.max_n) {
        std::cerr << "n=" << n << " exceeds --max-n " << cfg.max_n << "\n";
        return kBadInput;
    }
    if (n == 0) {
        std::cerr << "links needs n >= 1\n";
        return kBadInput;
    }
    const LinkReport report =
        explore_link_case(n, naive ? ResidualRule::Naive : ResidualRule::Corrected, cfg.jobs);
    if (cfg.format == "json") {
        emit(cfg, to_json(report).dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "sequence,class,alternating,passing_count,passing_drops\n";
        for (const auto& r : report.sequences) {
            os << r.seq.str() << "," << r.class_rep.str() << "," << (r.alternating ? 1 : 0) << ","
               << r.passing.size() << ",";
            for (std::size_t i = 0; i < r.passing.size(); ++i)
                os << (i ? " " : "") << r.passing[i].first << ":" << r.passing[i].second;
            os << "\n";
        }
        emit(cfg, os.str());
    } else {
        std::ostringstream os;
        os << "even-link case n=" << n << " (" << 2 * n << " twist boxes), residual rule "
           << to_string(report.rule) << "\n";
        for (const auto& r : report.sequences) {
            os << "  " << r.seq.str() << "  passing drops (A,B):";
            if (r.passing.empty()) os << " none";
            for (auto [a, b] : r.passing) os << " (" << a << "," << b << ")";
            os << "\n";
        }
        os << "  class        alternating  sequences  passing\n";
        for (const auto& c : report.classes) {
            os << "  " << c.rep.str() << std::string(c.rep.size() < 12 ? 12 - c.rep.size() : 1, ' ')
               << " " << (c.alternating ? "yes" : "no ") << "          " << c.sequences << "          "
               << c.passing_sequences << "\n";
        }
        os << "matches conjecture: " << (report.matches_conjecture ? "yes" : "NO") << "\n";
        if (!report.matches_conjecture) {
            os << "*** NONCONFORMING CLASSES:";
            for (const auto& s : report.nonconforming) os << " " << s;
            os << "\n";
        }
        os << "(conjecture evidence only; weak double slicing is not assessed)\n";
        emit(cfg, os.str());
    }
    return kOk;
}

int cmd_export_dot(const RunConfig& cfg, const std::string& text) {
    const SignSeq seq = SignSeq::parse(text);
    if (auto v = validate(seq, natural_mode(seq))) throw ParseError(v->message);
    emit(cfg, to_dot(build_graph(seq)));
    return kOk;
}

int cmd_diagram_check(const RunConfig& cfg, std::size_t n) {
    if (n > cfg.max_n) {
        std::cerr << "n=" << n << " exceeds --max-n " << cfg.max_n << "\n";
        return kBadInput;
    }
    std::ostringstream os;
    bool all_ok = true;
    for (std::size_t m = 1; m <= 2 * n + 1; ++m) {
        const std::size_t expected = m % 2 ? 1 : 2;
        if (build_diagram(m).count_components() != expected) {
            os << "  base diagram with " << m << " boxes: wrong component count\n";
            all_ok = false;
        }
    }
    for (std::size_t k = 0; k <= n; ++k) {
        const auto seqs = enumerate_balanced(k, Mode::OddKnot);
        const auto reports = parallel_map(seqs.size(), cfg.jobs,
                                          [&](std::size_t i) { return check_knot_agreement(seqs[i]); });
        std::size_t ok = 0;
        for (const auto& r : reports) {
            ok += r.agrees;
            if (!r.agrees)
                os << "  MISMATCH " << r.seq.str() << ": " << r.b_onto_a.detail << " | "
                   << r.a_onto_b.detail << "\n";
        }
        os << "knots, " << 2 * k + 1 << " boxes: " << ok << "/" << seqs.size() << " agree\n";
        all_ok = all_ok && ok == seqs.size();
    }
    for (std::size_t k = 1; k <= n; ++k) {
        const auto seqs = enumerate_balanced(k, Mode::EvenLink);
        const auto counts = parallel_map(seqs.size(), cfg.jobs, [&](std::size_t i) {
            std::size_t agree = 0;
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    agree += check_link_agreement(run_link_trial(seqs[i], a, b)).agrees;
            return agree;
        });
        std::size_t ok = 0;
        for (std::size_t c : counts) ok += c;
        const std::size_t trials = seqs.size() * k * k;
        os << "links, " << 2 * k << " boxes: " << ok << "/" << trials << " trials agree\n";
        all_ok = all_ok && ok == trials;
    }
    os << (all_ok ? "all stages agree\n" : "DISAGREEMENT between diagram and bookkeeping\n");
    emit(cfg, os.str());
    return all_ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double-slicing band systems for odd pretzel knots"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.max_n = max_n_default();

    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember(std::move(formats)));
        sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
        sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--max-n", cfg.max_n, "Largest n accepted (env PRETZEL_MAX_N)");
        sub->add_option("--random-orders", cfg.random_orders,
                        "Shuffled band orders checked per certificate");
        sub->add_option("--twist", cfg.twist, "Odd twist magnitude a, used for labels")
            ->check([](const std::string& s) {
                try {
                    const long a = std::stol(s);
                    return a % 2 != 0 ? std::string{} : std::string{"twist must be odd"};
                } catch (...) {
                    return std::string{"twist must be an integer"};
                }
            });
    };

    std::string sequence;
    std::size_t n = 0;
    bool naive = false;

    auto* certify_cmd = app.add_subcommand("certify", "Certify one odd pretzel sequence, e.g. +-+-+");
    certify_cmd->add_option("sequence", sequence, "Signs over {+,-}")->required();
    add_common(certify_cmd, {"json", "text"});
    cfg.format = "json";

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Certify every sequence with 2n+1 boxes");
    enumerate_cmd->add_option("n", n)->required();
    enumerate_cmd->add_option("--time-limit", cfg.time_limit, "Abort after this many seconds");
    add_common(enumerate_cmd, {"json", "text", "csv"});

    auto* links_cmd = app.add_subcommand("links", "Explore the even-length link case for 2n boxes");
    links_cmd->add_option("n", n)->required();
    links_cmd->add_flag("--naive", naive, "Give each leftover box its own residual component");
    add_common(links_cmd, {"json", "text", "csv"});

    auto* dot_cmd = app.add_subcommand("export-dot", "Write G(mu) in Graphviz DOT");
    dot_cmd->add_option("sequence", sequence)->required();
    add_common(dot_cmd, {"dot"});

    auto* check_cmd = app.add_subcommand("diagram-check", "Compare literal band surgery with bookkeeping");
    check_cmd->add_option("n", n)->required();
    add_common(check_cmd, {"text"});

    // certify defaults to JSON, the others to text.
    for (auto* sub : {enumerate_cmd, links_cmd, check_cmd})
        sub->preparse_callback([&](std::size_t) { cfg.format = "text"; });
    dot_cmd->preparse_callback([&](std::size_t) { cfg.format = "dot"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*certify_cmd) return cmd_certify(cfg, sequence);
        if (*enumerate_cmd) return cmd_enumerate(cfg, n);
        if (*links_cmd) return cmd_links(cfg, n, naive);
        if (*dot_cmd) return cmd_export_dot(cfg, sequence);
        if (*check_cmd) return cmd_diagram_check(cfg, n);
    } catch (const ParseError& e) {
        std::cerr << "malformed sequence: " << e.what() << "\n" << app.help();
        return kBadInput;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return kIoOrLimit;
    }
    return kBadInput;
}
