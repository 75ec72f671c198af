// Command-line front end: every library operation behind one subcommand
// tree, with deterministic JSON/CSV/text output (DOT for graph edges).
//
// Exit codes: 0 success, 1 domain error (JSON error object on stderr),
// 2 usage error. Verify subcommands exit 1 when any check fails.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gdbw/bwt.hpp"
#include "gdbw/config.hpp"
#include "gdbw/errors.hpp"
#include "gdbw/gdb_graph.hpp"
#include "gdbw/gfp.hpp"
#include "gdbw/group.hpp"
#include "gdbw/snf.hpp"
#include "gdbw/verify.hpp"

using json = nlohmann::ordered_json;
using namespace gdbw;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
    std::string format = "json";
    std::uint64_t bound = kDefaultEnumerationBound;
    int threads = 0;  // 0 = all cores; computations are deterministic either way
};

json base_object() {
    json j;
    j["schema_version"] = kSchemaVersion;
    return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
    }
}

json permutation_json(const Permutation& p) {
    json j;
    j["one_line"] = p.one_line();
    j["cycles"] = p.cycles();
    return j;
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> necklace_strings(const std::vector<Necklace>& list) {
    std::vector<std::string> out;
    out.reserve(list.size());
    for (const Necklace& n : list) out.push_back(n.str());
    return out;
}

int emit_report(const VerificationReport& report, const Options& opt) {
    if (opt.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const Check& c : report.checks)
            rows.push_back({c.name, c.expected, c.actual, c.pass ? "pass" : "fail"});
        emit_csv({"name", "expected", "actual", "result"}, rows);
    } else if (opt.format == "text") {
        for (const Check& c : report.checks)
            std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << ": expected " << c.expected
                      << ", actual " << c.actual << "\n";
        std::cout << (report.overall() ? "all checks passed" : "some checks FAILED") << "\n";
    } else {
        json j = base_object();
        j["overall"] = report.overall();
        json checks = json::array();
        for (const Check& c : report.checks) {
            json cj;
            cj["name"] = c.name;
            cj["expected"] = c.expected;
            cj["actual"] = c.actual;
            cj["pass"] = c.pass;
            checks.push_back(std::move(cj));
        }
        j["checks"] = std::move(checks);
        emit(j);
    }
    return report.overall() ? 0 : 1;
}

int emit_count(const std::string& label, const BigInt& value, const Options& opt) {
    if (opt.format == "csv") {
        emit_csv({"name", "value"}, {{label, str(value)}});
    } else if (opt.format == "text") {
        std::cout << label << " = " << str(value) << "\n";
    } else {
        json j = base_object();
        j["name"] = label;
        j["count"] = str(value);
        emit(j);
    }
    return 0;
}

int emit_necklaces(const std::vector<Necklace>& list, const Options& opt) {
    const auto strings = necklace_strings(list);
    if (opt.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : strings) rows.push_back({s});
        emit_csv({"necklace"}, rows);
    } else if (opt.format == "text") {
        for (const auto& s : strings) std::cout << s << "\n";
    } else {
        json j = base_object();
        j["count"] = strings.size();
        j["necklaces"] = strings;
        emit(j);
    }
    return 0;
}

int emit_group(const std::string& label, const AbelianGroup& g, const Options& opt) {
    std::vector<std::string> factor_strings;
    for (const BigInt& f : g.invariant_factors()) factor_strings.push_back(str(f));
    if (opt.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& f : factor_strings) rows.push_back({f});
        emit_csv({"factor"}, rows);
    } else if (opt.format == "text") {
        std::cout << label << " = " << g.str() << " (order " << str(g.order()) << ")\n";
    } else {
        json j = base_object();
        j["name"] = label;
        j["factors"] = factor_strings;
        j["order"] = str(g.order());
        j["structure"] = g.str();
        emit(j);
    }
    return 0;
}

int emit_matrix(const std::string& label, const IntMatrix& m, const Options& opt) {
    if (opt.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            std::vector<std::string> row;
            for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
            rows.push_back(std::move(row));
        }
        std::vector<std::string> header;
        for (Eigen::Index j = 0; j < m.cols(); ++j) header.push_back("c" + std::to_string(j));
        emit_csv(header, rows);
    } else if (opt.format == "text") {
        std::cout << label << ":\n" << m << "\n";
    } else {
        json j = base_object();
        j["name"] = label;
        j["rows"] = matrix_json(m);
        emit(j);
    }
    return 0;
}

Word parse_word_flag(const std::string& text, int k) { return Word::parse(text, k); }

IntMatrix parse_matrix_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array() || j.empty()) raise(errc::out_of_range, "matrix must be a nonempty JSON array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            raise(errc::dimension_mismatch, "matrix rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = BigInt(j[i][c].get<long>());
    }
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burrows-Wheeler transforms, generalized de Bruijn words and graphs, "
                 "invertible necklaces and their group structures"};
    app.require_subcommand(1);

    Options opt;
    opt.threads = static_cast<int>(std::thread::hardware_concurrency());
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text", "dot"}))
        ->capture_default_str();
    app.add_option("--bound", opt.bound, "Enumeration bound on candidate-space size")
        ->check(CLI::Range(kMinEnumerationBound, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "Worker threads (output is deterministic regardless)");

    std::function<int()> run;

    // ---- bwt ----
    {
        auto* cmd = app.add_subcommand("bwt", "Burrows-Wheeler transform of a necklace");
        auto word = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        cmd->add_option("--word", *word, "Necklace representative")->required();
        cmd->add_option("--k", *k, "Alphabet size (default: smallest that fits)");
        cmd->callback([&run, word, k, &opt] {
            run = [word, k, &opt] {
                const Necklace neck(parse_word_flag(*word, *k));
                const Word image = bwt(neck);
                json j = base_object();
                j["word"] = neck.canonical().str();
                j["necklace"] = neck.str();
                j["bwt"] = image.str();
                if (standard_permutation(image).is_single_cycle())
                    j["cycle"] = inverse_standard_permutation_cycle(image);
                if (opt.format == "text") {
                    std::cout << "bwt(" << neck.str() << ") = " << image.str() << "\n";
                } else if (opt.format == "csv") {
                    emit_csv({"necklace", "bwt"}, {{neck.str(), image.str()}});
                } else {
                    emit(j);
                }
                return 0;
            };
        });
    }

    // ---- ibwt ----
    {
        auto* cmd = app.add_subcommand("ibwt", "Invert a BWT image back to its necklace");
        auto word = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        auto balanced = std::make_shared<bool>(false);
        cmd->add_option("--word", *word, "BWT image")->required();
        auto* k_opt = cmd->add_option("--k", *k, "Alphabet size (default: smallest that fits)");
        cmd->add_flag("--balanced", *balanced, "Use the balanced-Parikh fast path (requires --k)")
            ->needs(k_opt);
        cmd->callback([&run, word, k, balanced, &opt] {
            run = [word, k, balanced, &opt] {
                const Word u = parse_word_flag(*word, *k);
                json j = base_object();
                Necklace neck = *balanced ? inverse_bwt_balanced(u, *k) : inverse_bwt(u);
                const BwtImageResult kind = is_bwt_image(u);
                j["word"] = u.str();
                j["necklace"] = neck.str();
                j["kind"] = kind.kind == BwtImageResult::Kind::aperiodic ? "aperiodic" : "power";
                if (kind.kind == BwtImageResult::Kind::power) {
                    j["c"] = kind.c;
                    j["root"] = kind.root->str();
                }
                if (opt.format == "text") {
                    std::cout << "ibwt(" << u.str() << ") = " << neck.str() << "\n";
                } else if (opt.format == "csv") {
                    emit_csv({"word", "necklace"}, {{u.str(), neck.str()}});
                } else {
                    emit(j);
                }
                return 0;
            };
        });
    }

    // ---- stdperm ----
    {
        auto* cmd = app.add_subcommand("stdperm", "Standard permutation of a word");
        auto word = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        cmd->add_option("--word", *word, "Input word")->required();
        cmd->add_option("--k", *k, "Alphabet size (default: smallest that fits)");
        cmd->callback([&run, word, k, &opt] {
            run = [word, k, &opt] {
                const Word u = parse_word_flag(*word, *k);
                const Permutation pi = standard_permutation(u);
                json j = base_object();
                j["word"] = u.str();
                j["standard"] = permutation_json(pi);
                j["inverse"] = permutation_json(pi.inverse());
                j["is_cycle"] = pi.is_single_cycle();
                if (opt.format == "text") {
                    std::cout << "pi = " << json(pi.one_line()).dump() << "\n";
                    std::cout << "pi^-1 = " << json(pi.inverse().one_line()).dump() << "\n";
                } else {
                    emit(j);  // csv adds nothing for nested permutations
                }
                return 0;
            };
        });
    }

    // ---- words ----
    {
        auto* cmd = app.add_subcommand("words", "List generalized de Bruijn words (or all necklaces)");
        auto k = std::make_shared<int>();
        auto length = std::make_shared<std::int64_t>();
        auto all = std::make_shared<bool>(false);
        auto aperiodic = std::make_shared<bool>(false);
        cmd->add_option("--k", *k, "Alphabet size")->required();
        cmd->add_option("--length", *length, "Word length")->required();
        cmd->add_flag("--all-necklaces", *all, "List every necklace instead");
        cmd->add_flag("--aperiodic", *aperiodic, "With --all-necklaces: aperiodic only");
        cmd->callback([&run, k, length, all, aperiodic, &opt] {
            run = [k, length, all, aperiodic, &opt] {
                const auto list = *all ? enumerate_necklaces(*k, *length, *aperiodic, opt.bound)
                                       : enumerate_gdb_words(*k, *length, opt.bound);
                return emit_necklaces(list, opt);
            };
        });
    }

    // ---- count ----
    {
        auto* cmd = app.add_subcommand("count", "Count generalized de Bruijn words (or necklaces)");
        auto k = std::make_shared<int>();
        auto length = std::make_shared<std::int64_t>();
        auto what = std::make_shared<std::string>("gdb");
        cmd->add_option("--k", *k, "Alphabet size")->required();
        cmd->add_option("--length", *length, "Word length")->required();
        cmd->add_option("--what", *what, "Quantity: gdb, lyn or neck")
            ->check(CLI::IsMember({"gdb", "lyn", "neck"}));
        cmd->callback([&run, k, length, what, &opt] {
            run = [k, length, what, &opt] {
                BigInt value;
                std::string label;
                if (*what == "lyn") {
                    value = count_lyn(*k, *length);
                    label = "Lyn(" + std::to_string(*k) + "," + std::to_string(*length) + ")";
                } else if (*what == "neck") {
                    value = count_neck(*k, *length);
                    label = "Neck(" + std::to_string(*k) + "," + std::to_string(*length) + ")";
                } else {
                    value = count_gdb_words(*k, *length);
                    label = "DBW_" + std::to_string(*k) + "(" + std::to_string(*length) + ")";
                }
                return emit_count(label, value, opt);
            };
        });
    }

    // ---- graph ----
    {
        auto* graph = app.add_subcommand("graph", "Generalized de Bruijn graph DB(k, n)");
        graph->require_subcommand(1);
        auto k = std::make_shared<std::int64_t>();
        auto n = std::make_shared<std::int64_t>();
        auto length = std::make_shared<std::int64_t>();
        auto reduced = std::make_shared<bool>(false);

        auto* edges = graph->add_subcommand("edges", "Edge list (DOT with --format dot)");
        edges->add_option("--k", *k, "Out-degree")->required();
        edges->add_option("--n", *n, "Vertex count")->required();
        edges->callback([&run, k, n, &opt] {
            run = [k, n, &opt] {
                const GdbGraph g(*k, *n);
                const auto list = edge_list(g);
                if (opt.format == "dot") {
                    std::cout << "digraph DB_" << *k << "_" << *n << " {\n";
                    for (const Edge& e : list) std::cout << "  " << e.src << " -> " << e.dst << ";\n";
                    std::cout << "}\n";
                } else if (opt.format == "csv") {
                    std::vector<std::vector<std::string>> rows;
                    for (const Edge& e : list) rows.push_back({std::to_string(e.src), std::to_string(e.dst)});
                    emit_csv({"src", "dst"}, rows);
                } else if (opt.format == "text") {
                    for (const Edge& e : list) std::cout << e.src << " -> " << e.dst << "\n";
                } else {
                    json j = base_object();
                    j["k"] = *k;
                    j["n"] = *n;
                    json arr = json::array();
                    for (const Edge& e : list) arr.push_back({e.src, e.dst});
                    j["edges"] = std::move(arr);
                    emit(j);
                }
                return 0;
            };
        });

        auto* lap = graph->add_subcommand("laplacian", "(Reduced) Laplacian matrix");
        lap->add_option("--k", *k, "Out-degree")->required();
        lap->add_option("--n", *n, "Vertex count")->required();
        lap->add_flag("--reduced", *reduced, "Drop the last row and column");
        lap->callback([&run, k, n, reduced, &opt] {
            run = [k, n, reduced, &opt] {
                const GdbGraph g(*k, *n);
                return emit_matrix(*reduced ? "reduced_laplacian" : "laplacian",
                                   *reduced ? reduced_laplacian(g) : laplacian(g), opt);
            };
        });

        auto* kap = graph->add_subcommand("kappa", "Spanning-tree count");
        kap->add_option("--k", *k, "Out-degree")->required();
        kap->add_option("--n", *n, "Vertex count")->required();
        kap->callback([&run, k, n, &opt] {
            run = [k, n, &opt] {
                return emit_count("kappa(DB(" + std::to_string(*k) + "," + std::to_string(*n) + "))",
                                  kappa(GdbGraph(*k, *n)), opt);
            };
        });

        auto* ham = graph->add_subcommand("hamiltonian", "Hamiltonian cycles (rooted at vertex 0)");
        ham->add_option("--k", *k, "Out-degree")->required();
        ham->add_option("--n", *n, "Vertex count")->required();
        ham->callback([&run, k, n, &opt] {
            run = [k, n, &opt] {
                const auto cycles = enumerate_hamiltonian_cycles(GdbGraph(*k, *n), opt.bound);
                if (opt.format == "csv") {
                    std::vector<std::vector<std::string>> rows;
                    for (const auto& c : cycles) {
                        std::string s;
                        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
                        rows.push_back({s});
                    }
                    emit_csv({"cycle"}, rows);
                } else if (opt.format == "text") {
                    for (const auto& c : cycles) {
                        for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? "," : "(") << c[i];
                        std::cout << ")\n";
                    }
                } else {
                    json j = base_object();
                    j["count"] = cycles.size();
                    j["cycles"] = cycles;
                    emit(j);
                }
                return 0;
            };
        });

        auto* gwords = graph->add_subcommand("words", "Generalized de Bruijn words via Hamiltonian cycles");
        gwords->add_option("--k", *k, "Alphabet size")->required();
        gwords->add_option("--length", *length, "Word length")->required();
        gwords->callback([&run, k, length, &opt] {
            run = [k, length, &opt] {
                return emit_necklaces(enumerate_gdb_words(static_cast<int>(*k), *length, opt.bound), opt);
            };
        });

        auto* gcount = graph->add_subcommand("count", "Count generalized de Bruijn words");
        gcount->add_option("--k", *k, "Alphabet size")->required();
        gcount->add_option("--length", *length, "Word length")->required();
        gcount->callback([&run, k, length, &opt] {
            run = [k, length, &opt] {
                return emit_count("DBW_" + std::to_string(*k) + "(" + std::to_string(*length) + ")",
                                  count_gdb_words(static_cast<int>(*k), *length), opt);
            };
        });
    }

    // ---- inv ----
    {
        auto* inv = app.add_subcommand("inv", "Invertible necklaces over a prime alphabet");
        inv->require_subcommand(1);
        auto p = std::make_shared<std::int64_t>();
        auto n = std::make_shared<std::int64_t>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto v = std::make_shared<std::string>();

        auto* list = inv->add_subcommand("list", "All invertible necklaces of length n");
        list->add_option("--p", *p, "Prime alphabet size")->required();
        list->add_option("--n", *n, "Length")->required();
        list->callback([&run, p, n, &opt] {
            run = [p, n, &opt] { return emit_necklaces(enumerate_invertible_necklaces(*p, *n, opt.bound), opt); };
        });

        auto* count = inv->add_subcommand("count", "Generalized totient Phi_p(n) and Phi_p(n)/n");
        count->add_option("--p", *p, "Prime alphabet size")->required();
        count->add_option("--n", *n, "Length")->required();
        count->callback([&run, p, n, &opt] {
            run = [p, n, &opt] {
                const BigInt phi = count_normal_elements(*p, *n);
                if (opt.format == "csv") {
                    emit_csv({"name", "value"},
                             {{"Phi_" + std::to_string(*p) + "(" + std::to_string(*n) + ")", str(phi)},
                              {"invertible_necklaces", *n >= 2 ? str(BigInt(phi / *n)) : "-"}});
                    return 0;
                }
                json j = base_object();
                j["phi"] = str(phi);
                if (*n >= 2) j["invertible_necklaces"] = str(BigInt(phi / *n));
                if (opt.format == "text")
                    std::cout << "Phi_" << *p << "(" << *n << ") = " << str(phi) << "\n";
                else
                    emit(j);
                return 0;
            };
        });

        auto* mul = inv->add_subcommand("mul", "Reutenauer product of two invertible necklaces");
        mul->add_option("--p", *p, "Prime alphabet size")->required();
        mul->add_option("--a", *a, "First necklace")->required();
        mul->add_option("--b", *b, "Second necklace")->required();
        mul->callback([&run, p, a, b, &opt] {
            run = [p, a, b, &opt] {
                const CirculantClass ca(Necklace(Word::parse(*a, static_cast<int>(*p))), *p);
                const CirculantClass cb(Necklace(Word::parse(*b, static_cast<int>(*p))), *p);
                const CirculantClass prod = reutenauer_mul(ca, cb);
                json j = base_object();
                j["a"] = ca.representative().str();
                j["b"] = cb.representative().str();
                j["product"] = prod.representative().str();
                const GfpMatrix cm = circulant(prod.representative().canonical(), *p);
                json rows = json::array();
                for (Eigen::Index i = 0; i < cm.rows(); ++i) {
                    json row = json::array();
                    for (Eigen::Index c = 0; c < cm.cols(); ++c) row.push_back(cm(i, c));
                    rows.push_back(std::move(row));
                }
                j["matrix"] = {{"p", *p}, {"rows", std::move(rows)}};
                if (opt.format == "text")
                    std::cout << j["a"].get<std::string>() << " * " << j["b"].get<std::string>() << " = "
                              << j["product"].get<std::string>() << "\n";
                else if (opt.format == "csv")
                    emit_csv({"a", "b", "product"},
                             {{j["a"].get<std::string>(), j["b"].get<std::string>(), j["product"].get<std::string>()}});
                else
                    emit(j);
                return 0;
            };
        });

        auto* act = inv->add_subcommand("act", "Action of an invertible class on a necklace");
        act->add_option("--p", *p, "Prime alphabet size")->required();
        act->add_option("--a", *a, "Invertible class")->required();
        act->add_option("--v", *v, "Necklace acted on")->required();
        act->callback([&run, p, a, v, &opt] {
            run = [p, a, v, &opt] {
                const CirculantClass ca(Necklace(Word::parse(*a, static_cast<int>(*p))), *p);
                const Necklace nv(Word::parse(*v, static_cast<int>(*p)));
                const Necklace out = reutenauer_act(ca, nv);
                json j = base_object();
                j["a"] = ca.representative().str();
                j["v"] = nv.str();
                j["result"] = out.str();
                if (opt.format == "text")
                    std::cout << j["a"].get<std::string>() << " . " << j["v"].get<std::string>() << " = "
                              << out.str() << "\n";
                else if (opt.format == "csv")
                    emit_csv({"a", "v", "result"},
                             {{j["a"].get<std::string>(), j["v"].get<std::string>(), out.str()}});
                else
                    emit(j);
                return 0;
            };
        });

        auto* dich = inv->add_subcommand("dichotomy", "Scan for a singular nonzero-weight aperiodic necklace");
        dich->add_option("--p", *p, "Prime alphabet size")->required();
        dich->add_option("--n", *n, "Length")->required();
        dich->callback([&run, p, n, &opt] {
            run = [p, n, &opt] {
                const DichotomyResult r = verify_invertibility_dichotomy(*p, *n, opt.bound);
                json j = base_object();
                j["all_invertible"] = r.all_invertible;
                if (r.counterexample) j["counterexample"] = r.counterexample->str();
                if (opt.format == "text")
                    std::cout << (r.all_invertible ? "AllInvertible"
                                                   : "Counterexample " + r.counterexample->str())
                              << "\n";
                else if (opt.format == "csv")
                    emit_csv({"all_invertible", "counterexample"},
                             {{r.all_invertible ? "true" : "false",
                               r.counterexample ? r.counterexample->str() : ""}});
                else
                    emit(j);
                return 0;
            };
        });
    }

    // ---- snf ----
    {
        auto* cmd = app.add_subcommand("snf", "Smith Normal Form of a Laplacian or explicit matrix");
        auto k = std::make_shared<std::int64_t>(0);
        auto n = std::make_shared<std::int64_t>(0);
        auto reduced = std::make_shared<bool>(false);
        auto matrix = std::make_shared<std::string>();
        cmd->add_option("--k", *k, "Out-degree of DB(k, n)");
        cmd->add_option("--n", *n, "Vertex count of DB(k, n)");
        cmd->add_flag("--reduced", *reduced, "Use the reduced Laplacian");
        cmd->add_option("--matrix", *matrix, "Row-major JSON array of integer rows");
        cmd->callback([&run, k, n, reduced, matrix, &opt] {
            run = [k, n, reduced, matrix, &opt] {
                IntMatrix m;
                std::string label;
                if (!matrix->empty()) {
                    m = parse_matrix_json(*matrix);
                    label = "matrix";
                } else {
                    if (*k == 0 || *n == 0) raise(errc::out_of_range, "snf needs --matrix or both --k and --n");
                    const GdbGraph g(*k, *n);
                    m = *reduced ? reduced_laplacian(g) : laplacian(g);
                    label = (*reduced ? "reduced_laplacian(DB(" : "laplacian(DB(") + std::to_string(*k) + "," +
                            std::to_string(*n) + "))";
                }
                const SnfResult snf = smith_normal_form(m);
                std::vector<std::string> factors;
                for (const BigInt& f : snf.invariant_factors) factors.push_back(str(f));
                if (opt.format == "csv") {
                    std::vector<std::vector<std::string>> rows;
                    for (const auto& f : factors) rows.push_back({f});
                    emit_csv({"invariant_factor"}, rows);
                } else if (opt.format == "text") {
                    std::cout << label << " invariant factors:";
                    for (const auto& f : factors) std::cout << " " << f;
                    std::cout << "\n";
                } else {
                    json j = base_object();
                    j["name"] = label;
                    j["invariant_factors"] = factors;
                    emit(j);
                }
                return 0;
            };
        });
    }

    // ---- group ----
    {
        auto* group = app.add_subcommand("group", "Sandpile and Reutenauer group structures");
        group->require_subcommand(1);
        auto k = std::make_shared<std::int64_t>();
        auto n = std::make_shared<std::int64_t>();
        auto p = std::make_shared<std::int64_t>();
        auto d = std::make_shared<std::int64_t>();

        auto* sand = group->add_subcommand("sandpile", "Sandpile group K(DB(k, n))");
        sand->add_option("--k", *k, "Out-degree")->required();
        sand->add_option("--n", *n, "Vertex count")->required();
        sand->callback([&run, k, n, &opt] {
            run = [k, n, &opt] {
                return emit_group("K(DB(" + std::to_string(*k) + "," + std::to_string(*n) + "))",
                                  sandpile_group(GdbGraph(*k, *n)), opt);
            };
        });

        auto* reut = group->add_subcommand("reutenauer", "Reutenauer group RG_p^n");
        reut->add_option("--p", *p, "Prime alphabet size")->required();
        reut->add_option("--n", *n, "Length")->required();
        reut->callback([&run, p, n, &opt] {
            run = [p, n, &opt] {
                return emit_group("RG_" + std::to_string(*p) + "^" + std::to_string(*n),
                                  reutenauer_group_structure(*p, *n), opt);
            };
        });

        auto* pp = group->add_subcommand("primepower", "Closed form of K(DB(p, p^d))");
        pp->add_option("--p", *p, "Prime")->required();
        pp->add_option("--d", *d, "Exponent")->required();
        pp->callback([&run, p, d, &opt] {
            run = [p, d, &opt] {
                return emit_group("K(DB(" + std::to_string(*p) + "," + std::to_string(*p) + "^" +
                                      std::to_string(*d) + "))",
                                  sandpile_prime_power(*p, *d), opt);
            };
        });
    }

    // ---- verify ----
    {
        auto* verify = app.add_subcommand("verify", "Cross-route consistency checks");
        verify->require_subcommand(1);
        auto max_n = std::make_shared<std::int64_t>(8);
        auto p = std::make_shared<std::int64_t>(2);
        auto n = std::make_shared<std::int64_t>();

        auto* tables = verify->add_subcommand("tables", "Counting formulas vs enumeration");
        tables->add_option("--max-n", *max_n, "Largest n checked")->capture_default_str();
        tables->callback([&run, max_n, &opt] {
            run = [max_n, &opt] { return emit_report(verify_tables(*max_n, opt.bound), opt); };
        });

        auto* bij = verify->add_subcommand("bijection", "Word/necklace correspondence counts");
        bij->add_option("--p", *p, "Prime alphabet size")->capture_default_str();
        bij->add_option("--n", *n, "Necklace length")->required();
        bij->callback([&run, p, n, &opt] {
            run = [p, n, &opt] { return emit_report(verify_bijection(*p, *n, opt.bound), opt); };
        });

        auto* dich = verify->add_subcommand("dichotomy", "Invertibility dichotomy over a range");
        dich->add_option("--p", *p, "Prime alphabet size")->capture_default_str();
        dich->add_option("--max-n", *max_n, "Largest length checked")->capture_default_str();
        dich->callback([&run, p, max_n, &opt] {
            run = [p, max_n, &opt] { return emit_report(verify_dichotomy(*p, *max_n, opt.bound), opt); };
        });
    }

    // Global flags may follow the subcommand (gdbtool verify tables --format csv).
    auto enable_fallthrough = [](auto&& self, CLI::App* cmd) -> void {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; }))
            self(self, sub);
    };
    enable_fallthrough(enable_fallthrough, &app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run ? run() : 2;
    } catch (const DomainError& e) {
        json err;
        err["schema_version"] = kSchemaVersion;
        err["error"]["kind"] = e.kind();
        err["error"]["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err;
        err["schema_version"] = kSchemaVersion;
        err["error"]["kind"] = "Internal";
        err["error"]["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
