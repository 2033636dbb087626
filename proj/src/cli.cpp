#include "lensurg/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "lensurg/cache.hpp"
#include "lensurg/errors.hpp"
#include "lensurg/io.hpp"
#include "lensurg/keystone.hpp"
#include "lensurg/lattice.hpp"
#include "lensurg/lens.hpp"
#include "lensurg/lisca.hpp"
#include "lensurg/parallel.hpp"
#include "lensurg/surgery.hpp"
#include "lensurg/verify.hpp"

namespace lensurg {

namespace {

const std::set<std::string, std::less<>> value_options{
    "--eps",  "--framing", "--jobs", "--cache-dir", "--max-order", "--type",       "--bound",    "--family",
    "--b",    "--s",       "--t",    "--basis",     "--matrix",    "--only",       "--rank-bound", "--cf-cases"};

bool is_long_option(std::string_view tok) {
    return tok.size() > 2 && tok.starts_with("--") && std::isalpha(static_cast<unsigned char>(tok[2]));
}

}  // namespace

std::vector<std::string> normalize_arguments(const std::vector<std::string>& args) {
    std::vector<std::string> head, moved, tail;
    bool sentinel = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& tok = args[i];
        if (!sentinel && tok == "--") {
            sentinel = true;
            continue;
        }
        if (is_long_option(tok)) {
            std::string opt = tok;
            if (value_options.contains(tok) && i + 1 < args.size()) opt += "=" + args[++i];
            (sentinel ? moved : head).push_back(std::move(opt));
        } else {
            (sentinel ? tail : head).push_back(tok);
        }
    }
    head.insert(head.end(), moved.begin(), moved.end());
    if (sentinel) {
        head.push_back("--");
        head.insert(head.end(), tail.begin(), tail.end());
    }
    return head;
}

namespace {

struct Globals {
    bool json = false;
    int jobs = default_jobs();
    std::string cache_dir;
    bool no_cache = false;
    bool timing = false;
};

std::vector<int> to_ints(const CFExpansion& xs) {
    std::vector<int> out;
    for (const auto& x : xs) out.push_back(to_int(x));
    return out;
}

IntMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream in(text);
    for (std::string row; std::getline(in, row, ';');) rows.push_back(to_ints(parse_terms(row)));
    if (rows.empty() || rows.front().empty()) throw ParseError("empty matrix '" + text + "'");
    IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size()) throw ParseError("ragged matrix row " + std::to_string(i + 1) + " in '" + text + "'");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    return m;
}

SimpleKnotClass parse_simple_knot(std::string_view text) {
    std::string_view body = text;
    if (body.starts_with("K(") && body.ends_with(")")) body = body.substr(2, body.size() - 3);
    const auto v = parse_terms(body);
    if (v.size() != 3) throw ParseError("expected K(p,q,k) or p,q,k, got '" + std::string(text) + "'");
    return {v[0], v[1], v[2]};
}

int parse_basis(const std::string& text) {
    std::string_view body = text;
    if (body.starts_with("e")) body.remove_prefix(1);
    const int k = to_int(parse_integer(body));
    if (k < 1) throw ParseError("basis vectors are e1, e2, ...; got '" + text + "'");
    return k - 1;
}

StringType parse_type(const std::string& text) {
    for (int ti = 1; ti <= 7; ++ti)
        if (type_name(static_cast<StringType>(ti)) == text) return static_cast<StringType>(ti);
    throw ParseError("unknown string type '" + text + "' (T1..T7)");
}

std::string describe(const LiscaString& ls) {
    std::string out(type_name(ls.type));
    if (ls.type == StringType::T1 || ls.type == StringType::T4) {
        out += " b=" + format_terms(ls.b) + " c=" + format_terms(ls.c);
        if (!ls.history.empty()) out += " history=" + ls.history;
    } else {
        out += " s=" + std::to_string(ls.s) + " t=" + std::to_string(ls.t);
    }
    if (ls.reversed) out += " reversed";
    return out;
}

std::string describe(const FamilyWitness& w) {
    return std::string(family_name(w.family)) + " m=" + to_string(w.m) + " d=" + to_string(w.d) + " " +
           std::string(transform_name(w.mode));
}

// An embedding class as shown to the user: the explicit table when a
// recognized type's table lies in the class (its columns carry the usual
// labels), otherwise the canonical representative.
struct Presented {
    LatticeEmbedding matrix;
    std::string labeling;
};

std::vector<Presented> present(const CFExpansion& s, const std::vector<LatticeEmbedding>& classes) {
    const auto form = form_from_string(s);
    const auto types = recognize_string_type(s);
    std::vector<Presented> out;
    for (const auto& cls : classes) {
        Presented p{cls, "canonical"};
        for (const auto& ls : types) {
            const auto table = table_embedding(ls);
            if (verify_embedding(form, table) && embeddings_equivalent(table, cls)) {
                p = {table, "table " + std::string(type_name(ls.type))};
                break;
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

class Cli {
public:
    Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& raw) {
        CLI::App app{"Lens spaces, chain-link surgeries and lattice embeddings", "lensurg"};
        app.require_subcommand(1);
        app.add_flag("--json", g_.json, "JSON-lines output");
        app.add_option("--jobs", g_.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
        app.add_option("--cache-dir", g_.cache_dir, "embedding cache directory (default $LENSURG_CACHE_DIR)");
        app.add_flag("--no-cache", g_.no_cache, "never read or write the cache");
        app.add_flag("--timing", g_.timing, "report wall-clock times");
        build(app);

        auto args = normalize_arguments(raw);
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return exit_ok;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return exit_ok;
        } catch (const CLI::ParseError& e) {
            err_ << "usage error: " << e.what() << '\n';
            return exit_usage;
        }

        const auto start = std::chrono::steady_clock::now();
        int status = exit_usage;
        try {
            for (auto& [sub, action] : actions_) {
                if (sub->parsed()) {
                    status = action();
                    break;
                }
            }
        } catch (const ParseError& e) {
            err_ << "parse error: " << e.what() << '\n';
            return exit_usage;
        } catch (const std::invalid_argument& e) {
            err_ << "invalid input: " << e.what() << '\n';
            return exit_usage;
        } catch (const std::domain_error& e) {
            err_ << "invalid input: " << e.what() << '\n';
            return exit_usage;
        }
        if (g_.timing) {
            err_ << "time: " << std::fixed << std::setprecision(3)
                 << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
        }
        return status;
    }

private:
    using Action = std::function<int()>;

    CLI::App* group(CLI::App& app, const std::string& name, const std::string& help) {
        auto* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    }

    CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, Action action) {
        auto* sub = parent->add_subcommand(name, help);
        sub->fallthrough();
        actions_.emplace_back(sub, std::move(action));
        return sub;
    }

    void emit(const Json& j) { out_ << j.dump() << '\n'; }

    EmbeddingCache* cache(bool only_if_requested = false) {
        if (g_.no_cache) return nullptr;
        if (!cache_) {
            std::optional<std::filesystem::path> dir;
            if (!g_.cache_dir.empty()) dir = g_.cache_dir;
            else if (const char* env = std::getenv("LENSURG_CACHE_DIR"); env && *env) dir = env;
            else if (!only_if_requested) dir = EmbeddingCache::default_dir();
            if (!dir) return nullptr;
            cache_ = std::make_unique<EmbeddingCache>(*dir, &err_);
        }
        return cache_.get();
    }

    std::vector<LatticeEmbedding> embeddings(const CFExpansion& s) {
        if (auto* c = cache()) {
            auto r = c->embeddings(s);
            if (g_.timing) err_ << "cache: " << (r.hit ? "hit" : "miss") << '\n';
            return r.embeddings;
        }
        return find_embeddings(form_from_string(s));
    }

    void build(CLI::App& app);
    void build_cf(CLI::App& app);
    void build_lens(CLI::App& app);
    void build_family(CLI::App& app);
    void build_string(CLI::App& app);
    void build_lattice(CLI::App& app);
    void build_keystone(CLI::App& app);
    void build_homology(CLI::App& app);
    void build_verify(CLI::App& app);

    int print_keystones(const CFExpansion& s, bool suggest, const std::string& basis);

    std::ostream& out_;
    std::ostream& err_;
    Globals g_;
    std::unique_ptr<EmbeddingCache> cache_;
    std::vector<std::pair<CLI::App*, Action>> actions_;

    // argument storage shared by the subcommands
    std::string terms_, first_, second_, eps_, matrix_, family_, b_, type_, basis_, only_;
    bool oriented_ = false, reversing_ = false, all_ = false;
    int bound_ = 9, s_ = 0, t_ = 0, max_order_ = 300, rank_bound_ = 9, cf_cases_ = 10000;
    long long framing_ = -1;
};

void Cli::build(CLI::App& app) {
    build_cf(app);
    build_lens(app);
    build_family(app);
    build_string(app);
    build_lattice(app);
    build_keystone(app);
    build_homology(app);
    build_verify(app);
}

void Cli::build_cf(CLI::App& app) {
    auto* cf = group(app, "cf", "negative continued fractions");
    leaf(cf, "eval", "value of [a1,...,an]", [this] {
        const auto t = parse_terms(terms_);
        const auto v = eval_cf(t);
        if (g_.json) emit({{"terms", to_json(t)}, {"value", v.str()}});
        else out_ << v.str() << '\n';
        return exit_ok;
    })->add_option("terms", terms_, "comma-separated terms (after --)")->required();
    leaf(cf, "expand", "standard expansion of p/q > 1", [this] {
        const auto t = expand_cf(parse_rational(first_));
        if (g_.json) emit({{"value", first_}, {"terms", to_json(t)}});
        else out_ << format_terms(t) << '\n';
        return exit_ok;
    })->add_option("value", first_, "p/q")->required();
    leaf(cf, "complement", "complementary standard string", [this] {
        const auto t = complementary_string(parse_terms(terms_));
        if (g_.json) emit({{"terms", to_json(parse_terms(terms_))}, {"complement", to_json(t)}});
        else out_ << format_terms(t) << '\n';
        return exit_ok;
    })->add_option("terms", terms_, "standard string")->required();
}

void Cli::build_lens(CLI::App& app) {
    auto* lens = group(app, "lens", "lens spaces L(p,q)");
    auto* homeo = leaf(lens, "homeo", "decide L1 = L2", [this] {
        const auto a = parse_lens(first_), b = parse_lens(second_);
        const auto d = is_homeomorphic(a, b, oriented_);
        if (g_.json) {
            Json j{{"first", to_json(a)}, {"second", to_json(b)}, {"oriented", oriented_}, {"homeomorphic", d.homeomorphic}};
            j["witness"] = d.witness ? Json(transform_name(*d.witness)) : Json(nullptr);
            emit(j);
        } else {
            out_ << (d.homeomorphic ? "homeomorphic (" + std::string(transform_name(*d.witness)) + ")" : "not homeomorphic") << '\n';
        }
        return exit_ok;
    });
    homeo->add_option("first", first_, "L(p,q) or p/q")->required();
    homeo->add_option("second", second_, "L(p,q) or p/q")->required();
    homeo->add_flag("--oriented", oriented_, "orientation-preserving maps only");
    leaf(lens, "mirror", "L(p,p-q)", [this] {
        const auto m = mirror(parse_lens(first_));
        if (g_.json) emit({{"space", to_json(parse_lens(first_))}, {"mirror", to_json(m)}});
        else out_ << m.str() << '\n';
        return exit_ok;
    })->add_option("space", first_, "L(p,q) or p/q")->required();
    leaf(lens, "string", "standard string of p/q", [this] {
        const auto L = parse_lens(first_);
        const auto t = to_standard_string(L);
        if (g_.json) emit({{"space", to_json(L)}, {"terms", to_json(t)}});
        else out_ << format_terms(t) << '\n';
        return exit_ok;
    })->add_option("space", first_, "L(p,q) or p/q")->required();
}

void Cli::build_family(CLI::App& app) {
    auto* fam = group(app, "family", "the four families of lens spaces bounding rational balls");
    auto* classify = leaf(fam, "classify", "family witnesses of one lens space", [this] {
        const auto L = parse_lens(first_);
        const auto ws = classify_family(L, oriented_);
        if (g_.json) {
            Json list = Json::array();
            for (const auto& w : ws) list.push_back(to_json(w));
            emit({{"space", to_json(L)}, {"witnesses", std::move(list)}});
        } else if (ws.empty()) {
            out_ << "none\n";
        } else {
            for (const auto& w : ws) out_ << describe(w) << '\n';
        }
        return exit_ok;
    });
    classify->add_option("space", first_, "L(p,q) or p/q")->required();
    classify->add_flag("--oriented", oriented_, "orientation-preserving maps only");
    auto* enumerate = leaf(fam, "enumerate", "all members with p <= N", [this] {
        if (max_order_ < 4) throw std::invalid_argument("--max-order must be at least 4");
        for (int p = 2; p <= max_order_; ++p) {
            for (int q = 1; q < p; ++q) {
                if (gcd(Integer(p), Integer(q)) != 1) continue;
                const auto L = normalize(p, q);
                const auto ws = classify_family(L, oriented_);
                if (ws.empty()) continue;
                if (g_.json) emit({{"space", to_json(L)}, {"witness", to_json(ws.front())}});
                else out_ << L.str() << ' ' << describe(ws.front()) << '\n';
            }
        }
        return exit_ok;
    });
    enumerate->add_option("--max-order", max_order_, "largest p")->capture_default_str();
    enumerate->add_flag("--oriented", oriented_, "orientation-preserving maps only");
}

void Cli::build_string(CLI::App& app) {
    auto* str = group(app, "string", "string types (1)-(7)");
    leaf(str, "recognize", "types of a string (-a1,...,-an)", [this] {
        const auto t = parse_terms(terms_);
        const auto found = recognize_string_type(t);
        if (g_.json) {
            Json list = Json::array();
            for (const auto& ls : found) list.push_back(to_json(ls));
            emit({{"terms", to_json(t)}, {"types", std::move(list)}});
        } else if (found.empty()) {
            out_ << "none\n";
        } else {
            for (const auto& ls : found) out_ << describe(ls) << '\n';
        }
        return exit_ok;
    })->add_option("terms", terms_, "coefficients (after --)")->required();
    auto* gen = leaf(str, "generate", "strings of one type up to a length", [this] {
        for (const auto& ls : generate_type_strings(parse_type(type_), bound_)) {
            if (g_.json) emit(to_json(ls));
            else out_ << format_terms(ls.coefficients) << "  " << describe(ls) << '\n';
        }
        return exit_ok;
    });
    gen->add_option("--type", type_, "T1..T7")->required();
    gen->add_option("--bound", bound_, "maximal length")->capture_default_str();
}

void Cli::build_lattice(CLI::App& app) {
    auto* lat = group(app, "lattice", "embeddings of the plumbing lattice");
    leaf(lat, "embed", "all embedding classes, with keystones", [this] {
        const auto s = parse_terms(terms_);
        const auto classes = present(s, embeddings(s));
        if (g_.json) {
            Json list = Json::array();
            for (const auto& c : classes) {
                list.push_back({{"labeling", c.labeling}, {"matrix", to_json(c.matrix)}, {"keystones", to_json(keystone_set(c.matrix))}});
            }
            emit({{"terms", to_json(s)}, {"classes", std::move(list)}});
        } else {
            out_ << "classes: " << classes.size() << '\n';
            for (std::size_t i = 0; i < classes.size(); ++i) {
                out_ << "class " << i + 1 << " (" << classes[i].labeling << ")\n" << sign_table(classes[i].matrix);
                out_ << "keystones:";
                for (int e : keystone_set(classes[i].matrix).keystones) out_ << ' ' << basis_label(e);
                out_ << '\n';
            }
        }
        return exit_ok;
    })->add_option("terms", terms_, "coefficients (after --)")->required();
    auto* ver = leaf(lat, "verify", "check a matrix against the form", [this] {
        const auto s = parse_terms(terms_);
        const auto m = parse_matrix(matrix_);
        const bool ok = verify_embedding(form_from_string(s), m);
        if (g_.json) emit({{"terms", to_json(s)}, {"matrix", to_json(m)}, {"verdict", ok ? "pass" : "fail"}});
        else out_ << (ok ? "PASS" : "FAIL") << '\n';
        return ok ? exit_ok : exit_failed;
    });
    ver->add_option("terms", terms_, "coefficients (after --)")->required();
    ver->add_option("--matrix", matrix_, "rows separated by ';', entries by ','")->required();
    leaf(lat, "table", "explicit embedding of a recognized string", [this] {
        const auto s = parse_terms(terms_);
        const auto found = recognize_string_type(s);
        if (found.empty()) {
            if (g_.json) emit({{"terms", to_json(s)}, {"verdict", "fail"}, {"reason", "no recognized type"}});
            else out_ << "FAIL no recognized type\n";
            return exit_failed;
        }
        const auto table = table_embedding(found.front());
        const bool ok = verify_embedding(form_from_string(s), table);
        if (g_.json) emit({{"terms", to_json(s)}, {"type", to_json(found.front())}, {"matrix", to_json(table)}, {"verdict", ok ? "pass" : "fail"}});
        else out_ << describe(found.front()) << '\n' << sign_table(table);
        return ok ? exit_ok : exit_failed;
    })->add_option("terms", terms_, "coefficients (after --)")->required();
}

int Cli::print_keystones(const CFExpansion& s, bool suggest, const std::string& basis) {
    const auto classes = present(s, embeddings(s));
    if (classes.empty()) {
        if (g_.json) emit({{"terms", to_json(s)}, {"verdict", "fail"}, {"reason", "no embedding"}});
        else out_ << "FAIL no embedding\n";
        return exit_failed;
    }
    int status = exit_ok;
    for (const auto& c : classes) {
        const auto report = keystone_set(c.matrix);
        if (!suggest) {
            if (g_.json) {
                emit({{"terms", to_json(s)}, {"labeling", c.labeling}, {"report", to_json(report)}});
            } else {
                out_ << "labeling: " << c.labeling << "\nE2:";
                for (int e : report.e2) out_ << ' ' << basis_label(e);
                out_ << "\nkeystones:";
                for (int e : report.keystones) out_ << ' ' << basis_label(e);
                out_ << '\n';
                for (const auto& [e, w] : report.witnesses) {
                    out_ << basis_label(e) << " removes";
                    for (int x : w.order) out_ << ' ' << basis_label(x);
                    out_ << '\n';
                }
            }
            continue;
        }
        std::vector<int> chosen = report.keystones;
        if (!basis.empty()) chosen = {parse_basis(basis)};
        for (int e : chosen) {
            const auto knot = suggested_knot(c.matrix, s, e);
            const auto check = verify_s1s2(knot.coefficients, knot.epsilon, knot.framing);
            if (!check.pass) status = exit_failed;
            if (g_.json) {
                Json j = to_json(knot);
                j["s1s2"] = check.pass ? "pass" : "fail";
                j["snf"] = to_json(check.snf);
                emit(j);
            } else {
                std::vector<Integer> eps(knot.epsilon.begin(), knot.epsilon.end());
                out_ << basis_label(e) << " eps=" << format_terms(eps) << " framing=" << knot.framing << ' '
                     << (check.pass ? "PASS" : "FAIL") << " snf=" << format_terms(check.snf) << '\n';
            }
        }
    }
    return status;
}

void Cli::build_keystone(CLI::App& app) {
    auto* ks = group(app, "keystone", "keystone vectors and suggested knots");
    leaf(ks, "report", "E2, keystones and their filtrations", [this] {
        return print_keystones(parse_terms(terms_), false, {});
    })->add_option("terms", terms_, "coefficients (after --)")->required();
    auto* sug = leaf(ks, "suggest", "suggested knots with the S1xS2 homology check", [this] {
        return print_keystones(parse_terms(terms_), true, basis_);
    });
    sug->add_option("terms", terms_, "coefficients (after --)")->required();
    sug->add_option("--basis", basis_, "only this keystone, e.g. e3");
}

void Cli::build_homology(CLI::App& app) {
    auto* hom = group(app, "homology", "first homology of chain-link surgeries");
    leaf(hom, "classes", "order and meridian classes", [this] {
        const auto f = parse_terms(terms_);
        const auto mc = meridian_classes(f);
        if (g_.json) {
            emit({{"framings", to_json(f)}, {"order", to_json(mc.order)}, {"degenerate", mc.degenerate}, {"classes", to_json(mc.classes)},
                  {"q_inverse", to_json(mc.q_inverse)}, {"q", to_json(mc.q)}, {"lens", to_json(mc.lens)}});
        } else {
            out_ << "order " << to_string(mc.order) << (mc.degenerate ? " (infinite cokernel)" : "") << '\n';
            out_ << "lens " << mc.lens.str() << " q=" << to_string(mc.q) << " q^-1=" << to_string(mc.q_inverse) << '\n';
            out_ << "mu " << format_terms(mc.classes) << '\n';
        }
        return exit_ok;
    })->add_option("terms", terms_, "framings (after --)")->required();

    auto* t16 = leaf(hom, "theorem16", "dual-knot classes of one family instance, or the whole grid", [this] {
        std::vector<Theorem16Instance> rows;
        if (all_) {
            for (const auto& [f, params] : theorem16_grid()) rows.push_back(theorem16_instance(f, params));
        } else {
            const auto f = parse_dual_family(family_);
            if (!f) throw ParseError("unknown family '" + family_ + "'");
            FamilyParams params{b_.empty() ? CFExpansion{} : parse_terms(b_), s_, t_};
            rows.push_back(theorem16_instance(*f, params));
        }
        int status = exit_ok;
        for (const auto& row : rows) {
            if (!row.match) status = exit_failed;
            if (g_.json) {
                emit(to_json(row));
            } else {
                out_ << (row.match ? "PASS " : "FAIL ") << dual_family_name(row.family) << ' ' << row.params.str(row.family) << ' '
                     << row.lens.str() << " m=" << to_string(row.m) << " computed=" << to_string(row.computed.in_first) << '/'
                     << to_string(row.computed.in_last) << " claimed=" << to_string(row.claimed.in_first) << '/'
                     << to_string(row.claimed.in_last) << '\n';
            }
        }
        return status;
    });
    t16->add_option("--family", family_, "BGI GOFK BGII BGIII BGV SPOR BGIV BGIV'");
    t16->add_option("--b", b_, "b-sequence for BGI, GOFK, BGII");
    t16->add_option("--s", s_, "s for the six-component families");
    t16->add_option("--t", t_, "t for the six-component families");
    t16->add_flag("--all", all_, "run the whole parameter grid");

    auto* s1s2 = leaf(hom, "s1s2", "does surgery on the knot give S1xS2 in homology", [this] {
        const auto f = parse_terms(terms_);
        const auto eps = to_ints(parse_terms(eps_));
        const auto r = verify_s1s2(f, eps, framing_);
        if (g_.json) emit({{"framings", to_json(f)}, {"epsilon", eps}, {"framing", framing_}, {"verdict", r.pass ? "pass" : "fail"}, {"snf", to_json(r.snf)}});
        else out_ << (r.pass ? "PASS" : "FAIL") << " snf=" << format_terms(r.snf) << '\n';
        return r.pass ? exit_ok : exit_failed;
    });
    s1s2->add_option("terms", terms_, "chain framings (after --)")->required();
    s1s2->add_option("--eps", eps_, "linking numbers with the chain")->required();
    s1s2->add_option("--framing", framing_, "framing of the knot")->capture_default_str();

    auto* eq = leaf(hom, "simple-eq", "equivalence of simple knot classes", [this] {
        const auto a = parse_simple_knot(first_), b = parse_simple_knot(second_);
        const bool same = simple_knot_equivalent(a, b, {reversing_});
        if (g_.json) emit({{"first", a.str()}, {"second", b.str()}, {"equivalent", same}});
        else out_ << (same ? "equivalent" : "not equivalent") << '\n';
        return exit_ok;
    });
    eq->add_option("first", first_, "K(p,q,k) or p,q,k")->required();
    eq->add_option("second", second_, "K(p,q,k) or p,q,k")->required();
    eq->add_flag("--orientation-reversing", reversing_, "also use orientation-reversing homeomorphisms");
}

void Cli::build_verify(CLI::App& app) {
    auto* ver = group(app, "verify", "acceptance sweeps");
    auto* all = leaf(ver, "all", "every criterion", [this] {
        if (max_order_ < 4) throw std::invalid_argument("--max-order must be at least 4");
        if (rank_bound_ < 0 || cf_cases_ < 0) throw std::invalid_argument("bounds must be non-negative");
        VerifyConfig config;
        config.max_order = max_order_;
        config.rank_bound = rank_bound_;
        config.cf_cases = cf_cases_;
        config.jobs = g_.jobs;
        config.cache = cache(true);
        std::vector<int> only;
        if (!only_.empty()) only = to_ints(parse_terms(only_));
        bool pass = true;
        for (const auto& r : verify_all(config, only)) {
            pass = pass && r.pass;
            if (g_.json) {
                Json failures = Json::array();
                for (const auto& f : r.failures) failures.push_back({{"subject", f.subject}, {"detail", f.detail}, {"repro", f.repro}});
                emit({{"subject", "criterion " + std::to_string(r.id)},
                      {"verdict", r.pass ? "pass" : "fail"},
                      {"witness", {{"title", r.title}, {"summary", r.summary}, {"checked", r.checked}, {"failures", std::move(failures)}}},
                      {"timing", g_.timing ? Json(r.seconds) : Json(nullptr)}});
                continue;
            }
            out_ << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.title << ": " << r.summary;
            if (g_.timing) out_ << " [" << std::fixed << std::setprecision(2) << r.seconds << " s]";
            out_ << '\n';
            for (const auto& f : r.failures) out_ << "  " << f.subject << ": " << f.detail << "\n    repro: " << f.repro << '\n';
        }
        return pass ? exit_ok : exit_failed;
    });
    all->add_option("--max-order", max_order_, "largest p in the lens space sweep")->capture_default_str();
    all->add_option("--rank-bound", rank_bound_, "longest generated string")->capture_default_str();
    all->add_option("--cf-cases", cf_cases_, "random cases per identity")->capture_default_str();
    all->add_option("--only", only_, "comma-separated criterion ids");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Cli cli(out, err);
    return cli.run(args);
}

}  // namespace lensurg
