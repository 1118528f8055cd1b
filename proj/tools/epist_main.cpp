// Command-line front end: every library operation behind one binary.
//
// Exit codes: 0 = success (including expected mathematical negatives such as
// a failing preservation property), 1 = theory-violation or resource error,
// 2 = usage or input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "epist/epist.hpp"
#include "epist/verify.hpp"

namespace {

using namespace epist;

std::string pad(const std::string& s, std::size_t width) {
    std::string out = s;
    while (out.size() < width)
        out.push_back(' ');
    return out;
}

/// Left-justified table with two-space gutters and no trailing spaces.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty())
        return "";
    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c + 1 < row.size())
                line += pad(row[c], widths[c]) + "  ";
            else
                line += row[c];
        }
        out += line + "\n";
    }
    return out;
}

Morphism morphism_arg(const std::string& inline_text, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw ParseError("cannot open morphism file: " + file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return parse_morphism(text);
    }
    if (inline_text.empty())
        throw ParseError("no morphism given (inline argument or --file)");
    return parse_morphism(inline_text);
}

Alphabet alphabet_for_word(const std::string& word_text, const std::string& alphabet_opt) {
    if (!alphabet_opt.empty())
        return Alphabet(alphabet_opt);
    // infer: distinct letters of the word, in sorted order
    std::string letters;
    for (char c : word_text)
        if (letters.find(c) == std::string::npos)
            letters.push_back(c);
    std::sort(letters.begin(), letters.end());
    return Alphabet(letters);
}

std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

Json returns_json(const ReturnComputation& rc) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["factor"] = rc.u.str();
    j["method"] = rc.method == ReturnComputation::Method::Oracle ? "oracle" : "closed";
    if (rc.method == ReturnComputation::Method::ClosedForm) {
        j["d"] = rc.d.str();
        j["l"] = rc.ell;
        j["l_prime"] = rc.ell_prime;
    }
    Json left = Json::array();
    for (const Word& w : rc.left_returns)
        left.push_back(w.str());
    Json right = Json::array();
    for (const Word& w : rc.right_returns)
        right.push_back(w.str());
    j["left"] = left;
    j["right"] = right;
    return j;
}

int cmd_decompose(const Morphism& m, StripOrder order, const std::string& format) {
    DecomposeResult r = decompose_episturmian(m, order);
    if (format == "json") {
        Json j;
        j["schema"] = kSchemaVersion;
        j["episturmian"] = r.ok();
        if (r.ok()) {
            j["spinned"] = r.decomposition->spinned.str();
            j["permutation"] = to_text(to_morphism(r.decomposition->perm));
        } else {
            j["failed_step"] = r.failed_step;
            j["reason"] = r.reason;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (!r.ok()) {
        std::cout << "not episturmian (strip step " << r.failed_step << ": " << r.reason << ")\n";
        return 0;
    }
    std::cout << "spinned: " << (r.decomposition->spinned.empty() ? "-" : r.decomposition->spinned.str())
              << "\n";
    std::cout << "permutation: " << to_text(to_morphism(r.decomposition->perm)) << "\n";
    return 0;
}

int cmd_class(const Morphism& m, const std::string& format) {
    ConjugacyClass cls = enumerate_class(m);
    if (format == "json") {
        Json j;
        j["schema"] = kSchemaVersion;
        j["directive"] = cls.directive.str();
        j["permutation"] = to_text(to_morphism(cls.perm));
        j["pal"] = cls.pal.str();
        Json members = Json::array();
        for (std::size_t i = 0; i < cls.members.size(); ++i)
            members.push_back(Json{{"index", i},
                                   {"pal_prefix", cls.pal.prefix(i).str()},
                                   {"morphism", to_text(cls.members[i])}});
        j["members"] = members;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    const char* sep = format == "tsv" ? "\t" : "";
    rows.push_back({"morphism", "pal-prefix", "index"});
    for (std::size_t i = 0; i < cls.members.size(); ++i)
        rows.push_back({to_text(cls.members[i]), table_text(cls.pal.prefix(i)), std::to_string(i)});
    if (format == "tsv") {
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << (c ? sep : "") << row[c];
            std::cout << "\n";
        }
        return 0;
    }
    std::cout << render_table(rows);
    return 0;
}

int cmd_rauzy(const Morphism& m, std::size_t n, const std::string& format, bool annotate) {
    RauzyGraph g = rauzy_graph(m, n);
    std::vector<std::string> notes(g.vertices.size());
    std::vector<std::pair<Word, std::size_t>> dl(g.vertices.size());
    if (annotate) {
        ReturnsEngine engine(m);
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            ReturnComputation rc = engine.returns_closed_form(g.vertices[i]);
            dl[i] = {rc.d, rc.ell};
            notes[i] = "(" + rc.d.str() + "," + std::to_string(rc.ell) + ")";
        }
    }
    if (format == "dot") {
        std::cout << to_dot(g, annotate ? &notes : nullptr);
        return 0;
    }
    Json j;
    j["schema"] = kSchemaVersion;
    j["n"] = g.n;
    Json vertices = Json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        Json v;
        v["factor"] = g.vertices[i].str();
        if (annotate) {
            v["d"] = dl[i].first.str();
            v["l"] = dl[i].second;
        }
        vertices.push_back(v);
    }
    j["vertices"] = vertices;
    Json edges = Json::array();
    for (const RauzyEdge& e : g.edges)
        edges.push_back(Json{{"src", g.vertices[e.src].str()},
                             {"dst", g.vertices[e.dst].str()},
                             {"left", std::string(1, m.alphabet().symbol(e.left_label))},
                             {"right", std::string(1, m.alphabet().symbol(e.right_label))}});
    j["edges"] = edges;
    j["left_special"] = g.vertex(g.left_special).str();
    j["right_special"] = g.vertex(g.right_special).str();
    j["inner_label"] = g.inner_left.str();
    Json outer = Json::object();
    for (const auto& [letter, branch] : g.outer)
        outer[std::string(1, m.alphabet().symbol(letter))] = branch.left_word.str();
    j["outer_labels"] = outer;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_returns(const Morphism& m, const std::string& factor_text, Side side,
                const std::string& method, const std::string& format) {
    Word u = Word::parse(m.alphabet(), factor_text);
    std::optional<ReturnComputation> closed, oracle;
    if (method == "closed" || method == "both")
        closed = returns_closed_form(m, u);
    if (method == "oracle" || method == "both")
        oracle = returns_oracle_both(m, u);
    bool match = !(closed && oracle) ||
                 (closed->left_returns == oracle->left_returns &&
                  closed->right_returns == oracle->right_returns);
    if (format == "json") {
        Json j;
        j["schema"] = kSchemaVersion;
        j["side"] = side_name(side);
        if (closed)
            j["closed"] = returns_json(*closed);
        if (oracle)
            j["oracle"] = returns_json(*oracle);
        if (closed && oracle)
            j["match"] = match;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "factor: " << factor_text << "\n";
    if (closed) {
        std::cout << "d: " << closed->d.str() << "\n";
        std::cout << "l: " << closed->ell << "\n";
        std::cout << "l': " << closed->ell_prime << "\n";
    }
    auto print_set = [&](const char* label, const std::set<Word>& words) {
        std::cout << label << ":\n";
        for (const Word& w : words)
            std::cout << "  " << w.str() << "\n";
    };
    if (closed)
        print_set(side == Side::Left ? "left returns (closed)" : "right returns (closed)",
                  side == Side::Left ? closed->left_returns : closed->right_returns);
    if (oracle)
        print_set(side == Side::Left ? "left returns (oracle)" : "right returns (oracle)",
                  side == Side::Left ? oracle->left_returns : oracle->right_returns);
    if (closed && oracle)
        std::cout << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
    return 0;
}

int cmd_check_p(const Morphism& m, const std::string& factor_text, bool cross_check,
                const std::string& format) {
    Word u = Word::parse(m.alphabet(), factor_text);
    PreservationOptions opts;
    opts.cross_check_oracle = cross_check;
    PreservationVerdict v = check_preservation(m, u, opts);
    if (format == "json") {
        Json j;
        j["schema"] = kSchemaVersion;
        j["factor"] = u.str();
        j["image"] = m.apply(u).str();
        j["holds_P"] = v.holds_P;
        j["holds_P_prime"] = v.holds_P_prime;
        Json lhs = Json::array();
        for (const Word& w : v.lhs)
            lhs.push_back(w.str());
        Json rhs = Json::array();
        for (const Word& w : v.rhs)
            rhs.push_back(w.str());
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        if (v.witness)
            j["witness"] = v.witness->str();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "factor: " << u.str() << "\n";
    std::cout << "image: " << m.apply(u).str() << "\n";
    std::cout << "P: " << (v.holds_P ? "HOLDS" : "FAILS") << "\n";
    std::cout << "P': " << (v.holds_P_prime ? "HOLDS" : "FAILS") << "\n";
    if (v.witness)
        std::cout << "witness: " << v.witness->str() << "\n";
    return 0;
}

int cmd_obstructions(const Morphism& m, std::size_t n_max, const std::string& format) {
    ObstructionReport rep = run_obstruction_suite(m, n_max);
    if (format == "json") {
        Json j;
        j["schema"] = kSchemaVersion;
        j["a_min"] = std::string(1, m.alphabet().symbol(rep.a_min));
        j["j"] = rep.j;
        j["ind"] = rep.ind;
        j["m"] = rep.m;
        j["case1"] = rep.case1;
        j["case2"] = rep.case2;
        Json tested = Json::array();
        for (const ObstructionVerdict& t : rep.tested)
            tested.push_back(Json{{"n", t.n},
                                  {"case", t.kind == ObstructionCase::AminLeft ? 1 : 2},
                                  {"word", t.word.str()},
                                  {"holds_P", t.holds_P}});
        j["tested"] = tested;
        if (rep.onset)
            j["onset"] = *rep.onset;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "a_min: " << m.alphabet().symbol(rep.a_min) << "  j: " << rep.j
              << "  ind: " << rep.ind << "  m: " << rep.m << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "case", "word", "P"});
    for (const ObstructionVerdict& t : rep.tested)
        rows.push_back({std::to_string(t.n), t.kind == ObstructionCase::AminLeft ? "1" : "2",
                        t.word.str(), t.holds_P ? "HOLDS" : "FAILS"});
    std::cout << render_table(rows);
    if (rep.onset)
        std::cout << "onset: " << *rep.onset << "\n";
    else
        std::cout << "onset: none within n-max\n";
    return 0;
}

int cmd_verify(bool full, std::uint64_t seed) {
    verify::VerifyOptions opts;
    opts.full = full;
    opts.seed = seed;
    std::vector<verify::SuiteResult> results = verify::run_all(opts);
    bool all_pass = true;
    // timings go to stderr so stdout stays byte-identical across runs
    for (const verify::SuiteResult& r : results) {
        std::printf("%s  %-32s  %6zu checks\n", r.pass() ? "PASS" : "FAIL", r.name.c_str(),
                    r.checks);
        std::fprintf(stderr, "      %-32s  %8.2fs\n", r.name.c_str(), r.seconds);
        for (const std::string& f : r.failures)
            std::printf("      %s\n", f.c_str());
        all_pass = all_pass && r.pass();
    }
    std::printf("%s\n", all_pass ? "all suites passed" : "SUITE FAILURES PRESENT");
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"episturmian morphisms: conjugacy, Rauzy graphs, return sets, preservation"};
    app.require_subcommand(1);

    std::string morphism_text, morphism_file, word_text, alphabet_opt, format, side_opt, method;
    std::string cross_check;
    std::size_t n = 0, n_max = 30, depth = 0;
    bool annotate = false, full = false, quick = false;
    std::uint64_t seed = 12345;
    std::string order_opt = "plain-first";

    auto add_morphism = [&](CLI::App* cmd) {
        cmd->add_option("morphism", morphism_text, "morphism, e.g. \"a->ab,b->a\"");
        cmd->add_option("--file", morphism_file, "read the morphism from a file");
    };

    CLI::App* c_decompose = app.add_subcommand("decompose", "factor into elementary morphisms");
    add_morphism(c_decompose);
    c_decompose->add_option("--order", order_opt, "strip order: plain-first|barred-first")
        ->check(CLI::IsMember({"plain-first", "barred-first"}));
    c_decompose->add_option("--format", format, "table|json");

    CLI::App* c_class = app.add_subcommand("class", "enumerate the conjugacy class");
    add_morphism(c_class);
    c_class->add_option("--format", format, "table|json|tsv");

    CLI::App* c_index = app.add_subcommand("index", "conjugacy index");
    add_morphism(c_index);
    c_index->add_option("--format", format, "table|json");

    CLI::App* c_pal = app.add_subcommand("pal", "iterated palindromic closure");
    c_pal->add_option("word", word_text, "directive word")->required();
    c_pal->add_option("--alphabet", alphabet_opt, "alphabet letters, e.g. abc");

    CLI::App* c_pali = app.add_subcommand("pal-inverse", "invert the palindromic closure");
    c_pali->add_option("word", word_text, "palindrome to invert")->required();
    c_pali->add_option("--alphabet", alphabet_opt, "alphabet letters");

    CLI::App* c_tree = app.add_subcommand("standard-tree", "standard tuples up to a depth");
    c_tree->add_option("--depth", depth, "tree depth")->required();
    c_tree->add_option("--alphabet", alphabet_opt, "alphabet letters (default abc)");
    c_tree->add_option("--format", format, "dot|json");

    CLI::App* c_lang = app.add_subcommand("language", "length-n factors of the shift");
    add_morphism(c_lang);
    c_lang->add_option("--n", n, "factor length")->required();
    c_lang->add_option("--format", format, "table|json");

    CLI::App* c_rauzy = app.add_subcommand("rauzy", "Rauzy graph with branch decomposition");
    add_morphism(c_rauzy);
    c_rauzy->add_option("--n", n, "graph order")->required();
    c_rauzy->add_option("--format", format, "dot|json");
    c_rauzy->add_flag("--annotate-dl", annotate, "attach (d, l) pairs to the vertices");

    CLI::App* c_returns = app.add_subcommand("returns", "return sets of a factor");
    add_morphism(c_returns);
    c_returns->add_option("factor", word_text, "factor")->required();
    c_returns->add_option("--side", side_opt, "left|right")
        ->check(CLI::IsMember({"left", "right"}));
    c_returns->add_option("--method", method, "oracle|closed|both")
        ->check(CLI::IsMember({"oracle", "closed", "both"}));
    c_returns->add_option("--format", format, "table|json");

    CLI::App* c_checkp = app.add_subcommand("check-p", "test the preservation property");
    add_morphism(c_checkp);
    c_checkp->add_option("factor", word_text, "factor")->required();
    c_checkp->add_option("--cross-check", cross_check, "oracle: also verify the return sets by oracle")
        ->check(CLI::IsMember({"oracle"}));
    c_checkp->add_option("--format", format, "table|json");

    CLI::App* c_obs = app.add_subcommand("obstructions", "run the obstruction suite");
    add_morphism(c_obs);
    c_obs->add_option("--n-max", n_max, "largest special-factor length");
    c_obs->add_option("--format", format, "table|json");

    CLI::App* c_verify = app.add_subcommand("verify", "run the invariant corpus");
    c_verify->add_flag("--full", full, "full corpus (budget: minutes)");
    c_verify->add_flag("--quick", quick, "reduced corpus (default)");
    c_verify->add_option("--seed", seed, "seed for randomized samplers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        using namespace epist;
        if (app.got_subcommand(c_decompose))
            return cmd_decompose(morphism_arg(morphism_text, morphism_file),
                                 order_opt == "barred-first" ? StripOrder::BarredFirst
                                                             : StripOrder::PlainFirst,
                                 format);
        if (app.got_subcommand(c_class))
            return cmd_class(morphism_arg(morphism_text, morphism_file), format);
        if (app.got_subcommand(c_index)) {
            Morphism m = morphism_arg(morphism_text, morphism_file);
            std::size_t ind = conjugacy_index(m);
            if (format == "json")
                std::cout << Json{{"schema", kSchemaVersion}, {"index", ind}}.dump(2) << "\n";
            else
                std::cout << ind << "\n";
            return 0;
        }
        if (app.got_subcommand(c_pal)) {
            Alphabet alpha = alphabet_for_word(word_text, alphabet_opt);
            std::cout << pal(Word::parse(alpha, word_text)).str() << "\n";
            return 0;
        }
        if (app.got_subcommand(c_pali)) {
            Alphabet alpha = alphabet_for_word(word_text, alphabet_opt);
            auto u = pal_inverse(Word::parse(alpha, word_text));
            if (u)
                std::cout << (u->empty() ? "-" : u->str()) << "\n";
            else
                std::cout << "not in the image of Pal\n";
            return 0;
        }
        if (app.got_subcommand(c_tree)) {
            Alphabet alpha(alphabet_opt.empty() ? "abc" : alphabet_opt);
            auto tree = standard_tree(alpha, depth);
            if (format == "json") {
                Json nodes = Json::array();
                for (const auto& node : tree) {
                    Json t = Json::array();
                    for (const Word& w : node.tuple)
                        t.push_back(w.str());
                    nodes.push_back(Json{{"directive", node.directive.str()}, {"tuple", t}});
                }
                std::cout << Json{{"schema", kSchemaVersion}, {"nodes", nodes}}.dump(2) << "\n";
            } else {
                std::cout << to_dot(tree);
            }
            return 0;
        }
        if (app.got_subcommand(c_lang)) {
            Morphism m = morphism_arg(morphism_text, morphism_file);
            LanguageWindow win = language(m, n);
            if (format == "json") {
                Json f = Json::array();
                for (const Word& w : win.factors)
                    f.push_back(w.str());
                std::cout << Json{{"schema", kSchemaVersion},
                                  {"n", win.n},
                                  {"iterations", win.iterations},
                                  {"factors", f}}
                                 .dump(2)
                          << "\n";
            } else {
                for (const Word& w : win.factors)
                    std::cout << w.str() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_rauzy))
            return cmd_rauzy(morphism_arg(morphism_text, morphism_file), n,
                             format.empty() ? "dot" : format, annotate);
        if (app.got_subcommand(c_returns)) {
            Side side = side_opt == "right" ? Side::Right : Side::Left;
            return cmd_returns(morphism_arg(morphism_text, morphism_file), word_text, side,
                               method.empty() ? "closed" : method, format);
        }
        if (app.got_subcommand(c_checkp))
            return cmd_check_p(morphism_arg(morphism_text, morphism_file), word_text,
                               cross_check == "oracle", format);
        if (app.got_subcommand(c_obs))
            return cmd_obstructions(morphism_arg(morphism_text, morphism_file), n_max, format);
        if (app.got_subcommand(c_verify))
            return cmd_verify(full && !quick, seed);
    } catch (const TheoryViolation& e) {
        std::cerr << "theory violation: " << e.what() << "\n";
        return 1;
    } catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
