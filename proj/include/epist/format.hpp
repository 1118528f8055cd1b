#ifndef EPIST_FORMAT_HPP
#define EPIST_FORMAT_HPP

#include <cctype>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "epist/decompose.hpp"
#include "epist/palindromic.hpp"
#include "epist/rauzy.hpp"

namespace epist {

using Json = nlohmann::json;

/// Version tag carried by every JSON document the tools emit.
inline constexpr int kSchemaVersion = 1;

namespace detail {
inline std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}
} // namespace detail

/// Parses "a->ab,b->ac,c->a". Whitespace is ignored; the alphabet is the
/// rule left-hand sides in order of appearance.
inline Morphism parse_morphism(const std::string& text) {
    std::string s = detail::strip_spaces(text);
    if (s.empty())
        throw ParseError("morphism: empty input");
    std::vector<std::pair<char, std::string>> rules;
    std::string alphabet;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(',', pos);
        std::string rule = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end + 1;
        std::size_t arrow = rule.find("->");
        if (arrow == std::string::npos || arrow != 1 || rule.size() < 4)
            throw ParseError("morphism: bad rule \"" + rule + "\" (expected <letter>-><word>)");
        char lhs = rule[0];
        if (alphabet.find(lhs) != std::string::npos)
            throw ParseError(std::string("morphism: duplicate rule for '") + lhs + "'");
        alphabet.push_back(lhs);
        rules.emplace_back(lhs, rule.substr(arrow + 2));
    }
    Alphabet alpha(alphabet);
    std::vector<Word> images;
    for (const auto& [lhs, img] : rules) {
        try {
            images.push_back(Word::parse(alpha, img));
        } catch (const ParseError& e) {
            throw ParseError(std::string("morphism: rule \"") + lhs + "->" + img + "\": " + e.what());
        }
    }
    return Morphism(alpha, std::move(images));
}

inline std::string to_text(const Morphism& m) {
    std::string out;
    for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
        if (a)
            out.push_back(',');
        out.push_back(m.alphabet().symbol(static_cast<Letter>(a)));
        out += "->";
        out += m.image(static_cast<Letter>(a)).str();
    }
    return out;
}

inline Json to_json(const Morphism& m) {
    Json rules = Json::object();
    for (std::size_t a = 0; a < m.alphabet().size(); ++a)
        rules[std::string(1, m.alphabet().symbol(static_cast<Letter>(a)))] =
            m.image(static_cast<Letter>(a)).str();
    Json alphabet = Json::array();
    for (char c : m.alphabet().symbols())
        alphabet.push_back(std::string(1, c));
    return Json{{"alphabet", alphabet}, {"rules", rules}};
}

inline Morphism morphism_from_json(const Json& j) {
    std::string letters;
    for (const auto& item : j.at("alphabet"))
        letters += item.get<std::string>();
    Alphabet alpha(letters);
    std::vector<Word> images;
    for (char c : letters)
        images.push_back(Word::parse(alpha, j.at("rules").at(std::string(1, c)).get<std::string>()));
    return Morphism(alpha, std::move(images));
}

/// Empty word prints as "-" in tables and as "" in JSON.
inline std::string table_text(const Word& w) { return w.empty() ? "-" : w.str(); }

inline std::string to_dot(const RauzyGraph& g,
                          const std::vector<std::string>* annotations = nullptr) {
    std::ostringstream os;
    os << "digraph rauzy {\n";
    os << "  rankdir=LR;\n";
    std::set<std::size_t> inner_edges(g.inner_edges.begin(), g.inner_edges.end());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        os << "  v" << i << " [label=\"" << g.vertices[i].str();
        if (annotations && !(*annotations)[i].empty())
            os << "\\n" << (*annotations)[i];
        os << "\"];\n";
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const RauzyEdge& ed = g.edges[e];
        os << "  v" << ed.src << " -> v" << ed.dst << " [label=\""
           << g.vertices[ed.src].alphabet().symbol(ed.left_label) << "\" left=\""
           << g.vertices[ed.src].alphabet().symbol(ed.left_label) << "\" right=\""
           << g.vertices[ed.src].alphabet().symbol(ed.right_label) << "\"";
        if (inner_edges.count(e))
            os << " style=bold";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const std::vector<StandardTreeNode>& tree) {
    std::ostringstream os;
    os << "digraph standard_tree {\n";
    for (std::size_t i = 0; i < tree.size(); ++i) {
        os << "  n" << i << " [label=\"" << table_text(tree[i].directive) << ": (";
        for (std::size_t a = 0; a < tree[i].tuple.size(); ++a) {
            if (a)
                os << ", ";
            os << tree[i].tuple[a].str();
        }
        os << ")\"];\n";
    }
    for (std::size_t i = 0; i < tree.size(); ++i)
        for (std::size_t c : tree[i].children) {
            Letter step = tree[c].directive.back();
            os << "  n" << i << " -> n" << c << " [label=\""
               << tree[c].directive.alphabet().symbol(step) << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace epist

#endif
