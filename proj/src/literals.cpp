#include "chordlie/literals.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chordlie {

namespace {

// A cursor over the input with whitespace skipping and positioned errors.
struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool at_end() { return peek() == '\0'; }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    // Matches a keyword ending at a non-alphanumeric boundary.
    bool consume_keyword(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) != 0) return false;
        std::size_t after = pos + w.size();
        if (after < s.size() && (std::isalnum(static_cast<unsigned char>(s[after])) || s[after] == '_'))
            return false;
        pos = after;
        return true;
    }
    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        if (pos - start > 9) throw parse_error("integer too large", start);
        return std::stoi(s.substr(start, pos - start));
    }
    // [sign] digits [/ digits]
    Rat parse_rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error("expected a rational number", start);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                throw parse_error("expected a denominator", pos);
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        try {
            return rat_parse(s.substr(start, pos - start));
        } catch (const parse_error&) {
            throw parse_error("invalid rational literal", start);
        }
    }
    // One chord "i>j"; the caller has checked that a digit is next.
    Chord parse_chord() {
        int i = parse_int();
        expect('>');
        int j = parse_int();
        return {i, j};
    }
    // A nonempty run of chords, ending at '+', '-', or end of input.
    LinearDiagram parse_chords() {
        LinearDiagram d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(parse_chord());
        if (d.empty()) fail("expected a chord list");
        return d;
    }
};

// Sign and coefficient prefix of a term: a '+'/'-' separator (required
// between terms), then an optional signed "coeff *".  A bare number that
// starts a chord list is told apart from a coefficient by the '*' that must
// follow a coefficient; a bare '-' may also negate a keyword or chord atom.
Rat term_prefix(Cursor& c, bool first) {
    Rat coeff = 1;
    if (!first) {
        if (c.consume('+'))
            ;
        else if (c.consume('-'))
            coeff = -1;
        else
            c.fail("expected '+' or '-' between terms");
    }
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '+' || ch == '-') {
        std::size_t save = c.pos;
        bool took_coeff = false;
        try {
            Rat r = c.parse_rational();
            if (c.consume('*')) {
                coeff *= r;
                took_coeff = true;
            }
        } catch (const parse_error&) {
        }
        if (!took_coeff) {
            c.pos = save;
            if (c.consume('+'))
                ;
            else if (c.consume('-'))
                coeff = -coeff;
        }
    }
    return coeff;
}

bool is_zero_literal(Cursor& c) {
    std::size_t save = c.pos;
    if (c.consume('0') && c.at_end()) return true;
    c.pos = save;
    return false;
}

std::string join_terms(std::vector<std::string> terms) {
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
    return out;
}

nlohmann::json terms_json(const std::string& algebra, std::vector<std::pair<std::string, std::string>> terms) {
    nlohmann::json j;
    j["algebra"] = algebra;
    j["terms"] = nlohmann::json::array();
    for (auto& [coeff, diagram] : terms)
        j["terms"].push_back({{"coeff", coeff}, {"diagram", diagram}});
    return j;
}

}  // namespace

std::string format_chords(const std::vector<Chord>& chords) {
    std::string out;
    for (const Chord& c : chords) {
        if (!out.empty()) out += ' ';
        out += std::to_string(c.first) + ">" + std::to_string(c.second);
    }
    return out;
}

std::string format_linear(const StandardDiagram& d) { return "lin: " + format_chords(d.chords); }

std::string format_cyclic(const CyclicClass& c) {
    return "cyc[index=" + std::to_string(c.index) + "]: " + format_chords(c.rep.chords);
}

std::string format_lc_vector(const LCVector& v) {
    std::vector<std::string> terms;
    for (const auto& [d, c] : v) terms.push_back(rat_str(c) + " * " + format_linear(d));
    return join_terms(std::move(terms));
}

std::string format_c_vector(const CVector& v) {
    std::vector<std::string> terms;
    for (const auto& [k, c] : v) terms.push_back(rat_str(c) + " * " + format_cyclic(k));
    return join_terms(std::move(terms));
}

std::string format_tensor(const Tensor& t) {
    std::vector<Word> words;
    words.reserve(t.terms.size());
    for (const auto& [w, c] : t.terms) words.push_back(w);
    std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<std::string> terms;
    for (const Word& w : words) {
        std::string symbols;
        for (char s : w) {
            if (!symbols.empty()) symbols += ' ';
            symbols += symbol_name(s);
        }
        terms.push_back(rat_str(t.terms.at(w)) + " * " + symbols);
    }
    return "g=" + std::to_string(t.g) + ": " + join_terms(std::move(terms));
}

std::string format_pvf(const PolyVectorField& v) {
    std::vector<std::string> terms;
    for (const auto& [m, c] : v)
        terms.push_back(rat_str(c) + " * x^" + std::to_string(m) + " d/dx");
    return join_terms(std::move(terms));
}

LinearDiagram parse_linear_literal(const std::string& s) {
    Cursor c{s};
    if (c.consume_keyword("lin")) c.expect(':');
    LinearDiagram d = c.parse_chords();
    if (!c.at_end()) c.fail("trailing input after diagram");
    try {
        validate(d);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 0);
    }
    return d;
}

LCVector parse_lc_vector(const std::string& s) {
    Cursor c{s};
    LCVector v;
    if (is_zero_literal(c)) return v;
    bool first = true;
    while (first || !c.at_end()) {
        Rat coeff = term_prefix(c, first);
        first = false;
        std::size_t atom_pos = c.pos;
        if (c.consume_keyword("E0")) {
            for (const auto& [d, e] : e0()) add_term(v, d, coeff * e);
            continue;
        }
        if (c.consume_keyword("lin")) c.expect(':');
        if (!std::isdigit(static_cast<unsigned char>(c.peek())))
            c.fail("expected 'lin:', a chord list, or 'E0'");
        LinearDiagram d = c.parse_chords();
        try {
            validate(d);
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), atom_pos);
        }
        SignedStandard std_d = standardize(d);
        add_term(v, std_d.diagram, coeff * std_d.sign);
    }
    return v;
}

CVector parse_c_vector(const std::string& s) {
    Cursor c{s};
    CVector v;
    if (is_zero_literal(c)) return v;
    bool first = true;
    while (first || !c.at_end()) {
        Rat coeff = term_prefix(c, first);
        first = false;
        std::size_t atom_pos = c.pos;
        if (c.consume_keyword("omega")) {
            c.expect('(');
            int m = c.parse_int();
            c.expect(')');
            if (m <= 1) throw parse_error("omega(m) needs m >= 2", atom_pos);
            add_term(v, omega_diagram(m), coeff);
            continue;
        }
        if (c.consume_keyword("d")) {
            c.expect('(');
            int a = c.parse_int();
            c.expect(',');
            int b = c.parse_int();
            c.expect(')');
            if (a < 1 || b < 1) throw parse_error("d(a,b) needs a,b >= 1", atom_pos);
            if (auto cls = d_ab(a, b)) add_term(v, cls->cls, coeff * cls->sign);
            continue;
        }
        std::optional<int> announced_index;
        if (c.consume_keyword("cyc")) {
            if (c.consume('[')) {  // the round-trippable "cyc[index=k]:" rendering
                if (!c.consume_keyword("index")) c.fail("expected 'index=<k>'");
                c.expect('=');
                announced_index = c.parse_int();
                c.expect(']');
            }
            c.expect(':');
        }
        if (!std::isdigit(static_cast<unsigned char>(c.peek())))
            c.fail("expected 'omega(m)', 'd(a,b)', 'cyc:', or a chord list");
        LinearDiagram d = c.parse_chords();
        try {
            validate(d);
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), atom_pos);
        }
        if (announced_index && *announced_index != index_of(standardize(d).diagram))
            throw parse_error("index annotation does not match the diagram", atom_pos);
        if (auto cls = canonical_cyclic(d)) add_term(v, cls->cls, coeff * cls->sign);
    }
    return v;
}

Tensor parse_tensor(const std::string& s) {
    Cursor c{s};
    if (!c.consume_keyword("g")) c.fail("expected 'g=<genus>:' prefix");
    c.expect('=');
    int g = c.parse_int();
    if (g < 1) c.fail("genus must be positive");
    c.expect(':');
    Tensor t;
    t.g = g;
    if (is_zero_literal(c)) return t;
    bool first = true;
    while (first || !c.at_end()) {
        Rat coeff = term_prefix(c, first);
        first = false;
        Word w;
        while (c.peek() == 'A' || c.peek() == 'B') {
            std::size_t sym_pos = c.pos;
            char kind = s[c.pos++];
            int idx = c.parse_int();
            if (idx < 1 || idx > g) throw parse_error("symbol index out of range for genus", sym_pos);
            w.push_back(static_cast<char>(2 * (idx - 1) + (kind == 'B' ? 1 : 0)));
        }
        if (w.empty()) c.fail("expected a word of symbols A<i>/B<i>");
        add_term(t, w, coeff);
    }
    return t;
}

nlohmann::json vector_json(const LCVector& v) {
    std::vector<std::pair<std::string, std::string>> terms;
    for (const auto& [d, c] : v) terms.emplace_back(rat_str(c), format_linear(d));
    return terms_json("LC", std::move(terms));
}

nlohmann::json vector_json(const CVector& v) {
    std::vector<std::pair<std::string, std::string>> terms;
    for (const auto& [k, c] : v) terms.emplace_back(rat_str(c), format_cyclic(k));
    return terms_json("C", std::move(terms));
}

}  // namespace chordlie
