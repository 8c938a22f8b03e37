#include "carwb/presentation.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace carwb {

bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.word == b.word;
}

bool operator==(const Relation& a, const Relation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
}

namespace {

StarWord word_of(std::initializer_list<StarFactor> fs) { return StarWord{fs}; }

Term term(Complex c, std::initializer_list<StarFactor> fs) { return Term{c, word_of(fs)}; }

Term unit_term(Complex c) { return Term{c, StarWord{}}; }

// a_i* a_i + a_i a_i* = 1
Relation norm_relation(int i) {
    Relation r;
    r.lhs = {term(1.0, {{i, true}, {i, false}}), term(1.0, {{i, false}, {i, true}})};
    r.rhs = {unit_term(1.0)};
    return r;
}

// a_i^2 = 0
Relation square_zero(int i) {
    Relation r;
    r.lhs = {term(1.0, {{i, false}, {i, false}})};
    r.rhs = {unit_term(0.0)};
    return r;
}

// a_i* a_j = c a_j a_i*
Relation twist_star(int i, int j, Complex c) {
    Relation r;
    r.lhs = {term(1.0, {{i, true}, {j, false}})};
    r.rhs = {term(c, {{j, false}, {i, true}})};
    return r;
}

// a_j a_i = c a_i a_j
Relation twist_plain(int i, int j, Complex c) {
    Relation r;
    r.lhs = {term(1.0, {{j, false}, {i, false}})};
    r.rhs = {term(c, {{i, false}, {j, false}})};
    return r;
}

// a_i* a_i = 1 - a_i a_i* - (1-mu^2) sum_{j<i} a_j a_j*
Relation tcar_norm(int i, double mu) {
    Relation r;
    r.lhs = {term(1.0, {{i, true}, {i, false}})};
    r.rhs = {unit_term(1.0), term(-1.0, {{i, false}, {i, true}})};
    for (int j = 0; j < i; ++j)
        r.rhs.push_back(term(-(1.0 - mu * mu), {{j, false}, {j, true}}));
    return r;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw ParamOutOfRange(msg);
}

}  // namespace

Presentation preset(PresetName name, const PresetParams& pp) {
    Presentation p;
    const int d = pp.d;
    switch (name) {
        case PresetName::CAR: {
            require(d >= 1, "d must be a positive integer");
            p.name = "car";
            p.generator_count = d;
            p.params["d"] = static_cast<double>(d);
            for (int i = 0; i < d; ++i) {
                p.relations.push_back(norm_relation(i));
                p.relations.push_back(square_zero(i));
            }
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (i != j) {
                        p.relations.push_back(twist_star(i, j, -1.0));
                        p.relations.push_back(twist_plain(i, j, -1.0));
                    }
            break;
        }
        case PresetName::QCCR: {
            require(d >= 1, "d must be a positive integer");
            require(pp.q > -1.0 && pp.q < 1.0, "q must lie in (-1, 1)");
            p.name = "qccr";
            p.generator_count = d;
            p.params["d"] = static_cast<double>(d);
            p.params["q"] = pp.q;
            // delta_ij expanded into one relation per ordered pair
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Relation r;
                    r.lhs = {term(1.0, {{i, true}, {j, false}})};
                    if (i == j) r.rhs.push_back(unit_term(1.0));
                    r.rhs.push_back(term(pp.q, {{j, false}, {i, true}}));
                    p.relations.push_back(std::move(r));
                }
            break;
        }
        case PresetName::TCAR:
        case PresetName::WTCAR: {
            require(d >= 1, "d must be a positive integer");
            require(pp.mu > 0.0 && pp.mu < 1.0, "mu must lie in (0, 1)");
            p.name = name == PresetName::TCAR ? "tcar" : "wtcar";
            p.generator_count = d;
            p.params["d"] = static_cast<double>(d);
            p.params["mu"] = pp.mu;
            for (int i = 0; i < d; ++i) p.relations.push_back(tcar_norm(i, pp.mu));
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j)
                    p.relations.push_back(twist_star(i, j, -pp.mu));
            if (name == PresetName::TCAR) {
                for (int i = 0; i < d; ++i)
                    for (int j = i + 1; j < d; ++j)
                        p.relations.push_back(twist_plain(i, j, -pp.mu));
                for (int i = 0; i < d; ++i) p.relations.push_back(square_zero(i));
            }
            break;
        }
        case PresetName::DISK: {
            // q = -1 admitted: the workbench's main object is that endpoint.
            require(pp.q >= -1.0 && pp.q < 1.0, "q must lie in [-1, 1)");
            p.name = "disk";
            p.generator_count = 1;
            p.params["q"] = pp.q;
            Relation r;
            r.lhs = {term(1.0, {{0, true}, {0, false}}), term(-pp.q, {{0, false}, {0, true}})};
            r.rhs = {unit_term(1.0 - pp.q)};
            p.relations.push_back(std::move(r));
            break;
        }
        case PresetName::DISK_NORMALIZED: {
            p.name = "disk-normalized";
            p.generator_count = 1;
            p.relations.push_back(norm_relation(0));
            break;
        }
        case PresetName::WCAR: {
            require(d >= 1, "d must be a positive integer");
            p.name = "wcar";
            p.generator_count = d;
            p.params["d"] = static_cast<double>(d);
            for (int i = 0; i < d; ++i) p.relations.push_back(norm_relation(i));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (i != j) p.relations.push_back(twist_star(i, j, -1.0));
            break;
        }
        case PresetName::WCAR_Y: {
            require(d == 2, "the y-relation family is defined for d = 2");
            require(std::abs(pp.y) <= 1.0 + 1e-15, "|y| must not exceed 1");
            p.name = "wcar-y";
            p.generator_count = 2;
            p.params["y"] = pp.y;
            p.relations.push_back(norm_relation(0));
            p.relations.push_back(norm_relation(1));
            p.relations.push_back(twist_star(0, 1, -1.0));
            Relation r;  // a2 a1 + a1 a2 = y
            r.lhs = {term(1.0, {{1, false}, {0, false}}), term(1.0, {{0, false}, {1, false}})};
            r.rhs = {unit_term(pp.y)};
            p.relations.push_back(std::move(r));
            break;
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    int line;
    int pos = 0;

    int col() const { return pos + 1; }
    bool done() const { return pos >= static_cast<int>(s.size()); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_ws() {
        while (!done() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line, col()); }
};

double parse_real(Cursor& c) {
    int start = c.pos;
    bool saw_digit = false;
    if (c.peek() == '+' || c.peek() == '-') ++c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        saw_digit = true;
        ++c.pos;
    }
    if (c.peek() == '.') {
        ++c.pos;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            saw_digit = true;
            ++c.pos;
        }
    }
    if (c.peek() == 'e' || c.peek() == 'E') {
        int save = c.pos;
        ++c.pos;
        if (c.peek() == '+' || c.peek() == '-') ++c.pos;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
        } else {
            c.pos = save;
        }
    }
    if (!saw_digit) c.fail("expected a number");
    return std::stod(c.s.substr(start, c.pos - start));
}

bool starts_number(const Cursor& c) {
    char ch = c.peek();
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.';
}

// (re) or (re+imi) / (re-imi)
Complex parse_paren_complex(Cursor& c) {
    ++c.pos;  // '('
    c.skip_ws();
    double re = parse_real(c);
    c.skip_ws();
    double im = 0.0;
    if (c.peek() == '+' || c.peek() == '-') {
        double sign = c.peek() == '-' ? -1.0 : 1.0;
        ++c.pos;
        c.skip_ws();
        im = sign * parse_real(c);
        if (c.peek() != 'i') c.fail("expected 'i' after imaginary part");
        ++c.pos;
    }
    c.skip_ws();
    if (c.peek() != ')') c.fail("expected ')'");
    ++c.pos;
    return {re, im};
}

StarFactor parse_factor(Cursor& c, int generator_count) {
    int col0 = c.col();
    ++c.pos;  // 'a'
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected generator index after 'a'");
    int idx = 0;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        idx = idx * 10 + (c.peek() - '0');
        ++c.pos;
    }
    if (idx < 1 || idx > generator_count)
        throw UnknownGenerator("unknown generator a" + std::to_string(idx) + " (have " +
                                   std::to_string(generator_count) + ")",
                               c.line, col0);
    StarFactor f{idx - 1, false};
    if (c.peek() == '*') {
        f.star = true;
        ++c.pos;
    }
    return f;
}

// term := [coef] word, where a bare coefficient denotes coef * 1.
Term parse_term(Cursor& c, int generator_count, double sign) {
    Term t;
    t.coeff = Complex(sign, 0.0);
    c.skip_ws();
    bool have_coeff = false;
    if (c.peek() == '(') {
        t.coeff *= parse_paren_complex(c);
        have_coeff = true;
    } else if (starts_number(c)) {
        int save = c.pos;
        double v = parse_real(c);
        // A lone "1" (not followed by more input in this term) is the unit word.
        if (v == 1.0 && c.pos == save + 1) {
            c.skip_ws();
            if (c.peek() != 'a') return t;  // coeff = sign, unit word
        }
        t.coeff *= v;
        have_coeff = true;
    }
    c.skip_ws();
    if (have_coeff && c.peek() == '1') {
        ++c.pos;  // explicit unit word after a coefficient
        if (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '.')
            c.fail("expected the unit word '1'");
        return t;
    }
    bool have_word = false;
    while (c.peek() == 'a') {
        t.word.factors.push_back(parse_factor(c, generator_count));
        have_word = true;
        c.skip_ws();
    }
    if (!have_word && !have_coeff) c.fail("expected a term");
    return t;
}

std::vector<Term> parse_sum(Cursor& c, int generator_count) {
    std::vector<Term> terms;
    c.skip_ws();
    double sign = 1.0;
    if (c.peek() == '-') {
        sign = -1.0;
        ++c.pos;
    } else if (c.peek() == '+') {
        ++c.pos;
    }
    terms.push_back(parse_term(c, generator_count, sign));
    c.skip_ws();
    while (c.peek() == '+' || c.peek() == '-') {
        sign = c.peek() == '-' ? -1.0 : 1.0;
        ++c.pos;
        terms.push_back(parse_term(c, generator_count, sign));
        c.skip_ws();
    }
    return terms;
}

}  // namespace

Presentation parse_relations(const std::string& text, int generator_count) {
    if (generator_count < 1) throw ParamOutOfRange("generator_count must be positive");
    Presentation p;
    p.generator_count = generator_count;
    p.name = "custom";

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        Cursor c{raw, line_no};
        c.skip_ws();
        if (c.done()) continue;

        Relation r;
        r.lhs = parse_sum(c, generator_count);
        c.skip_ws();
        if (c.peek() != '=') c.fail("expected '='");
        ++c.pos;
        r.rhs = parse_sum(c, generator_count);
        c.skip_ws();
        if (!c.done()) c.fail("unexpected trailing input");
        p.relations.push_back(std::move(r));
    }
    return p;
}

namespace {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string render_coeff(Complex c) {
    if (c.imag() == 0.0) return format_real(c.real());
    std::string s = "(" + format_real(c.real());
    s += c.imag() < 0 ? "-" : "+";
    s += format_real(std::abs(c.imag())) + "i)";
    return s;
}

void render_terms(std::ostringstream& out, const std::vector<Term>& terms) {
    for (size_t k = 0; k < terms.size(); ++k) {
        Complex c = terms[k].coeff;
        bool negative = c.imag() == 0.0 && c.real() < 0.0;
        if (k == 0) {
            if (negative) out << "- ";
        } else {
            out << (negative ? " - " : " + ");
        }
        if (negative) c = -c;

        const auto& fs = terms[k].word.factors;
        bool unit_word = fs.empty();
        if (c != Complex(1.0, 0.0) || unit_word) {
            out << render_coeff(c);
            if (!unit_word) out << " ";
        }
        for (size_t i = 0; i < fs.size(); ++i) {
            if (i) out << " ";
            out << "a" << fs[i].gen + 1 << (fs[i].star ? "*" : "");
        }
    }
}

}  // namespace

std::string render(const Relation& r) {
    std::ostringstream out;
    render_terms(out, r.lhs);
    out << " = ";
    render_terms(out, r.rhs);
    return out.str();
}

std::string render(const Presentation& p) {
    std::ostringstream out;
    for (const auto& r : p.relations) out << render(r) << "\n";
    return out.str();
}

Mat eval_word(const StarWord& w, const std::vector<Mat>& assignment) {
    const Index n = assignment.at(0).rows();
    Mat acc = Mat::Identity(n, n);
    for (const auto& f : w.factors)
        acc = acc * (f.star ? Mat(assignment[f.gen].adjoint()) : assignment[f.gen]);
    return acc;
}

Mat eval_terms(const std::vector<Term>& terms, const std::vector<Mat>& assignment) {
    const Index n = assignment.at(0).rows();
    Mat acc = Mat::Zero(n, n);
    for (const auto& t : terms) acc += t.coeff * eval_word(t.word, assignment);
    return acc;
}

double residual(const Presentation& p, const std::vector<Mat>& assignment) {
    if (static_cast<int>(assignment.size()) != p.generator_count)
        throw ShapeMismatch("residual: assignment size does not match generator count");
    const Index n = assignment.empty() ? 0 : assignment[0].rows();
    for (const auto& m : assignment)
        if (m.rows() != n || m.cols() != n)
            throw ShapeMismatch("residual: matrices must be square and of a common size");

    double worst = 0.0;
    for (const auto& r : p.relations) {
        Mat diff = eval_terms(r.lhs, assignment) - eval_terms(r.rhs, assignment);
        worst = std::max(worst, op_norm(diff));
    }
    return worst;
}

}  // namespace carwb
