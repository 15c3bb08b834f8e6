#include "emolog/syntax.hpp"

#include <cctype>

#include "emolog/errors.hpp"

namespace emolog {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Formula run() {
        auto f = iff();
        skip_ws();
        if (i_ != s_.size()) throw ParseError("unexpected trailing input", i_);
        return f;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool match(const std::string& tok) {
        skip_ws();
        if (s_.compare(i_, tok.size(), tok) != 0) return false;
        i_ += tok.size();
        return true;
    }

    Formula iff() {
        auto f = imp();
        while (match("<->")) f = Formula::iff(f, imp());
        return f;
    }

    Formula imp() {
        auto f = disj();
        if (match("->")) return Formula::implies(f, imp());
        return f;
    }

    Formula disj() {
        auto f = conj();
        while (true) {
            skip_ws();
            // "|" but not the first char of "|>" style garbage; single char here
            if (i_ < s_.size() && s_[i_] == '|') {
                ++i_;
                f = Formula::disj(f, conj());
            } else {
                return f;
            }
        }
    }

    Formula conj() {
        auto f = unary();
        while (true) {
            skip_ws();
            if (i_ < s_.size() && s_[i_] == '&') {
                ++i_;
                f = Formula::conj(f, unary());
            } else {
                return f;
            }
        }
    }

    Formula unary() {
        skip_ws();
        if (i_ >= s_.size()) throw ParseError("expected a formula", i_);
        char c = s_[i_];
        if (c == '!') {
            ++i_;
            return Formula::neg(unary());
        }
        if (c == '(') {
            ++i_;
            auto f = iff();
            skip_ws();
            if (i_ >= s_.size() || s_[i_] != ')')
                throw ParseError("expected \")\"", i_);
            ++i_;
            return f;
        }
        if (ident_start(c)) return after_ident();
        throw ParseError("unexpected character", i_);
    }

    Formula after_ident() {
        std::size_t start = i_;
        while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
        std::string word = s_.substr(start, i_ - start);
        if (word == "N") return Formula::nec(unary());
        if (word == "Nbar") return Formula::nbar(unary());
        bool modal = (word == "K" || word == "H" || word == "S") &&
                     i_ < s_.size() && s_[i_] == '[';
        if (!modal) return Formula::var(word);

        ++i_; // consume [
        std::size_t agent_start = i_;
        while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
        if (i_ == agent_start || !ident_start(s_[agent_start]))
            throw ParseError("expected an agent name", i_);
        std::string agent = s_.substr(agent_start, i_ - agent_start);

        bool has_degree = false;
        Decimal degree;
        if (i_ < s_.size() && s_[i_] == ';') {
            if (word == "K") throw ParseError("knowledge takes no degree", i_);
            ++i_;
            std::size_t deg_start = i_;
            while (i_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.'))
                ++i_;
            if (i_ == deg_start) throw ParseError("expected a degree literal", i_);
            try {
                degree = Decimal::parse(s_.substr(deg_start, i_ - deg_start));
            } catch (const ParseError&) {
                throw ParseError("malformed degree literal", deg_start);
            }
            has_degree = true;
        }
        if (i_ >= s_.size() || s_[i_] != ']')
            throw ParseError("expected \"]\"", i_);
        ++i_;

        auto body = unary();
        if (word == "K") return Formula::knows(agent, body);
        if (word == "H")
            return has_degree ? Formula::happy_deg(agent, degree, body)
                              : Formula::happy(agent, body);
        return has_degree ? Formula::sad_deg(agent, degree, body)
                          : Formula::sad(agent, body);
    }
};

void render(const Formula& f, std::string& out);

// Implication children of unary operators get parentheses; everything else
// binds at least as tight as the operator itself.
void render_tight(const Formula& f, std::string& out) {
    if (f.kind() == Kind::Implies) {
        out += '(';
        render(f, out);
        out += ')';
    } else {
        render(f, out);
    }
}

void render(const Formula& f, std::string& out) {
    switch (f.kind()) {
    case Kind::Var:
        out += f.name();
        return;
    case Kind::Not:
        out += '!';
        render_tight(f.child(), out);
        return;
    case Kind::Nec:
        out += "N ";
        render_tight(f.child(), out);
        return;
    case Kind::Knows:
        out += "K[" + f.agent() + "] ";
        render_tight(f.child(), out);
        return;
    case Kind::Happy:
        out += "H[" + f.agent() + "] ";
        render_tight(f.child(), out);
        return;
    case Kind::Sad:
        out += "S[" + f.agent() + "] ";
        render_tight(f.child(), out);
        return;
    case Kind::HappyDeg:
        out += "H[" + f.agent() + ";" + f.degree().str() + "] ";
        render_tight(f.child(), out);
        return;
    case Kind::SadDeg:
        out += "S[" + f.agent() + ";" + f.degree().str() + "] ";
        render_tight(f.child(), out);
        return;
    case Kind::Implies:
        // right associative: only a left implication needs parentheses
        if (f.lhs().kind() == Kind::Implies) {
            out += '(';
            render(f.lhs(), out);
            out += ')';
        } else {
            render(f.lhs(), out);
        }
        out += " -> ";
        render(f.rhs(), out);
        return;
    }
}

} // namespace

Formula parse_formula(const std::string& text) { return Parser(text).run(); }

std::string print_formula(const Formula& f) {
    std::string out;
    render(f, out);
    return out;
}

} // namespace emolog
