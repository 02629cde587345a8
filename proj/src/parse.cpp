#include "znz/parse.hpp"

#include <cctype>

namespace znz {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    std::size_t pos() const { return pos_; }

    bool consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(std::string("expected ") + what, pos_);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        std::string digits;
        if (peek() == '-' || peek() == '+') {
            if (peek() == '-') digits += '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected an integer", pos_);
        }
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += s_[pos_++];
        }
        (void)start;
        return Int(digits);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

std::vector<Int> bracket_list(Cursor& cur) {
    cur.expect('[', "'['");
    std::vector<Int> coords;
    coords.push_back(cur.integer());
    while (cur.consume(',')) coords.push_back(cur.integer());
    cur.expect(']', "']' or ','");
    return coords;
}

// optional exponent suffix "^k"; a bare letter has exponent 1
Int exponent_suffix(Cursor& cur) {
    if (cur.consume('^')) return cur.integer();
    return Int(1);
}

}  // namespace

ElementLiteral parse_element(const std::string& text) {
    Cursor cur(text);
    if (cur.done()) return GroupWord{};  // empty word = identity
    if (cur.peek() == '[') {
        NormalFormLiteral nf;
        nf.coords = bracket_list(cur);
        nf.k = 0;
        if (!cur.done()) {
            if (cur.peek() != 't') throw ParseError("expected 't' after the coordinate list", cur.pos());
            cur.consume('t');
            nf.k = exponent_suffix(cur);
            if (!cur.done()) throw ParseError("unexpected trailing input", cur.pos());
        }
        return nf;
    }
    GroupWord word;
    while (!cur.done()) {
        char c = cur.peek();
        if (c == 't') {
            cur.consume('t');
            word.letters.push_back(Letter::t(exponent_suffix(cur)));
        } else if (c == 'g') {
            cur.consume('g');
            Int idx = cur.integer();
            if (idx < 1 || !idx.fits_sint_p()) {
                throw ParseError("generator index out of range", cur.pos());
            }
            word.letters.push_back(Letter::g(static_cast<int>(idx.get_si()), exponent_suffix(cur)));
        } else {
            throw ParseError("expected a letter 't' or 'g<i>'", cur.pos());
        }
    }
    return word;
}

std::vector<Int> parse_int_vector(const std::string& text) {
    Cursor cur(text);
    std::vector<Int> coords = bracket_list(cur);
    if (!cur.done()) throw ParseError("unexpected trailing input", cur.pos());
    return coords;
}

GroupElement realize(const AbcGroup& g, const ElementLiteral& lit) {
    if (const auto* nf = std::get_if<NormalFormLiteral>(&lit)) {
        if (nf->coords.size() != g.n()) {
            throw UsageError("normal form has " + std::to_string(nf->coords.size()) +
                             " coordinates, group dimension is " + std::to_string(g.n()));
        }
        return GroupElement{IntVector(nf->coords), nf->k};
    }
    return collect(g, std::get<GroupWord>(lit));
}

std::string format_element(const GroupElement& e) {
    std::string out = "[";
    for (std::size_t i = 0; i < e.w.size(); ++i) {
        if (i) out += ",";
        out += to_string(e.w[i]);
    }
    out += "] t^" + to_string(e.k);
    return out;
}

}  // namespace znz
